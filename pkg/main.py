import sys

from cli import run


def main(argv=None) -> int:
    #Esegue il sottocomando richiesto (tc, verify-lower-bound, plan, simulate, search-zdcl)
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
