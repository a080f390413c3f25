import io
import json
import os
import tempfile
import unittest
from unittest.mock import patch

from main import main


def run_cli(*argv):
    """Esegue la CLI e restituisce (codice di uscita, stdout, stderr)."""
    with patch("sys.stdout", new_callable=io.StringIO) as out, \
            patch("sys.stderr", new_callable=io.StringIO) as err:
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def diagnostic(err: str) -> dict:
    # Il dump JSON segue le eventuali righe di log su stderr
    return json.loads(err[err.index("{\n"):])


class TestTcCommand(unittest.TestCase):

    def test_single_signature(self):
        code, out, _ = run_cli("tc", "3", "2", "--json")
        self.assertEqual(code, 0)
        rows = json.loads(out)
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]["tc"], 4)
        self.assertTrue(rows[0]["constructive_tight"])

    def test_grid(self):
        code, out, _ = run_cli("tc", "--grid", "n=1..6,r=1..n", "--json")
        self.assertEqual(code, 0)
        rows = json.loads(out)
        self.assertEqual(len(rows), 21)
        self.assertTrue(all(row["lower"] == row["tc"] for row in rows))

    def test_text_table(self):
        code, out, _ = run_cli("tc", "5", "2")
        self.assertEqual(code, 0)
        self.assertIn("upper_constructive", out.splitlines()[0])

    def test_csv_to_stdout(self):
        code, out, _ = run_cli("tc", "--grid", "n=2..3,r=1..n", "--csv", "-")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "n,r,lower,upper_constructive,upper_dimension,tc")
        self.assertEqual(lines[1:], ["2,1,2,3,2,2", "2,2,3,3,4,3", "3,1,2,4,2,2", "3,2,4,4,4,4", "3,3,4,4,6,4"])

    def test_csv_to_file(self):
        with tempfile.TemporaryDirectory() as folder:
            target = os.path.join(folder, "bounds.csv")
            code, _, _ = run_cli("tc", "--grid", "n=1..4,r=1..n", "--csv", target)
            self.assertEqual(code, 0)
            with open(target) as handle:
                self.assertEqual(len(handle.read().splitlines()), 11)

    def test_r_exceeds_n(self):
        code, _, err = run_cli("tc", "2", "3")
        self.assertEqual(code, 2)
        self.assertIn("r exceeds n", err)

    def test_missing_signature(self):
        code, _, err = run_cli("tc")
        self.assertEqual(code, 2)
        self.assertIn("--grid", err)

    def test_bad_grid(self):
        code, _, _ = run_cli("tc", "--grid", "n=1..3")
        self.assertEqual(code, 2)


class TestVerifyLowerBoundCommand(unittest.TestCase):

    def test_three_lines(self):
        code, out, _ = run_cli("verify-lower-bound", "3", "2", "--json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["component_terms"], 2)

    def test_four_planes(self):
        code, out, _ = run_cli("verify-lower-bound", "4", "3", "--json")
        record = json.loads(out)
        self.assertEqual((record["k"], record["component_terms"]), (3, 3))

    def test_single_hyperplane(self):
        code, out, _ = run_cli("verify-lower-bound", "1", "1", "--json")
        self.assertEqual(code, 0)
        record = json.loads(out)
        self.assertEqual(record["k"], 0)
        self.assertEqual(record["factors"], 1)

    def test_text_report(self):
        code, out, _ = run_cli("verify-lower-bound", "3", "2")
        self.assertEqual(code, 0)
        self.assertIn("termini della componente (2, 1): 2", out)
        self.assertIn("termine di esempio:", out)

    def test_custom_set(self):
        code, out, _ = run_cli("verify-lower-bound", "5", "2", "--set", "2,4", "--json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["J"], [2, 4])

    def test_wrong_set_size(self):
        code, _, _ = run_cli("verify-lower-bound", "5", "2", "--set", "1,2,3")
        self.assertEqual(code, 2)

    def test_vanishing_certificate_exits_with_failure(self):
        from algebra.exterior import AlgebraSignature
        from algebra.tensor import TensorElement

        with patch("algebra.certificate.multiply_tensor", return_value=TensorElement.zero(AlgebraSignature(3, 2))):
            code, _, err = run_cli("verify-lower-bound", "3", "2")
        self.assertEqual(code, 1)
        self.assertEqual(diagnostic(err)["error"], "CertificateFailure")


class TestPlanCommand(unittest.TestCase):

    def test_worked_example(self):
        code, out, _ = run_cli("plan", "3", "2", "--from", "0,1/4", "--to", "1/2,0", "--steps", "4")
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document["domain"], 0)
        self.assertEqual(document["agreement"], [])
        self.assertEqual(document["mode"], "skeleton")
        samples = {sample["t"]: sample["coords"] for sample in document["samples"]}
        self.assertEqual(list(samples), ["0", "1/4", "1/2", "3/4", "1"])
        self.assertEqual(samples["1/4"], ["0", {"approx": 0.625}])
        self.assertEqual(samples["0"], ["0", "1/4"])
        self.assertEqual(samples["1"], ["1/2", "0"])

    def test_constant_path(self):
        code, out, _ = run_cli("plan", "3", "2", "--from", "0,1/4", "--to", "0,1/4", "--steps", "8")
        document = json.loads(out)
        self.assertEqual(document["domain"], 2)
        self.assertTrue(all(sample["coords"] == ["0", "1/4"] for sample in document["samples"]))

    def test_product_mode(self):
        code, out, _ = run_cli("plan", "3", "2", "--product", "--from", "0,0,1/4", "--to", "1/2,0,1/4")
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document["mode"], "product")
        self.assertEqual(document["domain"], 3)
        self.assertEqual(document["samples"][-1]["circle"], "1/2")

    def test_point_outside_the_skeleton(self):
        code, _, err = run_cli("plan", "3", "2", "--from", "1/2,1/4", "--to", "0,0")
        self.assertEqual(code, 2)
        self.assertIn("non appartiene allo scheletro", err)

    def test_float_turns_are_rejected(self):
        code, _, _ = run_cli("plan", "3", "2", "--from", "0,0.25", "--to", "0,0")
        self.assertEqual(code, 2)

    def test_plot(self):
        with tempfile.TemporaryDirectory() as folder:
            target = os.path.join(folder, "path.png")
            code, _, _ = run_cli("plan", "3", "2", "--from", "0,1/4", "--to", "1/2,0", "--plot", target)
            self.assertEqual(code, 0)
            self.assertTrue(os.path.exists(target))


class TestSimulateCommand(unittest.TestCase):

    def test_no_violations(self):
        code, out, _ = run_cli("simulate", "5", "2", "--queries", "200", "--steps", "64", "--seed", "7")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertTrue(report["ok"])
        self.assertEqual(report["membership_violations"], 0)
        self.assertEqual(report["endpoint_violations"], 0)

    def test_torus_domains(self):
        code, out, _ = run_cli("simulate", "2", "2", "--queries", "200", "--steps", "16")
        self.assertEqual(code, 0)
        self.assertEqual(set(json.loads(out)["histogram"]), {"0", "1"})

    def test_zero_queries(self):
        code, _, _ = run_cli("simulate", "3", "2", "--queries", "0")
        self.assertEqual(code, 2)

    def test_violation_exits_with_failure(self):
        def broken(task):
            return {"index": task.index, "domain": 0, "violations": ["endpoint"], "ratio": None,
                    "query": {"from": {"base": ["0", "1/4"]}, "to": {"base": ["0", "0"]}}}

        with patch("evaluation.simulation.check_query", side_effect=broken):
            code, out, err = run_cli("simulate", "3", "2", "--queries", "3", "--steps", "4")
        self.assertEqual(code, 1)
        self.assertFalse(json.loads(out)["ok"])
        dump = diagnostic(err)
        self.assertEqual(dump["error"], "InvariantViolation")
        self.assertEqual(dump["record"]["query"]["from"]["base"], ["0", "1/4"])


class TestSearchZdclCommand(unittest.TestCase):

    def test_three_lines(self):
        code, out, _ = run_cli("search-zdcl", "3", "2", "--json")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual((report["zdcl_degree_one"], report["tc"], report["conjecture"]), (3, 4, "consistent"))

    def test_brute_force(self):
        code, out, _ = run_cli("search-zdcl", "2", "2", "--brute", "--json")
        report = json.loads(out)
        self.assertEqual((report["zdcl_brute_force"], report["tc"], report["conjecture"]), (2, 3, "consistent"))

    def test_degree_one_only(self):
        code, out, _ = run_cli("search-zdcl", "8", "3")
        self.assertEqual(code, 0)
        self.assertIn("zdcl (grado uno): 5", out)
        self.assertIn("consistent", out)

    def test_brute_force_too_large(self):
        code, _, err = run_cli("search-zdcl", "6", "2", "--brute")
        self.assertEqual(code, 2)
        self.assertIn("--brute", err)


if __name__ == '__main__':
    unittest.main()
