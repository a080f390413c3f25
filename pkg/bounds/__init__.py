from .tc_bounds import TcBounds, compute_bounds, bounds_table, TABLE_COLUMNS
