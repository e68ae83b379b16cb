import sys
import time

import pytest

from qpartition import build_database, euler_partition_series

# Evaluations at huge arguments produce integers with thousands of digits.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(2_000_000)


@pytest.fixture(scope="session")
def p_table_5000():
    return euler_partition_series(5000)


@pytest.fixture(scope="session")
def pmn60_db(tmp_path_factory):
    """The m = 1..60 formula database plus its file path and build time."""
    path = tmp_path_factory.mktemp("db") / "pmn60.json"
    t0 = time.time()
    db = build_database("pmn", 60, path=str(path))
    return db, str(path), time.time() - t0


@pytest.fixture(scope="session")
def small_pmn_db(tmp_path_factory):
    path = tmp_path_factory.mktemp("smalldb") / "pmn5.json"
    db = build_database("pmn", 5, path=str(path))
    return db, str(path)
