"""Published score and rank tables stored under tests/fixtures."""

import csv
from pathlib import Path

import numpy as np

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name):
    return FIXTURES / f"{name}.csv"


def load_table(name):
    with open(fixture_path(name), newline="") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    return [r[0] for r in body], header[1:], np.array([[float(v) for v in r[1:]] for r in body])
