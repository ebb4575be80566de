import json
import math
import os
from pathlib import Path

import numpy as np
import pytest

import deagrs

DATA = Path(os.environ.get("DEAGRS_DATA_DIR", Path(__file__).resolve().parents[2] / "data")) / "table1.csv"


@pytest.fixture(scope="module")
def example():
    return deagrs.parse_dataset(DATA.read_text())


def test_dataset_shape(example):
    assert len(example) == 8
    assert example.names[7] == "DMU8"
    assert example.inputs.shape == (1, 8)
    assert deagrs.compute_ranges(example)[0][0] == 7.0


def test_scores(example):
    rho = [deagrs.evaluate(example, j).score for j in range(8)]
    assert np.allclose(rho, [1, 1, 1, 1, 0.786, 0.714, 0.786, 0.643], atol=5e-4)
    assert deagrs.efficient_set(example) == [0, 1, 2, 3]


def test_reference_set_and_face(example):
    g = deagrs.identify_grs(example, 7)
    assert g.members == [1, 2, 3]
    assert g.members == deagrs.oracle_grs(example, 7)
    assert math.isclose(sum(g.weights), 1.0, abs_tol=1e-9)
    x, y = g.projected_inputs[0], g.projected_outputs[0]
    assert abs(y - (x + 3)) < 1e-7 and 2 < x < 5
    assert deagrs.minimum_face(example, g).dimension == 1


def test_returns_to_scale(example):
    classes = [deagrs.rts_of_dmu(example, j).rts_class for j in range(8)]
    RC = deagrs.RtsClass
    assert classes == [RC.increasing, RC.constant, RC.decreasing, RC.decreasing,
                       RC.decreasing, RC.constant, RC.decreasing, RC.decreasing]
    b = deagrs.intercept_bounds(example, np.array([5.0]), np.array([8.0]))
    assert math.isclose(b.omega_min, 0.6, abs_tol=1e-6)
    assert math.isinf(b.omega_max)


def test_max_support():
    u, v = deagrs.max_support_solution(np.array([[1.0, 1.0, -2.0]]))
    assert (u > 1e-7).all()
    assert v.size == 0


def test_report_json(example):
    doc = json.loads(deagrs.report(example, format="json", dmus=["DMU8"]))
    assert [m["dmu"] for m in doc[0]["grs"]] == ["DMU2", "DMU3", "DMU4"]
    assert doc[0]["rts"]["class"] == "DRS"


def test_errors(example):
    with pytest.raises(deagrs.DataError):
        deagrs.parse_dataset("dmu,in:x,out:y\nA,1\n")
    with pytest.raises(ValueError):
        deagrs.report(example, dmus=["NOPE"])
    with pytest.raises(deagrs.SolverError):
        deagrs.intercept_bounds(example, np.array([6.0]), np.array([4.0]))
