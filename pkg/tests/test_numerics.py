import numpy as np
import pytest

from oracles import direct_solve, smw_instances

from fuzzytwin.dataset import generate_crossplane
from fuzzytwin.exceptions import ContractError, NumericalError, ShapeError
from fuzzytwin.kernel import KernelSpec
from fuzzytwin.numerics import (
    SMW_THRESHOLD,
    SpdFactor,
    gram_system,
    smw_solve,
    solve_gram_system,
    spd_solve,
)
from fuzzytwin.solver import SolverParams, fit_relstsvm, fit_weighted


def _spd_with_condition(d, cond, rng):
    Q, _ = np.linalg.qr(rng.normal(size=(d, d)))
    eig = np.logspace(0, -np.log10(cond), d)
    M = (Q * eig) @ Q.T
    return 0.5 * (M + M.T)


def test_identity_and_scalar_systems():
    v = np.arange(1.0, 5.0)
    np.testing.assert_array_equal(spd_solve(np.eye(4), v), v)
    np.testing.assert_allclose(spd_solve(2 * np.eye(4), v), v / 2, rtol=1e-15)


def test_random_spd_residual():
    rng = np.random.default_rng(8)
    X = rng.normal(size=(8, 8))
    M = X @ X.T + 0.5 * np.eye(8)
    b = rng.normal(size=8)
    x = spd_solve(M, b)
    assert np.linalg.norm(M @ x - b) <= 1e-10 * np.linalg.norm(b)


@pytest.mark.parametrize("cond", [1e2, 1e5, 1e8])
def test_residual_bound_up_to_cond_1e8(cond):
    rng = np.random.default_rng(int(np.log10(cond)))
    for _ in range(20):
        M = _spd_with_condition(12, cond, rng)
        b = rng.normal(size=12)
        x = spd_solve(M, b)
        assert np.linalg.norm(M @ x - b) <= 1e-8 * np.linalg.norm(b)


def test_not_positive_definite_names_minor():
    M = np.diag([1.0, 2.0, -1.0, 4.0])
    with pytest.raises(NumericalError, match="order 3"):
        spd_solve(M, np.ones(4))


def test_hopeless_conditioning_is_surfaced():
    rng = np.random.default_rng(5)
    M = _spd_with_condition(30, 1e19, rng)
    with pytest.raises(NumericalError):
        spd_solve(M, rng.normal(size=30))


def test_asymmetric_matrix_rejected():
    with pytest.raises(ContractError):
        SpdFactor(np.array([[2.0, 1.0], [0.0, 2.0]]))


def test_shape_checks():
    with pytest.raises(ShapeError):
        spd_solve(np.eye(3), np.ones(4))
    with pytest.raises(ShapeError):
        SpdFactor(np.ones((2, 3)))


def test_zero_tall_gives_pure_ridge():
    rhs = np.array([1.0, -2.0, 3.0, 0.5, 7.0, 1.0])
    x = smw_solve(1.0, np.zeros((2, 6)), 4.0, rhs)
    np.testing.assert_allclose(x, rhs / 4.0, rtol=1e-14)


def test_smw_matches_direct_small_t():
    rng = np.random.default_rng(60)
    T = rng.normal(size=(5, 60))
    rhs = rng.normal(size=60)
    trace = []
    x = smw_solve(2.5, T, 0.3, rhs, trace=trace)
    assert trace == [5]
    direct = np.linalg.solve(2.5 * T.T @ T + 0.3 * np.eye(60), rhs)
    assert np.linalg.norm(x - direct) <= 1e-9 * np.linalg.norm(direct)


def test_wide_input_falls_through_to_direct():
    rng = np.random.default_rng(2)
    T = rng.normal(size=(30, 10))
    rhs = rng.normal(size=10)
    trace = []
    x = smw_solve(1.0, T, 1.0, rhs, trace=trace)
    assert trace == [10]
    np.testing.assert_allclose(x, np.linalg.solve(T.T @ T + np.eye(10), rhs), rtol=1e-10)


def test_non_positive_ridge():
    with pytest.raises(ContractError):
        smw_solve(1.0, np.ones((1, 3)), 0.0, np.ones(3))
    with pytest.raises(ContractError):
        smw_solve(1.0, np.ones((1, 3)), -1.0, np.ones(3))


def test_dispatch_threshold():
    rng = np.random.default_rng(4)
    d = 20
    for t, expect_smw in ((15, True), (16, False)):
        trace = []
        solve_gram_system([(1.0, rng.normal(size=(t, d)))], 1.0, np.ones(d), trace=trace)
        assert (trace == [t]) is expect_smw
    assert SMW_THRESHOLD == 0.8


def test_smw_equals_direct_on_200_instances():
    worst = 0.0
    for blocks, ridge, rhs in smw_instances(seed=7):
        x_smw = solve_gram_system(blocks, ridge, rhs)
        x_dir = direct_solve(blocks, ridge, rhs)
        worst = max(worst, np.linalg.norm(x_smw - x_dir) / np.linalg.norm(x_dir))
    assert worst <= 1e-8


def test_nested_woodbury_matches_direct_two_blocks():
    rng = np.random.default_rng(9)
    blocks = [(0.5, rng.normal(size=(6, 40))), (3.0, rng.normal(size=(9, 40)))]
    rhs = rng.normal(size=40)
    trace = []
    x = solve_gram_system(blocks, 0.2, rhs, trace=trace)
    assert trace == [6, 9]
    x_dir = np.linalg.solve(gram_system(blocks, 0.2), rhs)
    np.testing.assert_allclose(x, x_dir, rtol=1e-9)


@pytest.mark.parametrize("p,q", [(10, 30), (30, 10)])
def test_kernel_solver_factors_case_sizes(p, q):
    d = generate_crossplane(p, q, 0.05, 0)
    spec = KernelSpec("gaussian", 1.0)
    for fit in (fit_relstsvm,
                lambda A, B, prm, spec, trace: fit_weighted(A, B, np.ones(len(A)), np.ones(len(B)),
                                                            prm, spec, trace=trace)):
        trace = []
        fit(d.A, d.B, SolverParams(), spec, trace=trace)
        if p < q:
            # plane 1 folds in the opposite (q) block before its own (p) block
            assert trace == [("plane1", (q, p)), ("plane2", (p, q))]
        else:
            assert trace == [("plane1", (p, q)), ("plane2", (q, p))]


def test_linear_solver_uses_direct_path():
    d = generate_crossplane(10, 30, 0.05, 0)
    trace = []
    fit_relstsvm(d.A, d.B, SolverParams(), trace=trace)
    assert trace == [("plane1", (3,)), ("plane2", (3,))]
