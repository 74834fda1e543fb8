import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from fuzzytwin.exceptions import ShapeError
from fuzzytwin.kernel import LINEAR, KernelSpec, feature_distances, gram

GAUSS = KernelSpec("gaussian", 1.0)

finite = st.floats(-5, 5, allow_nan=False, allow_infinity=False)


def test_gaussian_self_similarity_is_one():
    x = np.array([[0.3, -1.2]])
    assert gram(x, x, GAUSS)[0, 0] == 1.0


def test_gaussian_hand_value():
    # exp(-||(0,0) - (1,1)||^2 / (2 * 1)) = exp(-1)
    v = gram(np.array([[0.0, 0.0]]), np.array([[1.0, 1.0]]), GAUSS)[0, 0]
    assert v == pytest.approx(math.exp(-1.0), abs=1e-15)
    assert v == pytest.approx(0.36788, abs=1e-5)


def test_gaussian_width_is_not_squared():
    v = gram(np.array([[0.0]]), np.array([[2.0]]), KernelSpec("gaussian", 4.0))[0, 0]
    assert v == pytest.approx(math.exp(-4.0 / 8.0))


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        gram(np.zeros((2, 3)), np.zeros((2, 2)), LINEAR)


def test_spec_validation():
    with pytest.raises(ValueError):
        KernelSpec("gaussian", 0.0)
    with pytest.raises(ValueError):
        KernelSpec("poly", 1.0)


@settings(max_examples=60, deadline=None)
@given(arrays(float, st.tuples(st.integers(1, 6), st.integers(1, 4)), elements=finite),
       st.sampled_from([LINEAR, GAUSS, KernelSpec("gaussian", 0.1)]))
def test_self_gram_symmetric(X, spec):
    K = gram(X, X, spec)
    np.testing.assert_array_equal(K, K.T)
    if not spec.is_linear:
        np.testing.assert_array_equal(np.diag(K), 1.0)
        assert np.all((K >= 0) & (K <= 1))


@settings(max_examples=40, deadline=None)
@given(arrays(float, (4, 3), elements=finite), arrays(float, (5, 3), elements=finite))
def test_linear_matches_triple_loop(X, C):
    K = gram(X, C, LINEAR)
    naive = np.array([[sum(X[i, k] * C[j, k] for k in range(3)) for j in range(5)]
                      for i in range(4)])
    np.testing.assert_allclose(K, naive, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(arrays(float, (4, 2), elements=finite), arrays(float, (3, 2), elements=finite),
       arrays(float, (2,), elements=finite))
def test_gaussian_translation_invariant(X, C, shift):
    K1 = gram(X, C, GAUSS)
    K2 = gram(X + shift, C + shift, GAUSS)
    np.testing.assert_allclose(K1, K2, atol=1e-10)


def test_gaussian_entries_positive_and_bounded():
    rng = np.random.default_rng(0)
    K = gram(rng.normal(size=(10, 3)), rng.normal(size=(7, 3)), KernelSpec("gaussian", 0.5))
    assert np.all(K > 0) and np.all(K <= 1)


def test_feature_distances_match_explicit():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(6, 3))
    explicit = np.linalg.norm(X[:, None, :] - X[None, :, :], axis=2)
    np.testing.assert_allclose(feature_distances(X, LINEAR), explicit, atol=1e-12)
    # Gaussian: ||phi(x) - phi(y)||^2 = 2 - 2 K(x, y)
    K = gram(X, X, GAUSS)
    np.testing.assert_allclose(feature_distances(X, GAUSS), np.sqrt(2 - 2 * K), atol=1e-12)
