"""Independent reference implementations used as test oracles.

Nothing here calls into the package's solver, so agreement is evidence
rather than tautology.
"""

import numpy as np


def explicit_gram(X, C, family, sigma=1.0):
    K = np.empty((len(X), len(C)))
    for i, x in enumerate(X):
        for j, c in enumerate(C):
            K[i, j] = x @ c if family == "linear" else np.exp(-np.sum((x - c) ** 2) / (2 * sigma))
    return K


def augmented(A, B, family="linear", sigma=1.0):
    if family == "linear":
        KA, KB = A, B
    else:
        C = np.vstack([A, B])
        KA, KB = explicit_gram(A, C, family, sigma), explicit_gram(B, C, family, sigma)
    G = np.hstack([KA, np.ones((len(KA), 1))])
    H = np.hstack([KB, np.ones((len(KB), 1))])
    return G, H


def objectives(kind, A, B, c1, c2, c3=0.0, c4=0.0, e1=1.0, e2=1.0, s1=None, s2=None,
               family="linear", sigma=1.0):
    """Unconstrained objectives of both planes after substituting the slacks.

    plane 1: 1/2||G z||^2 + c1/2 ||S2 (H z + E2)||^2 + c3/2 ||z||^2
    plane 2: 1/2||H z||^2 + c2/2 ||S1 (G z - E1)||^2 + c4/2 ||z||^2
    `kind` switches off the parts a model does not have.
    """
    G, H = augmented(A, B, family, sigma)
    p, q = len(G), len(H)
    if kind == "lstsvm":
        e1 = e2 = 1.0
    if kind in ("lstsvm", "elstsvm"):
        c3 = c4 = 0.0
    if kind != "weighted":
        s1, s2 = np.ones(p), np.ones(q)
    E1, E2 = e1 * np.ones(p), e2 * np.ones(q)

    def f1(z):
        return 0.5 * np.sum((G @ z) ** 2) + 0.5 * c1 * np.sum((s2 * (H @ z + E2)) ** 2) \
            + 0.5 * c3 * z @ z

    def f2(z):
        return 0.5 * np.sum((H @ z) ** 2) + 0.5 * c2 * np.sum((s1 * (G @ z - E1)) ** 2) \
            + 0.5 * c4 * z @ z

    return f1, f2


def fd_gradient(f, z, rel_step=1e-4):
    g = np.empty_like(z)
    for i in range(len(z)):
        h = rel_step * max(1.0, abs(z[i]))
        zp, zm = z.copy(), z.copy()
        zp[i] += h
        zm[i] -= h
        g[i] = (f(zp) - f(zm)) / (2 * h)
    return g


def least_squares_planes(kind, A, B, c1, c2, c3=0.0, c4=0.0, e1=1.0, e2=1.0, s1=None,
                         s2=None, family="linear", sigma=1.0):
    """Minimise both objectives as stacked least-squares problems with lstsq."""
    G, H = augmented(A, B, family, sigma)
    p, q = len(G), len(H)
    if kind == "lstsvm":
        e1 = e2 = 1.0
    if kind in ("lstsvm", "elstsvm"):
        c3 = c4 = 0.0
    if kind != "weighted":
        s1, s2 = np.ones(p), np.ones(q)
    dim = G.shape[1]
    M1 = np.vstack([G, np.sqrt(c1) * s2[:, None] * H, np.sqrt(c3) * np.eye(dim)])
    t1 = np.concatenate([np.zeros(p), -np.sqrt(c1) * s2 * e2, np.zeros(dim)])
    M2 = np.vstack([H, np.sqrt(c2) * s1[:, None] * G, np.sqrt(c4) * np.eye(dim)])
    t2 = np.concatenate([np.zeros(q), np.sqrt(c2) * s1 * e1, np.zeros(dim)])
    z1 = np.linalg.lstsq(M1, t1, rcond=None)[0]
    z2 = np.linalg.lstsq(M2, t2, rcond=None)[0]
    return z1, z2


def random_instance(rng, max_n=5, max_m=40):
    """Small random two-class problem with enough rows for a unique plane."""
    n = int(rng.integers(1, max_n + 1))
    m = int(rng.integers(n + 4, max_m + 1))
    p = int(rng.integers(2, m - 1))
    q = m - p
    A = rng.normal(0.0, 1.0, size=(p, n))
    B = rng.normal(0.5, 1.0, size=(q, n))
    return A, B


def random_labelled(seed, max_m=40, max_n=5):
    """Random two-class sample (features, labels) with both classes >= 2."""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, max_n + 1))
    p = int(rng.integers(2, max_m // 2 + 1))
    q = int(rng.integers(2, max_m // 2 + 1))
    X = np.vstack([rng.normal(0.0, 1.0, size=(p, n)), rng.normal(0.7, 1.3, size=(q, n))])
    return X, np.array([1] * p + [-1] * q)


def explicit_membership(X, y, delta):
    """IFMA membership with centres and radii computed in input space."""
    mu = np.empty(len(y))
    for label in (1, -1):
        mask = y == label
        center = X[mask].mean(axis=0)
        dist = np.linalg.norm(X[mask] - center, axis=1)
        mu[mask] = 1.0 - dist / (dist.max() + delta)
    return mu


def smw_instances(n_instances=200, seed=2024):
    """(blocks, ridge, rhs) with reduced/full size ratios cycling over
    0.05, 0.5, 1 and 2, alternating one and two blocks."""
    rng = np.random.default_rng(seed)
    ratios = (0.05, 0.5, 1.0, 2.0)
    for i in range(n_instances):
        d = int(rng.integers(20, 80))
        ratio = ratios[i % 4]
        n_blocks = 1 + i % 2
        blocks = []
        for _ in range(n_blocks):
            t = max(1, int(round(ratio * d / n_blocks)))
            blocks.append((float(10 ** rng.uniform(-2, 2)), rng.normal(size=(t, d))))
        ridge = float(10 ** rng.uniform(-2, 1))
        yield blocks, ridge, rng.normal(size=d)


def direct_solve(blocks, ridge, rhs):
    d = len(rhs)
    M = ridge * np.eye(d)
    for c, T in blocks:
        M += c * T.T @ T
    return np.linalg.solve(M, rhs)
