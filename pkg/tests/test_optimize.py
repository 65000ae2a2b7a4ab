import numpy as np

from entfrac.optimize import nelder_mead


def test_quadratic_bowl():
    target = np.array([1.0, -2.0, 0.5])
    f = lambda x: float(np.sum((x - target) ** 2))
    x, fx = nelder_mead(f, np.zeros(3), maxiter=500)
    assert np.max(np.abs(x - target)) < 1e-4
    assert fx < 1e-8


def test_rosenbrock_2d():
    def f(x):
        return (1 - x[0]) ** 2 + 100 * (x[1] - x[0] ** 2) ** 2

    x, fx = nelder_mead(f, np.array([-1.2, 1.0]), maxiter=2000)
    assert np.max(np.abs(x - 1.0)) < 1e-3


def test_trig_objective():
    # min of -cos on [0, 2pi) starting nearby.
    x, fx = nelder_mead(lambda x: -np.cos(x[0]), np.array([0.7]), maxiter=300)
    assert abs(x[0]) < 1e-4
    assert abs(fx + 1.0) < 1e-8


def test_deterministic_repeat():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((4, 4))
    a = a @ a.T + np.eye(4)
    f = lambda x: float(x @ a @ x + np.sin(x).sum())
    r1 = nelder_mead(f, np.full(4, 0.3), maxiter=400)
    r2 = nelder_mead(f, np.full(4, 0.3), maxiter=400)
    assert np.array_equal(r1[0], r2[0])
    assert r1[1] == r2[1]


def test_maxiter_returns_best_seen():
    calls = []

    def f(x):
        calls.append(x.copy())
        return float(x[0] ** 2)

    x, fx = nelder_mead(f, np.array([5.0]), maxiter=3)
    assert fx <= min(25.0, fx)
    assert len(calls) >= 2
