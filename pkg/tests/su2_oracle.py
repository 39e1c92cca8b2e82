"""Numerical SU(2) representation finder used only as a test oracle.

Solves x_i^{a_i} = eps^{b_i}, x_1 ... x_n = 1 directly in the unit quaternions
by least squares from random starts. Nothing here uses the angle-interval rule.
"""

from math import cos, sin

import numpy as np
from scipy.optimize import least_squares


def qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def _elements(params, n):
    out = []
    for i in range(n):
        theta, phi, psi = params[3 * i: 3 * i + 3]
        st, sp = sin(theta), sin(phi)
        out.append((cos(theta), st * sp * cos(psi), st * sp * sin(psi), st * cos(phi)))
    return out


def _residual(params, a, targets):
    n = len(a)
    params = params.tolist()
    xs = _elements(params, n)
    res = []
    for i in range(n):
        theta = params[3 * i]
        # x_i^{a_i} = cos(a_i theta) + sin(a_i theta) u_i
        res.append(cos(a[i] * theta) - targets[i])
        res.append(sin(a[i] * theta))
    prod = xs[0]
    for x in xs[1:]:
        prod = qmul(prod, x)
    res.extend((prod[0] - 1.0, prod[1], prod[2], prod[3]))
    return np.array(res)


def _irreducible(xs, tol=1e-6):
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            c = np.subtract(qmul(xs[i], xs[j]), qmul(xs[j], xs[i]))
            if np.linalg.norm(c) > tol:
                return True
    return False


def find_signatures(a, bs, restarts=200, seed=0, tol=1e-8):
    """Set of (rotation tuple, holonomy sign) of irreducible solutions found."""
    rng = np.random.default_rng(seed)
    n = len(a)
    found = set()
    for eps in (1, -1):
        targets = [float(eps ** (b % 2)) for b in bs]
        for _ in range(restarts):
            x0 = np.column_stack([
                rng.uniform(0, np.pi, n), np.arccos(rng.uniform(-1, 1, n)), rng.uniform(0, 2 * np.pi, n),
            ]).ravel()
            sol = least_squares(_residual, x0, args=(a, targets), method="lm")
            if np.max(np.abs(sol.fun)) > 1e-4:
                continue
            # polish near-solutions to full precision
            sol = least_squares(_residual, sol.x, args=(a, targets), method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15)
            if np.max(np.abs(sol.fun)) >= tol:
                continue
            xs = _elements(sol.x.tolist(), n)
            if not _irreducible(xs):
                continue
            rot = []
            for ai, x in zip(a, xs):
                # angle in [0, pi] from the real part, then l = a_i theta / pi
                theta = np.arccos(np.clip(x[0], -1, 1))
                l = ai * theta / np.pi
                assert abs(l - round(l)) < 1e-5, l
                rot.append(int(round(l)))
            found.add((tuple(rot), eps))
    return found
