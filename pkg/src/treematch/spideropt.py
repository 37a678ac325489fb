"""Closed-form counting and leaf-distribution optimization on spider chains.

A chain profile (l_1, ..., l_m) places m spider centers on a path, center i
carrying l_i legs of length 2.  A matching avoiding k leaves exists exactly
when the k avoided leaves sit in k distinct spiders and the remaining
centers split into consecutive pairs along the path, which yields the
polynomial  sum over such index sets I of  prod_{i in I} l_i.  The same
polynomial, restricted to a symmetric profile, is what the continuous
optimizer maximizes over a scaled simplex.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .errors import InfeasibleParity, ParityMismatch

_EXHAUSTIVE_LIMIT = 1_000_000
DEFAULT_SEED = 20250808
_NEWTON_STEPS = 40
_PGA_STEPS = 400


def _even_runs(positions: list[int], blocked: set[int]) -> bool:
    """True when every maximal run of unblocked consecutive positions is even."""
    run = 0
    for i in positions:
        if i in blocked:
            if run % 2:
                return False
            run = 0
        else:
            run += 1
    return run % 2 == 0


def _valid_avoid_sets(m: int, k: int) -> list[tuple[int, ...]]:
    """Index sets I of size k whose complement splits into even runs."""
    positions = list(range(m))
    return [s for s in combinations(positions, k) if _even_runs(positions, set(s))]


def ksapm_chain_count(legs, k: int) -> int:
    """Exact count of matchings avoiding k leaves on the chain profile.

    An avoided leaf is normally a leg tip (its spider's center then takes
    the dangling middle vertex, so at most one tip per spider), but a
    center whose total degree is 1 is itself a leaf of the realized tree
    and may be avoided too; the centers left over must pair up along
    consecutive path edges.
    """
    legs = list(legs)
    m = len(legs)
    order = m + 2 * sum(legs)
    if (order - k) % 2:
        raise ParityMismatch(f"order {order} minus k={k} must be even")
    path_degree = (lambda i: 0) if m == 1 else (lambda i: 1 if i in (0, m - 1) else 2)
    leaf_centers = [i for i in range(m) if path_degree(i) + legs[i] == 1]
    total = 0
    for picked in range(min(len(leaf_centers), k) + 1):
        for removed in combinations(leaf_centers, picked):
            rest = [i for i in range(m) if i not in removed]
            for subset in combinations(rest, k - picked):
                if not _even_runs(rest, set(subset)):
                    continue
                term = 1
                for i in subset:
                    term *= legs[i]
                total += term
    return total


def chain_count_polynomial(m: int, k: int, groups=None) -> dict[tuple[int, ...], int]:
    """The chain count as a polynomial: exponent tuple -> coefficient.

    ``groups[i]`` maps chain position i to a variable index; the default is
    one variable per position.  For the symmetric 8-chain use
    groups=(0,1,2,3,3,2,1,0).  Agrees with :func:`ksapm_chain_count` on
    strictly positive profiles (the degenerate bare-end cases are not
    polynomial in the leg counts).
    """
    if groups is None:
        groups = tuple(range(m))
    if len(groups) != m:
        raise ValueError("groups must assign a variable to every position")
    nvars = max(groups) + 1
    poly: dict[tuple[int, ...], int] = {}
    for subset in _valid_avoid_sets(m, k):
        expo = [0] * nvars
        for i in subset:
            expo[groups[i]] += 1
        key = tuple(expo)
        poly[key] = poly.get(key, 0) + 1
    return poly


class ChainObjective:
    """Polynomial objective with analytic value, gradient, and Hessian."""

    def __init__(self, poly: dict[tuple[int, ...], int]):
        if not poly:
            raise InfeasibleParity("no feasible avoided sets: the objective is empty")
        self.poly = poly
        self.nvars = len(next(iter(poly)))

    def value(self, x) -> float:
        x = np.asarray(x, dtype=float)
        total = 0.0
        for expo, coeff in self.poly.items():
            term = coeff
            for i, e in enumerate(expo):
                if e:
                    term *= x[i] ** e
            total += term
        return total

    def value_int(self, x) -> int:
        """Exact evaluation at an integer point (no float rounding)."""
        total = 0
        for expo, coeff in self.poly.items():
            term = coeff
            for i, e in enumerate(expo):
                if e:
                    term *= int(x[i]) ** e
            total += term
        return total

    def gradient(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        g = np.zeros(self.nvars)
        for expo, coeff in self.poly.items():
            for j, ej in enumerate(expo):
                if not ej:
                    continue
                term = coeff * ej
                for i, e in enumerate(expo):
                    p = e - 1 if i == j else e
                    if p:
                        term *= x[i] ** p
                g[j] += term
        return g

    def hessian(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        h = np.zeros((self.nvars, self.nvars))
        for expo, coeff in self.poly.items():
            for j, ej in enumerate(expo):
                if not ej:
                    continue
                for l, el in enumerate(expo):
                    factor = ej * (el if l != j else ej - 1)
                    if not factor:
                        continue
                    term = coeff * factor
                    for i, e in enumerate(expo):
                        p = e - (i == j) - (i == l)
                        if p:
                            term *= x[i] ** p
                    h[j, l] += term
        return h


@dataclass
class OptimizeResult:
    """Outcome of a leaf-distribution optimization."""

    mode: str
    symmetric: bool
    profile: tuple  # legs per chain position
    value: float | int
    ratio: tuple | None  # group values normalized by the second group
    gradient_norm: float | None

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "symmetric": self.symmetric,
            "profile": list(self.profile),
            "value": self.value,
            "ratio": list(self.ratio) if self.ratio is not None else None,
            "gradient_norm": self.gradient_norm,
        }


def _groups_for(m: int, symmetric: bool) -> tuple[tuple[int, ...], np.ndarray]:
    if not symmetric:
        return tuple(range(m)), np.ones(m)
    if m % 2:
        raise InfeasibleParity("symmetric profiles need an even chain length")
    g = m // 2
    groups = tuple(list(range(g)) + list(range(g - 1, -1, -1)))
    return groups, np.full(g, 2.0)


def _expand(groups, values) -> tuple:
    return tuple(values[g] for g in groups)


def _project_simplex(y: np.ndarray, total: float) -> np.ndarray:
    """Euclidean projection onto {y >= 0, sum(y) = total} (sort-based)."""
    a = np.sort(y)[::-1]
    cumsum = np.cumsum(a) - total
    rho = np.nonzero(a * np.arange(1, len(y) + 1) > cumsum)[0][-1]
    theta = cumsum[rho] / (rho + 1.0)
    return np.maximum(y - theta, 0.0)


def _kkt_residual(obj: ChainObjective, weights: np.ndarray, v: np.ndarray, total: float | None = None) -> float:
    """Projected-gradient norm at v; includes feasibility drift when total given."""
    g = obj.gradient(v)
    support = v > 1e-12 * max(1.0, float(v.max()))
    denom = float(weights[support] @ weights[support])
    lam = float(weights[support] @ g[support]) / denom
    res = 0.0
    for i in range(len(v)):
        d = g[i] - lam * weights[i]
        if support[i]:
            res += d * d
        elif d > 0:
            res += d * d
    if total is not None:
        drift = float(weights @ v) - total
        res += drift * drift
    return float(np.sqrt(res))


def _validate_gradient(obj, x, tol=1e-6):
    """Analytic gradient against central finite differences (sanity guard)."""
    g = obj.gradient(x)
    h = 1e-5
    for i in range(len(x)):
        e = np.zeros(len(x))
        e[i] = h
        fd = (obj.value(x + e) - obj.value(x - e)) / (2 * h)
        if abs(fd - g[i]) > tol * max(1.0, abs(g[i])):
            raise AssertionError(f"gradient mismatch at coordinate {i}: {g[i]} vs {fd}")


def _continuous_optimize(obj, weights, total, seed, starts):
    rng = np.random.default_rng(seed)
    g = obj.nvars
    best_v, best_val = None, -np.inf
    inits = [np.full(g, 1.0 / g)]
    inits.extend(rng.dirichlet(np.ones(g)) for _ in range(starts - 1))
    _validate_gradient(obj, inits[0] * total / weights)
    for frac in inits:
        y = frac * total  # y_i = weights_i * v_i lives on the plain simplex
        step = 1.0
        val = obj.value(y / weights)
        for _ in range(_PGA_STEPS):
            grad_y = obj.gradient(y / weights) / weights
            while step > 1e-18:
                y_new = _project_simplex(y + step * grad_y, total)
                new_val = obj.value(y_new / weights)
                if new_val > val:
                    break
                step *= 0.5
            else:
                break
            if np.max(np.abs(y_new - y)) < 1e-14:
                y = y_new
                val = new_val
                break
            y, val = y_new, new_val
            step *= 2.0
        v = y / weights
        v = _newton_polish(obj, weights, total, v)
        feas = float(weights @ v)
        if feas > 0:  # renormalize exactly onto the constraint surface
            v = v * (total / feas)
        cur = obj.value(v)
        if cur > best_val:
            best_val, best_v = cur, v
    return best_v, best_val


def _newton_polish(obj, weights, total, v):
    """Newton steps on the stationarity system over the active support."""
    v = np.array(v, dtype=float)
    support = v > 1e-9 * max(1.0, float(v.max()))
    idx = np.nonzero(support)[0]
    if len(idx) == 0:
        return v
    vs = v[idx].copy()
    w = weights[idx]
    g0 = obj.gradient(v)[idx]
    lam = float(w @ g0) / float(w @ w)
    for _ in range(_NEWTON_STEPS):
        full = np.zeros_like(v)
        full[idx] = vs
        grad = obj.gradient(full)[idx]
        hess = obj.hessian(full)[np.ix_(idx, idx)]
        r1 = grad - lam * w
        r2 = float(w @ vs) - total
        if max(np.max(np.abs(r1)), abs(r2)) < 1e-14:
            break
        kkt = np.zeros((len(idx) + 1, len(idx) + 1))
        kkt[:-1, :-1] = hess
        kkt[:-1, -1] = -w
        kkt[-1, :-1] = w
        rhs = np.concatenate([-r1, [-r2]])
        try:
            delta = np.linalg.solve(kkt, rhs)
        except np.linalg.LinAlgError:
            break
        new_vs = vs + delta[:-1]
        if np.any(new_vs < 0):
            break
        vs, lam = new_vs, lam + delta[-1]
    out = np.zeros_like(v)
    out[idx] = vs
    better = _kkt_residual(obj, weights, out, total) <= _kkt_residual(obj, weights, v, total)
    return out if better else v


def _integer_optimize(obj, weights, total):
    g = obj.nvars
    if any(w != weights[0] for w in weights):
        raise InfeasibleParity("mixed group multiplicities are not supported")
    unit = int(weights[0])
    if total % unit:
        raise InfeasibleParity(f"total legs {total} not divisible by group multiplicity {unit}")
    group_total = total // unit
    n_comps = comb(group_total + g - 1, g - 1)
    best_v, best_val = None, -1
    if n_comps <= _EXHAUSTIVE_LIMIT:
        def compositions(remaining, parts):
            if parts == 1:
                yield (remaining,)
                return
            for first in range(remaining + 1):
                for rest in compositions(remaining - first, parts - 1):
                    yield (first,) + rest

        for v in compositions(group_total, g):
            val = obj.value_int(v)
            if val > best_val:
                best_val, best_v = val, v
    else:
        v = [group_total // g] * g
        for i in range(group_total % g):
            v[i] += 1
        best_v = tuple(v)
        best_val = obj.value_int(best_v)
        improved = True
        while improved:
            improved = False
            for i in range(g):
                for j in range(g):
                    if i == j or best_v[i] == 0:
                        continue
                    cand = list(best_v)
                    cand[i] -= 1
                    cand[j] += 1
                    val = obj.value_int(cand)
                    if val > best_val:
                        best_val, best_v = val, tuple(cand)
                        improved = True
    return best_v, best_val


def optimize_leaf_distribution(
    m: int,
    total_legs,
    k: int,
    mode: str = "integer",
    symmetric: bool = False,
    seed: int = DEFAULT_SEED,
    starts: int = 16,
) -> OptimizeResult:
    """Maximize the k-avoided-leaf count over leg distributions on an m-chain.

    Integer mode searches compositions of total_legs (exhaustively up to
    1e6 candidates, otherwise by unit-transfer hill climbing).  Continuous
    mode maximizes the polynomial over the scaled simplex by multi-start
    projected gradient ascent with a Newton polish, returning group values
    whose projected-gradient norm is reported alongside.
    """
    if m < 2 or total_legs <= 0:
        raise ValueError("need chain length >= 2 and positive total legs")
    if (m - k) % 2:
        raise InfeasibleParity(f"no matching avoids {k} leaves on a {m}-chain")
    groups, weights = _groups_for(m, symmetric)
    obj = ChainObjective(chain_count_polynomial(m, k, groups))
    if mode == "integer":
        best_v, best_val = _integer_optimize(obj, weights, int(total_legs))
        return OptimizeResult(
            mode="integer",
            symmetric=symmetric,
            profile=_expand(groups, best_v),
            value=best_val,
            ratio=None,
            gradient_norm=None,
        )
    if mode != "continuous":
        raise ValueError(f"unknown mode {mode!r}")
    best_v, best_val = _continuous_optimize(obj, weights, float(total_legs), seed, starts)
    ratio = None
    if obj.nvars >= 2 and best_v[1] > 0:
        ratio = tuple(float(x / best_v[1]) for x in best_v)
    return OptimizeResult(
        mode="continuous",
        symmetric=symmetric,
        profile=_expand(groups, tuple(float(x) for x in best_v)),
        value=float(best_val),
        ratio=ratio,
        gradient_norm=_kkt_residual(obj, weights, best_v),
    )


def ksapm_growth_check(k: int, n_list) -> list[dict]:
    """Best-known avoided-k-leaves counts against the binomial ceiling C(n, k).

    For k = 1 the witness is the spider on n (odd) vertices; for k >= 2 it
    is the hub-joined wheel of k+1 spiders with a legs each, which needs
    n = (k+1)(2a+1) + 1.
    """
    rows = []
    for n in n_list:
        if k == 1:
            if n % 2 == 0:
                raise ValueError(f"k=1 needs odd n, got {n}")
            count = (n - 1) // 2
            a = None
        else:
            body, rem = divmod(n - 1, k + 1)
            if rem or body % 2 == 0 or body < 3:
                raise ValueError(f"n={n} does not fit a {k + 1}-spider wheel")
            a = (body - 1) // 2
            count = (k + 1) * a**k
        ceiling = comb(n, k)
        assert count <= ceiling
        rows.append({"n": n, "legs": a, "count": count, "binomial": ceiling})
    return rows
