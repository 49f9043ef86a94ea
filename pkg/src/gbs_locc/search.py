"""Numerical search for one-way LOCC distinguisher vectors.

A GBS set ``{(m_j, n_j)}`` is one-way LOCC distinguishable iff some unit vector
``v`` makes all ``X^m_j Z^n_j v`` pairwise orthogonal.  Equivalently the
residual

    R(v) = sum_{j<k} |<v| U_{diff(j,k)} |v>|^2

vanishes.  The search minimizes R on the unit sphere by projected gradient
descent from random starts.  A ``not_found`` verdict is evidence about a
specific budget, nothing more.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass
from itertools import combinations

import numpy as np

from .core import GbsSet, PauliLabel
from .pauli import NORM_TOL_INPUT, apply_pauli, as_vector, roots_table

FOUND = "found"
NOT_FOUND = "not_found"

# restarts * pairs * d complex entries handled per batch
_BATCH_ELEMENTS = 1 << 20
_MIN_STEP = 1e-18
_MAX_STEP = 1e3
_MIN_BB = 1e-10
_MAX_HALVINGS = 60


@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 200
    max_iters: int = 500
    step_init: float = 0.1
    tol_found: float = 1e-10
    tol_grad: float = 1e-12
    seed: int = 0

    def __post_init__(self):
        if int(self.restarts) < 1:
            raise ValueError("restarts must be >= 1")
        if int(self.max_iters) < 1:
            raise ValueError("max_iters must be >= 1")
        if not self.step_init > 0:
            raise ValueError("step_init must be positive")
        if not self.tol_found > self.tol_grad > 0:
            raise ValueError("need tol_found > tol_grad > 0")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass(frozen=True)
class SearchReport:
    set: GbsSet
    verdict: str
    best_residual: float
    best_vector: np.ndarray
    restarts_run: int
    best_restart: int
    config: SearchConfig

    @property
    def found(self) -> bool:
        return self.verdict == FOUND

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "verdict": self.verdict,
            "best_residual": self.best_residual,
            "seed": cfg.seed,
            "restarts": self.restarts_run,
            "best_restart": self.best_restart,
            "iters": cfg.max_iters,
            "step_init": cfg.step_init,
            "tol_found": cfg.tol_found,
            "tol_grad": cfg.tol_grad,
            "d": self.set.d,
            "labels": [list(x) for x in self.set.labels],
            "vector": [[float(z.real), float(z.imag)] for z in self.best_vector],
        }


def pair_differences(s: GbsSet) -> Counter:
    """Canonical difference label of each unordered pair, with multiplicity."""
    d = s.d
    return Counter(
        PauliLabel((mk - mj) % d, (nk - nj) % d)
        for (mj, nj), (mk, nk) in combinations(s.labels, 2)
    )


class _Residual:
    """Vectorized residual and gradient over a batch of vectors (rows)."""

    def __init__(self, s: GbsSet):
        d = s.d
        diffs = pair_differences(s)
        self.d = d
        self.npairs = sum(diffs.values())
        labels = list(diffs)
        self.weights = np.array([diffs[x] for x in labels], dtype=float)
        m = np.array([x.m for x in labels], dtype=int)[:, None]
        n = np.array([x.n for x in labels], dtype=int)[:, None]
        k = np.arange(d)[None, :]
        w = roots_table(d)
        # (U v)_k = w^(n(k-m)) v[k-m];  (U^dag v)_k = w^(-nk) v[k+m]
        self.src_u = (k - m) % d
        self.ph_u = w[(n * self.src_u) % d]
        self.src_ud = (k + m) % d
        self.ph_ud = np.conj(w[(n * k) % d])

    def overlaps(self, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        uv = self.ph_u * v[:, self.src_u]
        g = np.einsum("rk,rpk->rp", np.conj(v), uv)
        return g, uv

    def value(self, v: np.ndarray) -> np.ndarray:
        if not self.npairs:
            return np.zeros(v.shape[0])
        g, _ = self.overlaps(v)
        return (np.abs(g) ** 2) @ self.weights

    def value_and_grad(self, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        if not self.npairs:
            return np.zeros(v.shape[0]), np.zeros_like(v)
        g, uv = self.overlaps(v)
        udv = self.ph_ud * v[:, self.src_ud]
        wg = g * self.weights
        grad = np.einsum("rp,rpk->rk", np.conj(wg), uv) + np.einsum("rp,rpk->rk", wg, udv)
        return (np.abs(g) ** 2) @ self.weights, grad


def residual(s: GbsSet, v) -> float:
    """Sum over unordered pairs of ``|<v|U_diff|v>|^2``; zero exactly at distinguishers."""
    v = as_vector(v, d=s.d)
    return float(_Residual(s).value(v[None, :])[0])


def residual_gradient(s: GbsSet, v) -> np.ndarray:
    """Derivative of the residual with respect to ``conj(v)``.

    Entry k is ``sum_pairs conj(g) (U v)_k + g (U^dag v)_k`` with ``g = <v|U|v>``;
    the real-coordinate gradient is ``dR/dRe(v_k) + i dR/dIm(v_k) = 2 * entry k``.
    """
    v = as_vector(v, d=s.d)
    return _Residual(s).value_and_grad(v[None, :])[1][0]


def verify_distinguisher(s: GbsSet, v, tol: float = 1e-10) -> bool:
    """Direct check: the vectors ``U_j v`` are pairwise orthogonal within ``tol``."""
    v = as_vector(v, d=s.d)
    images = np.array([apply_pauli(x, v) for x in s.labels])
    gram = np.conj(images) @ images.T
    off = np.abs(gram[~np.eye(len(images), dtype=bool)])
    return bool(np.all(off <= tol))


def restart_stream(seed: int, restart: int) -> np.random.Generator:
    """Independent generator for one restart; depends only on (seed, restart)."""
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(restart),)))


def initial_vector(d: int, seed: int, restart: int) -> np.ndarray:
    rng = restart_stream(seed, restart)
    z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return z / np.linalg.norm(z)


def _tangent(v: np.ndarray, grad: np.ndarray) -> np.ndarray:
    radial = np.real(np.sum(np.conj(v) * grad, axis=1, keepdims=True))
    return grad - radial * v


def _renormalize(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def _descend(obj: _Residual, v: np.ndarray, cfg: SearchConfig) -> tuple[np.ndarray, np.ndarray]:
    """Projected gradient descent on a batch of restarts.

    Each iteration tries a Barzilai-Borwein step along the tangent gradient and
    halves it until the residual decreases.
    """
    step = np.full(v.shape[0], float(cfg.step_init))
    f, grad = obj.value_and_grad(v)
    tg = _tangent(v, grad)
    active = f >= cfg.tol_grad
    for _ in range(cfg.max_iters):
        gnorm = np.linalg.norm(tg, axis=1)
        active &= (f >= cfg.tol_grad) & (gnorm >= cfg.tol_grad) & (step >= _MIN_STEP)
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        v_prev, tg_prev = v[idx].copy(), tg[idx].copy()
        pending = idx
        for _ in range(_MAX_HALVINGS):
            trial = _renormalize(v[pending] - step[pending, None] * tg[pending])
            ok = obj.value(trial) < f[pending]
            v[pending[ok]] = trial[ok]
            pending = pending[~ok]
            step[pending] *= 0.5
            pending = pending[step[pending] >= _MIN_STEP]
            if pending.size == 0:
                break
        f[idx], grad_idx = obj.value_and_grad(v[idx])
        tg[idx] = _tangent(v[idx], grad_idx)
        moved = step[idx] >= _MIN_STEP
        dv, dg = v[idx] - v_prev, tg[idx] - tg_prev
        sy = np.real(np.sum(np.conj(dv) * dg, axis=1))
        ss = np.sum(np.abs(dv) ** 2, axis=1)
        bb = np.where(sy > 0, ss / np.where(sy > 0, sy, 1.0), 2.0 * step[idx])
        step[idx] = np.where(moved, np.clip(bb, _MIN_BB, _MAX_STEP), step[idx])
    return v, f


def search_distinguisher(s: GbsSet, cfg: SearchConfig | None = None) -> SearchReport:
    """Best of ``cfg.restarts`` independent descents; ties go to the lowest restart index."""
    cfg = cfg or SearchConfig()
    if len(s) < 2:
        raise ValueError("search needs at least two states")
    obj = _Residual(s)
    d = s.d
    batch = max(1, _BATCH_ELEMENTS // max(1, len(obj.weights) * d))
    best_f, best_v, best_r = np.inf, None, -1
    for start in range(0, cfg.restarts, batch):
        ids = range(start, min(cfg.restarts, start + batch))
        v0 = np.array([initial_vector(d, cfg.seed, r) for r in ids])
        v, f = _descend(obj, v0, cfg)
        # replayed value so the reported residual matches residual(set, vector)
        f = obj.value(v)
        i = int(np.argmin(f))
        if f[i] < best_f:
            best_f, best_v, best_r = float(f[i]), v[i].copy(), ids[i]
    assert abs(np.linalg.norm(best_v) - 1.0) < NORM_TOL_INPUT
    return SearchReport(
        set=s,
        verdict=FOUND if best_f < cfg.tol_found else NOT_FOUND,
        best_residual=best_f,
        best_vector=best_v,
        restarts_run=cfg.restarts,
        best_restart=best_r,
        config=cfg,
    )


def config_dict(cfg: SearchConfig) -> dict:
    return asdict(cfg)
