"""Weiszfeld weight iteration in kernel space.

The iterate is never materialized: it exists as a weight-normalized
combination of the embedded objects, and each step only needs Gram values.
Complex arithmetic covers indefinite kernels, where squared distances can
go negative; for positive definite kernels every weight stays exactly real.
An explicit Euclidean implementation is included as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DegenerateWeightsError, GramMatrix, WeightVector


@dataclass(frozen=True)
class WeiszfeldConfig:
    j_max: int = 200
    tol: float = 1e-6
    epsilon_guard: float = 1e-12

    def __post_init__(self):
        if self.j_max < 1:
            raise ValueError("j_max must be >= 1")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.epsilon_guard <= 0:
            raise ValueError("epsilon_guard must be positive")


def _weights_of(w) -> np.ndarray:
    arr = getattr(w, "weights", w)
    return np.asarray(arr, dtype=np.complex128)


def _gram_values(gram) -> np.ndarray:
    return np.asarray(getattr(gram, "values", gram), dtype=np.float64)


def _principal_sqrt_vec(z: np.ndarray) -> np.ndarray:
    """Elementwise principal root; negative reals take the +i branch."""
    z = np.asarray(z, dtype=np.complex128)
    out = np.empty_like(z)
    real = z.imag == 0.0
    rr = z.real[real]
    out[real] = np.where(rr >= 0.0, np.sqrt(np.abs(rr)) + 0.0j, 1j * np.sqrt(np.abs(rr)))
    out[~real] = np.sqrt(z[~real])
    return out


def inner_xx(w, gram) -> complex:
    """Squared kernel norm of the implicit weighted mean.

    Sum over u,v of w_u conj(w_v) K(u,v), normalized by |sum w|^2. Real for
    symmetric Gram matrices up to rounding.
    """
    weights = _weights_of(w)
    values = _gram_values(gram)
    n = weights.shape[0]
    s = weights.sum()
    if abs(s) == 0.0:
        raise DegenerateWeightsError("weights sum to zero")
    return complex(weights @ values[:n, :n] @ weights.conj() / (s * s.conjugate()))


def inner_xo(w, gram, i: int) -> complex:
    """Kernel product between the implicit weighted mean and object i."""
    weights = _weights_of(w)
    values = _gram_values(gram)
    n = weights.shape[0]
    s = weights.sum()
    if abs(s) == 0.0:
        raise DegenerateWeightsError("weights sum to zero")
    return complex(weights @ values[:n, i] / s)


def weiszfeld_step(w: WeightVector, gram, cfg: WeiszfeldConfig = WeiszfeldConfig()) -> WeightVector:
    """One reweighting pass: new w_i = 1 / ||mean - object_i|| in kernel space.

    The squared norm is inner_xx - inner_xo(i) - conj(inner_xo(i)) + K(i,i);
    its principal root may be imaginary for indefinite kernels. Radicands
    with magnitude below the guard mark the object as coinciding with the
    implicit mean and receive the capped weight 1/epsilon_guard.
    """
    weights = _weights_of(w)
    values = _gram_values(gram)
    n = weights.shape[0]
    s = weights.sum()
    if abs(s) == 0.0:
        raise DegenerateWeightsError("weights sum to zero")
    xx = weights @ values[:n, :n] @ weights.conj() / (s * s.conjugate())
    xo = values[:n, :n] @ weights / s
    radicand = xx - xo - xo.conjugate() + np.diag(values)[:n]
    near_zero = np.abs(radicand) < cfg.epsilon_guard
    roots = _principal_sqrt_vec(radicand)
    new = np.empty(n, dtype=np.complex128)
    ok = ~near_zero
    new[ok] = 1.0 / roots[ok]
    new[near_zero] = 1.0 / cfg.epsilon_guard
    coincident = int(np.flatnonzero(near_zero)[0]) if near_zero.any() else None
    return WeightVector(
        weights=new,
        iteration=w.iteration + 1,
        converged=False,
        complex_count=int(np.count_nonzero(new.imag != 0.0)),
        coincident=coincident,
    )


def kernel_weiszfeld(gram, cfg: WeiszfeldConfig = WeiszfeldConfig()) -> WeightVector:
    """Iterate weiszfeld_step from uniform weights until the weights settle.

    Uniform start weights correspond to the mean of the embedded objects.
    Stops when the largest relative change of any weight drops below
    cfg.tol, when an object coincides with the implicit mean, or at
    cfg.j_max. complex_count counts the weight entries that were complex
    at any iteration.
    """
    values = _gram_values(gram)
    n = getattr(gram, "base_n", values.shape[0])
    w = WeightVector(np.ones(n, dtype=np.complex128))
    ever_complex = np.zeros(n, dtype=bool)
    for _ in range(cfg.j_max):
        new = weiszfeld_step(w, gram, cfg)
        ever_complex |= new.weights.imag != 0.0
        change = np.abs(new.weights - w.weights) / (np.abs(w.weights) + cfg.epsilon_guard)
        w = new
        if w.coincident is not None or float(change.max()) < cfg.tol:
            w.converged = True
            break
    w.complex_count = int(np.count_nonzero(ever_complex))
    return w


def explicit_weiszfeld(points, cfg: WeiszfeldConfig = WeiszfeldConfig()):
    """Classic Euclidean Weiszfeld iteration, kept as an independent oracle.

    Starts from the arithmetic mean and mirrors the kernel iteration's
    stopping rule so trajectories can be compared step by step. Returns the
    median vector and the list of weight vectors, one per iteration.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] < 1:
        raise ValueError("points must form a non-empty 2-D array")
    x = pts.mean(axis=0)
    trajectory: list[np.ndarray] = []
    prev = np.ones(pts.shape[0])
    for _ in range(cfg.j_max):
        dists = np.linalg.norm(pts - x, axis=1)
        # guard on the squared norm, matching the kernel-space radicand guard
        hit = dists * dists < cfg.epsilon_guard
        weights = np.empty_like(dists)
        weights[~hit] = 1.0 / dists[~hit]
        weights[hit] = 1.0 / cfg.epsilon_guard
        trajectory.append(weights)
        x = weights @ pts / weights.sum()
        change = np.abs(weights - prev) / (np.abs(prev) + cfg.epsilon_guard)
        prev = weights
        if hit.any() or float(change.max()) < cfg.tol:
            break
    return x, trajectory
