"""Floating-point evaluation of multiple zeta values by truncated summation.

The evaluator runs the nested-sum dynamic program
    A_n(m) = sum_{0 < m' < m} 1 / m'^{k_n},
    A_j(m) = sum_{0 < m' < m} A_{j+1}(m') / m'^{k_j},
and returns A_1(M + 1) together with a heuristic error estimate: the
difference between the M and M/2 truncations plus the analytic tail bound
for the outer exponent.  Inner tails are covered only heuristically; the
numbers here are a smoke test for identities that are exact symbolically.

The inner loop is the one hot numeric kernel in the package.  By default it
runs under numba's @njit; set MZVSHUFFLE_NUMERIC=numpy to force the pure
numpy fallback (used automatically when numba is unavailable).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .lincomb import LinComb
from .words import NotAdmissibleError, word_to_mzv

ENV_BACKEND = "MZVSHUFFLE_NUMERIC"
DEFAULT_TERMS = 20_000
MIN_TERMS = 16

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False


def _dp_numpy(ks: np.ndarray, terms: int) -> tuple[float, float]:
    """Vectorized fallback: one cumulative sum per nesting level."""
    m = np.arange(terms + 2, dtype=np.float64)
    level = np.ones(terms + 2)
    for k in ks[::-1]:
        summand = np.zeros(terms + 2)
        summand[1 : terms + 1] = level[1 : terms + 1] * m[1 : terms + 1] ** (-float(k))
        level = np.zeros(terms + 2)
        level[1:] = np.cumsum(summand)[: terms + 1]
    return float(level[terms + 1]), float(level[terms // 2 + 1])


if HAVE_NUMBA:

    @njit(cache=True)
    def _dp_numba(ks, terms):  # pragma: no cover - numba-compiled
        # exponents are small positive integers: repeated multiplication
        # beats libm pow by ~4x here
        level = np.ones(terms + 2)
        for j in range(ks.shape[0] - 1, -1, -1):
            k = ks[j]
            nxt = np.zeros(terms + 2)
            acc = 0.0
            for m in range(1, terms + 1):
                inv = 1.0 / m
                p = inv
                for _ in range(k - 1):
                    p *= inv
                acc += level[m] * p
                nxt[m + 1] = acc
            level = nxt
        return level[terms + 1], level[terms // 2 + 1]


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if HAVE_NUMBA else ("numpy",)


def resolve_backend(name: str | None = None) -> str:
    """Pick the DP backend: explicit arg, then the env flag, then numba."""
    name = name or os.environ.get(ENV_BACKEND, "auto")
    if name not in ("auto", "numba", "numpy"):
        raise ValueError(f"backend must be 'numba', 'numpy' or 'auto', got {name!r}")
    if name == "auto":
        return "numba" if HAVE_NUMBA else "numpy"
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not importable")
    return name


@dataclass(frozen=True)
class NumericResult:
    value: float
    err_est: float
    terms_used: int

    def __post_init__(self):
        if self.err_est < 0 or not np.isfinite(self.value):
            raise ValueError("numeric result must be finite with err_est >= 0")


def _check_index(ks: tuple[int, ...]) -> None:
    if not ks or any(k < 1 for k in ks) or ks[0] < 2:
        raise NotAdmissibleError(
            f"zeta index must have k_1 >= 2 and all entries >= 1, got {ks}"
        )


@lru_cache(maxsize=8192)
def _eval_cached(ks: tuple[int, ...], terms: int, backend: str) -> NumericResult:
    arr = np.asarray(ks, dtype=np.int64)
    if backend == "numba":
        value, half = _dp_numba(arr, terms)
    else:
        value, half = _dp_numpy(arr, terms)
    tail = float(terms) ** (1 - ks[0]) / (ks[0] - 1)
    return NumericResult(value=value, err_est=abs(value - half) + tail, terms_used=terms)


def mzv_eval(
    idx: Iterable[int], terms: int = DEFAULT_TERMS, backend: str | None = None
) -> NumericResult:
    """Evaluate zeta(k_1, ..., k_n) by truncating the nested sum at `terms`."""
    ks = tuple(int(k) for k in idx)
    _check_index(ks)
    terms = int(terms)
    if terms < MIN_TERMS:
        raise ValueError(f"terms must be at least {MIN_TERMS}, got {terms}")
    return _eval_cached(ks, terms, resolve_backend(backend))


def zeta_of_lincomb(
    comb: LinComb, terms: int = DEFAULT_TERMS, backend: str | None = None
) -> NumericResult:
    """Apply the zeta map linearly; the empty word evaluates to exactly 1."""
    offending = [str(w) for w, _ in comb.items() if not w.is_admissible]
    if offending:
        raise NotAdmissibleError(f"words without a zeta value: {', '.join(offending)}")
    value = 0.0
    err = 0.0
    for word, coeff in comb.items():
        if word.is_empty:
            value += coeff
            continue
        res = mzv_eval(word_to_mzv(word), terms, backend)
        value += coeff * res.value
        err += abs(coeff) * res.err_est
    return NumericResult(value=value, err_est=err, terms_used=terms)


def identity_residual(u, v, terms: int = DEFAULT_TERMS, backend: str | None = None) -> float:
    """|zeta(u) zeta(v) - zeta(u shuffle v)| at the given truncation."""
    residual, _ = identity_residual_with_bound(u, v, terms, backend)
    return residual


def identity_residual_with_bound(
    u, v, terms: int = DEFAULT_TERMS, backend: str | None = None
) -> tuple[float, float]:
    """Residual plus the adaptive tolerance max(1e-6, 3 * combined err_est)."""
    from .shuffle import shuffle_recursive

    for w in (u, v):
        if not w.is_admissible:
            raise NotAdmissibleError(f"{w!r} is not admissible")
    left_u = _zeta_word(u, terms, backend)
    left_v = _zeta_word(v, terms, backend)
    right = zeta_of_lincomb(shuffle_recursive(u, v), terms, backend)
    residual = abs(left_u.value * left_v.value - right.value)
    combined = (
        left_u.err_est * abs(left_v.value)
        + left_v.err_est * abs(left_u.value)
        + right.err_est
    )
    return residual, max(1e-6, 3.0 * combined)


def _zeta_word(w, terms: int, backend: str | None) -> NumericResult:
    if w.is_empty:
        return NumericResult(value=1.0, err_est=0.0, terms_used=0)
    return mzv_eval(word_to_mzv(w), terms, backend)
