# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Dimensions of spaces of cusp forms on Gamma_0(N), N in {1, 2, 4}.
"""
from dataclasses import dataclass

from siegel_traces.errors import OddWeight

LEVELS = (1, 2, 4)


@dataclass(frozen=True)
class _CurveData:
    genus: int
    elliptic2: int
    elliptic3: int
    cusps: int
    index: int


_X0 = {
    1: _CurveData(genus=0, elliptic2=1, elliptic3=1, cusps=1, index=1),
    2: _CurveData(genus=0, elliptic2=1, elliptic3=0, cusps=2, index=3),
    4: _CurveData(genus=0, elliptic2=0, elliptic3=0, cusps=3, index=6),
}


def _data(N: int) -> _CurveData:
    if N not in _X0:
        raise ValueError(f"Level {N} is not supported; use one of {LEVELS}.")
    return _X0[N]


def dim_cusp(N: int, k: int) -> int:
    """Valence formula for dim S_k(Gamma_0(N))."""
    if k % 2:
        raise OddWeight(k)
    X = _data(N)
    if k <= 0:
        return 0
    if k == 2:
        return X.genus
    return ((k - 1) * (X.genus - 1) + (k // 4) * X.elliptic2 + (k // 3) * X.elliptic3
            + (k // 2 - 1) * X.cusps)


def dim_new(N: int, k: int) -> int:
    if N == 1:
        return dim_cusp(1, k)
    if N == 2:
        return dim_cusp(2, k) - 2 * dim_cusp(1, k)
    _data(N)
    return dim_cusp(4, k) - 2 * dim_cusp(2, k) + dim_cusp(1, k)


def sturm_bound(N: int, k: int) -> int:
    return k * _data(N).index // 12
