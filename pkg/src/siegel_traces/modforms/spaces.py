# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Spaces of cusp forms on Gamma_0(N), N in {1, 2, 4}, as echelon bases of q-expansions.

Bases come from explicit generators:
    N = 1: Delta * E4^a * E6^b
    N = 2: eta(z)^8 eta(2z)^8 * F2^a * E4^b, F2 = 2 E2(2z) - E2(z)
    N = 4: eta(2z)^12 * theta^(4a) * F^b, theta^4 = eta(2z)^20 / (eta(z)^8 eta(4z)^8),
           F = eta(4z)^8 / eta(2z)^4
The newspace is the kernel of chi_new(T) on S_k(Gamma_0(N)), where chi_new is the
part of the characteristic polynomial of a Hecke operator T not coming from the
oldforms g(z), g(2z). Hecke matrices act on rows: T(b_i) = sum_j M[i, j] b_j.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from siegel_traces.errors import (IrrationalEigenvalue, ModularFormError, NonIntegralTrace, OddWeight,
                                  SpanDeficient)
from siegel_traces.models.eigen_models import NewformSystem
from siegel_traces.modforms.dimensions import dim_cusp, dim_new, sturm_bound
from siegel_traces.modforms.qseries import QSeries, eisenstein_series, eta_quotient

logger = logging.getLogger(__name__)

PARTS = ("full", "new", "plus", "minus")

# Hecke operators tried, in order, when T_3 alone does not separate what is needed.
_OPERATOR_MIXES: Tuple[Dict[int, int], ...] = (
    {3: 1}, {5: 1}, {3: 1, 5: 1}, {3: 1, 5: 2}, {3: 1, 7: 1}, {3: 2, 5: 1, 7: 1}, {3: 1, 5: 3, 7: 2},
)

_lam = sympy.Symbol("lam")


def _to_number(x) -> Fraction:
    x = sympy.Rational(x)
    return int(x.p) if x.q == 1 else Fraction(int(x.p), int(x.q))


def precision_for(N: int, k: int, largest_prime: int) -> int:
    """Coefficients needed for T_p, p <= largest_prime, on S_k(Gamma_0(N)) and for reading a_p."""
    return max(largest_prime, 7) * (sturm_bound(N, k) + 1) + 1


# --- Generators ---

@lru_cache(maxsize=None)
def _level2_weight2(T: int) -> QSeries:
    E2 = eisenstein_series(2, T)
    return E2.dilate(2, T) * 2 - E2


def _exponents(weights: Sequence[int], total: int) -> List[Tuple[int, ...]]:
    """Exponent vectors e with sum(e_i * weights_i) == total."""
    if not weights:
        return [()] if total == 0 else []
    w, rest = weights[0], weights[1:]
    return [(e,) + tail for e in range(total // w + 1) for tail in _exponents(rest, total - e * w)]


def _product(cusp: QSeries, generators: Sequence[QSeries], exponents: Tuple[int, ...]) -> QSeries:
    f = cusp
    for g, e in zip(generators, exponents):
        if e:
            f = f * g ** e
    return f


@lru_cache(maxsize=None)
def cusp_basis(N: int, k: int, T: int) -> Tuple[QSeries, ...]:
    """Integer q-expansions spanning S_k(Gamma_0(N)) to precision T."""
    if k % 2:
        raise OddWeight(k)
    if T < sturm_bound(N, k) + 2:
        raise ValueError(f"precision {T} is below the Sturm bound for S_{k}(Gamma_0({N}))")
    expected = dim_cusp(N, k)
    if expected == 0:
        return ()

    if N == 1:
        cusp, cusp_weight = eta_quotient([(1, 24)], T), 12
        generators = [(eisenstein_series(4, T), 4), (eisenstein_series(6, T), 6)]
    elif N == 2:
        cusp, cusp_weight = eta_quotient([(1, 8), (2, 8)], T), 8
        generators = [(_level2_weight2(T), 2), (eisenstein_series(4, T), 4)]
    elif N == 4:
        cusp, cusp_weight = eta_quotient([(2, 12)], T), 6
        theta4 = eta_quotient([(2, 20), (1, -8), (4, -8)], T)
        generators = [(theta4, 2), (eta_quotient([(4, 8), (2, -4)], T), 2)]
    else:
        raise ValueError(f"Level {N} is not supported.")

    series = [g for g, _ in generators]
    weights = [w for _, w in generators]
    forms = tuple(_product(cusp, series, e) for e in _exponents(weights, k - cusp_weight))
    rank = sympy.Matrix([list(f) for f in forms]).rank() if forms else 0
    if rank != expected:
        raise SpanDeficient(N, k, rank, expected)
    return forms


def old_forms(N: int, k: int, T: int) -> List[QSeries]:
    """g(z) and g(2z) for g in the cusp forms of level N/2."""
    if N == 1:
        return []
    lower = cusp_basis(N // 2, k, T)
    return [g for f in lower for g in (f, f.dilate(2, T))]


# --- Echelon spaces ---

class FormSpace:
    """A Hecke-stable space of cusp forms with a reduced echelon basis over Q."""

    def __init__(self, level: int, weight: int, rows: List[List], pivots: Sequence[int]):
        self.level = level
        self.weight = weight
        self.rows = [QSeries(row) for row in rows]
        self.pivots = tuple(pivots)

    @classmethod
    def spanned_by(cls, level: int, weight: int, forms: Sequence[QSeries]) -> "FormSpace":
        forms = list(forms)
        if not forms:
            return cls(level, weight, [], ())
        size = min(len(f) for f in forms)
        reduced, pivots = sympy.Matrix([list(f)[:size] for f in forms]).rref()
        rows = [[_to_number(x) for x in reduced.row(i)] for i in range(len(pivots))]
        return cls(level, weight, rows, pivots)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def precision(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def basis(self) -> List[QSeries]:
        return list(self.rows)

    def coordinates(self, f: QSeries) -> List:
        return [f[j] for j in self.pivots]

    def _operator(self, coefficient) -> sympy.Matrix:
        return sympy.Matrix(self.dim, self.dim, lambda i, j: coefficient(self.rows[i], self.pivots[j]))

    def hecke_matrix(self, p: int) -> sympy.Matrix:
        """T_p for p not dividing the level, U_p otherwise."""
        if not self.dim:
            return sympy.zeros(0, 0)
        needed = p * max(self.pivots) + 1
        if needed > self.precision:
            raise ModularFormError(
                f"T_{p} on S_{self.weight}(Gamma_0({self.level})) needs {needed} coefficients, "
                f"have {self.precision}."
            )
        if self.level % p == 0:
            return self._operator(lambda f, n: f[p * n])
        scale = p ** (self.weight - 1)
        return self._operator(lambda f, n: f[p * n] + (scale * f[n // p] if n % p == 0 else 0))

    def operator(self, mix: Dict[int, int]) -> sympy.Matrix:
        total = sympy.zeros(self.dim, self.dim)
        for p, c in mix.items():
            total += c * self.hecke_matrix(p)
        return total

    def subspace(self, vectors: Sequence[sympy.Matrix]) -> "FormSpace":
        """The span of the given coordinate vectors (rows or columns)."""
        forms = []
        for v in vectors:
            coeffs = [_to_number(c) for c in v]
            total = QSeries([0] * self.precision)
            for c, row in zip(coeffs, self.rows):
                if c:
                    total = total + row.scale(c)
            forms.append(total)
        return FormSpace.spanned_by(self.level, self.weight, forms)

    def left_kernel(self, matrix: sympy.Matrix) -> "FormSpace":
        return self.subspace(matrix.T.nullspace())

    def frobenius_trace(self, p: int, r: int = 1) -> int:
        """tr of alpha^r + beta^r summed over the space (S_0 = 2)."""
        return self._power_trace(p, r, 2)

    def hecke_trace(self, p: int, r: int = 1) -> int:
        """tr T_{p^r} (S_0 = 1)."""
        return self._power_trace(p, r, 1)

    def _power_trace(self, p: int, r: int, start: int) -> int:
        if self.level % p == 0:
            raise ValueError(f"Frobenius traces are only defined at primes not dividing {self.level}.")
        if not self.dim:
            return 0
        M = self.hecke_matrix(p)
        eye = sympy.eye(self.dim)
        previous, current = start * eye, M
        if r == 0:
            current = previous
        for _ in range(r - 1):
            previous, current = current, M * current - p ** (self.weight - 1) * previous
        value = sympy.Rational(current.trace())
        if value.q != 1:
            raise NonIntegralTrace(f"trace {value} on S_{self.weight}(Gamma_0({self.level})) at {p}^{r}")
        return int(value)

    def __repr__(self) -> str:
        return f"FormSpace(level={self.level}, weight={self.weight}, dim={self.dim})"


def _evaluate_at(poly: sympy.Poly, M: sympy.Matrix) -> sympy.Matrix:
    result = sympy.zeros(M.rows, M.cols)
    for c in poly.all_coeffs():
        result = result * M + c * sympy.eye(M.rows)
    return result


@lru_cache(maxsize=None)
def full_space(N: int, k: int, T: int) -> FormSpace:
    return FormSpace.spanned_by(N, k, cusp_basis(N, k, T))


@lru_cache(maxsize=None)
def newspace(N: int, k: int, T: int) -> FormSpace:
    full = full_space(N, k, T)
    expected = dim_new(N, k)
    if N == 1 or expected == full.dim:
        return full
    if expected == 0:
        return FormSpace(N, k, [], ())

    old = FormSpace.spanned_by(N, k, old_forms(N, k, T))
    if old.dim != full.dim - expected:
        raise SpanDeficient(N, k, old.dim, full.dim - expected)
    for mix in _OPERATOR_MIXES:
        M = full.operator(mix)
        chi_full = sympy.Poly(M.charpoly(_lam).as_expr(), _lam)
        chi_old = sympy.Poly(old.operator(mix).charpoly(_lam).as_expr(), _lam)
        chi_new, remainder = sympy.div(chi_full, chi_old)
        if not remainder.is_zero or sympy.gcd(chi_new, chi_old).degree() > 0:
            continue
        new = full.left_kernel(_evaluate_at(chi_new, M))
        if new.dim != expected:
            raise SpanDeficient(N, k, new.dim, expected)
        logger.debug(f"Newspace of S_{k}(Gamma_0({N})) has dimension {new.dim} (operator {mix}).")
        return new
    raise ModularFormError(f"No Hecke operator separates new from old forms in S_{k}(Gamma_0({N})).")


@lru_cache(maxsize=None)
def newspace_part(N: int, k: int, part: str, T: int) -> FormSpace:
    """full, new, or the w_2 = +1 / -1 ("plus" / "minus") part of the level 2 newspace."""
    if part not in PARTS:
        raise ValueError(f"Unknown part '{part}'.")
    if part == "full":
        return full_space(N, k, T)
    new = newspace(N, k, T)
    if part == "new":
        return new
    if N != 2:
        raise ValueError("Atkin-Lehner parts exist only at level 2.")
    if not new.dim:
        return new
    sign = 1 if part == "plus" else -1
    # w_2 = -a_2 / 2^(k/2-1) on a newform, so w_2 = +1 is the kernel of U_2 + 2^(k/2-1).
    shift = sign * 2 ** (k // 2 - 1)
    return new.left_kernel(new.hecke_matrix(2) + shift * sympy.eye(new.dim))


# --- Eigenforms ---

def _split_operator(space: FormSpace) -> Tuple[sympy.Matrix, List]:
    """An operator on the space with distinct rational eigenvalues, and those eigenvalues."""
    for mix in _OPERATOR_MIXES:
        M = space.operator(mix)
        chi = sympy.Poly(M.charpoly(_lam).as_expr(), _lam)
        _, factors = sympy.factor_list(chi)
        if any(f.degree() > 1 for f, _ in factors):
            if mix == {3: 1}:
                raise IrrationalEigenvalue(
                    f"T_3 on S_{space.weight}(Gamma_0({space.level}))^new has an irrational eigenvalue."
                )
            continue
        if any(e > 1 for _, e in factors):
            continue
        roots = [-f.all_coeffs()[1] / f.all_coeffs()[0] for f, _ in factors]
        return M, roots
    raise ModularFormError(f"Could not separate the eigenforms of {space}.")


def eigenforms(N: int, k: int, T: int) -> List[QSeries]:
    """Normalised newforms (a_1 = 1) of S_k(Gamma_0(N)), when all their eigenvalues are rational."""
    space = newspace(N, k, T)
    if not space.dim:
        return []
    M, roots = _split_operator(space)
    forms = []
    for root in sorted(roots):
        vector, = (M - root * sympy.eye(space.dim)).T.nullspace()
        f = space.subspace([vector]).rows[0]
        lead = f[1]
        if lead == 0:
            raise ModularFormError(f"Eigenform in {space} has vanishing a_1.")
        forms.append(f if lead == 1 else f.scale(1 / Fraction(lead)))
    return forms


def hecke_eigen(N: int, k: int, P: int, T: Optional[int] = None) -> List[NewformSystem]:
    """
    Rational Hecke eigensystems of the newforms of S_k(Gamma_0(N)): a_p for
    primes p <= P and, at level 2, the Atkin-Lehner sign w_2 = -a_2 / 2^(k/2-1).
    """
    T = precision_for(N, k, P) if T is None else T
    systems = []
    for f in eigenforms(N, k, T):
        ap = {}
        for p in sympy.primerange(2, P + 1):
            a = f[p]
            if isinstance(a, Fraction) and a.denominator != 1:
                raise IrrationalEigenvalue(f"a_{p} = {a} is not integral on S_{k}(Gamma_0({N}))^new.")
            a = int(a)
            if N % p and a * a > 4 * p ** (k - 1):
                raise ModularFormError(f"a_{p} = {a} breaks the Deligne bound in weight {k}.")
            ap[p] = a
        w2 = None
        if N == 2:
            w2, rem = divmod(-ap[2], 2 ** (k // 2 - 1))
            if rem or w2 not in (1, -1):
                raise ModularFormError(f"a_2 = {ap[2]} gives no Atkin-Lehner sign in weight {k}.")
        systems.append(NewformSystem(level=N, weight=k, ap=ap, w2=w2))
    logger.debug(f"S_{k}(Gamma_0({N}))^new: {len(systems)} rational eigenforms.")
    return systems
