# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Exhaustive censuses of hyperelliptic and elliptic curves y^2 = f(x).

Only monic squarefree f are enumerated. A non-monic c*f is the quadratic twist
of f when c is a non-square and isomorphic to it otherwise, so the sum over
all leading coefficients is (q-1) * sum_monic a1^n1 a2^n2 for even n1 and zero
for odd n1. Each tally keeps the histogram of (nu, a1, a2) over monic curves
and the twist-expanded power sums derived from it.

Evaluation is batched with numpy. A monic f of degree d has index
sum(c_i q^i) over its lower coefficients. The lowest L coefficients range over
one batch, the remaining ones (the prefix) select the batch. Values f(x) at
every point x are linear over F_p in the coefficient digits, so the low part
of every batch is a single matrix product computed once.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from siegel_traces.characters.symfunc import partitions_of
from siegel_traces.config import BATCH_CELLS, CENSUS_CAP
from siegel_traces.counting.ffield import FieldSpec, quadratic_extension
from siegel_traces.errors import CapExceeded, MissingEntry, TallyMergeError, WeilBoundViolation

logger = logging.getLogger(__name__)

GENUS2 = "genus2"
GENUS1_BASE = "genus1-base"
GENUS1_EXT = "genus1-quadratic-ext"
STRATA = (GENUS2, GENUS1_BASE, GENUS1_EXT)

# Recorded in every tally file; a tally built under other conventions is refused.
ENUMERATION_FLAGS: Dict[str, str] = {"twists": "analytic-monic", "infinity": "smooth-model"}

Partition = Tuple[int, ...]
CurveKey = Tuple[Partition, int, int]
EntryKey = Tuple[Partition, int, int]

# Leftover factor patterns once roots over k and k2 are removed.
_LEFTOVER = {0: (), 3: (3,), 4: (4,), 5: (5,), 6: (6,), 7: (3, 3)}


@dataclass
class CensusTally:
    """Raw power sums over one stratum of curves over one field."""
    p: int
    n: int
    stratum: str
    weight_cap: int
    curves: Counter = field(default_factory=Counter)
    entries: Dict[EntryKey, int] = field(default_factory=dict)
    variant_flags: Dict[str, str] = field(default_factory=lambda: dict(ENUMERATION_FLAGS))

    @property
    def q(self) -> int:
        return self.p ** self.n

    @property
    def field_id(self) -> Tuple[int, int]:
        return self.p, self.n

    @property
    def partition_size(self) -> int:
        return 6 if self.stratum == GENUS2 else 3

    def entry(self, nu: Partition, n1: int, n2: int) -> int:
        key = (tuple(nu), n1, n2)
        try:
            return self.entries[key]
        except KeyError:
            raise MissingEntry(key, self.weight_cap) from None

    def monic_count(self, nu: Optional[Partition] = None) -> int:
        return sum(c for (key_nu, _, _), c in self.curves.items() if nu is None or key_nu == tuple(nu))

    def expand(self, weight_cap: Optional[int] = None) -> "CensusTally":
        """Recomputes the twist-expanded entries from the curve histogram."""
        cap = self.weight_cap if weight_cap is None else weight_cap
        self.entries = expand_entries(self.curves, self.q, self.partition_size, cap)
        self.weight_cap = cap
        return self

    def merge(self, other: "CensusTally") -> "CensusTally":
        if (self.field_id, self.stratum, self.weight_cap) != (other.field_id, other.stratum, other.weight_cap):
            raise TallyMergeError(
                f"Cannot merge {self.stratum} tally over F_{self.q} (W={self.weight_cap}) "
                f"with {other.stratum} tally over F_{other.q} (W={other.weight_cap})."
            )
        if self.variant_flags != other.variant_flags:
            raise TallyMergeError("Cannot merge tallies built under different enumeration flags.")
        merged = CensusTally(self.p, self.n, self.stratum, self.weight_cap,
                             curves=self.curves + other.curves, variant_flags=dict(self.variant_flags))
        merged.entries = {key: self.entries.get(key, 0) + other.entries.get(key, 0)
                          for key in set(self.entries) | set(other.entries)}
        return merged


def merge_tallies(tallies: Iterable[CensusTally]) -> CensusTally:
    tallies = list(tallies)
    if not tallies:
        raise TallyMergeError("Nothing to merge.")
    merged = tallies[0]
    for tally in tallies[1:]:
        merged = merged.merge(tally)
    return merged


def expand_entries(curves: Counter, q: int, size: int, weight_cap: int) -> Dict[EntryKey, int]:
    by_nu: Dict[Partition, List[Tuple[int, int, int]]] = {nu: [] for nu in partitions_of(size)}
    for (nu, a1, a2), count in curves.items():
        by_nu[nu].append((a1, a2, count))

    entries: Dict[EntryKey, int] = {}
    for nu, rows in by_nu.items():
        for n2 in range(weight_cap // 2 + 1):
            for n1 in range(weight_cap - 2 * n2 + 1):
                if n1 % 2:
                    entries[(nu, n1, n2)] = 0
                else:
                    entries[(nu, n1, n2)] = (q - 1) * sum(c * a1 ** n1 * a2 ** n2 for a1, a2, c in rows)
    return entries


# --- Batched polynomial arithmetic over the field tables ---

def all_monic(F: FieldSpec, d: int) -> np.ndarray:
    """Every monic polynomial of degree d, row r having index r, lowest coefficient first."""
    q = F.q
    idx = np.arange(q ** d, dtype=np.int64)
    rows = np.empty((q ** d, d + 1), dtype=np.int64)
    for i in range(d):
        rows[:, i] = (idx // q ** i) % q
    rows[:, d] = 1
    return rows


def batch_mul(F: FieldSpec, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    out = np.zeros((A.shape[0], A.shape[1] + B.shape[1] - 1), dtype=np.int64)
    for i in range(A.shape[1]):
        for j in range(B.shape[1]):
            out[:, i + j] = F.add_table[out[:, i + j], F.mul_table[A[:, i], B[:, j]]]
    return out


def batch_mulmod(F: FieldSpec, A: np.ndarray, B: np.ndarray, f_low: np.ndarray) -> np.ndarray:
    """A*B modulo the monic polynomials whose lower coefficients are the rows of f_low."""
    d = f_low.shape[1]
    prod = batch_mul(F, A, B)
    for top in range(prod.shape[1] - 1, d - 1, -1):
        lead = prod[:, top]
        for t in range(d):
            term = F.neg_table[F.mul_table[lead, f_low[:, t]]]
            prod[:, top - d + t] = F.add_table[prod[:, top - d + t], term]
    return prod[:, :d]


def batch_powmod(F: FieldSpec, base: np.ndarray, exponent: int, f_low: np.ndarray) -> np.ndarray:
    result = np.zeros_like(base)
    result[:, 0] = 1
    while exponent:
        if exponent & 1:
            result = batch_mulmod(F, result, base, f_low)
        base = batch_mulmod(F, base, base, f_low)
        exponent >>= 1
    return result


def nonsquarefree_indices(F: FieldSpec, d: int) -> np.ndarray:
    """Sorted indices of the monic degree-d polynomials divisible by a square g^2, deg g >= 1."""
    q = F.q
    weights = q ** np.arange(d, dtype=np.int64)
    found = []
    for j in range(1, d // 2 + 1):
        squares = batch_mul(F, all_monic(F, j), all_monic(F, j))
        cofactors = all_monic(F, d - 2 * j)
        for square in squares:
            products = batch_mul(F, np.broadcast_to(square, (cofactors.shape[0], square.size)), cofactors)
            found.append(products[:, :d] @ weights)
    if not found:
        return np.empty(0, dtype=np.int64)
    return np.unique(np.concatenate(found))


# --- Point evaluation ---

class _PointEvaluator:
    """Codes of f(x) for every x in a target field, for whole batches of monic f over F."""

    def __init__(self, F: FieldSpec, G: FieldSpec, embed: np.ndarray, d: int, low: int):
        self.G = G
        self.p = G.p
        size = G.q
        logs = np.maximum(G.log_table, 0)

        def point_powers(i: int) -> np.ndarray:
            if i == 0:
                return np.ones(size, dtype=np.int64)
            out = G.exp_table[(logs * i) % (size - 1)].astype(np.int64)
            out[0] = 0
            return out

        basis_codes = [int(embed[F.p ** j]) for j in range(F.n)]
        # basis[i][j]: F_p digits of emb(t^j) * x^i at every point x, flattened.
        self.basis = np.empty((d, F.n, size * G.n), dtype=np.int64)
        for i in range(d):
            xi = point_powers(i)
            for j, b in enumerate(basis_codes):
                self.basis[i, j] = G.digits[G.mul_table[b, xi]].reshape(-1)
        self.top = G.digits[point_powers(d)].reshape(-1)

        self.low = low
        self.F = F
        low_rows = all_monic(F, low)[:, :low] if low else np.zeros((1, 0), dtype=np.int64)
        low_digits = F.digits[low_rows].reshape(low_rows.shape[0], low * F.n)
        low_basis = self.basis[:low].reshape(low * F.n, -1)
        self.low_values = low_digits @ low_basis
        self.powers = G.p ** np.arange(G.n, dtype=np.int64)

    def codes(self, high: Tuple[int, ...]) -> np.ndarray:
        """(q^L, |G|) codes of f(x) for the batch whose coefficients above L are `high`."""
        const = self.top.copy()
        for offset, c in enumerate(high):
            i = self.low + offset
            const += self.F.digits[c] @ self.basis[i]
        values = (self.low_values + const) % self.p
        return values.reshape(values.shape[0], self.G.q, self.G.n) @ self.powers


def _batch_width(q: int, target: FieldSpec, d: int, cells: int) -> int:
    per_poly = target.q * target.n
    low = 1
    while low < d and q ** (low + 1) * per_poly <= cells:
        low += 1
    return low


def _histogram(nu_class: np.ndarray, a1: np.ndarray, a2: np.ndarray, q: int, genus: int,
               classes: Dict[int, Partition], curves: Counter) -> None:
    if genus == 2:
        ok = (a1 * a1 <= 16 * q) & (np.abs(a2) <= 4 * q)
    else:
        ok = (a1 * a1 <= 4 * q) & (np.abs(a2) <= 2 * q)
    ok &= (a2 - a1 * a1) % 2 == 0
    if not ok.all():
        bad = int(np.flatnonzero(~ok)[0])
        raise WeilBoundViolation(f"a1={int(a1[bad])}, a2={int(a2[bad])} over F_{q} breaks the Weil bound or parity")

    a_span = 8 * q + 1
    b_span = 32 * q * q + 1
    keys = (nu_class * a_span + (a1 + 4 * q)) * b_span + (a2 + 16 * q * q)
    uniq, counts = np.unique(keys, return_counts=True)
    for key, count in zip(uniq.tolist(), counts.tolist()):
        cls, rest = divmod(key, a_span * b_span)
        a1_off, a2_off = divmod(rest, b_span)
        curves[(classes[cls], a1_off - 4 * q, a2_off - 16 * q * q)] += count


def _prefixes(q: int, count: int, shard: int, shards: int) -> Iterable[Tuple[int, Tuple[int, ...]]]:
    for prefix in range(shard, q ** count, shards):
        yield prefix, tuple((prefix // q ** i) % q for i in range(count))


def _check_cap(F: FieldSpec, cap: Optional[int]) -> None:
    cap = CENSUS_CAP if cap is None else cap
    if F.q > cap:
        raise CapExceeded(F.q, cap, what="census field size")


def census_genus2(F: FieldSpec, weight_cap: int, shard: int = 0, shards: int = 1,
                  cap: Optional[int] = None, cells: int = BATCH_CELLS) -> CensusTally:
    """
    Monic squarefree sextics and quintics over F: a1 over k, a2 over k2 and the
    Frobenius cycle type nu on the six Weierstrass points.
    """
    _check_cap(F, cap)
    F2, embed = quadratic_extension(F)
    identity = np.arange(F.q, dtype=np.int32)
    q = F.q
    curves: Counter = Counter()
    logger.info(f"Genus-2 census over F_{q}, shard {shard + 1}/{shards}.")

    for d in (5, 6):
        low = _batch_width(q, F2, d, cells)
        over_k = _PointEvaluator(F, F, identity, d, low)
        over_k2 = _PointEvaluator(F, F2, embed, d, low)
        bad = nonsquarefree_indices(F, d)
        low_rows = all_monic(F, low)[:, :low]
        batch = q ** low
        infinity = 2 if d == 6 else 1
        classes: Dict[int, Partition] = {}

        for prefix, high in _prefixes(q, d - low, shard, shards):
            start = prefix * batch
            keep = np.ones(batch, dtype=bool)
            lo, hi = np.searchsorted(bad, [start, start + batch])
            keep[bad[lo:hi] - start] = False

            codes1 = over_k.codes(high)[keep]
            codes2 = over_k2.codes(high)[keep]
            a1 = -F.chi_table[codes1].sum(axis=1, dtype=np.int64) + 1 - infinity
            a2 = -F2.chi_table[codes2].sum(axis=1, dtype=np.int64) + 1 - infinity
            r1 = (codes1 == 0).sum(axis=1)
            r2 = ((codes2 == 0).sum(axis=1) - r1) // 2
            rest = d - r1 - 2 * r2

            leftover = rest.copy()
            sextic = np.flatnonzero(rest == 6)
            if sextic.size:
                f_low = np.concatenate(
                    [low_rows[keep][sextic], np.broadcast_to(np.array(high, dtype=np.int64), (sextic.size, len(high)))], axis=1)
                h = np.zeros((sextic.size, 6), dtype=np.int64)
                h[:, 1] = 1
                x = h.copy()
                for _ in range(3):
                    h = batch_powmod(F, h, q, f_low)
                leftover[sextic[(h == x).all(axis=1)]] = 7

            nu_class = r1 * 100 + r2 * 10 + leftover
            for cls in np.unique(nu_class).tolist():
                if cls not in classes:
                    r1c, r2c, left = cls // 100, (cls // 10) % 10, cls % 10
                    parts = (1,) * r1c + (2,) * r2c + _LEFTOVER[left] + ((1,) if d == 5 else ())
                    classes[cls] = tuple(sorted(parts, reverse=True))
            _histogram(nu_class, a1, a2, q, 2, classes, curves)
            logger.debug(f"F_{q} degree {d}: prefix {prefix} done.")

    tally = CensusTally(F.p, F.n, GENUS2, weight_cap, curves=curves).expand()
    if shards == 1:
        _check_squarefree_count(tally, q, (5, 6))
    logger.info(f"Genus-2 census over F_{q} shard {shard + 1}/{shards}: {tally.monic_count()} curves.")
    return tally


def census_genus1(G: FieldSpec, weight_cap: int, stratum: str = GENUS1_BASE, shard: int = 0,
                  shards: int = 1, cap: Optional[int] = None, cells: int = BATCH_CELLS) -> CensusTally:
    """
    Monic squarefree cubics over G with a1, a2 = a1^2 - 2|G| and the cycle type
    of Frobenius on the three affine 2-torsion points.
    """
    if stratum == GENUS1_BASE:
        _check_cap(G, cap)
    q = G.q
    identity = np.arange(q, dtype=np.int32)
    low = _batch_width(q, G, 3, cells)
    over_g = _PointEvaluator(G, G, identity, 3, low)
    bad = nonsquarefree_indices(G, 3)
    batch = q ** low
    classes = {300: (1, 1, 1), 100: (2, 1), 3: (3,)}
    curves: Counter = Counter()
    logger.info(f"Genus-1 census over F_{q} ({stratum}), shard {shard + 1}/{shards}.")

    for prefix, high in _prefixes(q, 3 - low, shard, shards):
        start = prefix * batch
        keep = np.ones(batch, dtype=bool)
        lo, hi = np.searchsorted(bad, [start, start + batch])
        keep[bad[lo:hi] - start] = False
        codes = over_g.codes(high)[keep]
        a1 = -G.chi_table[codes].sum(axis=1, dtype=np.int64)
        a2 = a1 * a1 - 2 * q
        r1 = (codes == 0).sum(axis=1)
        nu_class = np.where(r1 == 3, 300, np.where(r1 == 1, 100, 3))
        _histogram(nu_class, a1, a2, q, 1, classes, curves)

    tally = CensusTally(G.p, G.n, stratum, weight_cap, curves=curves).expand()
    if shards == 1:
        _check_squarefree_count(tally, q, (3,))
    logger.info(f"Genus-1 census over F_{q} shard {shard + 1}/{shards}: {tally.monic_count()} curves.")
    return tally


def _check_squarefree_count(tally: CensusTally, q: int, degrees: Tuple[int, ...]) -> None:
    expected = sum(q ** d - q ** (d - 1) for d in degrees)
    if tally.monic_count() != expected:
        raise WeilBoundViolation(
            f"Census over F_{q} found {tally.monic_count()} squarefree polynomials, expected {expected}."
        )
