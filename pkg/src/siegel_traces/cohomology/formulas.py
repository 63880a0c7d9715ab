# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Closed formulas for the compactly supported Euler characteristic of V_{l,m} on
A_2[2]: Eisenstein cohomology (total and S6-equivariant), strict and expanded
endoscopy, and the lifts from pairs of elliptic newforms (Yoshida type, l != m)
or from single newforms (Saito-Kurokawa type, l = m).

Notation: k = l+m+4, k' = l-m+2, tau_{N,k} = dim S_k(Gamma_0(N))^new and
tau^+/tau^- the dimensions of the w_2-eigenspaces of S_k(Gamma_0(2))^new.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

from siegel_traces.characters.symfunc import (
    REP_A, REP_A_PRIME, REP_B, REP_B_PRIME, REP_C, REP_C_PRIME, RepVector, s,
)
from siegel_traces.cohomology.motive import UNIT, MotiveExpr, SiegelSymbol, cusp_motive
from siegel_traces.errors import OddWeight
from siegel_traces.modforms.dimensions import dim_cusp, dim_new
from siegel_traces.modforms.eigen_store import EigenStore, default_store

logger = logging.getLogger(__name__)


def _check(l: int, m: int) -> None:
    if (l + m) % 2:
        raise OddWeight(l, m)
    if not l >= m >= 0:
        raise ValueError(f"need l >= m >= 0, got ({l}, {m})")


def weights(l: int, m: int):
    """(k, k') for V_{l,m}."""
    _check(l, m)
    return l + m + 4, l - m + 2


def siegel_weight(l: int, m: int) -> SiegelSymbol:
    """V_{l,m} carries the Siegel cusp forms of weight (l-m, m+3)."""
    return SiegelSymbol(l - m, m + 3)


@dataclass(frozen=True)
class Taus:
    """Newform dimensions of one weight."""
    t1: int
    t2: int
    t4: int
    plus: int
    minus: int

    @classmethod
    def of_weight(cls, k: int, store: EigenStore) -> "Taus":
        t2 = dim_new(2, k)
        plus = store.part_dimension(2, k, "plus") if t2 else 0
        return cls(t1=dim_cusp(1, k), t2=t2, t4=dim_new(4, k), plus=plus, minus=t2 - plus)


# --- Eisenstein cohomology ---

def eisenstein_total(l: int, m: int) -> MotiveExpr:
    """e_Eis(A_2[2], V_{l,m}) with Gamma(2)-spaces read as Gamma_0(4)-spaces."""
    k, kp = weights(l, m)
    dim_kp = -1 if l == m else dim_cusp(4, kp)
    expr = MotiveExpr.constant(15 * dim_kp) - MotiveExpr.tate(m + 1, 15 * dim_cusp(4, k))
    if m % 2 == 0:
        expr = expr + cusp_motive(4, m + 2, "full") * 15 + MotiveExpr.constant(45)
    else:
        expr = expr - cusp_motive(4, l + 3, "full") * 15
    return expr


def _dimension_rep(k: int, nonregular: bool) -> RepVector:
    if nonregular:
        return -REP_C_PRIME
    return dim_new(4, k) * REP_A_PRIME + (dim_new(2, k) + dim_cusp(1, k)) * REP_B_PRIME + dim_cusp(1, k) * REP_C_PRIME


def _space_rep(k: int) -> MotiveExpr:
    if k == 2:
        return cusp_motive(4, 2, "full").tensor(REP_C)
    return (cusp_motive(4, k, "new").tensor(REP_A) + cusp_motive(2, k, "new").tensor(REP_B)
            + cusp_motive(1, k, "new").tensor(REP_B + REP_C))


def eisenstein_equivariant(l: int, m: int) -> MotiveExpr:
    """The Eisenstein cohomology as a virtual S6-representation; its dimension is eisenstein_total."""
    k, kp = weights(l, m)
    expr = MotiveExpr.constant(_dimension_rep(kp, l == m)) - MotiveExpr.tate(m + 1, _dimension_rep(k, False))
    if m % 2 == 0:
        expr = expr + _space_rep(m + 2) + MotiveExpr.constant(REP_B + REP_C)
    else:
        expr = expr - _space_rep(l + 3)
    return expr


def eisenstein_w1(l: int, m: int) -> MotiveExpr:
    """Eisenstein cohomology on A_2(w^1), l > m."""
    k, kp = weights(l, m)
    expr = MotiveExpr.constant(dim_cusp(2, kp)) - MotiveExpr.tate(m + 1, dim_cusp(2, k))
    if m % 2 == 0:
        return expr + cusp_motive(1, m + 2, "full") * 2 + MotiveExpr.constant(2)
    return expr - cusp_motive(1, l + 3, "full") * 2


def eisenstein_w3(l: int, m: int) -> MotiveExpr:
    """Eisenstein cohomology on A_2(w^3), l > m."""
    k, kp = weights(l, m)
    expr = MotiveExpr.constant(4 * dim_cusp(4, kp)) - MotiveExpr.tate(m + 1, 4 * dim_cusp(4, k))

    def spaces(weight: int) -> MotiveExpr:
        return (cusp_motive(1, weight, "full") * 3 + cusp_motive(2, weight, "full") * 3
                + cusp_motive(4, weight, "full"))

    if m % 2 == 0:
        return expr + spaces(m + 2) + MotiveExpr.constant(12)
    return expr - spaces(l + 3)


# --- Lifts ---

@dataclass(frozen=True)
class LiftFamily:
    """
    One block of lifted Siegel forms: rep (x) (sum over the forms f of M_f),
    with the trailing motive L^{m+1} M_g (Yoshida type) or L^{m+1}(L+1) per form
    (Saito-Kurokawa type) summed alongside.
    """
    label: str
    rep: RepVector
    leading: MotiveExpr
    trailing: MotiveExpr


def lift_decomposition(l: int, m: int, store: Optional[EigenStore] = None) -> List[LiftFamily]:
    """Lifted part of S_{l-m,m+3}(Gamma_2[2]) by S6-type, leading and trailing motives apart."""
    store = store or default_store()
    k, kp = weights(l, m)
    if l == m:
        return _saito_kurokawa(m, k, store)

    tk, tkp = Taus.of_weight(k, store), Taus.of_weight(kp, store)
    plus_k, minus_k = cusp_motive(2, k, "plus"), cusp_motive(2, k, "minus")
    plus_kp, minus_kp = cusp_motive(2, kp, "plus"), cusp_motive(2, kp, "minus")
    families = [
        LiftFamily("level 4", s(2, 1, 1, 1, 1),
                   leading=cusp_motive(4, k, "new") * tkp.t4,
                   trailing=cusp_motive(4, kp, "new").times_tate(m + 1) * tk.t4),
        LiftFamily("level 2, same sign", s(2, 2, 2),
                   leading=plus_k * tkp.plus + minus_k * tkp.minus,
                   trailing=(plus_kp * tk.plus + minus_kp * tk.minus).times_tate(m + 1)),
        LiftFamily("level 2, opposite signs", s(1, 1, 1, 1, 1, 1),
                   leading=plus_k * tkp.minus + minus_k * tkp.plus,
                   trailing=(minus_kp * tk.plus + plus_kp * tk.minus).times_tate(m + 1)),
    ]
    return [f for f in families if f.leading or f.trailing]


def _saito_kurokawa(m: int, k: int, store: EigenStore) -> List[LiftFamily]:
    tk = Taus.of_weight(k, store)
    tail = MotiveExpr.tate(m + 2) + MotiveExpr.tate(m + 1)
    if m % 2:
        blocks = [
            ("level 2, plus", s(4, 2), cusp_motive(2, k, "plus"), tk.plus),
            ("level 2, minus", s(2, 2, 2), cusp_motive(2, k, "minus"), tk.minus),
            ("level 1", s(6) + s(4, 2) + s(2, 2, 2), cusp_motive(1, k, "new"), tk.t1),
        ]
    else:
        blocks = [
            ("level 4", s(3, 3), cusp_motive(4, k, "new"), tk.t4),
            ("level 2, minus", s(5, 1), cusp_motive(2, k, "minus"), tk.minus),
            ("level 2, plus", s(1, 1, 1, 1, 1, 1), cusp_motive(2, k, "plus"), tk.plus),
        ]
    return [LiftFamily(label, rep, leading=space, trailing=tail * tau)
            for label, rep, space, tau in blocks if tau]


def lift_leading(l: int, m: int, store: Optional[EigenStore] = None) -> MotiveExpr:
    expr = MotiveExpr()
    for family in lift_decomposition(l, m, store):
        expr = expr + family.leading.tensor(family.rep)
    return expr


def lift_trailing(l: int, m: int, store: Optional[EigenStore] = None) -> MotiveExpr:
    expr = MotiveExpr()
    for family in lift_decomposition(l, m, store):
        expr = expr + family.trailing.tensor(family.rep)
    return expr


# --- Endoscopy ---

def strict_endoscopy(l: int, m: int) -> MotiveExpr:
    """-5 L^{m+1} dim S_k(Gamma_0(4)) S[Gamma_0(4),k'] with S[Gamma_0(4),2] = -L-1."""
    k, kp = weights(l, m)
    return (cusp_motive(4, kp, "full") * (-5 * dim_cusp(4, k))).times_tate(m + 1)


def endoscopy(l: int, m: int, store: Optional[EigenStore] = None) -> MotiveExpr:
    """Expanded endoscopy: strict endoscopy plus the trailing terms of the lifts."""
    store = store or default_store()
    k, kp = weights(l, m)
    t = Taus.of_weight(k, store)
    if l == m:
        if m % 2:
            rep = t.plus * s(1, 1, 1, 1, 1, 1) + t.t4 * s(3, 3) + t.minus * s(5, 1)
        else:
            rep = ((t.minus + t.t1) * s(2, 2, 2) + (t.plus + t.t1) * s(4, 2) + t.t1 * s(6))
        return MotiveExpr({(m + 2, UNIT): rep, (m + 1, UNIT): rep})

    t12 = t.t1 + t.t2
    blocks = [
        (cusp_motive(4, kp, "new"),
         t.t4 * s(3, 1, 1, 1) + t.t1 * s(3, 3) + t12 * s(4, 1, 1)),
        (cusp_motive(2, kp, "new"),
         t12 * s(3, 2, 1) + t.t4 * s(4, 1, 1) + t.t1 * s(4, 2) + t.t1 * s(5, 1)),
        (cusp_motive(2, kp, "plus"), t.plus * s(4, 2) + t.minus * s(5, 1)),
        (cusp_motive(2, kp, "minus"), t.minus * s(4, 2) + t.plus * s(5, 1)),
        (cusp_motive(1, kp, "new"),
         t.t1 * s(2, 2, 2) + t12 * s(3, 2, 1) + t.t4 * s(3, 3) + t.t4 * s(4, 1, 1)
         + (t.t2 + 2 * t.t1) * s(4, 2) + t12 * s(5, 1) + t.t1 * s(6)),
    ]
    expr = MotiveExpr()
    for space, rep in blocks:
        if space and rep:
            expr = expr + space.tensor(rep)
    return -expr.times_tate(m + 1)

# --- Predictions ---

def predicted_non_siegel(l: int, m: int, store: Optional[EigenStore] = None) -> MotiveExpr:
    """Eis + expanded endoscopy - lift leading terms: what the count holds besides genuine Siegel forms."""
    return eisenstein_equivariant(l, m) + endoscopy(l, m, store) - lift_leading(l, m, store)
