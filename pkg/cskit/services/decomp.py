"""Parabolic and Billey-Postnikov decompositions, and the smoothness equivalence
for spherical Schubert varieties with dim B_J = dim X_wB.
"""
import logging
from dataclasses import dataclass
from typing import Iterable

from cskit.errors import BadSubsets, HypothesisFailed, NotMinimalRep, Undecidable
from cskit.services.rootsys import SimpleSubset, format_subset, subsets
from cskit.services.schubert import (
    Tristate,
    is_palindromic,
    is_smooth,
    is_toric,
    parabolic_poincare,
    smoothness_from_palindromic,
)
from cskit.services.spherical import spherical_levi_test
from cskit.services.weyl import WeylElt, inverse, is_min_rep, min_coset_rep

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParabolicDecomposition:
    w: WeylElt
    v: WeylElt
    u: WeylElt
    I: SimpleSubset
    K: SimpleSubset


@dataclass(frozen=True)
class SmoothEquivReport:
    w: WeylElt
    J: SimpleSubset
    c: WeylElt
    smooth_w: Tristate
    smooth_winv: Tristate
    quotient_smooth_toric: Tristate
    # smooth_w and smooth_winv agree wherever both are decided
    carrell_ok: bool
    # None when some leg is undecidable
    consistent: bool | None


def parabolic_decompose(w: WeylElt, I: Iterable[int], K: Iterable[int]) -> ParabolicDecomposition:
    """The unique w = v u with v in W^K and u in W_K, W^I."""
    I, K = frozenset(I), frozenset(K)
    if not K:
        raise BadSubsets("K must be nonempty")
    if not I <= K:
        raise BadSubsets(f"I = {format_subset(I)} is not contained in K = {format_subset(K)}")
    if not is_min_rep(w, I):
        raise NotMinimalRep(f"{w} is not a minimal representative for W_I with I = {format_subset(I)}")
    v = min_coset_rep(w, K)
    u = inverse(v) * w
    return ParabolicDecomposition(w=w, v=v, u=u, I=I, K=K)


def is_bp_decomposition(w: WeylElt, I: Iterable[int], K: Iterable[int]) -> bool:
    """Whether the Poincare polynomial of X_wP_I factors through the decomposition."""
    d = parabolic_decompose(w, I, K)
    return parabolic_poincare(w, d.I) == parabolic_poincare(d.u, d.I) * parabolic_poincare(d.v, d.K)


def bp_table(w: WeylElt, I: Iterable[int] = ()) -> list[tuple[ParabolicDecomposition, bool]]:
    """Decomposition and BP flag for every nonempty K containing I."""
    I = frozenset(I)
    rows = []
    for K in subsets(w.rs.generators):
        if K and I <= K:
            rows.append((parabolic_decompose(w, I, K), is_bp_decomposition(w, I, K)))
    return rows


def quotient_smooth_toric(c: WeylElt, J: Iterable[int]) -> Tristate:
    """Smooth toric check for X_{c^-1 P_J}, by rational smoothness of the quotient."""
    J = frozenset(J)
    rep = min_coset_rep(inverse(c), J)
    if not is_toric(c):
        return Tristate.FALSE
    return smoothness_from_palindromic(c.rs, is_palindromic(parabolic_poincare(rep, J)))


def check_theorem_smooth_equiv(w: WeylElt, J: Iterable[int], strict: bool = False) -> SmoothEquivReport:
    """Compare smoothness of X_wB, X_{w^-1}B and X_{c^-1}P_J.

    Requires X_wB to be L_J-spherical with dim B_J = dim X_wB.
    """
    verdict = spherical_levi_test(w, J)
    if not (verdict.holds and verdict.dim_condition):
        raise HypothesisFailed(f"{w} with J = {format_subset(J)} does not satisfy the factorization hypothesis")

    c = verdict.coxeter_part
    legs = (is_smooth(w), is_smooth(inverse(w)), quotient_smooth_toric(c, verdict.J))
    decided = [leg.as_bool() for leg in legs if leg.decided]
    carrell_ok = not (legs[0].decided and legs[1].decided) or legs[0] == legs[1]

    if len(decided) < len(legs):
        if strict:
            raise Undecidable(f"Smoothness is undecidable for {w} in {w.rs.name}")
        logger.debug(f"Undecidable leg for {w}, J = {format_subset(verdict.J)}: {[leg.value for leg in legs]}")
        consistent = None if len(set(decided)) <= 1 else False
    else:
        consistent = len(set(decided)) == 1

    return SmoothEquivReport(
        w=w,
        J=verdict.J,
        c=c,
        smooth_w=legs[0],
        smooth_winv=legs[1],
        quotient_smooth_toric=legs[2],
        carrell_ok=carrell_ok,
        consistent=consistent,
    )
