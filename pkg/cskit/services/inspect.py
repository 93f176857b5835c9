"""Human-readable report on a single element or word."""
import logging
from typing import Sequence

from cskit.errors import NotReduced
from cskit.schemas.records import InspectOut
from cskit.services.classify import build_record
from cskit.services.decomp import bp_table, check_theorem_smooth_equiv
from cskit.services.rootsys import RootVector, format_subset, subsets
from cskit.services.schubert import Tristate, parabolic_poincare
from cskit.services.spherical import (
    BsdhWord,
    b_orbit_finiteness,
    bsdh_descent_set,
    bsdh_first_letter_test,
    bsdh_spherical_test,
    deletion_subwords,
    gbsdh_dimension,
    gbsdh_spherical,
    gbsdh_wonderful,
    r1_r2_partition,
    spherical_levi_test,
    spherical_relaxed_test,
    verdict_to_json,
)
from cskit.services.weyl import WeylElt, canonical_word, format_word, inverse, min_coset_rep

logger = logging.getLogger(__name__)


def _roots(roots: frozenset[RootVector]) -> str:
    if not roots:
        return "none"
    return " ".join("(" + ",".join(str(c) for c in r) + ")" for r in sorted(roots))


def _word_section(word: BsdhWord) -> list[str]:
    lines = [
        f"word: {format_word(word.word)}",
        f"  reduced: {word.reduced}",
        f"  J(word): {format_subset(bsdh_descent_set(word))}",
        f"  dim G x_B X_w: {gbsdh_dimension(word)}",
        f"  G x_B X_w wonderful: {gbsdh_wonderful(word)}",
        f"  finitely many B-orbits: {b_orbit_finiteness(word).value}",
    ]
    for k, sub in enumerate(deletion_subwords(word), start=1):
        lines.append(f"  deletion {k}: {format_word(sub.word)} (reduced: {sub.reduced})")
    if not word.reduced:
        return lines

    verdict = bsdh_spherical_test(word)
    relaxed = bsdh_spherical_test(word, relaxed=True)
    lines += [
        f"  L(w)-spherical with dim B_J = dim X_w: {verdict.holds}",
        f"  L(w)-spherical: {relaxed.holds}",
        f"  L(s_i1)-spherical: {bsdh_first_letter_test(word)}",
        f"  G x_B X_w spherical: {gbsdh_spherical(word)}",
    ]
    return lines


def _element_section(w: WeylElt) -> list[str]:
    record = build_record(w)
    lines = ["element:"]
    for key, value in record.to_json_dict().items():
        if key not in ("schema", "index"):
            lines.append(f"  {key}: {value}")

    lines.append("levi factors:")
    for J in subsets(w.left_descents):
        strict, relaxed = spherical_levi_test(w, J), spherical_relaxed_test(w, J)
        inside, outside = r1_r2_partition(w, J)
        l_w, l_w0J, l_c = strict.lengths
        lines += [
            f"  J = {format_subset(J)}: spherical={strict.holds} relaxed={relaxed.holds} "
            f"l(w)={l_w} l(w0J)={l_w0J} l(c)={l_c} dim_condition={strict.dim_condition}",
            f"    R1: {_roots(inside)}",
            f"    R2: {_roots(outside)}",
        ]
        if strict.holds:
            lines.append(f"    c = {format_word(canonical_word(strict.coxeter_part))}")
        if strict.holds and strict.dim_condition:
            lines += _smooth_equiv_lines(w, J)

    lines.append("parabolic decompositions (I = {}):")
    for d, bp in bp_table(w):
        lines.append(
            f"  K = {format_subset(d.K)}: v = {format_word(canonical_word(d.v))}, "
            f"u = {format_word(canonical_word(d.u))}, BP = {bp}"
        )
    return lines


def _smooth_equiv_lines(w: WeylElt, J: frozenset[int]) -> list[str]:
    report = check_theorem_smooth_equiv(w, J)
    rep = min_coset_rep(inverse(report.c), J)
    lines = [
        f"    smooth X_w: {report.smooth_w.value}",
        f"    smooth X_w^-1: {report.smooth_winv.value}",
        f"    smooth toric X_c^-1 P_J: {report.quotient_smooth_toric.value}",
        f"    Poincare polynomial of X_c^-1 P_J: {parabolic_poincare(rep, J)}",
        f"    consistent: {report.consistent}",
    ]
    if Tristate.UNKNOWN in (report.smooth_w, report.smooth_winv, report.quotient_smooth_toric):
        logger.warning(f"Smoothness is undecidable for {w} in {w.rs.name}")
    return lines


def inspect_element(w: WeylElt, word: Sequence[int] | None = None) -> str:
    """Report for w; word, when given, adds the BSDH verdicts for that word.

    A non-reduced word gets a warning and only the word-level section.
    """
    lines = [f"type: {w.rs.name}"]
    if word is not None:
        bsdh = BsdhWord(w.rs, tuple(word))
        lines += _word_section(bsdh)
        if not bsdh.reduced:
            error = NotReduced(f"Word {format_word(bsdh.word)} is not reduced; element queries skipped")
            logger.warning(error.detail)
            return "\n".join(lines) + "\n"
    lines += _element_section(w)
    return "\n".join(lines) + "\n"


def inspect_to_json(w: WeylElt, word: Sequence[int] | None = None) -> InspectOut:
    """Record and every Levi verdict for w, strict then relaxed per J."""
    out = InspectOut(type=w.rs.name)
    if word is not None:
        bsdh = BsdhWord(w.rs, tuple(word))
        out.word, out.reduced = list(bsdh.word), bsdh.reduced
        if not bsdh.reduced:
            logger.warning(f"Word {format_word(bsdh.word)} is not reduced; element queries skipped")
            return out
    out.record = build_record(w)
    for J in subsets(w.left_descents):
        out.verdicts.append(verdict_to_json(spherical_levi_test(w, J)))
        out.verdicts.append(verdict_to_json(spherical_relaxed_test(w, J)))
    return out
