"""Exhaustive property suites over an enumerated Weyl group.

Each suite checks one element at a time and reports how many instances it
checked, skipped as undecidable or out of scope, and any counterexamples.
"""
import logging
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Sequence

from cskit import config
from cskit.errors import UnknownProperty
from cskit.schemas.records import VerifyReport
from cskit.services.decomp import check_theorem_smooth_equiv, is_bp_decomposition
from cskit.services.group_table import GroupTable, load_group_table
from cskit.services.oracles import cayley_length, coxeter_factor_oracle, reduced_subword_products, subword_leq
from cskit.services.posets import bruhat_interval, coatom_count, is_boolean, wonderful_rank
from cskit.services.rootsys import CartanType, RootSystem, build, format_subset, subsets
from cskit.services.schubert import has_lmp_shape, is_smooth, is_toric
from cskit.services.spherical import (
    BsdhWord,
    bsdh_descent_set,
    gbsdh_spherical,
    gschubert_spherical,
    spherical_levi_test,
    spherical_relaxed_test,
)
from cskit.services.weyl import (
    WeylElt,
    bruhat_leq,
    canonical_word,
    format_word,
    identity,
    inverse,
    inversion_set,
    is_distinct_product,
    left_multiply,
    longest_element,
    reduced_words,
    simple_reflection,
)
from cskit.utils.workers import ordered_map

logger = logging.getLogger(__name__)

# suites that enumerate reduced words skip longer elements
WORD_SUITE_MAX_LENGTH = 10


@dataclass
class Outcome:
    checked: int = 0
    skipped: int = 0
    counterexamples: list[str] = field(default_factory=list)

    def check(self, ok: bool, label: str) -> None:
        self.checked += 1
        if not ok:
            self.counterexamples.append(label)

    def __add__(self, other: "Outcome") -> "Outcome":
        return Outcome(
            self.checked + other.checked,
            self.skipped + other.skipped,
            self.counterexamples + other.counterexamples,
        )


def _label(w: WeylElt) -> str:
    return format_word(canonical_word(w))


def _admissible_levis(w: WeylElt):
    for J in subsets(w.left_descents):
        verdict = spherical_levi_test(w, J)
        if verdict.holds and verdict.dim_condition:
            yield J


def check_thm_spherical(w: WeylElt, table: GroupTable) -> Outcome:
    out = Outcome()
    if w.length > WORD_SUITE_MAX_LENGTH:
        out.skipped += 1
        return out
    for J in subsets(w.left_descents):
        fast = spherical_levi_test(w, J).holds
        out.check(fast == coxeter_factor_oracle(w, J), f"{_label(w)} J={format_subset(J)}: test says {fast}")
    return out


def check_thm_smooth_equiv(w: WeylElt, table: GroupTable) -> Outcome:
    out = Outcome()
    for J in _admissible_levis(w):
        report = check_theorem_smooth_equiv(w, J)
        if report.consistent is None:
            out.skipped += 1
            continue
        legs = f"{report.smooth_w.value}/{report.smooth_winv.value}/{report.quotient_smooth_toric.value}"
        out.check(report.consistent and report.carrell_ok, f"{_label(w)} J={format_subset(J)}: legs {legs}")
    return out


def check_prop_four_equiv(w: WeylElt, table: GroupTable) -> Outcome:
    out = Outcome()
    toric = is_toric(w)
    # beyond the rank no word is toric, one word decides it
    words = reduced_words(w) if w.length <= w.rs.rank else [canonical_word(w)]
    ok = gschubert_spherical(w) == toric and all(gbsdh_spherical(BsdhWord(w.rs, word)) == toric for word in words)
    out.check(ok, f"{_label(w)}: toric={toric}")
    return out


def check_bool_lattice(w: WeylElt, table: GroupTable) -> Outcome:
    out = Outcome()
    if not is_toric(w):
        return out
    p = bruhat_interval(w)
    coatoms = coatom_count(p)
    rank = wonderful_rank(BsdhWord(w.rs, canonical_word(w)))
    out.check(is_boolean(p) and coatoms == w.length == rank, f"{_label(w)}: coatoms={coatoms}")
    return out


def check_bruhat_oracle(w: WeylElt, table: GroupTable) -> Outcome:
    out = Outcome()
    below = reduced_subword_products(w)
    b = table.index[w]
    for a, v in enumerate(table.elements):
        fast = bruhat_leq(v, w)
        ok = fast == subword_leq(v, w, below) == table.leq(a, b)
        out.check(ok, f"{_label(v)} <= {_label(w)}: recursion says {fast}")
    return out


def check_bp_product(w: WeylElt, table: GroupTable) -> Outcome:
    out = Outcome()
    for J in _admissible_levis(w):
        if not J:
            out.skipped += 1
            continue
        out.check(is_bp_decomposition(inverse(w), frozenset(), J), f"{_label(w)}^-1 K={format_subset(J)}")
    return out


def check_root_count(w: WeylElt, table: GroupTable) -> Outcome:
    out = Outcome()
    rs = w.rs
    distance = cayley_length(table, w)
    out.check(distance == w.length == len(inversion_set(w)), f"{_label(w)}: length {w.length} vs {distance}")
    if w == identity(rs):
        w0 = longest_element(rs, rs.generators)
        out.check(w0.length == len(rs.positive_roots), f"l(w0) = {w0.length} != |R+|")
        out.check(inversion_set(w0) == frozenset(rs.positive_roots), "R+(w0) != R+")
        for i in rs.generators:
            s = simple_reflection(rs, i)
            out.check(s * s == w, f"s{i}^2 != e")
    return out


def check_lmp_shadow(w: WeylElt, table: GroupTable) -> Outcome:
    out = Outcome()
    if w.rs.kind != CartanType.A or w.length > WORD_SUITE_MAX_LENGTH:
        out.skipped += 1
        return out
    j = has_lmp_shape(w)
    if j is None:
        return out
    relaxed = any(spherical_relaxed_test(w, J).holds for J in subsets(w.left_descents))
    out.check(is_distinct_product(left_multiply(j + 1, w)) and relaxed, f"{_label(w)}: witness j={j}")
    return out


def check_bsdh_descent(w: WeylElt, table: GroupTable) -> Outcome:
    out = Outcome()
    if w.length > WORD_SUITE_MAX_LENGTH:
        out.skipped += 1
        return out
    for word in reduced_words(w):
        found = bsdh_descent_set(BsdhWord(w.rs, word))
        out.check(found <= w.left_descents, f"word {format_word(word)}: J={format_subset(found)}")
    return out


def check_carrell(w: WeylElt, table: GroupTable) -> Outcome:
    out = Outcome()
    a, b = is_smooth(w), is_smooth(inverse(w))
    if not (a.decided and b.decided):
        out.skipped += 1
        return out
    out.check(a == b, f"{_label(w)}: {a.value} vs inverse {b.value}")
    return out


SUITES: dict[str, Callable[[WeylElt, GroupTable], Outcome]] = {
    "thm-spherical": check_thm_spherical,
    "thm-smooth-equiv": check_thm_smooth_equiv,
    "prop-four-equiv": check_prop_four_equiv,
    "bool-lattice": check_bool_lattice,
    "bruhat-oracle": check_bruhat_oracle,
    "bp-product": check_bp_product,
    "root-count": check_root_count,
    "lmp-shadow": check_lmp_shadow,
    "bsdh-descent": check_bsdh_descent,
    "carrell": check_carrell,
}


def property_ids(property_id: str) -> list[str]:
    if property_id == "all":
        return list(SUITES)
    if property_id not in SUITES:
        raise UnknownProperty(f"Unknown property {property_id!r}; choose from {', '.join(SUITES)} or all")
    return [property_id]


def _verify_chunk(
    property_id: str, kind: str, rank: int, use_cache: bool, cap: int, indices: Sequence[int]
) -> list[Outcome]:
    table = load_group_table(build(kind, rank), use_cache=use_cache, cap=cap)
    suite = SUITES[property_id]
    return [suite(table.elements[x], table) for x in indices]


def run_suite(
    property_id: str,
    rs: RootSystem,
    workers: int | None = None,
    cap: int | None = None,
    use_cache: bool = True,
) -> VerifyReport:
    workers = config.WORKERS if workers is None else workers
    table = load_group_table(rs, use_cache=use_cache, cap=cap)
    fn = partial(_verify_chunk, property_id, rs.kind.value, rs.rank, use_cache, len(table))
    total = sum(ordered_map(fn, list(range(len(table))), workers=workers), Outcome())

    report = VerifyReport(
        property=property_id,
        type=rs.name,
        checked=total.checked,
        skipped=total.skipped,
        counterexamples=total.counterexamples,
        passed=not total.counterexamples,
    )
    if report.passed:
        logger.info(f"{property_id} on {rs.name}: pass ({report.checked} checked, {report.skipped} skipped)")
    else:
        logger.error(f"{property_id} on {rs.name}: {len(report.counterexamples)} counterexamples")
        for line in report.counterexamples[:10]:
            logger.error(f"  {line}")
    return report


def verify(
    property_id: str,
    rs: RootSystem,
    workers: int | None = None,
    cap: int | None = None,
    use_cache: bool = True,
) -> list[VerifyReport]:
    """Run one suite, or every suite for "all"."""
    return [run_suite(pid, rs, workers=workers, cap=cap, use_cache=use_cache) for pid in property_ids(property_id)]
