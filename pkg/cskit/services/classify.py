"""Classification records: every invariant of a Weyl group element in one row."""
import logging
from dataclasses import dataclass
from functools import partial
from typing import Sequence

import numpy as np

from cskit import config
from cskit.schemas.records import ClassificationRecord
from cskit.services.group_table import GroupTable, load_group_table
from cskit.services.posets import bruhat_interval, is_boolean
from cskit.services.rootsys import CartanType, RootSystem, build
from cskit.services.schubert import (
    Polynomial,
    is_palindromic,
    is_smooth,
    is_toric,
    poincare,
    smoothness_from_palindromic,
)
from cskit.services.spherical import spherical_levis
from cskit.services.weyl import (
    WeylElt,
    canonical_word,
    element_support,
    format_one_line,
    inverse,
    is_coxeter,
    to_one_line,
)
from cskit.utils.workers import ordered_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntervalStats:
    size: int
    poincare: Polynomial
    coatoms: int


def interval_stats(w: WeylElt) -> IntervalStats:
    p = poincare(w)
    coatoms = p.coeffs[w.length - 1] if w.length else 0
    return IntervalStats(size=p(1), poincare=p, coatoms=coatoms)


def table_interval_stats(table: GroupTable, x: int) -> IntervalStats:
    """The same numbers read off a Bruhat row of the group table."""
    lengths = table.lengths[table.interval(x)]
    top = int(table.lengths[x])
    coatoms = int(np.count_nonzero(lengths == top - 1)) if top else 0
    return IntervalStats(size=int(lengths.size), poincare=Polynomial.from_lengths(lengths), coatoms=coatoms)


def _subsets_as_lists(found) -> list[list[int]]:
    return [sorted(J) for J in found]


def build_record(w: WeylElt, index: int = 0, stats: IntervalStats | None = None) -> ClassificationRecord:
    rs = w.rs
    stats = interval_stats(w) if stats is None else stats
    palindromic = is_palindromic(stats.poincare)
    boolean = stats.size == 2**w.length and is_boolean(bruhat_interval(w))

    if rs.kind == CartanType.A:
        one_line = format_one_line(to_one_line(w))
        smooth, inverse_smooth = is_smooth(w), is_smooth(inverse(w))
    else:
        one_line = None
        # w and w^-1 have the same Poincare polynomial
        smooth = inverse_smooth = smoothness_from_palindromic(rs, palindromic)

    return ClassificationRecord(
        index=index,
        type=rs.name,
        one_line=one_line,
        canonical_reduced_word=list(canonical_word(w)),
        length=w.length,
        support=sorted(element_support(w)),
        left_descents=sorted(w.left_descents),
        is_toric=is_toric(w),
        is_coxeter=is_coxeter(w),
        spherical_levis=_subsets_as_lists(spherical_levis(w)),
        spherical_relaxed_levis=_subsets_as_lists(spherical_levis(w, relaxed=True)),
        smooth=smooth.value,
        rationally_smooth=palindromic,
        inverse_smooth=inverse_smooth.value,
        poincare_coeffs=list(stats.poincare.coeffs),
        interval_size=stats.size,
        coatoms=stats.coatoms,
        boolean_interval=boolean,
    )


def _classify_chunk(kind: str, rank: int, use_cache: bool, cap: int, indices: Sequence[int]) -> list[ClassificationRecord]:
    table = load_group_table(build(kind, rank), use_cache=use_cache, cap=cap)
    return [build_record(table.elements[x], index=x, stats=table_interval_stats(table, x)) for x in indices]


def classify(
    rs: RootSystem,
    workers: int | None = None,
    cap: int | None = None,
    use_cache: bool = True,
) -> list[ClassificationRecord]:
    """One record per element of W, in breadth-first order from the identity."""
    workers = config.WORKERS if workers is None else workers
    table = load_group_table(rs, use_cache=use_cache, cap=cap)
    logger.info(f"Classifying {len(table)} elements of {rs.name}")
    fn = partial(_classify_chunk, rs.kind.value, rs.rank, use_cache, len(table))
    records = ordered_map(fn, list(range(len(table))), workers=workers)
    logger.info(f"Classified {len(records)} elements of {rs.name}")
    return records
