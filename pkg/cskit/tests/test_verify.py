import pytest

from cskit.errors import UnknownProperty
from cskit.services import verify as verify_module
from cskit.services.oracles import coxeter_factor_oracle, reduced_subword_products, subword_leq
from cskit.services.rootsys import build
from cskit.services.verify import SUITES, Outcome, run_suite, verify
from cskit.services.weyl import from_word, identity, longest_element


@pytest.mark.parametrize("property_id", list(SUITES))
def test_every_suite_passes_on_a3(a3, property_id):
    report = run_suite(property_id, a3, use_cache=False)
    assert report.passed, report.counterexamples
    assert report.checked + report.skipped > 0


@pytest.mark.parametrize("kind, rank", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G", 2)])
def test_factorization_test_matches_word_oracle(kind, rank):
    report = run_suite("thm-spherical", build(kind, rank), use_cache=False)
    assert report.passed and report.skipped == 0


def test_smooth_equivalence_includes_4231(a3, w4231):
    report = run_suite("thm-smooth-equiv", a3, use_cache=False)
    assert report.passed and report.checked >= 1
    assert verify_module.check_thm_smooth_equiv(w4231, None).checked == 1


@pytest.mark.parametrize("kind, rank", [("A", 4)])
def test_smooth_equivalence_and_bp_in_a4(kind, rank):
    rs = build(kind, rank)
    for property_id in ("thm-smooth-equiv", "bp-product", "lmp-shadow", "carrell"):
        report = run_suite(property_id, rs, use_cache=False)
        assert report.passed, (property_id, report.counterexamples)


@pytest.mark.parametrize("kind, rank", [("A", 3), ("B", 3)])
def test_four_equivalent_shadow(kind, rank):
    assert run_suite("prop-four-equiv", build(kind, rank), use_cache=False).passed


@pytest.mark.parametrize("kind, rank", [("A", 4), ("B", 3)])
def test_boolean_lattices(kind, rank):
    report = run_suite("bool-lattice", build(kind, rank), use_cache=False)
    assert report.passed and report.checked > 0


@pytest.mark.parametrize("kind, rank, pairs", [("A", 3, 576), ("B", 2, 64), ("G", 2, 144)])
def test_bruhat_oracle_pair_counts(kind, rank, pairs):
    report = run_suite("bruhat-oracle", build(kind, rank), use_cache=False)
    assert report.passed
    assert report.checked == pairs


def test_carrell_skips_undecidable_elements(b2):
    report = run_suite("carrell", b2, use_cache=False)
    assert report.passed
    assert report.skipped == 8


def test_lmp_shadow_skips_other_types(b2):
    report = run_suite("lmp-shadow", b2, use_cache=False)
    assert report.checked == 0 and report.skipped == 8


def test_all_and_unknown_properties(a2):
    reports = verify("all", a2, use_cache=False)
    assert [r.property for r in reports] == list(SUITES)
    assert all(r.passed for r in reports)
    with pytest.raises(UnknownProperty):
        verify("no-such-property", a2, use_cache=False)


def test_counterexamples_fail_the_report(a2, monkeypatch):
    def always_wrong(w, table):
        out = Outcome()
        out.check(False, "planted")
        return out

    monkeypatch.setitem(SUITES, "carrell", always_wrong)
    report = run_suite("carrell", a2, use_cache=False)
    assert not report.passed
    assert report.counterexamples == ["planted"] * 6


def test_oracles(a2, a3, w4231):
    w0 = longest_element(a2, {1, 2})
    assert len(reduced_subword_products(w0)) == 6
    assert subword_leq(identity(a2), w0)
    assert not subword_leq(from_word(a2, [1, 2]), from_word(a2, [2, 1]))
    assert coxeter_factor_oracle(w4231, {1, 3})
    assert not coxeter_factor_oracle(w4231, {1})


def test_smooth_equivalence_in_d4(d4):
    report = run_suite("thm-smooth-equiv", d4, use_cache=False)
    assert report.passed, report.counterexamples
    assert report.checked > 0


def test_carrell_in_a4(a4):
    report = run_suite("carrell", a4, use_cache=False)
    assert report.passed
    assert report.checked == 120 and report.skipped == 0


@pytest.mark.parametrize("kind, rank", [("A", 3), ("B", 2)])
def test_word_descents_stay_inside_left_descents(kind, rank):
    report = run_suite("bsdh-descent", build(kind, rank), use_cache=False)
    assert report.passed and report.skipped == 0
    assert report.checked > 0
