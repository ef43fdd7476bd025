import json

from skein_homfly.partitions import Partition
from skein_homfly.verify import (
    GridConfig,
    VerificationReport,
    run_theorem,
    verify_hook_character_identity,
    verify_lowest_term,
    verify_permutation_parity,
    verify_special_H,
    verify_special_delta,
    verify_symmetry_neg_q_inverse,
    verify_symmetry_q_inverse,
)

SMALL = GridConfig(
    knots=((2, 3), (3, 2)),
    links=((1, 1, 2),),
    max_color=3,
    hook_max=3,
    parity_max=6,
    hook_identity_max=6,
    lowest_term_twists=(1, 2),
)


def test_symmetry_q_inverse_small():
    report = verify_symmetry_q_inverse(SMALL)
    assert report.passed
    assert report.cases > 0
    assert report.theorem == "thm72"


def test_symmetry_neg_q_inverse_small():
    report = verify_symmetry_neg_q_inverse(SMALL)
    assert report.passed


def test_special_H_small():
    report = verify_special_H(SMALL)
    assert report.passed


def test_special_delta_small_includes_counterexample():
    report = verify_special_delta(SMALL)
    assert report.passed
    # one cell is the expected-inequality case
    assert report.cases == 2 * 6 + 1


def test_permutation_parity_small():
    report = verify_permutation_parity(6)
    assert report.passed
    assert report.cases == 6


def test_hook_identity_small():
    report = verify_hook_character_identity(SMALL)
    assert report.passed


def test_lowest_term_small():
    report = verify_lowest_term(SMALL)
    assert report.passed
    assert report.cases == 2


def test_run_theorem_registry():
    for name in ("lemma73",):
        report = run_theorem(name, SMALL, threads=1)
        assert report.passed
    try:
        run_theorem("nope")
    except KeyError:
        pass
    else:
        raise AssertionError("unknown theorem must raise")


def test_report_shape_and_serialization():
    report = verify_permutation_parity(4)
    d = report.to_dict()
    assert set(d) == {"theorem", "grid", "cases", "failures", "passed"}
    json.dumps(d)
    with_time = report.to_dict(include_elapsed=True)
    assert "elapsed" in with_time
    assert "PASS" in report.summary()
    assert "elapsed" in report.summary(include_elapsed=True)


def test_failures_are_reported():
    bad = VerificationReport("x", "g", 2, ((("case", "want", "got"),)), 0.0)
    assert not bad.passed
    assert "FAIL" in bad.summary()
    assert "case" in bad.summary()


def test_thread_count_does_not_change_reports():
    one = verify_permutation_parity(6, threads=1)
    four = verify_permutation_parity(6, threads=4)
    assert one.summary() == four.summary()
    r1 = verify_symmetry_q_inverse(SMALL, threads=1)
    r4 = verify_symmetry_q_inverse(SMALL, threads=4)
    assert r1.summary() == r4.summary()


def test_grid_config_load(tmp_path):
    path = tmp_path / "grid.json"
    path.write_text(json.dumps({"knots": [[2, 3]], "max_color": 2, "parity_max": 5}))
    config = GridConfig.load(str(path))
    assert config.knots == ((2, 3),)
    assert config.max_color == 2
    assert config.parity_max == 5
    assert verify_special_H(config).passed


def test_double_transposition_returns_to_start():
    # conjugating colors twice is the identity on the invariant
    from skein_homfly.torus import TorusLinkSpec, colored_homfly_torus

    spec = TorusLinkSpec(2, 3, 1, (Partition((2, 1)),))
    twice = spec.conjugate_colors().conjugate_colors()
    assert twice == spec
    assert colored_homfly_torus(twice).value == colored_homfly_torus(spec).value
