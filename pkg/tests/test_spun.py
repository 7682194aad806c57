import pytest

from weldknot.codec import parse
from weldknot.corpus import CORPUS
from weldknot.invariants.battery import Level, Palette, battery
from weldknot.spun import (
    Outcome,
    Verdict,
    non_injectivity_witness,
    reverse_mirror,
    reverse_vreflect,
    spun_compare,
    tube_certificate,
    welded_compare,
)

SMALL = Palette(("Z3", "S3", "D5", "A4"), ("R3", "R5"))


def test_unknot_certificate_is_trivial():
    cert = tube_certificate(parse(""), SMALL)
    assert cert.tube_battery.alexander == 1
    # every hom from Z is determined by the meridian image
    assert dict(cert.tube_battery.hom_counts) == {"Z3": 3, "S3": 6, "D5": 10, "A4": 12}
    assert dict(cert.tube_battery.quandle_counts) == {"R3": 3, "R5": 5}


def test_spun_compare_identical(trefoil):
    v = spun_compare(trefoil, trefoil, SMALL)
    assert v.outcome is Outcome.NOT_DISTINGUISHED
    assert v.evidence["welded_vs_other"] == "equal"


def test_spun_compare_reverse_mirror(trefoil):
    v = spun_compare(trefoil, reverse_mirror(trefoil), SMALL)
    assert v.outcome is Outcome.NOT_DISTINGUISHED
    assert v.witness is None
    assert any(n.startswith("spun-dichotomy") for n in v.notes)


def test_spun_compare_figure8(trefoil, figure8):
    v = spun_compare(trefoil, figure8, SMALL)
    assert v.outcome is Outcome.DISTINGUISHED and v.witness == "alexander"


def test_welded_compare_examples(trefoil, figure8):
    assert welded_compare(trefoil, trefoil, palette=SMALL).outcome is Outcome.NOT_DISTINGUISHED
    v = welded_compare(trefoil, reverse_vreflect(trefoil), (True, True), SMALL)
    assert v.outcome is Outcome.DISTINGUISHED_CLASSICALLY and v.witness == "f_polynomial"
    v = welded_compare(trefoil, figure8, palette=SMALL)
    assert v.outcome is Outcome.DISTINGUISHED and v.witness == "alexander"


def test_classicality_flag_is_required(trefoil):
    # without both flags the f-polynomial is never consulted
    v = welded_compare(trefoil, reverse_vreflect(trefoil), (True, False), SMALL)
    assert v.outcome is Outcome.NOT_DISTINGUISHED


def test_verdict_needs_witness():
    with pytest.raises(ValueError):
        Verdict(Outcome.DISTINGUISHED)
    assert Verdict(Outcome.NOT_DISTINGUISHED).to_json() == {
        "outcome": "NotDistinguished",
        "witness": None,
        "notes": [],
    }


def test_tube_symmetries_on_corpus():
    for name in ("3_1", "5_2", "6_2"):
        k = CORPUS[name].code
        base = battery(k, Level.TUBE, SMALL)
        assert battery(reverse_mirror(k), Level.TUBE, SMALL) == base
        assert battery(reverse_vreflect(k), Level.TUBE, SMALL) == base


def test_non_injectivity_witness(trefoil):
    ev = non_injectivity_witness(trefoil, SMALL)
    assert ev["holds"]
    assert ev["tube_certificates_equal"] and ev["f_polynomials_differ"]
    assert ev["welded_verdict"]["outcome"] == "DistinguishedClassically"


def test_non_injectivity_fails_for_amphichiral(figure8):
    # 4_1 equals its own mirror, so its f-polynomial cannot tell the pair apart
    assert not non_injectivity_witness(figure8, SMALL)["holds"]
