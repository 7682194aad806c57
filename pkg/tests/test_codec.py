import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import TREFOIL, gauss_codes
from oracles import rotations_min
from weldknot.codec import (
    GaussCode,
    GaussSymbol,
    GaussSyntaxError,
    StructureError,
    Symmetry,
    canonical,
    canonical_key,
    parse,
    symmetry,
)


def test_parse_round_trip(trefoil):
    assert str(trefoil) == TREFOIL
    assert trefoil.crossing_count == 3
    assert trefoil.writhe() == 3
    assert trefoil.positions() == {1: (0, 3), 2: (4, 1), 3: (2, 5)}


def test_parse_tolerates_whitespace():
    assert parse(" O1+ U1+ ") == parse("O1+U1+")


def test_empty_code_is_unknot():
    code = parse("")
    assert len(code) == 0 and code.writhe() == 0
    assert str(canonical(code)) == ""


@pytest.mark.parametrize(
    "text, error",
    [
        ("O1+U2+", StructureError),
        ("O1+O1+", StructureError),
        ("O1+U1-", StructureError),
        ("O1+U1+U1+", StructureError),
        ("X1+U1+", GaussSyntaxError),
        ("O1U1+", GaussSyntaxError),
        ("O0+U0+", GaussSyntaxError),
    ],
)
def test_parse_rejects(text, error):
    with pytest.raises(error):
        parse(text)


def test_symbols_are_validated_on_construction():
    with pytest.raises(StructureError):
        GaussCode([GaussSymbol(True, 1, 1)])
    with pytest.raises(ValueError):
        GaussSymbol(True, 1, 0)


def test_reverse_example():
    assert str(symmetry(parse("O1+U1+"), Symmetry.REVERSE)) == "U1+O1+"


def test_mirror_example(trefoil):
    assert str(symmetry(trefoil, "mirror")) == "U1-O2-U3-O1-U2-O3-"


def test_vreflect_keeps_roles(trefoil):
    out = symmetry(trefoil, Symmetry.VREFLECT)
    assert [s.over for s in out] == [s.over for s in trefoil]
    assert out.writhe() == -3


def test_trefoil_canonical_form(trefoil):
    # frozen from the rotation-listing oracle
    assert str(canonical(trefoil)) == "O1+U2+O3+U1+O2+U3+"


@given(gauss_codes(), st.sampled_from(list(Symmetry)))
def test_symmetries_are_involutions(code, op):
    assert symmetry(symmetry(code, op), op) == code


@given(gauss_codes())
def test_symmetries_commute(code):
    r, m, v = Symmetry.REVERSE, Symmetry.MIRROR, Symmetry.VREFLECT
    assert symmetry(symmetry(code, r), m) == symmetry(symmetry(code, m), r)
    assert symmetry(symmetry(code, r), v) == symmetry(symmetry(code, v), r)


@given(gauss_codes())
def test_canonical_matches_oracle(code):
    assert str(canonical(code)) == rotations_min(code)


@given(gauss_codes())
def test_canonical_idempotent(code):
    c = canonical(code)
    assert canonical(c) == c
    assert canonical_key(c) == canonical_key(code)


@settings(max_examples=60)
@given(gauss_codes(max_crossings=6), st.integers(0, 20), st.randoms(use_true_random=False))
def test_canonical_ignores_basepoint_and_ids(code, shift, rnd):
    n = len(code)
    ids = list(code.crossings())
    fresh = rnd.sample(range(1, 100), len(ids))
    rename = dict(zip(ids, fresh))
    moved = GaussCode(
        GaussSymbol(s.over, rename[s.crossing], s.sign)
        for s in (code[(k + shift) % n] for k in range(n))
    )
    assert canonical(moved) == canonical(code)
