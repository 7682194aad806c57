from hypothesis import given, settings

from conftest import gauss_codes
from oracles import arcs, brute_homs, perm_group
from weldknot.codec import parse
from weldknot.invariants.algebra import builtin_group
from weldknot.invariants.coloring import count_homs
from weldknot.knotgroup import exponent_sum, invert, longitude, peripheral, reduce_word, wirtinger

S3 = perm_group(3)


def test_reduce_and_invert():
    w = reduce_word([(0, 1), (1, 1), (1, -1), (0, 1), (2, -1)])
    assert w == ((0, 1), (0, 1), (2, -1))
    assert reduce_word(list(w) + list(invert(w))) == ()
    assert exponent_sum(w) == 1


def test_unknot_presentation():
    pres = wirtinger(parse(""))
    assert pres.generator_count == 1 and pres.relations == []


def test_kink_relator_is_trivial():
    pres = wirtinger(parse("O1+U1+"))
    assert pres.generator_count == 1
    assert [reduce_word(r) for r in pres.relations] == [()]


def test_trefoil_presentation(trefoil):
    pres = wirtinger(trefoil)
    assert pres.generator_count == 3
    assert [(c.incoming, c.over, c.outgoing, c.sign) for c in pres.crossings] == [
        (0, 2, 1, 1),
        (1, 0, 2, 1),
        (2, 1, 0, 1),
    ]
    assert count_homs(pres, builtin_group("S3")) == 12


def test_trefoil_longitude(trefoil):
    word, k = longitude(trefoil)
    assert k == 3
    assert exponent_sum(word) == 0
    assert word == ((2, 1), (0, 1), (1, 1), (0, -1), (0, -1), (0, -1))


@given(gauss_codes())
def test_arcs_match_oracle(code):
    n, rels = arcs(code)
    pres = wirtinger(code)
    assert pres.generator_count == n
    assert [(c.incoming, c.over, c.outgoing, c.sign) for c in pres.crossings] == rels


@settings(max_examples=40, deadline=None)
@given(gauss_codes(max_crossings=4))
def test_hom_counts_match_brute_force(code):
    assert count_homs(wirtinger(code), builtin_group("S3")) == len(brute_homs(code, *S3))


@given(gauss_codes())
def test_longitude_has_zero_linking(code):
    assert exponent_sum(longitude(code)[0]) == 0


@settings(max_examples=40, deadline=None)
@given(gauss_codes(max_crossings=4))
def test_longitude_commutes_with_meridian(code):
    elements, mul, inv = S3
    ps = peripheral(code)
    x = tuple(range(3))
    for images in brute_homs(code, *S3):
        lw = x
        for g, s in ps.longitude:
            lw = mul(lw, images[g] if s > 0 else inv(images[g]))
        assert mul(images[0], lw) == mul(lw, images[0])
