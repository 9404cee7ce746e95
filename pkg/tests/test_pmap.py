import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from contraction_semigroups.enumerators import enumerate_direct, enumerate_filtered
from contraction_semigroups.pmap import (
    FamilyId,
    PartialInjection,
    compose,
    gap_of_domain,
    gap_of_image,
    identity,
    in_family,
    is_contraction,
    is_contraction_via_gaps,
    is_isometry,
    is_order_decreasing,
    is_order_preserving,
    is_order_reversing,
    new_pmap,
    parse_notation,
    stat_profile,
)


@st.composite
def pmaps(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    dom = draw(st.lists(st.integers(1, n), unique=True, max_size=n))
    img = draw(st.permutations(range(1, n + 1)))[: len(dom)]
    return new_pmap(n, zip(dom, img))


def test_worked_example_gaps():
    alpha = new_pmap(6, [(1, 3), (3, 5), (5, 6)])
    assert gap_of_domain(alpha) == (2, 2)
    assert gap_of_image(alpha) == (2, 1)
    beta = new_pmap(6, [(1, 3), (2, 4), (3, 5), (5, 6)])
    assert gap_of_domain(beta) == (1, 1, 2)
    assert gap_of_image(beta) == (1, 1, 1)


def test_new_pmap_sorts_and_validates():
    alpha = new_pmap(6, [(5, 6), (1, 3), (3, 5)])
    assert alpha.pairs == ((1, 3), (3, 5), (5, 6))
    assert new_pmap(4, []).height == 0
    with pytest.raises(ValueError, match="image"):
        new_pmap(3, [(1, 2), (2, 2)])
    with pytest.raises(ValueError, match="domain"):
        new_pmap(3, [(1, 2), (1, 3)])
    with pytest.raises(ValueError, match="outside"):
        new_pmap(3, [(1, 4)])
    with pytest.raises(ValueError, match="chain size"):
        new_pmap(0, [])


def test_gaps_small_cases():
    assert gap_of_image(new_pmap(3, [(2, 1)])) == ()
    assert gap_of_domain(new_pmap(3, [(2, 1)])) == ()
    assert gap_of_image(new_pmap(3, [(1, 3), (3, 1)])) == (-2,)


def test_compose_examples():
    alpha = new_pmap(3, [(1, 3), (2, 1), (3, 2)])
    assert compose(identity(3), alpha) == alpha
    assert compose(new_pmap(3, [(1, 2)]), new_pmap(3, [(3, 1)])).height == 0
    got = compose(new_pmap(3, [(1, 1), (2, 2)]), new_pmap(3, [(2, 1)]))
    assert got == new_pmap(3, [(2, 1)])
    with pytest.raises(ValueError):
        compose(identity(3), identity(4))


def test_contraction_examples():
    assert is_contraction(new_pmap(3, [(1, 1), (3, 2)]))
    assert not is_contraction(new_pmap(3, [(1, 1), (2, 3)]))
    assert is_contraction(new_pmap(3, []))
    assert is_contraction_via_gaps(new_pmap(6, [(1, 3), (3, 5), (5, 6)]))
    assert not is_contraction_via_gaps(new_pmap(3, [(1, 3), (2, 1), (3, 2)]))


def test_order_predicates():
    single = new_pmap(3, [(2, 1)])
    assert is_order_preserving(single) and is_order_reversing(single)
    assert is_order_decreasing(single) and is_isometry(single)
    alpha = new_pmap(6, [(1, 3), (3, 5), (5, 6)])
    assert is_order_preserving(alpha)
    assert not is_order_reversing(alpha)
    assert not is_order_decreasing(alpha)
    assert not is_isometry(alpha)
    beta = new_pmap(3, [(1, 3), (2, 2)])
    assert is_order_reversing(beta) and not is_order_preserving(beta)


def test_in_family_examples():
    assert in_family(new_pmap(3, [(1, 3), (2, 2)]), FamilyId.ORCI)
    assert in_family(new_pmap(3, [(2, 1), (3, 2)]), "odci")
    assert not in_family(new_pmap(3, [(1, 2)]), "odci")
    assert in_family(new_pmap(6, [(1, 3), (3, 5), (5, 6)]), "oci")
    empty = new_pmap(5, [])
    assert all(in_family(empty, f) for f in FamilyId)


def test_family_parse():
    assert FamilyId.parse("OCI_plus") is FamilyId.OCIplus
    assert FamilyId.parse("oci+") is FamilyId.OCIplus
    with pytest.raises(ValueError):
        FamilyId.parse("xyz")


def test_stat_profile_worked_value():
    s = stat_profile(new_pmap(4, [(1, 1), (2, 2), (4, 3)]))
    assert (s.height, s.fix, s.fix_min, s.fix_max, s.below, s.above) == (3, 2, 1, 2, 0, 1)
    assert (s.waist_min, s.waist_max, s.shoulder_min, s.shoulder_max) == (1, 3, 1, 4)


def test_stat_profile_edges():
    s = stat_profile(new_pmap(4, []))
    assert (s.height, s.fix) == (0, 0)
    assert s.waist_min is None and s.fix_min is None and s.below is None
    s = stat_profile(identity(5))
    assert (s.height, s.fix, s.fix_min, s.fix_max, s.below, s.above) == (5, 5, 1, 5, 0, 0)
    s = stat_profile(new_pmap(4, [(2, 1)]))
    assert s.fix == 0 and s.fix_min is None and s.above is None


def test_notation_round_trip():
    alpha = new_pmap(6, [(1, 3), (3, 5), (5, 6)])
    assert alpha.notation() == "dom: 1 3 5 | im: 3 5 6"
    assert parse_notation(6, alpha.notation()) == alpha
    assert parse_notation(3, "dom: | im:") == new_pmap(3, [])


@given(pmaps())
def test_gap_and_pairwise_contraction_agree(alpha):
    assert is_contraction(alpha) == is_contraction_via_gaps(alpha)


@st.composite
def triples(draw, max_n=6):
    n = draw(st.integers(1, max_n))

    def one():
        dom = draw(st.lists(st.integers(1, n), unique=True, max_size=n))
        img = draw(st.permutations(range(1, n + 1)))[: len(dom)]
        return new_pmap(n, zip(dom, img))

    return one(), one(), one()


@given(triples())
def test_composition_associative(abc):
    a, b, c = abc
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(pmaps())
def test_stat_profile_consistency(alpha):
    s = stat_profile(alpha)
    assert 0 <= s.fix <= s.height
    if alpha.height:
        assert s.waist_min == min(alpha.image) and s.waist_max == max(alpha.image)
        assert s.shoulder_min <= s.shoulder_max
    if s.fix:
        assert s.fix_min <= s.fix_max
        assert s.below + s.fix + s.above <= s.height


@given(pmaps())
def test_odci_characterisation(alpha):
    lhs = is_order_decreasing(alpha) and is_order_preserving(alpha) and is_contraction(alpha)
    assert lhs == in_family(alpha, FamilyId.ODCI)


def test_contraction_equivalence_exhaustive_small():
    for n in range(1, 7):
        for alpha in enumerate_filtered(n, "i"):
            assert is_contraction(alpha) == is_contraction_via_gaps(alpha)


@pytest.mark.parametrize("family", ["ci", "oci", "orci", "odci"])
def test_closure_exhaustive_n4(family):
    members = list(enumerate_filtered(4, family))
    for a, b in itertools.product(members, repeat=2):
        assert in_family(compose(a, b), family)


@pytest.mark.parametrize("family", ["ci", "oci", "orci", "odci"])
def test_closure_random_n6(family):
    members = list(enumerate_filtered(6, family))
    rng = random.Random(7)
    for _ in range(2000):
        assert in_family(compose(rng.choice(members), rng.choice(members)), family)


def test_fixed_point_convexity_n7():
    for alpha in enumerate_direct(7, "oci"):
        s = stat_profile(alpha)
        if s.fix:
            assert all(y == x for x, y in alpha.pairs if s.fix_min <= x <= s.fix_max)


def test_immutable():
    alpha = new_pmap(3, [(1, 1)])
    with pytest.raises(Exception):
        alpha.n = 4
    assert isinstance(hash(alpha), int)
    assert PartialInjection(3, ((1, 1),)) == alpha
