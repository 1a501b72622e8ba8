import random

import pytest

from klyachko import (Cell, InputError, KlyachkoDiagram, LatticeRegion,
                      MonomialIdeal, SearchBoxError, compute_diagram,
                      graded_basis, hilbert_oracle, local_cohomology_h1,
                      minimal_generator_exponents, monomials_of_degree,
                      reconstruct_generators, saturate_oracle, span_set)
from klyachko.diagram import ConeEntry, support_region
from klyachko.reconstruction import exponent_caps, is_spanned

# already-saturated running example on the plane: (x0*x2, x1*x2, x0*x1^2)
P2_SAT = [(1, 0, 1), (0, 1, 1), (1, 2, 0)]
H3_GENS = [(0, 1, 0, 0), (3, 0, 0, 1)]


def diagram_from_max_gaps(fan, s, max_gaps):
    """Assemble a diagram from explicit maximal-cone gap regions.

    Face cones get empty gaps; reconstruction never reads them.
    """
    entries = {}
    for cone in fan.cones:
        gaps = max_gaps.get(cone, LatticeRegion.empty(cone))
        entries[cone] = ConeEntry(support_region(fan, s, cone), gaps)
    return KlyachkoDiagram(fan, s, entries)


@pytest.fixture(scope="module")
def p2_given(p2):
    # gaps in pairing coordinates: two cells over (1,2), one point elsewhere
    gaps = {
        (1, 2): LatticeRegion((1, 2), [Cell({1: (0, 0), 2: (0, 0)}),
                                       Cell({1: (1, 1), 2: (0, 0)})]),
        (0, 2): LatticeRegion((0, 2), [Cell({0: (0, 0), 2: (0, 0)})]),
        (0, 1): LatticeRegion((0, 1), [Cell({0: (0, 0), 1: (0, 0)})]),
    }
    return diagram_from_max_gaps(p2, (0, 0, 0), gaps)


@pytest.fixture(scope="module")
def p3_given(p3):
    gaps = {
        (1, 2, 3): LatticeRegion((1, 2, 3), [
            Cell({1: (0, 0), 2: (0, 0), 3: (0, None)}),
            Cell({1: (0, 0), 2: (1, 1), 3: (0, 0)}),
        ]),
    }
    return diagram_from_max_gaps(p3, (0, 0, 0, 0), gaps)


@pytest.fixture(scope="module")
def h3_given(h3):
    gaps = {(1, 3): LatticeRegion((1, 3), [Cell({1: (0, 0), 3: (0, 0)})])}
    return diagram_from_max_gaps(h3, (0, 0, 0, 0), gaps)


def test_given_diagrams_match_computed(p2, h3, p2_given, h3_given):
    cases = [(p2, p2_given, P2_SAT), (h3, h3_given, H3_GENS)]
    for fan, given, gens in cases:
        computed = compute_diagram(fan, MonomialIdeal(gens))
        for cone in fan.max_cones:
            assert given.gaps(cone).equivalent(computed.gaps(cone))


def test_p3_given_diagram_same_monomial_cut(p3, p3_grading, p3_given):
    # the given gap data is empty over (0,1,2), while the ideal's own gap
    # set there is the strip {y1 = y2 = 0, y0 >= 0}.  The strip only cuts
    # monomials in x0 and x3, and those are already excluded over the
    # opposite cone, so every graded piece comes out the same.
    computed = compute_diagram(p3, MonomialIdeal([(0, 1, 0, 0), (0, 0, 2, 0),
                                                  (0, 0, 1, 1)]))
    for cone in [(1, 2, 3), (0, 2, 3), (0, 1, 3)]:
        assert p3_given.gaps(cone).equivalent(computed.gaps(cone))
    strip = LatticeRegion((0, 1, 2), [Cell({0: (0, None), 1: (0, 0),
                                            2: (0, 0)})])
    assert computed.gaps((0, 1, 2)).equivalent(strip)
    assert not p3_given.gaps((0, 1, 2)).equivalent(strip)
    for a in range(0, 6):
        lift = p3_grading.canonical_lift((a,))
        assert graded_basis(p3_grading, p3_given, lift).characters == \
            graded_basis(p3_grading, computed, lift).characters


def test_graded_basis_p2_degree_two(p2, p2_grading, p2_given):
    piece = graded_basis(p2_grading, p2_given, p2_grading.canonical_lift((2,)))
    assert piece.degree == (2,)
    assert set(piece.monomials()) == {(1, 0, 1), (0, 1, 1)}
    ideal = MonomialIdeal(P2_SAT)
    assert piece.dimension == 6 - hilbert_oracle(ideal, p2_grading, (2,))


def test_graded_basis_low_degrees_empty(p2_grading, p2_given):
    for u in [(0,), (1,)]:
        piece = graded_basis(p2_grading, p2_given, p2_grading.canonical_lift(u))
        assert piece.dimension == 0
        assert piece.monomials() == []


def test_graded_basis_h3(h3, h3_grading):
    diag = compute_diagram(h3, MonomialIdeal(H3_GENS))
    piece = graded_basis(h3_grading, diag, h3_grading.canonical_lift((0, 1)))
    assert set(piece.monomials()) == {(3, 0, 0, 1), (2, 1, 0, 1),
                                      (1, 2, 0, 1), (0, 3, 0, 1)}


def test_graded_basis_bad_divisor(p2_grading, p2_given):
    with pytest.raises(InputError):
        graded_basis(p2_grading, p2_given, (1, 0))


def test_span_set_empty_generators(p3):
    assert span_set(p3, [], (2, 0, 0, 0)) == ()
    assert span_set(p3, [], (2, 0, 0, 0), candidates=[(0, 0, 0)]) == ()


def test_span_set_p3_degree_two(p3, p3_grading, p3_given):
    piece = graded_basis(p3_grading, p3_given, (2, 0, 0, 0))
    assert piece.dimension == 6
    gens = [((1, 0, 0), (1, 0, 0, 0))]  # the character of x1 in degree one
    spanned = span_set(p3, gens, (2, 0, 0, 0))
    assert len(spanned) == 4
    restricted = span_set(p3, gens, (2, 0, 0, 0), candidates=piece.characters)
    assert set(restricted) == set(spanned) & set(piece.characters)
    left = [m for m in piece.characters if m not in set(spanned)]
    survivors = {piece.exponents(m) for m in left}
    assert survivors == {(0, 0, 2, 0), (0, 0, 1, 1)}


def test_span_inside_graded_basis(p2, p2_grading, p2_given):
    origin = (0, 0)
    gens = [(origin, g) for g in P2_SAT]
    for u in [(2,), (3,), (4,)]:
        lift = p2_grading.canonical_lift(u)
        piece = graded_basis(p2_grading, p2_given, lift)
        assert set(span_set(p2, gens, lift)) <= set(piece.characters)


def test_exponent_caps_bound_generators(p2, p2_given):
    caps = exponent_caps(p2, p2_given)
    assert all(c >= s for c, s in zip(caps, p2_given.min_exponents))
    _, found = minimal_generator_exponents(p2, p2_given)
    for k in found:
        assert all(s <= e <= c for e, s, c in
                   zip(k, p2_given.min_exponents, caps))


def test_minimal_generator_exponents(p2, h3, p2_given, h3_given):
    _, found = minimal_generator_exponents(p2, p2_given)
    assert set(found) == set(P2_SAT)
    _, found = minimal_generator_exponents(h3, h3_given)
    assert set(found) == {(0, 1, 0, 0), (0, 0, 0, 1)}


def test_reconstruct_p2(p2_grading, p2_given):
    result = reconstruct_generators(p2_grading, p2_given)
    assert result == MonomialIdeal(P2_SAT)


def test_reconstruct_p3(p3_grading, p3_given):
    result = reconstruct_generators(p3_grading, p3_given)
    assert result == MonomialIdeal([(0, 1, 0, 0), (0, 0, 2, 0), (0, 0, 1, 1)])


def test_reconstruct_h3(h3, h3_grading, h3_given):
    # the diagram pins the ideal only up to saturation, and (x1, x0^3*y1)
    # is not saturated: y1*(x0*y1)^3 = (x0^3*y1)*y1^3 lies in it while
    # x0*y1 generates part of the irrelevant ideal, so y1 belongs to the
    # saturation.  The reconstruction returns the saturated ideal.
    result = reconstruct_generators(h3_grading, h3_given)
    expected = saturate_oracle(MonomialIdeal(H3_GENS), h3)
    assert result == expected == MonomialIdeal([(0, 0, 0, 1), (0, 1, 0, 0)])


def test_reconstruct_principal(p2, p2_grading):
    diag = compute_diagram(p2, MonomialIdeal([(2, 1, 0)]))
    assert reconstruct_generators(p2_grading, diag) == MonomialIdeal([(2, 1, 0)])


def test_reconstruct_roundtrip_random(p2, p2_grading, h3, h3_grading):
    rng = random.Random(11)
    for fan, grading in [(p2, p2_grading), (h3, h3_grading)]:
        for _ in range(20):
            gens = [tuple(rng.randint(0, 3) for _ in range(fan.nrays))
                    for _ in range(rng.randint(1, 4))]
            ideal = MonomialIdeal(gens)
            diag = compute_diagram(fan, ideal)
            assert reconstruct_generators(grading, diag) == \
                saturate_oracle(ideal, fan)


def test_reconstruct_explicit_box(p2_grading, p2_given, h3_grading, h3_given):
    assert reconstruct_generators(p2_grading, p2_given, search_box=[(0, 6)]) \
        == MonomialIdeal(P2_SAT)
    assert reconstruct_generators(h3_grading, h3_given,
                                  search_box=[(-4, 2), (-1, 2)]) \
        == MonomialIdeal([(0, 0, 0, 1), (0, 1, 0, 0)])


def test_reconstruct_box_boundary_detected(p2_grading, p2_given,
                                           h3_grading, h3_given):
    with pytest.raises(SearchBoxError):
        reconstruct_generators(p2_grading, p2_given, search_box=[(2, 3)])
    with pytest.raises(SearchBoxError):
        reconstruct_generators(h3_grading, h3_given,
                               search_box=[(-3, 1), (0, 1)])


def test_reconstruct_box_without_generators(p2_grading, p2_given):
    with pytest.raises(SearchBoxError):
        reconstruct_generators(p2_grading, p2_given, search_box=[(0, 1)])


def test_reconstruct_box_validation(p2_grading, p2_given):
    with pytest.raises(InputError):
        reconstruct_generators(p2_grading, p2_given, search_box=[(0, 2), (0, 2)])
    with pytest.raises(InputError):
        reconstruct_generators(p2_grading, p2_given, search_box=[(3, 1)])


def test_h1_of_saturated_ideal_vanishes(p2, p2_grading):
    ideal = MonomialIdeal(P2_SAT)
    diag = compute_diagram(p2, ideal)
    for a in range(-1, 6):
        piece = local_cohomology_h1(p2_grading, ideal, (a, 0, 0), diag=diag)
        assert piece.dimension == 0


def test_h1_detects_missing_socle(p2, p2_grading):
    # x0 times the irrelevant ideal saturates to (x0); the quotient is
    # one-dimensional, sitting in degree 1
    ideal = MonomialIdeal([(2, 0, 0), (1, 1, 0), (1, 0, 1)])
    dims = [local_cohomology_h1(p2_grading, ideal, (a, 0, 0)).dimension
            for a in range(0, 4)]
    assert dims == [0, 1, 0, 0]
    piece = local_cohomology_h1(p2_grading, ideal, (1, 0, 0))
    assert piece.monomial_strings() == ["x0"]


def test_h1_frozen_example(p2, p2_grading):
    ideal = MonomialIdeal([(3, 1, 0), (1, 1, 2), (0, 0, 3), (0, 3, 0)])
    dims = [local_cohomology_h1(p2_grading, ideal, (a, 0, 0)).dimension
            for a in range(0, 7)]
    assert dims == [0, 1, 3, 5, 4, 1, 0]
    piece = local_cohomology_h1(p2_grading, ideal, (2, 0, 0))
    assert set(piece.monomial_strings()) == {"x0*x1", "x1^2", "x1*x2"}


def test_h1_degreewise_count(p2, p2_grading):
    ideal = MonomialIdeal([(3, 1, 0), (1, 1, 2), (0, 0, 3), (0, 3, 0)])
    diag = compute_diagram(p2, ideal)
    for a in range(0, 7):
        lift = (a, 0, 0)
        total = graded_basis(p2_grading, diag, lift).dimension
        inside = sum(1 for e in monomials_of_degree(p2_grading, (a,))
                     if e in ideal)
        h1 = local_cohomology_h1(p2_grading, ideal, lift, diag=diag).dimension
        assert total == inside + h1


def test_h1_zero_iff_saturated(p2, p2_grading, h3, h3_grading):
    cases = [
        (p2, p2_grading, P2_SAT, [(a, 0, 0) for a in range(0, 6)]),
        (h3, h3_grading, H3_GENS,
         [h3_grading.canonical_lift((a, b)) for a in range(-4, 4)
          for b in range(0, 3)]),
    ]
    for fan, grading, gens, lifts in cases:
        ideal = MonomialIdeal(gens)
        saturated = saturate_oracle(ideal, fan) == ideal
        seen = any(local_cohomology_h1(grading, ideal, lift).dimension
                   for lift in lifts)
        assert seen == (not saturated)


def test_h1_rejects_zero_ideal(p2_grading):
    with pytest.raises(InputError):
        local_cohomology_h1(p2_grading, MonomialIdeal([], nvars=3), (1, 0, 0))


def test_is_spanned_basic(p2):
    gens = [((0, 0), (1, 0, 1))]
    assert is_spanned(p2, (0, 0), gens, (2, 0, 1))
    assert not is_spanned(p2, (0, 0), gens, (0, 2, 0))
