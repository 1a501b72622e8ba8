"""Multigraded Hilbert functions evaluated from Klyachko diagrams."""

from .diagram import compute_diagram
from .errors import InputError
from .monomials import MonomialIdeal
from .regions import polytope_points, region_is_finite, count_region_points


def ring_dimension(grading, degree):
    """dim R_degree: lattice points of the section polytope of the lift."""
    lift = grading.canonical_lift(degree)
    return len(polytope_points(grading.fan, lift))


def quotient_members(grading, diag, degree):
    """Characters of the canonical lift that represent R/I^sat basis monomials.

    A degree-``degree`` monomial misses the saturated ideal exactly when
    some maximal cone rejects it: the pairings either drop below the support
    floor or land in the cone's gap region.
    """
    fan = grading.fan
    lift = grading.canonical_lift(degree)
    out = []
    for m in polytope_points(fan, lift):
        values = {i: fan.pairing(m, i) + lift[i] for i in range(fan.nrays)}
        rejected = any((not diag.support(cone).contains_values(values))
                       or diag.gaps(cone).contains_values(values)
                       for cone in fan.max_cones)
        if rejected:
            out.append(m)
    return out


def hilbert_value(grading, diag, degree):
    """h_{R/I}(degree) for the B-saturated ideal I behind the diagram."""
    return len(quotient_members(grading, diag, degree))


def hilbert_value_general(grading, ideal, degree):
    """h of R modulo the saturation of an arbitrary nonzero monomial ideal.

    Factors out the common monomial x^s first, then evaluates the cofactor
    through its diagram and reassembles with the two ambient terms.  Agrees
    with evaluating the ideal's own diagram directly; both routes are kept
    because the factored one is the cheap degree-shift identity.
    """
    if ideal.is_zero():
        raise InputError("the zero ideal has no Hilbert function here")
    fan = grading.fan
    s = ideal.min_exponents()
    if all(x == 0 for x in s):
        return hilbert_value(grading, compute_diagram(fan, ideal), degree)
    shift = grading.degree(s)
    shifted = tuple(a - b for a, b in zip(degree, shift))
    stripped = MonomialIdeal([tuple(k - f for k, f in zip(g, s)) for g in ideal.gens],
                             nvars=ideal.nvars)
    inner = hilbert_value(grading, compute_diagram(fan, stripped), shifted)
    return (ring_dimension(grading, degree)
            - ring_dimension(grading, shifted)
            + inner)


def constant_hilbert_poly(fan, diag):
    """The constant value of the Hilbert polynomial, when it is constant.

    Constant iff the exponent floor vanishes and every maximal cone's gap
    region is finite; the value is then the total gap count over maximal
    cones.  Returns (value, None) or (None, reason string).
    """
    bad_ray = next((i for i, x in enumerate(diag.min_exponents) if x != 0), None)
    if bad_ray is not None:
        return None, (f"exponent floor is {diag.min_exponents[bad_ray]} on ray "
                      f"{bad_ray}; the quotient grows along that direction")
    total = 0
    for cone in fan.max_cones:
        finite, witness = region_is_finite(fan, diag.gaps(cone))
        if not finite:
            return None, (f"gap region of cone {cone} has an unbounded cell "
                          f"{witness!r}; the quotient grows inside it")
        total += count_region_points(fan, diag.gaps(cone))
    return total, None
