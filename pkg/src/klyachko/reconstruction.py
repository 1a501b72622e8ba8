"""From a Klyachko diagram back to the saturated ideal, and H^1 pieces.

The bridge between characters and monomials: a character m together with a
divisor lift D names the monomial with exponent vector <m, rho> + D_rho.
Graded pieces of the saturated ideal are read off the diagram one class at
a time; subtracting the multiples of previously found generators leaves the
new minimal generators of that class.
"""

import itertools

from .diagram import compute_diagram
from .errors import InfiniteRegionError, InputError, SearchBoxError
from .lattice import UnboundedRegionError, enumerate_lattice_points
from .monomials import MonomialIdeal, minimalize, monomial_str


class GradedPiece:
    """A monomial basis of one multigraded piece.

    ``characters`` are the lattice points m; the monomial behind m has
    exponents <m, rho> + lift[rho], always nonnegative here.
    """

    __slots__ = ("fan", "degree", "lift", "characters")

    def __init__(self, fan, degree, lift, characters):
        self.fan = fan
        self.degree = tuple(degree)
        self.lift = tuple(lift)
        self.characters = tuple(sorted(tuple(m) for m in characters))

    @property
    def dimension(self):
        return len(self.characters)

    def exponents(self, m):
        return tuple(self.fan.pairing(m, i) + self.lift[i]
                     for i in range(self.fan.nrays))

    def monomials(self):
        return [self.exponents(m) for m in self.characters]

    def monomial_strings(self, names=None):
        return [monomial_str(e, names) for e in self.monomials()]

    def __repr__(self):
        return (f"GradedPiece(degree={self.degree}, dim={self.dimension})")


def graded_basis(grading, diag, divisor):
    """Monomial basis of the saturated ideal's piece in the lift's class.

    A character m belongs iff <m, rho> + divisor[rho] >= s_rho on every ray
    and the pairing values avoid the gap region of every maximal cone.
    """
    fan = grading.fan
    if len(divisor) != fan.nrays:
        raise InputError("divisor length does not match the ray count")
    s = diag.min_exponents
    rows = [(tuple(fan.rays[i]), s[i] - int(divisor[i])) for i in range(fan.nrays)]
    try:
        candidates = enumerate_lattice_points(rows, fan.dim)
    except UnboundedRegionError as exc:
        raise InfiniteRegionError("graded piece is infinite; "
                                  "the fan cannot be complete") from exc
    kept = []
    for m in candidates:
        values = {i: fan.pairing(m, i) + divisor[i] for i in range(fan.nrays)}
        if all(not diag.gaps(cone).contains_values(values)
               for cone in fan.max_cones):
            kept.append(m)
    return GradedPiece(fan, grading.degree(divisor), divisor, kept)


def is_spanned(fan, m, gens, divisor):
    """Whether the monomial of m at the lift is a multiple of some generator.

    ``gens`` holds (character, lift) pairs; divisibility of the underlying
    monomials reads as pairing inequalities on every ray.
    """
    for mg, liftg in gens:
        if all(fan.pairing(m, i) + divisor[i] >= fan.pairing(mg, i) + liftg[i]
               for i in range(fan.nrays)):
            return True
    return False


def span_set(fan, gens, divisor, candidates=None):
    """Characters at the lift whose monomials are multiples of the given ones.

    With ``candidates`` the search is restricted to that list; otherwise the
    full (finite) set of multiples is enumerated.
    """
    if candidates is not None:
        return tuple(m for m in candidates if is_spanned(fan, m, gens, divisor))
    out = set()
    for mg, liftg in gens:
        rows = [(tuple(fan.rays[i]),
                 fan.pairing(mg, i) + int(liftg[i]) - int(divisor[i]))
                for i in range(fan.nrays)]
        try:
            out.update(enumerate_lattice_points(rows, fan.dim))
        except UnboundedRegionError as exc:
            raise InfiniteRegionError("span is infinite; "
                                      "the fan cannot be complete") from exc
    return tuple(sorted(out))


def exponent_caps(fan, diag):
    """Per-variable bound K on minimal generator exponents of the saturation.

    K_rho is the exponent floor unless some gap cell bounds the ray from
    above, in which case one past the largest such bound.  Any monomial with
    an exponent beyond K stays in the ideal after division by that variable:
    a gap cell capturing the divided exponent vector has no upper bound on
    the ray, so it would capture the original vector too.  Hence minimal
    generators live inside the box [s, K].
    """
    caps = list(diag.min_exponents)
    for cone in fan.max_cones:
        for cell in diag.gaps(cone).cells:
            for ray, (_, hi) in cell.bounds:
                if hi is not None:
                    caps[ray] = max(caps[ray], hi + 1)
    return tuple(caps)


def _membership_tables(fan, diag, caps):
    """Per maximal cone, a lookup from projected exponents to membership."""
    s = diag.min_exponents
    tables = {}
    for cone in fan.max_cones:
        gaps = diag.gaps(cone)
        table = {}
        for proj in itertools.product(*(range(s[r], caps[r] + 1) for r in cone)):
            table[proj] = not gaps.contains_values(dict(zip(cone, proj)))
        tables[cone] = table
    return tables


def minimal_generator_exponents(fan, diag):
    """Exponent vectors of the saturation's minimal generators.

    Scans the box [s, K] with the per-cone membership tables; a member is
    minimal when dividing by any single variable leaves the ideal.  Exact
    because exponents >= s make support membership automatic, so membership
    is avoidance of every maximal cone's gaps.
    """
    s = diag.min_exponents
    caps = exponent_caps(fan, diag)
    tables = _membership_tables(fan, diag, caps)

    def member(k):
        return all(tables[cone][tuple(k[r] for r in cone)]
                   for cone in fan.max_cones)

    found = []
    for k in itertools.product(*(range(s[r], caps[r] + 1) for r in range(fan.nrays))):
        if not member(k):
            continue
        minimal = True
        for r in range(fan.nrays):
            if k[r] > s[r]:
                below = k[:r] + (k[r] - 1,) + k[r + 1:]
                if member(below):
                    minimal = False
                    break
        if minimal:
            found.append(k)
    return caps, found


def _class_order(u):
    return (sum(u), u)


def _box_classes(box):
    ranges = [range(lo, hi + 1) for lo, hi in box]
    return sorted(itertools.product(*ranges), key=_class_order)


def reconstruct_generators(grading, diag, search_box=None):
    """Minimal generators of the B-saturated ideal with the given diagram.

    Sweeps degree classes in a fixed linear order; in each class the piece
    of the ideal is read from the diagram and the multiples of previously
    accepted generators are removed.  The final division step makes the
    union minimal, so the sweep order only affects intermediate sets.

    Without ``search_box`` the classes to visit are derived from the diagram
    itself (exponent box [s, K], which provably contains all minimal
    generators).  With an explicit box of per-coordinate class ranges the
    whole box is swept and a SearchBoxError reports surviving generators on
    its boundary, since then the box gives no evidence of completeness.
    """
    fan = grading.fan
    if diag.is_principal():
        return MonomialIdeal([diag.min_exponents], nvars=fan.nrays)
    if search_box is None:
        _, exps = minimal_generator_exponents(fan, diag)
        classes = sorted({grading.degree(k) for k in exps}, key=_class_order)
        box = None
    else:
        box = [(int(lo), int(hi)) for lo, hi in search_box]
        if len(box) != grading.rank:
            raise InputError(f"search box has {len(box)} ranges, "
                             f"expected {grading.rank}")
        if any(lo > hi for lo, hi in box):
            raise InputError("empty search box range")
        classes = _box_classes(box)
    accepted = []
    collected = []
    for u in classes:
        lift = grading.canonical_lift(u)
        piece = graded_basis(grading, diag, lift)
        fresh = [m for m in piece.characters
                 if not is_spanned(fan, m, accepted, lift)]
        for m in fresh:
            accepted.append((m, lift))
            collected.append(piece.exponents(m))
    if not collected:
        # the diagram of a nonzero ideal always reconstructs to something
        raise SearchBoxError("no generators inside the search box; enlarge it")
    result = MonomialIdeal(minimalize(collected), nvars=fan.nrays)
    if box is not None:
        # a sweep can pick up multiples of not-yet-visited generators, so
        # truncation is only judged on the generators that survive division
        for g in result.gens:
            u = grading.degree(g)
            if any(u[i] in (box[i][0], box[i][1]) for i in range(len(box))):
                raise SearchBoxError(
                    f"a generator of class {u} touches the search box "
                    "boundary; enlarge the box")
    return result


def local_cohomology_h1(grading, ideal, divisor, diag=None):
    """Basis of the degree-[divisor] piece of the first local cohomology.

    The piece is the saturation's piece minus the ideal's own monomials,
    which are exactly the span of the generators.
    """
    fan = grading.fan
    if ideal.is_zero():
        raise InputError("the zero ideal has no local cohomology here")
    if diag is None:
        diag = compute_diagram(fan, ideal)
    sat = graded_basis(grading, diag, divisor)
    origin = (0,) * fan.dim
    gens = [(origin, g) for g in ideal.gens]
    covered = set(span_set(fan, gens, divisor, candidates=sat.characters))
    remaining = [m for m in sat.characters if m not in covered]
    return GradedPiece(fan, grading.degree(divisor), tuple(divisor), remaining)
