"""Smooth complete toric fans and the class-group grading of their Cox rings.

Conventions used throughout the package:

* a fan lives in N = Z^n; rays are primitive integer vectors, cones are
  sorted tuples of ray indices, and ``max_cones`` all have n rays;
* a character (point of the dual lattice M = Z^n) is a plain int tuple,
  paired with rays through ``Fan.pairing``;
* the Cox ring has one variable per ray; a monomial is its exponent
  vector, an int tuple of length ``Fan.nrays``;
* multidegrees (classes in the class group, which is free of rank
  ``nrays - dim`` here) are int tuples of length ``CoxGrading.rank``.
"""

import itertools
import json
import re

from . import linalg
from .errors import InputError
from .lattice import enumerate_lattice_points


class Fan:
    """A rational fan given by its rays and maximal cones."""

    def __init__(self, dim, rays, max_cones, name=None):
        self.dim = int(dim)
        self.rays = tuple(tuple(int(x) for x in ray) for ray in rays)
        self.nrays = len(self.rays)
        self.max_cones = tuple(sorted(tuple(sorted(int(i) for i in c)) for c in max_cones))
        self.name = name
        faces = {()}
        for cone in self.max_cones:
            for k in range(1, len(cone) + 1):
                faces.update(itertools.combinations(cone, k))
        self.cones = tuple(sorted(faces, key=lambda c: (len(c), c)))

    def __eq__(self, other):
        return (isinstance(other, Fan)
                and self.dim == other.dim
                and self.rays == other.rays
                and self.max_cones == other.max_cones)

    def __hash__(self):
        return hash((self.dim, self.rays, self.max_cones))

    def __repr__(self):
        label = self.name or f"{self.nrays} rays"
        return f"Fan({label}, dim={self.dim})"

    def pairing(self, m, ray_index):
        """<m, n(rho)> for a character m and a ray index."""
        return linalg.dot(m, self.rays[ray_index])

    def cone_matrix(self, cone):
        """Rows are the ray generators of the cone, in cone order."""
        return [list(self.rays[i]) for i in cone]

    def validate(self):
        return validate_fan(self)

    def assert_valid(self):
        problems = self.validate()
        if problems:
            raise InputError("invalid fan: " + "; ".join(problems))

    @property
    def grading(self):
        if not hasattr(self, "_grading"):
            self._grading = compute_grading(self)
        return self._grading

    def to_json(self):
        return {"dim": self.dim,
                "rays": [list(r) for r in self.rays],
                "max_cones": [list(c) for c in self.max_cones]}

    @classmethod
    def from_json(cls, obj, name=None):
        try:
            return cls(obj["dim"], obj["rays"], obj["max_cones"], name=name)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed fan data: {exc}") from exc


def validate_fan(fan):
    """Check the smooth-complete invariants.  Returns a list of problems."""
    problems = []
    n = fan.dim
    if n < 1:
        problems.append("dim must be at least 1")
        return problems
    if not fan.rays:
        problems.append("no rays")
        return problems
    seen = {}
    for i, ray in enumerate(fan.rays):
        if len(ray) != n:
            problems.append(f"ray {i} has length {len(ray)}, expected {n}")
            continue
        if not any(ray):
            problems.append(f"ray {i} is zero")
            continue
        g = 0
        for x in ray:
            g = linalg.xgcd(g, x)[0]
        if g != 1:
            problems.append(f"ray {i} is not primitive")
        if ray in seen:
            problems.append(f"rays {seen[ray]} and {i} coincide")
        seen[ray] = i
    if problems:
        return problems
    if not fan.max_cones:
        problems.append("no maximal cones")
        return problems
    used = set()
    for cone in fan.max_cones:
        used.update(cone)
        if len(set(cone)) != len(cone) or any(i < 0 or i >= fan.nrays for i in cone):
            problems.append(f"cone {cone} has repeated or out-of-range ray indices")
            return problems
        if len(cone) != n:
            problems.append(f"maximal cone {cone} has {len(cone)} rays, expected {n}")
            continue
        d = linalg.det(fan.cone_matrix(cone))
        if d not in (1, -1):
            problems.append(f"maximal cone {cone} is not unimodular (det {d})")
    if len(set(fan.max_cones)) != len(fan.max_cones):
        problems.append("repeated maximal cones")
    missing = set(range(fan.nrays)) - used
    if missing:
        problems.append(f"rays {sorted(missing)} belong to no maximal cone")
    if problems:
        return problems
    # completeness: every facet of a maximal cone lies in exactly two of them
    facet_count = {}
    for cone in fan.max_cones:
        for facet in itertools.combinations(cone, n - 1):
            facet_count[facet] = facet_count.get(facet, 0) + 1
    for facet, count in sorted(facet_count.items()):
        if count != 2:
            problems.append(
                f"facet {facet} lies in {count} maximal cones (fan is not complete)")
    return problems


class CoxGrading:
    """The projection Z^rays -> class group, normalized on ``basis_rays``.

    ``deg_matrix`` is an (rank x nrays) int matrix whose column at each
    basis ray is the corresponding standard basis vector, so the classes
    of the basis-ray divisors are the chosen basis of the class group.
    """

    def __init__(self, fan, deg_matrix, basis_rays):
        self.fan = fan
        self.deg_matrix = tuple(tuple(row) for row in deg_matrix)
        self.basis_rays = tuple(basis_rays)
        self.rank = len(self.deg_matrix)

    def degree(self, vector):
        """Class of an integer divisor/exponent vector (length nrays)."""
        return tuple(linalg.dot(row, vector) for row in self.deg_matrix)

    def canonical_lift(self, u):
        """The lift of a class u placing u on the basis rays and 0 elsewhere."""
        if len(u) != self.rank:
            raise InputError(f"degree {u} has length {len(u)}, expected {self.rank}")
        lift = [0] * self.fan.nrays
        for coord, ray in zip(u, self.basis_rays):
            lift[ray] = int(coord)
        return tuple(lift)

    def variable_degrees(self):
        """Column view: the class of each Cox variable."""
        return [tuple(self.deg_matrix[i][j] for i in range(self.rank))
                for j in range(self.fan.nrays)]


def compute_grading(fan):
    """Cokernel of M -> Z^rays presented by the ray pairing matrix.

    The smooth complete hypotheses make the cokernel free; the result is
    normalized so that the lexicographically first ray subset whose divisor
    classes form a basis carries the identity block.
    """
    n, r = fan.dim, fan.nrays
    ell = r - n
    phi = [list(ray) for ray in fan.rays]  # r x n, rows are rays
    U, D, _ = linalg.smith_normal_form(phi)
    diag = [D[i][i] for i in range(min(r, n))]
    if any(d == 0 for d in diag) or len(diag) < n:
        raise InputError("rays do not span the ambient lattice")
    if any(d != 1 for d in diag):
        raise InputError("class group has torsion; the fan cannot be smooth")
    deg = [U[i] for i in range(n, r)]
    basis_rays = None
    for combo in itertools.combinations(range(r), ell):
        sub = [[deg[i][j] for j in combo] for i in range(ell)]
        if linalg.det(sub) in (1, -1):
            basis_rays = combo
            break
    if basis_rays is None:
        raise InputError("no ray subset gives a class-group basis")
    sub = [[deg[i][j] for j in basis_rays] for i in range(ell)]
    deg = linalg.matmul(linalg.invert_unimodular(sub), deg)
    for row in deg:
        if any(linalg.dot(row, col) for col in zip(*phi)):
            raise InputError("grading does not annihilate the character lattice")
    return CoxGrading(fan, deg, basis_rays)


def irrelevant_generators(fan):
    """Exponent vectors of the irrelevant ideal's generators, one per cone.

    The generator for a maximal cone is the product of the variables whose
    rays are outside the cone.
    """
    gens = []
    for cone in fan.max_cones:
        outside = set(range(fan.nrays)) - set(cone)
        gens.append(tuple(1 if i in outside else 0 for i in range(fan.nrays)))
    return sorted(set(gens))


def tau_for_cone(fan, cone, divisor):
    """The unique character pairing to divisor[rho] on every ray of the cone.

    Args:
        fan: a smooth fan.
        cone: a maximal cone (tuple of ray indices).
        divisor: integer vector over all rays (only the cone's entries matter).

    Returns:
        Character tau with <tau, n(rho)> = divisor[rho] for rho in the cone.
    """
    if len(cone) != fan.dim:
        raise InputError(f"cone {cone} is not maximal")
    B = fan.cone_matrix(cone)
    a = [int(divisor[i]) for i in cone]
    return tuple(linalg.solve_integer(B, a))


def window_points(fan, width):
    """Characters m with |<m, n(rho)>| <= width for every ray, sorted."""
    cache = getattr(fan, "_window_cache", None)
    if cache is None:
        cache = fan._window_cache = {}
    if width not in cache:
        rows = []
        for ray in fan.rays:
            rows.append((tuple(ray), -width))
            rows.append((tuple(-x for x in ray), -width))
        cache[width] = enumerate_lattice_points(rows, fan.dim)
    return cache[width]


def projective_space(n):
    """The standard fan of n-dimensional projective space."""
    if n < 1:
        raise InputError("projective space needs dimension >= 1")
    rays = [tuple([-1] * n)] + [tuple(1 if j == i else 0 for j in range(n))
                                for i in range(n)]
    cones = [tuple(range(1, n + 1))]
    for i in range(1, n + 1):
        cones.append(tuple(sorted({0, *range(1, n + 1)} - {i})))
    return Fan(n, rays, cones, name=f"P{n}")


def hirzebruch(a):
    """The Hirzebruch surface of parameter a >= 0.

    Rays are ordered (u0, u1, v0, v1) = ((-1, a), (1, 0), (0, -1), (0, 1)),
    with Cox variables (x0, x1, y0, y1) in that order.
    """
    if a < 0:
        raise InputError("Hirzebruch parameter must be >= 0")
    rays = [(-1, a), (1, 0), (0, -1), (0, 1)]
    cones = [(1, 3), (1, 2), (0, 3), (0, 2)]
    return Fan(2, rays, cones, name=f"H{a}")


def product_of_projective_spaces(n, m):
    """The fan of P^n x P^m, first factor's rays first."""
    pn, pm = projective_space(n), projective_space(m)
    dim = n + m
    rays = [tuple(r) + (0,) * m for r in pn.rays]
    rays += [(0,) * n + tuple(r) for r in pm.rays]
    shift = pn.nrays
    cones = []
    for c1 in pn.max_cones:
        for c2 in pm.max_cones:
            cones.append(tuple(sorted(c1 + tuple(i + shift for i in c2))))
    return Fan(dim, rays, cones, name=f"P{n}xP{m}")


_CATALOG = re.compile(r"^(?:P(\d+)|H(\d+)|P(\d+)xP(\d+))$")


def named_fan(name):
    """Catalog lookup: P{n}, H{a}, P{n}xP{m}.  Returns None on no match."""
    match = _CATALOG.match(name.strip())
    if not match:
        return None
    pn, ha, qn, qm = match.groups()
    try:
        if pn is not None:
            return projective_space(int(pn))
        if ha is not None:
            return hirzebruch(int(ha))
        return product_of_projective_spaces(int(qn), int(qm))
    except InputError:
        # P0 and friends parse but name nothing
        return None


def load_fan(source):
    """A fan from a catalog name or a JSON file path."""
    fan = named_fan(source)
    if fan is None:
        try:
            with open(source) as handle:
                obj = json.load(handle)
        except OSError as exc:
            raise InputError(f"unknown fan {source!r} (not a catalog name or file)") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"fan file {source!r} is not valid JSON: {exc}") from exc
        fan = Fan.from_json(obj, name=source)
    fan.assert_valid()
    return fan
