"""Unions of axis-aligned lattice boxes in pairing coordinates.

A diagram entry over a cone is a set of characters cut out by conditions on
the pairings <m, rho> with the cone's rays.  We represent such sets as
finite unions of cells, where each cell holds an interval per constrained
ray.  ``None`` means the side is unbounded; a ray that is absent from a
cell is unconstrained.  Lower bounds may be None as well: complements of
half-spaces show up when differences are taken, so the algebra has to be
closed under that.
"""

from .errors import InfiniteRegionError, InputError
from .lattice import UnboundedRegionError, enumerate_lattice_points
from .linalg import solve_integer

def _lo_key(v):
    # None = -infinity sorts first
    return (0, 0) if v is None else (1, v)


def _hi_key(v):
    # None = +infinity sorts last
    return (1, 0) if v is None else (0, v)


def _isect(a, b):
    lo = b[0] if a[0] is None else a[0] if b[0] is None else max(a[0], b[0])
    hi = b[1] if a[1] is None else a[1] if b[1] is None else min(a[1], b[1])
    return (lo, hi)


def _interval_empty(iv):
    lo, hi = iv
    return lo is not None and hi is not None and lo > hi


def _interval_within(inner, outer):
    lo_ok = outer[0] is None or (inner[0] is not None and inner[0] >= outer[0])
    hi_ok = outer[1] is None or (inner[1] is not None and inner[1] <= outer[1])
    return lo_ok and hi_ok


class Cell:
    """One box: a finite map ray index -> (lo, hi) interval of pairings."""

    __slots__ = ("bounds",)

    def __init__(self, bounds):
        if isinstance(bounds, dict):
            items = bounds.items()
        else:
            items = bounds
        cleaned = []
        for ray, iv in items:
            lo, hi = iv
            if lo is None and hi is None:
                continue
            cleaned.append((int(ray), (None if lo is None else int(lo),
                                       None if hi is None else int(hi))))
        cleaned.sort()
        rays = [r for r, _ in cleaned]
        if len(set(rays)) != len(rays):
            raise InputError("cell constrains a ray twice")
        self.bounds = tuple(cleaned)

    def interval(self, ray):
        for r, iv in self.bounds:
            if r == ray:
                return iv
        return (None, None)

    def rays(self):
        return tuple(r for r, _ in self.bounds)

    def is_empty(self):
        return any(_interval_empty(iv) for _, iv in self.bounds)

    def contains_values(self, value_at):
        """Membership given pairing values; value_at maps ray index -> int."""
        for ray, (lo, hi) in self.bounds:
            v = value_at[ray]
            if lo is not None and v < lo:
                return False
            if hi is not None and v > hi:
                return False
        return True

    def within(self, other):
        """Whether this box is contained in ``other``."""
        return all(_interval_within(self.interval(ray), iv)
                   for ray, iv in other.bounds)

    def intersect(self, other):
        merged = dict(self.bounds)
        for ray, iv in other.bounds:
            merged[ray] = _isect(merged.get(ray, (None, None)), iv)
        cell = Cell(merged)
        return None if cell.is_empty() else cell

    def minus(self, other):
        """This box minus another, as a list of disjoint boxes."""
        if self.intersect(other) is None:
            return [self]
        pieces = []
        current = dict(self.bounds)
        for ray in other.rays():
            blo, bhi = other.interval(ray)
            alo, ahi = current.get(ray, (None, None))
            if blo is not None:
                below = (alo, blo - 1 if ahi is None else min(ahi, blo - 1))
                if not _interval_empty(below):
                    piece = dict(current)
                    piece[ray] = below
                    pieces.append(Cell(piece))
            if bhi is not None:
                above = (bhi + 1 if alo is None else max(alo, bhi + 1), ahi)
                if not _interval_empty(above):
                    piece = dict(current)
                    piece[ray] = above
                    pieces.append(Cell(piece))
            current[ray] = _isect((alo, ahi), (blo, bhi))
        return pieces

    def sort_key(self):
        return tuple((ray, _lo_key(lo), _hi_key(hi)) for ray, (lo, hi) in self.bounds)

    def __eq__(self, other):
        return isinstance(other, Cell) and self.bounds == other.bounds

    def __hash__(self):
        return hash(self.bounds)

    def __repr__(self):
        parts = ", ".join(f"{ray}:[{lo},{hi}]" for ray, (lo, hi) in self.bounds)
        return "Cell(" + parts + ")"

    def to_json(self):
        return {str(ray): [lo, hi] for ray, (lo, hi) in self.bounds}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls({int(k): (v[0], v[1]) for k, v in obj.items()})
        except (ValueError, TypeError, IndexError) as exc:
            raise InputError(f"malformed cell data: {exc}") from exc


def _prune(cells):
    """Drop empty cells and cells contained in another cell."""
    kept = []
    cells = [c for c in cells if not c.is_empty()]
    for i, c in enumerate(cells):
        redundant = False
        for j, d in enumerate(cells):
            if i == j:
                continue
            if c.within(d) and not (d.within(c) and j > i):
                redundant = True
                break
        if not redundant:
            kept.append(c)
    return kept


class LatticeRegion:
    """A finite union of cells attached to a cone of the fan."""

    __slots__ = ("cone", "cells")

    def __init__(self, cone, cells):
        self.cone = tuple(cone)
        pruned = _prune(list(cells))
        pruned.sort(key=Cell.sort_key)
        self.cells = tuple(pruned)

    @classmethod
    def empty(cls, cone):
        return cls(cone, [])

    @classmethod
    def full(cls, cone):
        return cls(cone, [Cell({})])

    @classmethod
    def orthant(cls, cone, lows):
        """{m : <m, rho> >= lows[rho] for rho in cone}."""
        return cls(cone, [Cell({ray: (lo, None) for ray, lo in lows.items()})])

    def is_empty(self):
        return not self.cells

    def _check_cone(self, other):
        if self.cone != other.cone:
            raise InputError(f"region cones differ: {self.cone} vs {other.cone}")

    def __and__(self, other):
        self._check_cone(other)
        out = []
        for a in self.cells:
            for b in other.cells:
                c = a.intersect(b)
                if c is not None:
                    out.append(c)
        return LatticeRegion(self.cone, out)

    def __or__(self, other):
        self._check_cone(other)
        return LatticeRegion(self.cone, list(self.cells) + list(other.cells))

    def __sub__(self, other):
        self._check_cone(other)
        remaining = list(self.cells)
        for b in other.cells:
            nxt = []
            for a in remaining:
                nxt.extend(a.minus(b))
            remaining = nxt
        return LatticeRegion(self.cone, remaining)

    def contains_values(self, value_at):
        return any(c.contains_values(value_at) for c in self.cells)

    def contains(self, fan, m):
        values = {ray: fan.pairing(m, ray) for ray in self.cone}
        return self.contains_values(values)

    def promote(self, cone):
        """Reinterpret over a larger cone (no change to the constraints)."""
        if not set(self.cone) <= set(cone):
            raise InputError(f"cannot promote region from cone {self.cone} to {cone}")
        return LatticeRegion(cone, self.cells)

    def shift(self, fan, vector):
        """Translate by a lattice vector: bounds move by <vector, rho>."""
        out = []
        for cell in self.cells:
            moved = {}
            for ray, (lo, hi) in cell.bounds:
                d = fan.pairing(vector, ray)
                moved[ray] = (None if lo is None else lo + d,
                              None if hi is None else hi + d)
            out.append(Cell(moved))
        return LatticeRegion(self.cone, out)

    def disjoint_cells(self):
        """Pairwise disjoint cells with the same union, for counting."""
        out = []
        for cell in self.cells:
            pieces = [cell]
            for prev in out:
                nxt = []
                for p in pieces:
                    nxt.extend(p.minus(prev))
                pieces = nxt
            out.extend(pieces)
        return out

    def equivalent(self, other):
        """Same set of characters (representations may differ)."""
        self._check_cone(other)
        return (self - other).is_empty() and (other - self).is_empty()

    def to_json(self):
        return {"cone": list(self.cone), "cells": [c.to_json() for c in self.cells]}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(tuple(obj["cone"]), [Cell.from_json(c) for c in obj["cells"]])
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed region data: {exc}") from exc

    def __repr__(self):
        return f"LatticeRegion(cone={self.cone}, cells={list(self.cells)})"


def _max_cone_basis(fan, cone):
    """Inverse of the cone's ray matrix: columns map pairings back to M."""
    if len(cone) != fan.dim:
        raise InputError(f"cone {cone} is not maximal")
    mat = [list(fan.rays[i]) for i in cone]
    n = fan.dim
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        cols.append(solve_integer(mat, e))
    return cols  # m = sum_j y_j * cols[j]


def region_points(fan, region):
    """All characters in a region over a maximal cone, sorted.

    Raises InfiniteRegionError (with an offending cell as witness) when some
    cell is unbounded.
    """
    cols = _max_cone_basis(fan, region.cone)
    n = fan.dim
    points = set()
    for cell in region.disjoint_cells():
        ranges = []
        for ray in region.cone:
            lo, hi = cell.interval(ray)
            if lo is None or hi is None:
                raise InfiniteRegionError(
                    f"cell {cell!r} over cone {region.cone} is unbounded",
                    witness=cell)
            ranges.append(range(lo, hi + 1))
        stack = [()]
        for rng in ranges:
            stack = [y + (v,) for y in stack for v in rng]
        for y in stack:
            m = tuple(sum(y[j] * cols[j][i] for j in range(n)) for i in range(n))
            points.add(m)
    return sorted(points)


def region_is_finite(fan, region):
    if len(region.cone) != fan.dim:
        raise InputError(f"cone {region.cone} is not maximal")
    for cell in region.disjoint_cells():
        for ray in region.cone:
            lo, hi = cell.interval(ray)
            if lo is None or hi is None:
                return False, cell
    return True, None


def count_region_points(fan, region):
    """Number of characters in a region over a maximal cone."""
    if len(region.cone) != fan.dim:
        raise InputError(f"cone {region.cone} is not maximal")
    total = 0
    for cell in region.disjoint_cells():
        vol = 1
        for ray in region.cone:
            lo, hi = cell.interval(ray)
            if lo is None or hi is None:
                raise InfiniteRegionError(
                    f"cell {cell!r} over cone {region.cone} is unbounded",
                    witness=cell)
            vol *= hi - lo + 1
        total += vol
    return total


def polytope_points(fan, divisor):
    """Characters m with <m, rho_i> + divisor[i] >= 0 for every ray.

    This is the polytope of global sections of the divisor; finite whenever
    the fan is complete.
    """
    if len(divisor) != fan.nrays:
        raise InputError("divisor length does not match the ray count")
    rows = [(tuple(fan.rays[i]), -int(divisor[i])) for i in range(fan.nrays)]
    try:
        return enumerate_lattice_points(rows, fan.dim)
    except UnboundedRegionError as exc:
        raise InfiniteRegionError(
            "section polytope is unbounded; the fan is not complete") from exc
