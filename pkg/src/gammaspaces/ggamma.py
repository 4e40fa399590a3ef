"""Wedge-indexed variant of the pointed-map category for a fixed finite
group G.

Objects are wedges of G-indexed copies of {0..n}, with one shared
basepoint.  Morphisms are generated by diagonal copies of pointed maps
(the same map on every wedge summand) and by the relabeling action of G
on summands.  The two generator families commute, so every composite is a
normalized pair (pointed map, group element); the pair whose map is
constant zero is stored with the identity element, which makes the pair
presentation faithful.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FiniteGroup
from .errors import CompositionError
from .gammacat import GammaOpMap, identity, smash_morphisms, segal_family


@dataclass(frozen=True)
class WedgeObject:
    """Wedge of copies of {0..n} indexed by the group elements.

    Nonzero elements are pairs (k, g_index) with 1 <= k <= n; the shared
    basepoint is 0.  Element order is basepoint first, then summands in
    group order.
    """

    n: int
    group: FiniteGroup

    @property
    def elements(self) -> list:
        elems: list = [0]
        for g in range(self.group.size):
            elems.extend((k, g) for k in range(1, self.n + 1))
        return elems

    @property
    def size(self) -> int:
        return self.n * self.group.size + 1


def wedge_object(n: int, group: FiniteGroup) -> WedgeObject:
    return WedgeObject(n, group)


@dataclass(frozen=True)
class GGammaMap:
    """Normalized pair (pointed map, group element) acting on wedge objects.

    Sends (k, h) to (f(k), g*h) when f(k) is nonzero and to the basepoint
    otherwise; the group element is normalized to the identity when f is
    constant zero.
    """

    f: GammaOpMap
    g: int
    group: FiniteGroup

    def __post_init__(self):
        if not 0 <= self.g < self.group.size:
            raise ValueError(f"group element index {self.g} out of range")
        if self.f.is_zero() and self.g != 0:
            object.__setattr__(self, "g", 0)

    @property
    def source(self) -> int:
        return self.f.source

    @property
    def target(self) -> int:
        return self.f.target

    def apply(self, x):
        """Action on an element of the source wedge object."""
        if x == 0:
            return 0
        k, h = x
        fk = self.f.values[k]
        if fk == 0:
            return 0
        return (fk, self.group.table[self.g][h])

    def action_table(self) -> tuple:
        """Image of every source element in order; the concrete-function view."""
        return tuple(self.apply(x) for x in wedge_object(self.source, self.group).elements)

    def key(self) -> str:
        """Canonical string form; the group element appears by index so
        arbitrary labels cannot collide with the separator."""
        return f"{self.f.key()}|g{self.g}"


def make_morphism(f: GammaOpMap, g: int, group: FiniteGroup) -> GGammaMap:
    return GGammaMap(f, g, group)


def compose(b: GGammaMap, a: GGammaMap) -> GGammaMap:
    """b after a: compose the maps and multiply the group elements."""
    if a.group != b.group:
        raise CompositionError("morphisms over different groups")
    if a.target != b.source:
        raise CompositionError(f"cannot compose {b.source}->{b.target} after {a.source}->{a.target}")
    values = tuple(b.f.values[v] for v in a.f.values)
    return GGammaMap(GammaOpMap(a.source, b.target, values), b.group.table[b.g][a.g], a.group)


def ggamma_identity(n: int, group: FiniteGroup) -> GGammaMap:
    return GGammaMap(identity(n), 0, group)


def group_action_map(n: int, g: int, group: FiniteGroup) -> GGammaMap:
    """The relabeling automorphism of the n-wedge by a group element."""
    return GGammaMap(identity(n), g, group)


def projection(n: int, i: int, group: FiniteGroup) -> GGammaMap:
    """n-wedge -> 1-wedge keeping only position i of every summand."""
    if not 1 <= i <= n:
        raise ValueError(f"projection index {i} outside 1..{n}")
    return GGammaMap(segal_family(n)[i - 1], 0, group)


def diag_inclusion(f: GammaOpMap, group: FiniteGroup) -> GGammaMap:
    """The functor from plain pointed maps: same map on every summand."""
    return GGammaMap(f, 0, group)


def ordinal_smash(p: int, n: int, group: FiniteGroup) -> WedgeObject:
    """Smash of a plain ordinal with a wedge object, taken summand-wise:
    a wedge of copies of the (p*n)-ordinal, paired row-major."""
    return WedgeObject(p * n, group)


def ordinal_smash_map(u: GammaOpMap, a: GGammaMap) -> GGammaMap:
    """Morphism induced on the ordinal smash by a pointed map in the
    ordinal variable and a wedge morphism in the other."""
    return GGammaMap(smash_morphisms(u, a.f), a.g, a.group)


def enumerate_ggamma_maps(m: int, n: int, group: FiniteGroup):
    """All normalized pairs m-wedge -> n-wedge (zero map only with identity)."""
    from .gammacat import enumerate_maps

    for f in enumerate_maps(m, n):
        if f.is_zero():
            yield GGammaMap(f, 0, group)
        else:
            for g in range(group.size):
                yield GGammaMap(f, g, group)
