"""Combinatorial models of the finite pointed-map category, its power-set
presentation, and the ordinal category, together with the generating
morphism families used by the Segal and Bousfield conditions.

Objects of the pointed-map category are the sets {0, ..., n} with basepoint
0; a morphism m -> n is any function preserving 0, stored as its value
table.  The equivalent power-set presentation sends a morphism to the
assignment i |-> preimage of i, whose images are pairwise disjoint.  All
values here are immutable and hashable, so they can be shared freely and
used as memo keys.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CompositionError, DisjointnessError


@dataclass(frozen=True)
class GammaOpMap:
    """Basepoint-preserving map {0..source} -> {0..target}."""

    source: int
    target: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.source + 1:
            raise ValueError(f"value table has length {len(self.values)}, expected {self.source + 1}")
        if self.values and self.values[0] != 0:
            raise ValueError("basepoint must map to basepoint")
        for v in self.values:
            if not 0 <= v <= self.target:
                raise ValueError(f"value {v} outside 0..{self.target}")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def key(self) -> str:
        """Canonical string form, used as a JSON map key."""
        return f"{self.source}>{self.target}:" + ",".join(map(str, self.values))

    @classmethod
    def from_key(cls, key: str) -> "GammaOpMap":
        head, _, vals = key.partition(":")
        src, _, tgt = head.partition(">")
        values = tuple(int(v) for v in vals.split(",")) if vals else (0,) * (int(src) + 1)
        return cls(int(src), int(tgt), values)


def identity(n: int) -> GammaOpMap:
    return GammaOpMap(n, n, tuple(range(n + 1)))


def zero_map(m: int, n: int) -> GammaOpMap:
    """The constant-basepoint morphism m -> n."""
    return GammaOpMap(m, n, (0,) * (m + 1))


def from_zero(n: int) -> GammaOpMap:
    """The unique morphism 0 -> n."""
    return GammaOpMap(0, n, (0,))


def compose(g: GammaOpMap, f: GammaOpMap) -> GammaOpMap:
    """g after f; requires f.target == g.source."""
    if f.target != g.source:
        raise CompositionError(f"cannot compose {g.source}->{g.target} after {f.source}->{f.target}")
    return GammaOpMap(f.source, g.target, tuple(g.values[v] for v in f.values))


def enumerate_maps(m: int, n: int):
    """All basepoint-preserving maps m -> n; there are (n+1)**m of them."""
    for tail in itertools.product(range(n + 1), repeat=m):
        yield GammaOpMap(m, n, (0,) + tail)


def segal_family(n: int) -> list[GammaOpMap]:
    """The n projection-like maps n -> 1: the k-th sends k to 1 and all else to 0."""
    family = []
    for k in range(1, n + 1):
        values = tuple(1 if i == k else 0 for i in range(n + 1))
        family.append(GammaOpMap(n, 1, values))
    return family


def bousfield_family(n: int) -> list[GammaOpMap]:
    """The n initial-segment folds n -> 1: the k-th sends 1..k to 1, the rest to 0."""
    family = []
    for k in range(1, n + 1):
        values = tuple(1 if 1 <= i <= k else 0 for i in range(n + 1))
        family.append(GammaOpMap(n, 1, values))
    return family


def fold_map(n: int) -> GammaOpMap:
    """The total fold n -> 1 sending every nonzero element to 1."""
    if n < 1:
        raise ValueError("fold_map requires n >= 1")
    return GammaOpMap(n, 1, (0,) + (1,) * n)


@dataclass(frozen=True)
class GammaMap:
    """Power-set form of a morphism: source of size m, target of size n,
    images[i-1] is the subset of {1..n} assigned to i, pairwise disjoint."""

    source: int
    target: int
    images: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.images) != self.source:
            raise ValueError(f"{len(self.images)} images for source of size {self.source}")
        seen: set[int] = set()
        for img in self.images:
            for j in img:
                if not 1 <= j <= self.target:
                    raise ValueError(f"image element {j} outside 1..{self.target}")
                if j in seen:
                    raise DisjointnessError(f"element {j} appears in two images")
                seen.add(j)

    def image(self, i: int) -> frozenset[int]:
        return self.images[i - 1]


def gamma_identity(n: int) -> GammaMap:
    return GammaMap(n, n, tuple(frozenset({i}) for i in range(1, n + 1)))


def compose_gamma(psi: GammaMap, theta: GammaMap) -> GammaMap:
    """psi after theta in the power-set presentation: unions of images."""
    if theta.target != psi.source:
        raise CompositionError(f"cannot compose {psi.source}->{psi.target} after {theta.source}->{theta.target}")
    images = tuple(frozenset().union(*(psi.image(t) for t in theta.image(i))) if theta.image(i) else frozenset()
                   for i in range(1, theta.source + 1))
    return GammaMap(theta.source, psi.target, images)


def to_power_set_form(f: GammaOpMap) -> GammaMap:
    """Preimage assignment of a pointed map; reverses the arrow."""
    images = tuple(frozenset(j for j in range(1, f.source + 1) if f.values[j] == i)
                   for i in range(1, f.target + 1))
    return GammaMap(f.target, f.source, images)


def from_power_set_form(theta: GammaMap) -> GammaOpMap:
    """Inverse of to_power_set_form; valid because images are disjoint."""
    values = [0] * (theta.target + 1)
    for i in range(1, theta.source + 1):
        for j in theta.image(i):
            values[j] = i
    return GammaOpMap(theta.target, theta.source, tuple(values))


@dataclass(frozen=True)
class DeltaMap:
    """Weakly order-preserving map [source] -> [target]."""

    source: int
    target: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.source + 1:
            raise ValueError(f"value table has length {len(self.values)}, expected {self.source + 1}")
        for v in self.values:
            if not 0 <= v <= self.target:
                raise ValueError(f"value {v} outside 0..{self.target}")
        for a, b in zip(self.values, self.values[1:]):
            if a > b:
                raise ValueError("values must be weakly increasing")

    def __call__(self, i: int) -> int:
        return self.values[i]


def delta_identity(n: int) -> DeltaMap:
    return DeltaMap(n, n, tuple(range(n + 1)))


def compose_delta(g: DeltaMap, f: DeltaMap) -> DeltaMap:
    if f.target != g.source:
        raise CompositionError(f"cannot compose {g.source}->{g.target} after {f.source}->{f.target}")
    return DeltaMap(f.source, g.target, tuple(g.values[v] for v in f.values))


def coface(p: int, i: int) -> DeltaMap:
    """The injection [p-1] -> [p] missing i."""
    if not 0 <= i <= p:
        raise ValueError(f"coface index {i} outside 0..{p}")
    return DeltaMap(p - 1, p, tuple(j if j < i else j + 1 for j in range(p)))


def codegeneracy(p: int, i: int) -> DeltaMap:
    """The surjection [p+1] -> [p] hitting i twice."""
    if not 0 <= i <= p:
        raise ValueError(f"codegeneracy index {i} outside 0..{p}")
    return DeltaMap(p + 1, p, tuple(j if j <= i else j - 1 for j in range(p + 2)))


def edge(n: int, k: int) -> DeltaMap:
    """[1] -> [n] picking the edge from vertex k to vertex k+1, 0 <= k < n."""
    if not 0 <= k < n:
        raise ValueError(f"edge index {k} outside 0..{n - 1}")
    return DeltaMap(1, n, (k, k + 1))


def edge_from_zero(n: int, k: int) -> DeltaMap:
    """[1] -> [n] picking the edge from vertex 0 to vertex k+1, 0 <= k < n."""
    if not 0 <= k < n:
        raise ValueError(f"edge index {k} outside 0..{n - 1}")
    return DeltaMap(1, n, (0, k + 1))


def delta_to_gamma(f: DeltaMap) -> GammaMap:
    """The interval functor: i is assigned {j | f(i-1) < j <= f(i)}.

    Preserves identities and composition; sends the edge maps onto the
    projection family and the edges-from-zero onto the initial-segment
    folds (up to the one-step index shift between the two conventions).
    """
    images = tuple(frozenset(range(f.values[i - 1] + 1, f.values[i] + 1))
                   for i in range(1, f.source + 1))
    return GammaMap(f.source, f.target, images)


def face_gamma_op(p: int, i: int) -> GammaOpMap:
    """Pointed-map form of the i-th coface [p-1] -> [p]; a morphism p -> p-1."""
    return from_power_set_form(delta_to_gamma(coface(p, i)))


def degeneracy_gamma_op(p: int, i: int) -> GammaOpMap:
    """Pointed-map form of the i-th codegeneracy [p+1] -> [p]; a morphism p -> p+1."""
    return from_power_set_form(delta_to_gamma(codegeneracy(p, i)))


@dataclass(frozen=True)
class SmashObject:
    """Smash of pointed sets of sizes m and n: mn nonzero elements plus
    basepoint, paired row-major."""

    factors: tuple[int, int]

    @property
    def size(self) -> int:
        return self.factors[0] * self.factors[1]

    def index(self, i: int, j: int) -> int:
        """Row-major position of the nonzero pair (i, j); 0 if either is 0."""
        m, n = self.factors
        if i == 0 or j == 0:
            return 0
        if not (1 <= i <= m and 1 <= j <= n):
            raise ValueError(f"pair ({i}, {j}) outside {self.factors}")
        return (i - 1) * n + j

    def unindex(self, k: int) -> tuple[int, int]:
        m, n = self.factors
        if not 1 <= k <= m * n:
            raise ValueError(f"index {k} outside 1..{m * n}")
        return (k - 1) // n + 1, (k - 1) % n + 1


def smash(m: int, n: int) -> SmashObject:
    return SmashObject((m, n))


def smash_morphisms(f: GammaOpMap, g: GammaOpMap) -> GammaOpMap:
    """Smash of morphisms: (i, j) -> (f(i), g(j)), collapsing to the
    basepoint when either coordinate lands on it."""
    src = smash(f.source, g.source)
    tgt = smash(f.target, g.target)
    values = [0] * (src.size + 1)
    for k in range(1, src.size + 1):
        i, j = src.unindex(k)
        values[k] = tgt.index(f.values[i], g.values[j])
    return GammaOpMap(src.size, tgt.size, tuple(values))


def smash_power(f: GammaOpMap, k: int) -> GammaOpMap:
    """Left-associated k-fold smash of f with itself; k = 0 gives identity(1)."""
    result = identity(1)
    for _ in range(k):
        result = smash_morphisms(result, f)
    return result
