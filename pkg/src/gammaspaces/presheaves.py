"""Finite set-valued presheaves on the pointed-map category and its
wedge-indexed variant, strict Segal and Bousfield checkers, and the
constructive equivalences with abelian monoids, abelian groups, and
group-equivariant monoids.

Levels and morphism actions are tabulated lazily and memoized, since the
number of morphisms grows as (target+1)**source.  A built presheaf is
immutable once its memo tables are populated; populate before sharing
across threads or confine population to one owner.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass

from . import gammacat as gc
from . import ggamma as gg
from .algebra import FinAbGroup, FinAbMonoid, FiniteGroup, GMonoid
from .errors import AxiomError, InputError, StrictnessError, TruncationError


class _TruncatedPresheaf:
    """Shared machinery: lazy level lists, index lookup, memoized actions."""

    def __init__(self, N: int):
        self.N = N
        self._levels: dict[int, list] = {}
        self._index: dict[int, dict] = {}
        self._tables: dict[str, list[int]] = {}
        self.algebra = None  # provenance: the generating algebra, if any
        self.table_backed = False  # True when only stored tables can act

    def _build_level(self, n: int) -> list:
        raise NotImplementedError

    def _apply(self, f, x):
        raise NotImplementedError

    def level(self, n: int) -> list:
        if n > self.N:
            raise TruncationError(f"level {n} beyond truncation {self.N}", required=n)
        if n not in self._levels:
            self._levels[n] = self._build_level(n)
            self._index[n] = {x: i for i, x in enumerate(self._levels[n])}
        return self._levels[n]

    def level_size(self, n: int) -> int:
        return len(self.level(n))

    def index(self, n: int, x) -> int:
        self.level(n)
        return self._index[n][x]

    def _check_range(self, f) -> None:
        if f.source > self.N or f.target > self.N:
            raise TruncationError(
                f"morphism {f.key()} needs levels up to {max(f.source, f.target)}, "
                f"truncation is {self.N}", required=max(f.source, f.target))

    def act(self, f, x):
        """Image of a single element under the action of a morphism."""
        self._check_range(f)
        return self._apply(f, x)

    def action_table(self, f) -> list[int]:
        """Index form of the action of f, memoized per morphism key."""
        self._check_range(f)
        key = f.key()
        if key not in self._tables:
            src = self.level(f.source)
            self.level(f.target)
            tgt_index = self._index[f.target]
            self._tables[key] = [tgt_index[self._apply(f, x)] for x in src]
        return self._tables[key]

    def is_pointed(self) -> bool:
        return self.level_size(0) == 1


class TruncatedGammaSet(_TruncatedPresheaf):
    """Presheaf on the pointed-map category with levels 0..N."""

    def __init__(self, N: int, level_fn, apply_fn, algebra=None):
        super().__init__(N)
        self._level_fn = level_fn
        self._apply_fn = apply_fn
        self.algebra = algebra

    def _build_level(self, n: int) -> list:
        return self._level_fn(n)

    def _apply(self, f: gc.GammaOpMap, x):
        return self._apply_fn(f, x)

    def segal_component(self, n: int, k: int):
        return gc.segal_family(n)[k - 1]

    def bousfield_component(self, n: int, k: int):
        return gc.bousfield_family(n)[k - 1]

    def fold(self, n: int):
        return gc.fold_map(n)

    def unit_inclusion(self):
        return gc.from_zero(1)


class TruncatedGGammaSet(_TruncatedPresheaf):
    """Presheaf on the wedge-indexed category with levels 0..N."""

    def __init__(self, N: int, group: FiniteGroup, level_fn, apply_fn, algebra=None):
        super().__init__(N)
        self.group = group
        self._level_fn = level_fn
        self._apply_fn = apply_fn
        self.algebra = algebra

    def _build_level(self, n: int) -> list:
        return self._level_fn(n)

    def _apply(self, a: gg.GGammaMap, x):
        return self._apply_fn(a, x)

    def segal_component(self, n: int, k: int):
        return gg.projection(n, k, self.group)

    def bousfield_component(self, n: int, k: int):
        return gg.diag_inclusion(gc.bousfield_family(n)[k - 1], self.group)

    def fold(self, n: int):
        return gg.diag_inclusion(gc.fold_map(n), self.group)

    def unit_inclusion(self):
        return gg.diag_inclusion(gc.from_zero(1), self.group)

    def group_action(self, n: int, g: int):
        return gg.group_action_map(n, g, self.group)


def build_gamma_set(M: FinAbMonoid, N: int) -> TruncatedGammaSet:
    """Presheaf of a finite abelian monoid: level n holds the n-tuples of
    element indices, and a morphism acts by summing preimages (an empty
    preimage contributes the unit)."""
    if N < 1:
        raise ValueError("level bound must be at least 1")

    def level_fn(n):
        return list(itertools.product(range(M.size), repeat=n))

    def apply_fn(f, x):
        out = [M.unit] * f.target
        for i in range(1, f.source + 1):
            j = f.values[i]
            if j:
                out[j - 1] = M.table[out[j - 1]][x[i - 1]]
        return tuple(out)

    return TruncatedGammaSet(N, level_fn, apply_fn, algebra=M)


def build_ggamma_set(A: GMonoid, N: int) -> TruncatedGGammaSet:
    """Equivariant variant: a normalized pair acts by relabeling entries
    through the group action and then summing preimages."""
    if N < 1:
        raise ValueError("level bound must be at least 1")
    M = A.monoid

    def level_fn(n):
        return list(itertools.product(range(M.size), repeat=n))

    def apply_fn(a, x):
        row = A.action[a.g]
        out = [M.unit] * a.target
        for i in range(1, a.source + 1):
            j = a.f.values[i]
            if j:
                out[j - 1] = M.table[out[j - 1]][row[x[i - 1]]]
        return tuple(out)

    return TruncatedGGammaSet(N, A.group, level_fn, apply_fn, algebra=A)


@dataclass(frozen=True)
class CheckReport:
    kind: str
    passed: bool
    upto: int
    failed_at: int | None = None
    witness: str | None = None

    def as_dict(self) -> dict:
        return {"kind": self.kind, "passed": self.passed, "upto": self.upto,
                "failed_at": self.failed_at, "witness": self.witness}


def _assembled_map(X, n: int, kind: str):
    components = [X.segal_component(n, k) if kind == "segal" else X.bousfield_component(n, k)
                  for k in range(1, n + 1)]
    tables = [X.action_table(c) for c in components]
    return [tuple(t[i] for t in tables) for i in range(X.level_size(n))]


def _check_strict(X, upto: int, kind: str) -> CheckReport:
    if upto > X.N:
        raise TruncationError(f"check up to {upto} needs truncation {upto}", required=upto)
    if not X.is_pointed():
        return CheckReport(kind, False, upto, 0,
                           f"level 0 has {X.level_size(0)} elements, expected a single point")
    for n in range(2, upto + 1):
        images = _assembled_map(X, n, kind)
        size_target = X.level_size(1) ** n
        seen: dict = {}
        for i, img in enumerate(images):
            if img in seen:
                x1 = X.level(n)[seen[img]]
                x2 = X.level(n)[i]
                return CheckReport(kind, False, upto, n,
                                   f"not injective at n={n}: {x1} and {x2} share image {img}")
            seen[img] = i
        if len(images) != size_target:
            return CheckReport(kind, False, upto, n,
                               f"not surjective at n={n}: {len(images)} elements cover "
                               f"{size_target} tuples")
    return CheckReport(kind, True, upto)


def check_strict_segal(X, upto: int) -> CheckReport:
    """Strict Segal condition: level 0 is a point and every assembled
    projection map onto tuples is a bijection for 2 <= n <= upto."""
    return _check_strict(X, upto, "segal")


def check_strict_bousfield(X, upto: int) -> CheckReport:
    """Strict Bousfield condition: as above with initial-segment folds."""
    return _check_strict(X, upto, "bousfield")


def homotopy_probe(X, upto: int) -> dict:
    """Necessary-condition probe for the up-to-homotopy conditions.

    Levels here are discrete, so path components are the level sets and the
    probe can only report bijectivity.  A pass is NOT conclusive for any
    homotopy-level statement; it is the discrete shadow of one.
    """
    segal = check_strict_segal(X, upto)
    bousfield = check_strict_bousfield(X, upto)
    return {"conclusive": False,
            "note": "pi0-level necessary condition only; levels are discrete",
            "pi0_segal_bijective": segal.passed,
            "pi0_bousfield_bijective": bousfield.passed}


def _segal_inverse(X, n: int):
    """Inverse of the assembled Segal bijection at level n, as a dict from
    tuples of level-1 indices to level-n elements."""
    images = _assembled_map(X, n, "segal")
    return {img: X.level(n)[i] for i, img in enumerate(images)}


def extract_monoid(X) -> FinAbMonoid:
    """Recover the abelian monoid from a strict presheaf: the carrier is
    level 1, multiplication is the fold through the inverted Segal
    bijection at level 2, the unit is the image of the point."""
    if X.N < 2:
        raise TruncationError("extraction needs levels up to 2", required=2)
    report = check_strict_segal(X, 2)
    if not report.passed:
        raise StrictnessError("presheaf is not strict up to level 2", report=report)
    carrier = list(X.level(1))
    inverse = _segal_inverse(X, 2)
    fold_table = X.action_table(X.fold(2))
    unit_idx = X.action_table(X.unit_inclusion())[0]
    size = len(carrier)
    table = tuple(tuple(fold_table[X.index(2, inverse[(i, j)])] for j in range(size))
                  for i in range(size))
    monoid = FinAbMonoid(tuple(carrier), unit_idx, table)
    monoid.check()
    return monoid


def extract_g_monoid(X: TruncatedGGammaSet) -> GMonoid:
    """Monoid as in extract_monoid plus the action of each group element
    on level 1."""
    monoid = extract_monoid(X)
    action = tuple(tuple(X.action_table(X.group_action(1, g)))
                   for g in range(X.group.size))
    gm = GMonoid(monoid, X.group, action)
    gm.check()
    return gm


def _difference_operation(X):
    """The binary map sending (a, b) to b*a^{-1} built from the second
    projection through the inverted Bousfield bijection at level 2."""
    images = _assembled_map(X, 2, "bousfield")
    inverse = {img: i for i, img in enumerate(images)}
    proj2 = X.action_table(X.segal_component(2, 2))
    size = X.level_size(1)

    def d(i, j):
        return proj2[inverse[(i, j)]]

    return d, size


def extract_group_bousfield(X) -> FinAbGroup:
    """Recover the abelian group from a strict Bousfield presheaf.

    The construction follows the difference-operation recipe: the unit is
    d(a, a), which must be independent of a; inversion is d(b, unit);
    multiplication is d(inverse(a), b).  Every axiom is then verified
    exhaustively before the group is returned.
    """
    if X.N < 2:
        raise TruncationError("extraction needs levels up to 2", required=2)
    report = check_strict_bousfield(X, 2)
    if not report.passed:
        raise StrictnessError("presheaf is not strictly Bousfield up to level 2", report=report)
    d, size = _difference_operation(X)
    units = {d(i, i) for i in range(size)}
    if len(units) != 1:
        raise AxiomError("unit independence", sorted(units))
    unit = units.pop()
    inv = [d(i, unit) for i in range(size)]
    table = tuple(tuple(d(inv[i], j) for j in range(size)) for i in range(size))
    group = FinAbGroup(tuple(X.level(1)), unit, table)
    group.check()
    return group


def extract_g_group_bousfield(X: TruncatedGGammaSet) -> GMonoid:
    """Equivariant variant: group via the difference operation, action via
    the group-element automorphisms of level 1."""
    group_monoid = extract_group_bousfield(X)
    action = tuple(tuple(X.action_table(X.group_action(1, g)))
                   for g in range(X.group.size))
    gm = GMonoid(group_monoid, X.group, action)
    gm.check()
    return gm


def pi0_group_like(X) -> bool:
    """Whether the extracted monoid on level 1 has all two-sided inverses."""
    return extract_monoid(X).is_group()


# ---------------------------------------------------------------------------
# presheaf files: explicit level lists plus action tables for the canonical
# generating family, with digests for golden comparisons

def _canonical_family(X) -> list:
    family = []
    for n in range(2, X.N + 1):
        for k in range(1, n + 1):
            family.append(X.segal_component(n, k))
            family.append(X.bousfield_component(n, k))
    family.append(X.fold(2) if X.N >= 2 else X.fold(1))
    family.append(X.unit_inclusion())
    if isinstance(X, TruncatedGGammaSet):
        for g in range(X.group.size):
            family.append(X.group_action(1, g))
    seen = {}
    for f in family:
        seen.setdefault(f.key(), f)
    return list(seen.values())


def _digest(table: list[int]) -> str:
    return hashlib.sha256(json.dumps(table).encode()).hexdigest()


def presheaf_to_json(X) -> dict:
    """Serializable form: level element lists, action tables for the
    canonical morphism family, and per-table digests."""
    maps = {f.key(): X.action_table(f) for f in _canonical_family(X)}
    data = {
        "kind": "ggamma" if isinstance(X, TruncatedGGammaSet) else "gamma",
        "N": X.N,
        "levels": [[list(x) if isinstance(x, tuple) else x for x in X.level(n)]
                   for n in range(X.N + 1)],
        "maps": maps,
        "digests": {key: _digest(table) for key, table in sorted(maps.items())},
    }
    if isinstance(X, TruncatedGGammaSet):
        data["group"] = X.group.to_json()
        if isinstance(X.algebra, GMonoid):
            data["algebra"] = X.algebra.to_json()
            data["algebra_kind"] = "gmonoid"
    elif isinstance(X.algebra, FinAbMonoid):
        data["algebra"] = X.algebra.to_json()
        data["algebra_kind"] = "group" if isinstance(X.algebra, FinAbGroup) else "monoid"
    return data


def _frozen(x):
    return tuple(_frozen(v) for v in x) if isinstance(x, list) else x


def presheaf_from_json(data: dict):
    """Rehydrate a presheaf backed by the stored tables.

    Only morphisms present in the file can act; that is enough for the
    checkers and extractors, which consume the canonical family.
    """
    try:
        kind = data["kind"]
        N = int(data["N"])
        levels = [[_frozen(x) for x in level] for level in data["levels"]]
        maps = {key: list(table) for key, table in data["maps"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed presheaf file: {exc}") from exc
    if len(levels) != N + 1:
        raise InputError(f"presheaf file lists {len(levels)} levels for N={N}")
    stored_group = FiniteGroup.from_json(data["group"]) if kind == "ggamma" else None
    for key, table in maps.items():
        f = _morphism_from_key(key, kind, stored_group)
        if len(table) != len(levels[f.source]):
            raise InputError(f"table for {key} has {len(table)} entries, "
                             f"level {f.source} has {len(levels[f.source])}")
        for v in table:
            if not 0 <= v < len(levels[f.target]):
                raise InputError(f"table for {key} points outside level {f.target}")

    def apply_fn(f, x):
        key = f.key()
        if key not in maps:
            raise InputError(f"morphism {key} not stored in presheaf file")
        src_level = levels[f.source]
        pos = src_level.index(x)
        return levels[f.target][maps[key][pos]]

    if kind == "ggamma":
        X = TruncatedGGammaSet(N, stored_group, lambda n: list(levels[n]), apply_fn)
    elif kind == "gamma":
        X = TruncatedGammaSet(N, lambda n: list(levels[n]), apply_fn)
    else:
        raise InputError(f"unknown presheaf kind {kind!r}")
    X.table_backed = True
    if "algebra" in data:
        X.algebra = _algebra_from_json(data)
    return X


def _morphism_from_key(key: str, kind: str, group: FiniteGroup | None):
    try:
        if kind == "ggamma":
            map_part, _, tag = key.rpartition("|")
            if not tag.startswith("g"):
                raise ValueError("missing group-element tag")
            return gg.GGammaMap(gc.GammaOpMap.from_key(map_part), int(tag[1:]), group)
        return gc.GammaOpMap.from_key(key)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"bad morphism key {key!r}: {exc}") from exc


def _algebra_from_json(data: dict):
    kind = data.get("algebra_kind", "monoid")
    if kind == "gmonoid":
        return GMonoid.from_json(data["algebra"])
    if kind == "group":
        monoid = FinAbMonoid.from_json(data["algebra"])
        return FinAbGroup(monoid.elements, monoid.unit, monoid.table)
    return FinAbMonoid.from_json(data["algebra"])
