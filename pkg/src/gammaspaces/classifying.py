"""Bar-type classifying spaces of strict presheaves, their group actions,
the suspension-to-skeleton structure map, iterated deloopings via the
bisimplicial diagonal, and homology reports against the expected
Eilenberg-MacLane pattern.

The k-fold delooping evaluated at the n-wedge is modeled as the diagonal
simplicial set with level p given by the presheaf at the (p**k * n)-fold
object, all simplicial structure maps acting through the interval functor
in every smash factor at once.  For k = 1 and a monoid-built presheaf this
is literally the nerve of the monoid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import gammacat as gc
from . import ggamma as gg
from .algebra import FinAbMonoid, GMonoid
from .errors import BudgetError, StrictnessError, TruncationError
from .homology import (HomologyGroup, HomologyPresentation,
                       induced_map_on_homology, normalized_chain_complex)
from .presheaves import TruncatedGGammaSet
from .simplicial import (SimplicialMap, TruncatedSimplicialSet, skeleton,
                         skeleton_inclusion, suspension, validate)

DEFAULT_BUDGET = 10 ** 7


def _lift(X, f: gc.GammaOpMap):
    if isinstance(X, TruncatedGGammaSet):
        return gg.diag_inclusion(f, X.group)
    return f


def _predicted_level_size(X, m: int) -> int:
    algebra = X.algebra
    if isinstance(algebra, GMonoid):
        return algebra.monoid.size ** m
    if isinstance(algebra, FinAbMonoid):
        return algebra.size ** m
    return X.level_size(m)


@dataclass
class BarSpace:
    """A (possibly iterated) classifying space with its provenance and,
    when the presheaf is equivariant, the group acting levelwise."""

    space: TruncatedSimplicialSet
    presheaf: object
    n: int
    d: int
    iterations: int

    @property
    def group(self):
        return self.presheaf.group if isinstance(self.presheaf, TruncatedGGammaSet) else None

    def level_object(self, p: int) -> int:
        return (p ** self.iterations) * self.n


def iterate_bar(X, k: int, d: int, n: int = 1, budget: int = DEFAULT_BUDGET) -> BarSpace:
    """k-fold delooping at the n-wedge, truncated at simplicial dimension d.

    Refuses before allocating anything if the presheaf truncation is too
    small or the predicted total simplex count exceeds the budget.
    """
    if k < 1:
        raise ValueError("iteration count must be at least 1")
    needed = (d ** k) * n
    if X.N < needed:
        raise TruncationError(
            f"{k}-fold bar at dimension {d} needs presheaf levels up to {needed}, "
            f"truncation is {X.N}", required=needed)
    total = sum(_predicted_level_size(X, (p ** k) * n) for p in range(d + 1))
    if total > budget:
        raise BudgetError(f"predicted {total} simplices exceeds budget {budget}")

    levels = [list(X.level((p ** k) * n)) for p in range(d + 1)]
    faces: list[list[dict]] = [[] for _ in range(d + 1)]
    degeneracies: list[list[dict]] = [[] for _ in range(d + 1)]
    for p in range(1, d + 1):
        for i in range(p + 1):
            op = gc.smash_morphisms(gc.smash_power(gc.face_gamma_op(p, i), k), gc.identity(n))
            table = X.action_table(_lift(X, op))
            tgt = levels[p - 1]
            faces[p].append({x: tgt[table[j]] for j, x in enumerate(levels[p])})
    for p in range(d):
        for i in range(p + 1):
            op = gc.smash_morphisms(gc.smash_power(gc.degeneracy_gamma_op(p, i), k), gc.identity(n))
            table = X.action_table(_lift(X, op))
            tgt = levels[p + 1]
            degeneracies[p].append({x: tgt[table[j]] for j, x in enumerate(levels[p])})
    space = TruncatedSimplicialSet(d, levels, faces, degeneracies)
    report = validate(space)
    if not report.ok:
        raise AssertionError(f"bar output failed validation: {report.violation} at {report.witness}")
    return BarSpace(space, X, n, d, k)


def bar(X, n: int, d: int, budget: int = DEFAULT_BUDGET) -> BarSpace:
    """Single classifying space evaluated at the n-wedge; n = 0 collapses
    every level to the point."""
    return iterate_bar(X, 1, d, n=n, budget=budget)


def g_action_on_bar(B: BarSpace, g: int) -> SimplicialMap:
    """Levelwise action of a group element on an equivariant bar space."""
    X = B.presheaf
    if B.group is None:
        raise ValueError("bar space has no group action")
    level_maps = []
    for p in range(B.d + 1):
        m = B.level_object(p)
        table = X.action_table(gg.group_action_map(m, g, X.group))
        src = B.space.levels[p]
        level_maps.append({x: src[table[j]] for j, x in enumerate(src)})
    return SimplicialMap(B.space, B.space, level_maps)


@dataclass
class StructureMapResult:
    suspension_space: TruncatedSimplicialSet
    one_skeleton: TruncatedSimplicialSet
    iso: SimplicialMap
    inclusion: SimplicialMap
    equivariant: bool | None = None

    def as_dict(self) -> dict:
        return {"is_isomorphism": True,
                "suspension_levels": self.suspension_space.level_sizes(),
                "skeleton_levels": self.one_skeleton.level_sizes(),
                "equivariant": self.equivariant}


def structure_map(X, d: int, budget: int = DEFAULT_BUDGET) -> StructureMapResult:
    """The suspension of level 1 mapped isomorphically onto the 1-skeleton
    of the bar space, plus the skeleton inclusion.

    Simplices of the suspension are basepoint collapses or pairs
    (element, switch word); the word with switch position t goes to the
    image of the element under the map picking position t.  Raises a
    structured error with a witness if the candidate is not an
    isomorphism (which signals a violated single-point level 0).
    """
    if d < 2:
        raise TruncationError("structure map needs dimension at least 2", required=2)
    if not X.is_pointed():
        raise StrictnessError(
            f"level 0 has {X.level_size(0)} elements, expected a single point")
    B = bar(X, 1, d, budget=budget)
    unit = X.act(X.unit_inclusion(), X.level(0)[0])
    susp = suspension(X.level(1), unit, d)
    sk = skeleton(B.space, 1)

    level_maps: list[dict] = []
    for p in range(d + 1):
        basepoint_image = X.act(_lift(X, gc.zero_map(1, p)), unit)
        table = {"*": basepoint_image}
        for x in susp.levels[p]:
            if x == "*":
                continue
            a, bits = x
            t = bits.index(1)
            table[x] = X.act(_lift(X, gc.GammaOpMap(1, p, (0, t))), a)
        level_maps.append(table)

    sk_index = [set(level) for level in sk.levels]
    for p in range(d + 1):
        images = list(level_maps[p].values())
        if len(set(images)) != len(images):
            raise StrictnessError(f"structure map not injective at level {p}")
        if set(images) != sk_index[p]:
            missing = sk_index[p] - set(images)
            extra = set(images) - sk_index[p]
            raise StrictnessError(
                f"structure map not onto the 1-skeleton at level {p}: "
                f"missing {sorted(map(repr, missing))[:3]}, extra {sorted(map(repr, extra))[:3]}")
    iso = SimplicialMap(susp, sk, level_maps)
    report = iso.check()
    if not report.ok:
        raise StrictnessError(f"structure map is not simplicial: {report.violation} at {report.witness}")
    incl = skeleton_inclusion(sk, B.space)

    equivariant: bool | None = None
    if isinstance(X, TruncatedGGammaSet):
        equivariant = True
        for g in range(X.group.size):
            act1 = X.action_table(gg.group_action_map(1, g, X.group))
            level1 = X.level(1)
            bar_act = g_action_on_bar(B, g)
            for p in range(d + 1):
                for x in susp.levels[p]:
                    if x == "*":
                        moved = "*"
                    else:
                        a, bits = x
                        moved = (level1[act1[X.index(1, a)]], bits)
                    lhs = level_maps[p].get(moved)
                    rhs = bar_act.apply(p, level_maps[p][x])
                    if lhs is None or lhs != rhs:
                        equivariant = False
    return StructureMapResult(susp, sk, iso, incl, equivariant)


def _cyclic_decomposition(A: FinAbMonoid) -> list[int]:
    """Invariant factors of a finite abelian group given by its table,
    matched through element-order multisets."""
    orders = sorted(_element_orders(A.table, A.unit, A.size))
    for chain in _divisor_chains(A.size):
        if sorted(_product_orders(chain)) == orders:
            return chain
    raise ValueError("not a finite abelian group table")


def _element_orders(table, unit, size):
    orders = []
    for i in range(size):
        acc, k = table[unit][i], 1
        while acc != unit:
            acc = table[acc][i]
            k += 1
        orders.append(k)
    return orders


def _product_orders(chain):
    import itertools

    orders = []
    for combo in itertools.product(*(range(t) for t in chain)):
        orders.append(math.lcm(*(t // math.gcd(t, x) for t, x in zip(chain, combo))) if chain else 1)
    return orders


def _divisor_chains(n: int, smallest: int = 2) -> list[list[int]]:
    """All chains d1 | d2 | ... with each di > 1 and product n, listed with
    divisibility increasing."""
    if n == 1:
        return [[]]
    chains = []
    for d in range(smallest, n + 1):
        if n % d == 0:
            for rest in _divisor_chains(n // d, d):
                if all(r % d == 0 for r in rest[:1]) or not rest:
                    chains.append([d] + rest)
    return [c for c in chains if all(b % a == 0 for a, b in zip(c, c[1:]))]


def _cyclic_list_homology(orders: list[int], q: int) -> list[int]:
    """Homology of the once-delooped group with the given cyclic factors,
    as a list of cyclic orders (0 meaning a free summand)."""
    hom: list[list[int]] = [[0]] + [[] for _ in range(q)]
    for t in orders:
        factor = [[0]] + [([t] if i % 2 else []) for i in range(1, q + 1)]
        hom = _kunneth(hom, factor, q)
    return hom[q]


def _kunneth(ha, hb, q: int) -> list[list[int]]:
    out: list[list[int]] = []
    for degree in range(q + 1):
        summands: list[int] = []
        for i in range(degree + 1):
            summands.extend(_tensor(ha[i], hb[degree - i]))
        for i in range(degree):
            summands.extend(_tor(ha[i], hb[degree - 1 - i]))
        out.append(summands)
    return out


def _tensor(xs, ys):
    return [math.gcd(x, y) for x in xs for y in ys if math.gcd(x, y) != 1]


def _tor(xs, ys):
    return [math.gcd(x, y) for x in xs for y in ys if x and y and math.gcd(x, y) != 1]


def _canonical_group(orders: list[int]) -> HomologyGroup:
    rank = sum(1 for x in orders if x == 0)
    torsion = [x for x in orders if x > 1]
    primes: dict[int, list[int]] = {}
    for t in torsion:
        for p, e in _factorize(t).items():
            primes.setdefault(p, []).append(e)
    depth = max((len(v) for v in primes.values()), default=0)
    factors = []
    for k in range(depth):
        val = 1
        for p, exps in primes.items():
            exps_sorted = sorted(exps, reverse=True)
            if k < len(exps_sorted):
                val *= p ** exps_sorted[k]
        factors.append(val)
    factors = sorted(factors)
    return HomologyGroup(rank, tuple(f for f in factors if f > 1))


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def expected_em_homology(A: FinAbMonoid, k: int, q: int) -> HomologyGroup | None:
    """Expected homology of the k-fold delooping of a finite abelian group
    in degree q; None when outside the range tabulated here."""
    if q == 0:
        return HomologyGroup(1)
    invariants = _cyclic_decomposition(A)
    if k == 1:
        return _canonical_group(_cyclic_list_homology(invariants, q))
    if q < k:
        return HomologyGroup(0)
    if q == k:
        return _canonical_group(list(invariants))
    if q == k + 1:
        return HomologyGroup(0)
    return None


@dataclass
class DeloopingReport:
    iterations: int
    d: int
    maxdeg: int
    levels: list[int]
    homology: list[HomologyGroup]
    g_action_on_h: dict = field(default_factory=dict)
    expected: list = field(default_factory=list)
    matches: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "iterations": self.iterations,
            "dimension": self.d,
            "levels": self.levels,
            "homology": [{"degree": q, **h.as_dict()} for q, h in enumerate(self.homology)],
            "g_action_on_H": self.g_action_on_h,
            "oracle_comparisons": [
                {"degree": q,
                 "expected": e.as_dict() if e is not None else None,
                 "match": m}
                for q, (e, m) in enumerate(zip(self.expected, self.matches))],
        }


def delooping_report(X, k: int, d: int, maxdeg: int, budget: int = DEFAULT_BUDGET) -> DeloopingReport:
    """Homology of the k-fold delooping through degree maxdeg, with the
    induced action of every group element and, when the presheaf came from
    a group, a comparison against the expected pattern."""
    if maxdeg + 1 > d:
        raise TruncationError(
            f"homology through degree {maxdeg} needs dimension {maxdeg + 1}, given {d}",
            required=maxdeg + 1)
    B = iterate_bar(X, k, d, budget=budget)
    chain = normalized_chain_complex(B.space, top=maxdeg + 1)
    presentations = [HomologyPresentation(chain, q) for q in range(maxdeg + 1)]
    groups = [pres.group() for pres in presentations]

    g_action: dict = {}
    if B.group is not None:
        for g in range(B.group.size):
            label = str(B.group.elements[g])
            action_map = g_action_on_bar(B, g)
            g_action[label] = [
                induced_map_on_homology(action_map, q,
                                        source_pres=presentations[q],
                                        target_pres=presentations[q]).as_dict()["matrix"]
                for q in range(maxdeg + 1)]

    source = X.algebra
    carrier = source.monoid if isinstance(source, GMonoid) else source
    expected: list = [None] * (maxdeg + 1)
    matches: list = [None] * (maxdeg + 1)
    if isinstance(carrier, FinAbMonoid) and carrier.is_group():
        for q in range(maxdeg + 1):
            expected[q] = expected_em_homology(carrier, k, q)
            if expected[q] is not None:
                matches[q] = expected[q] == groups[q]
    return DeloopingReport(k, d, maxdeg, B.space.level_sizes(), groups,
                           g_action, expected, matches)
