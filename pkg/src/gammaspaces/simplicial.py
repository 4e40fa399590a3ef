"""Truncated simplicial sets with tabulated faces and degeneracies,
simplicial maps, skeletons, reduced suspension of a pointed set, and the
diagonal of a truncated bisimplicial set.

Level sets are ordered lists of hashable simplices; face and degeneracy
tables are per-level dicts.  Everything is finite and immutable once
constructed, so values can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violation: str | None = None
    witness: tuple | None = None

    def as_dict(self) -> dict:
        return {"ok": self.ok, "violation": self.violation,
                "witness": repr(self.witness) if self.witness else None}


class TruncatedSimplicialSet:
    """Simplicial set truncated at dimension d.

    levels[p] lists the p-simplices; faces[p][i] maps p-simplices down for
    1 <= p <= d, 0 <= i <= p; degeneracies[p][i] maps p-simplices up for
    0 <= p < d, 0 <= i <= p.
    """

    def __init__(self, d: int, levels: list[list], faces: list[list[dict]],
                 degeneracies: list[list[dict]]):
        self.d = d
        self.levels = levels
        self.faces = faces
        self.degeneracies = degeneracies
        self._index = [{x: i for i, x in enumerate(level)} for level in levels]
        self._degenerate: list[set] | None = None

    def level(self, p: int) -> list:
        return self.levels[p]

    def index(self, p: int, x) -> int:
        return self._index[p][x]

    def face(self, p: int, i: int, x):
        return self.faces[p][i][x]

    def degeneracy(self, p: int, i: int, x):
        return self.degeneracies[p][i][x]

    def degenerate_set(self, p: int) -> set:
        """Simplices of level p that are images of some degeneracy."""
        if self._degenerate is None:
            degen: list[set] = [set() for _ in range(self.d + 1)]
            for p_ in range(self.d):
                for table in self.degeneracies[p_]:
                    degen[p_ + 1].update(table.values())
            self._degenerate = degen
        return self._degenerate[p]

    def nondegenerate(self, p: int) -> list:
        degen = self.degenerate_set(p)
        return [x for x in self.levels[p] if x not in degen]

    def level_sizes(self) -> list[int]:
        return [len(level) for level in self.levels]


def validate(X: TruncatedSimplicialSet) -> ValidationReport:
    """Check every simplicial identity expressible within the truncation.

    Returns the first violation found, named with the offending identity,
    level, indices, and simplex.
    """
    for p in range(1, X.d + 1):
        if len(X.faces[p]) != p + 1:
            return ValidationReport(False, "face table arity", (p,))
        for i in range(p + 1):
            table = X.faces[p][i]
            for x in X.levels[p]:
                if x not in table:
                    return ValidationReport(False, "face not total", (p, i, x))
                if table[x] not in X._index[p - 1]:
                    return ValidationReport(False, "face lands outside level", (p, i, x))
    for p in range(X.d):
        if len(X.degeneracies[p]) != p + 1:
            return ValidationReport(False, "degeneracy table arity", (p,))
        for i in range(p + 1):
            table = X.degeneracies[p][i]
            for x in X.levels[p]:
                if x not in table:
                    return ValidationReport(False, "degeneracy not total", (p, i, x))
                if table[x] not in X._index[p + 1]:
                    return ValidationReport(False, "degeneracy lands outside level", (p, i, x))

    # d_i d_j = d_{j-1} d_i for i < j
    for p in range(2, X.d + 1):
        for j in range(1, p + 1):
            for i in range(j):
                for x in X.levels[p]:
                    if X.face(p - 1, i, X.face(p, j, x)) != X.face(p - 1, j - 1, X.face(p, i, x)):
                        return ValidationReport(False, "d_i d_j = d_{j-1} d_i", (p, i, j, x))
    # s_i s_j = s_{j+1} s_i for i <= j
    for p in range(X.d - 1):
        for j in range(p + 1):
            for i in range(j + 1):
                for x in X.levels[p]:
                    if X.degeneracy(p + 1, i, X.degeneracy(p, j, x)) != \
                       X.degeneracy(p + 1, j + 1, X.degeneracy(p, i, x)):
                        return ValidationReport(False, "s_i s_j = s_{j+1} s_i", (p, i, j, x))
    # mixed identities on level p, 0 <= p < d
    for p in range(X.d):
        for j in range(p + 1):
            for i in range(p + 2):
                for x in X.levels[p]:
                    lhs = X.face(p + 1, i, X.degeneracy(p, j, x))
                    if i == j or i == j + 1:
                        if lhs != x:
                            return ValidationReport(False, "d_i s_j = id", (p, i, j, x))
                    elif i < j:
                        if p == 0:
                            continue  # target identity needs a face below level 0
                        if lhs != X.degeneracy(p - 1, j - 1, X.face(p, i, x)):
                            return ValidationReport(False, "d_i s_j = s_{j-1} d_i", (p, i, j, x))
                    else:
                        if p == 0:
                            continue
                        if lhs != X.degeneracy(p - 1, j, X.face(p, i - 1, x)):
                            return ValidationReport(False, "d_i s_j = s_j d_{i-1}", (p, i, j, x))
    return ValidationReport(True)


class SimplicialMap:
    """Levelwise map between truncated simplicial sets of the same bound."""

    def __init__(self, source: TruncatedSimplicialSet, target: TruncatedSimplicialSet,
                 level_maps: list[dict]):
        if source.d != target.d:
            raise ValueError("source and target truncations differ")
        self.source = source
        self.target = target
        self.level_maps = level_maps

    def apply(self, p: int, x):
        return self.level_maps[p][x]

    def check(self) -> ValidationReport:
        X, Y = self.source, self.target
        for p in range(X.d + 1):
            for x in X.levels[p]:
                if x not in self.level_maps[p]:
                    return ValidationReport(False, "map not total", (p, x))
                if self.level_maps[p][x] not in Y._index[p]:
                    return ValidationReport(False, "map lands outside level", (p, x))
        for p in range(1, X.d + 1):
            for i in range(p + 1):
                for x in X.levels[p]:
                    if self.apply(p - 1, X.face(p, i, x)) != Y.face(p, i, self.apply(p, x)):
                        return ValidationReport(False, "map commutes with faces", (p, i, x))
        for p in range(X.d):
            for i in range(p + 1):
                for x in X.levels[p]:
                    if self.apply(p + 1, X.degeneracy(p, i, x)) != Y.degeneracy(p, i, self.apply(p, x)):
                        return ValidationReport(False, "map commutes with degeneracies", (p, i, x))
        return ValidationReport(True)

    def is_levelwise_bijection(self) -> bool:
        return all(len(set(self.level_maps[p].values())) == len(self.source.levels[p]) == len(self.target.levels[p])
                   for p in range(self.source.d + 1))


def identity_map(X: TruncatedSimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, [{x: x for x in level} for level in X.levels])


def compose_maps(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    if f.target is not g.source and f.target.levels != g.source.levels:
        raise ValueError("maps not composable")
    return SimplicialMap(f.source, g.target,
                         [{x: g.level_maps[p][y] for x, y in f.level_maps[p].items()}
                          for p in range(f.source.d + 1)])


def point(d: int) -> TruncatedSimplicialSet:
    """One simplex per level, everything degenerate."""
    levels = [["*"] for _ in range(d + 1)]
    faces = [[] for _ in range(d + 1)]
    degeneracies = [[] for _ in range(d + 1)]
    for p in range(1, d + 1):
        faces[p] = [{"*": "*"} for _ in range(p + 1)]
    for p in range(d):
        degeneracies[p] = [{"*": "*"} for _ in range(p + 1)]
    return TruncatedSimplicialSet(d, levels, faces, degeneracies)


def constant_map_to_point(X: TruncatedSimplicialSet, P: TruncatedSimplicialSet | None = None) -> SimplicialMap:
    P = P or point(X.d)
    return SimplicialMap(X, P, [{x: "*" for x in level} for level in X.levels])


def suspension(points, base, d: int) -> TruncatedSimplicialSet:
    """Reduced suspension of a finite pointed set: a wedge of circles, one
    per non-basepoint element.

    A p-simplex is either the collapsed basepoint "*" or a pair (a, bits)
    with a a non-basepoint element and bits a weakly increasing, nonconstant
    0/1 tuple of length p+1 recording a monotone surjection onto the edge.
    """
    loops = [a for a in points if a != base]
    levels: list[list] = []
    for p in range(d + 1):
        level: list = ["*"]
        for a in loops:
            for t in range(1, p + 1):
                bits = (0,) * t + (1,) * (p + 1 - t)
                level.append((a, bits))
        levels.append(level)

    def collapse(a, bits):
        if all(b == bits[0] for b in bits):
            return "*"
        return (a, bits)

    faces: list[list[dict]] = [[] for _ in range(d + 1)]
    degeneracies: list[list[dict]] = [[] for _ in range(d + 1)]
    for p in range(1, d + 1):
        for i in range(p + 1):
            table = {}
            for x in levels[p]:
                if x == "*":
                    table[x] = "*"
                else:
                    a, bits = x
                    table[x] = collapse(a, bits[:i] + bits[i + 1:])
            faces[p].append(table)
    for p in range(d):
        for i in range(p + 1):
            table = {}
            for x in levels[p]:
                if x == "*":
                    table[x] = "*"
                else:
                    a, bits = x
                    table[x] = collapse(a, bits[:i + 1] + bits[i:])
            degeneracies[p].append(table)
    return TruncatedSimplicialSet(d, levels, faces, degeneracies)


def skeleton(X: TruncatedSimplicialSet, k: int) -> TruncatedSimplicialSet:
    """Subobject generated by the simplices of dimension at most k."""
    keep: list[set] = []
    for p in range(X.d + 1):
        if p <= k:
            keep.append(set(X.levels[p]))
        else:
            marked = set()
            for i, table in enumerate(X.degeneracies[p - 1]):
                marked.update(table[x] for x in keep[p - 1])
            keep.append(marked)
    levels = [[x for x in X.levels[p] if x in keep[p]] for p in range(X.d + 1)]
    faces = [[{x: table[x] for x in levels[p]} for table in X.faces[p]]
             for p in range(X.d + 1)]
    degeneracies = [[{x: table[x] for x in levels[p]} for table in X.degeneracies[p]]
                    for p in range(X.d + 1)]
    return TruncatedSimplicialSet(X.d, levels, faces, degeneracies)


def skeleton_inclusion(S: TruncatedSimplicialSet, X: TruncatedSimplicialSet) -> SimplicialMap:
    return SimplicialMap(S, X, [{x: x for x in level} for level in S.levels])


class TruncatedBisimplicialSet:
    """Bisimplicial set truncated at (d, d): levels[p][q] lists the
    (p, q)-simplices, with horizontal structure in p and vertical in q."""

    def __init__(self, d: int, levels, h_faces, h_degens, v_faces, v_degens):
        self.d = d
        self.levels = levels
        self.h_faces = h_faces      # h_faces[p][q][i]: level (p,q) -> (p-1,q)
        self.h_degens = h_degens    # h_degens[p][q][i]: level (p,q) -> (p+1,q)
        self.v_faces = v_faces      # v_faces[p][q][i]: level (p,q) -> (p,q-1)
        self.v_degens = v_degens    # v_degens[p][q][i]: level (p,q) -> (p,q+1)

    def check_structure(self) -> ValidationReport:
        """Rows and columns are simplicial and the two directions commute."""
        for q in range(self.d + 1):
            row = _strand(self.d, lambda p: self.levels[p][q],
                          lambda p: self.h_faces[p][q], lambda p: self.h_degens[p][q])
            report = validate(row)
            if not report.ok:
                return ValidationReport(False, f"horizontal {report.violation}", report.witness)
        for p in range(self.d + 1):
            col = _strand(self.d, lambda q: self.levels[p][q],
                          lambda q: self.v_faces[p][q], lambda q: self.v_degens[p][q])
            report = validate(col)
            if not report.ok:
                return ValidationReport(False, f"vertical {report.violation}", report.witness)
        for p in range(1, self.d + 1):
            for q in range(1, self.d + 1):
                for i in range(p + 1):
                    for j in range(q + 1):
                        for x in self.levels[p][q]:
                            lhs = self.v_faces[p - 1][q][j][self.h_faces[p][q][i][x]]
                            rhs = self.h_faces[p][q - 1][i][self.v_faces[p][q][j][x]]
                            if lhs != rhs:
                                return ValidationReport(False, "horizontal/vertical commute", (p, q, i, j, x))
        return ValidationReport(True)


def _strand(d, level_fn, face_fn, degen_fn) -> TruncatedSimplicialSet:
    levels = [list(level_fn(p)) for p in range(d + 1)]
    faces = [[] for _ in range(d + 1)]
    degeneracies = [[] for _ in range(d + 1)]
    for p in range(1, d + 1):
        faces[p] = list(face_fn(p))
    for p in range(d):
        degeneracies[p] = list(degen_fn(p))
    return TruncatedSimplicialSet(d, levels, faces, degeneracies)


def diagonal(B: TruncatedBisimplicialSet) -> TruncatedSimplicialSet:
    """Diagonal simplicial set: level p is the (p, p)-level, and the i-th
    structure map is the horizontal one followed by the vertical one."""
    d = B.d
    levels = [list(B.levels[p][p]) for p in range(d + 1)]
    faces: list[list[dict]] = [[] for _ in range(d + 1)]
    degeneracies: list[list[dict]] = [[] for _ in range(d + 1)]
    for p in range(1, d + 1):
        for i in range(p + 1):
            h = B.h_faces[p][p][i]
            v = B.v_faces[p - 1][p][i]
            faces[p].append({x: v[h[x]] for x in levels[p]})
    for p in range(d):
        for i in range(p + 1):
            h = B.h_degens[p][p][i]
            v = B.v_degens[p + 1][p][i]
            degeneracies[p].append({x: v[h[x]] for x in levels[p]})
    return TruncatedSimplicialSet(d, levels, faces, degeneracies)
