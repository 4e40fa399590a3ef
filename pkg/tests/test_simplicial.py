from gammaspaces import simplicial as ss
from gammaspaces.algebra import cyclic, max_monoid
from oracles import nerve_of_monoid


class TestValidate:
    def test_point_passes(self):
        assert ss.validate(ss.point(3)).ok

    def test_nerve_z2_passes(self):
        assert ss.validate(nerve_of_monoid(cyclic(2), 3)).ok

    def test_nerve_max_monoid_passes(self):
        assert ss.validate(nerve_of_monoid(max_monoid(2), 3)).ok

    def test_corrupted_face_fails_with_named_identity(self):
        X = nerve_of_monoid(cyclic(2), 3)
        victim = X.levels[2][1]
        old = X.faces[2][1][victim]
        X.faces[2][1][victim] = next(x for x in X.levels[1] if x != old)
        report = ss.validate(X)
        assert not report.ok
        assert report.violation is not None
        assert "d_" in report.violation

    def test_suspension_passes(self):
        assert ss.validate(ss.suspension([0, 1, 2], 0, 3)).ok


class TestSuspension:
    def test_basepoint_only_gives_point(self):
        X = ss.suspension([0], 0, 3)
        assert X.level_sizes() == [1, 1, 1, 1]

    def test_two_points_give_circle(self):
        X = ss.suspension([0, 1], 0, 2)
        assert X.level_sizes() == [1, 2, 3]
        assert len(X.nondegenerate(1)) == 1
        assert X.nondegenerate(2) == []

    def test_nondegenerate_edges_count(self):
        X = ss.suspension([0, 1, 2], 0, 2)
        assert len(X.nondegenerate(1)) == 2
        assert len(X.nondegenerate(0)) == 1


class TestSkeleton:
    def test_skeleton_of_point(self):
        S = ss.skeleton(ss.point(3), 1)
        assert S.level_sizes() == [1, 1, 1, 1]

    def test_one_skeleton_of_nerve(self):
        X = nerve_of_monoid(cyclic(3), 3)
        S = ss.skeleton(X, 1)
        assert ss.validate(S).ok
        assert S.level_sizes()[0] == 1
        assert S.level_sizes()[1] == 3
        # level 2 keeps only degenerate images of level-1 simplices
        assert set(S.levels[2]) == {t for table in X.degeneracies[1] for t in
                                    (table[x] for x in S.levels[1])}

    def test_skeleton_inclusion_is_simplicial(self):
        X = nerve_of_monoid(cyclic(2), 3)
        S = ss.skeleton(X, 1)
        incl = ss.skeleton_inclusion(S, X)
        assert incl.check().ok


class TestSimplicialMap:
    def test_identity_checks(self):
        X = nerve_of_monoid(cyclic(2), 3)
        assert ss.identity_map(X).check().ok

    def test_constant_map_checks(self):
        X = nerve_of_monoid(cyclic(3), 3)
        assert ss.constant_map_to_point(X).check().ok

    def test_loop_swap_is_simplicial_but_partial_collapse_is_not(self):
        X = ss.suspension([0, 1, 2], 0, 2)
        level_maps = []
        for p in range(3):
            table = {}
            for x in X.levels[p]:
                if x == "*":
                    table[x] = "*"
                else:
                    a, bits = x
                    table[x] = ({1: 2, 2: 1}[a], bits)
            level_maps.append(table)
        assert ss.SimplicialMap(X, X, level_maps).check().ok
        # collapsing one edge but not its degeneracies breaks naturality
        level_maps[1][(2, (0, 1))] = "*"
        assert not ss.SimplicialMap(X, X, level_maps).check().ok

    def test_composition(self):
        X = nerve_of_monoid(cyclic(2), 2)
        f = ss.identity_map(X)
        g = ss.constant_map_to_point(X)
        gf = ss.compose_maps(g, f)
        assert gf.check().ok
        assert all(gf.apply(p, x) == "*" for p in range(3) for x in X.levels[p])


class TestBisimplicialDiagonal:
    @staticmethod
    def product_bisimplicial(M, d):
        """Bisimplicial set (p, q) |-> tuples of length p in one monoid
        direction and q in the other; used as a small structured example."""
        nerve = nerve_of_monoid(M, d)
        levels = [[[(x, y) for x in nerve.levels[p] for y in nerve.levels[q]]
                   for q in range(d + 1)] for p in range(d + 1)]
        h_faces = [[[{(x, y): (table[x], y) for (x, y) in levels[p][q]}
                     for table in nerve.faces[p]] for q in range(d + 1)]
                   for p in range(d + 1)]
        h_degens = [[[{(x, y): (table[x], y) for (x, y) in levels[p][q]}
                      for table in nerve.degeneracies[p]] for q in range(d + 1)]
                    for p in range(d + 1)]
        v_faces = [[[{(x, y): (x, table[y]) for (x, y) in levels[p][q]}
                     for table in nerve.faces[q]] for q in range(d + 1)]
                   for p in range(d + 1)]
        v_degens = [[[{(x, y): (x, table[y]) for (x, y) in levels[p][q]}
                      for table in nerve.degeneracies[q]] for q in range(d + 1)]
                    for p in range(d + 1)]
        return ss.TruncatedBisimplicialSet(d, levels, h_faces, h_degens, v_faces, v_degens)

    def test_structure_checks(self):
        B = self.product_bisimplicial(cyclic(2), 2)
        assert B.check_structure().ok

    def test_diagonal_of_constant_point(self):
        levels = [[["*"] for _ in range(3)] for _ in range(3)]
        star = {"*": "*"}
        h_faces = [[[star] * (p + 1) if p else [] for _ in range(3)] for p in range(3)]
        h_degens = [[[star] * (p + 1) if p < 2 else [] for _ in range(3)] for p in range(3)]
        v_faces = [[[star] * (q + 1) if q else [] for q in range(3)] for _ in range(3)]
        v_degens = [[[star] * (q + 1) if q < 2 else [] for q in range(3)] for _ in range(3)]
        B = ss.TruncatedBisimplicialSet(2, levels, h_faces, h_degens, v_faces, v_degens)
        D = ss.diagonal(B)
        assert ss.validate(D).ok
        assert D.level_sizes() == [1, 1, 1]

    def test_diagonal_of_product_is_valid_and_sized(self):
        M = cyclic(2)
        B = self.product_bisimplicial(M, 2)
        D = ss.diagonal(B)
        assert ss.validate(D).ok
        assert D.level_sizes() == [1, 4, 16]

    def test_diagonal_commutes_with_levelwise_maps(self):
        # inverting one factor is a levelwise bisimplicial map; restricting
        # it to the diagonal must again be simplicial and match pointwise
        Z3 = cyclic(3)
        B = self.product_bisimplicial(Z3, 2)
        D = ss.diagonal(B)
        inv = Z3.inverse
        tables = [{(x, y): (tuple(inv[i] for i in x), y) for (x, y) in D.levels[p]}
                  for p in range(3)]
        f = ss.SimplicialMap(D, D, tables)
        assert f.check().ok
        for p in range(3):
            for (x, y) in D.levels[p]:
                assert f.apply(p, (x, y)) == (tuple(inv[i] for i in x), y)
