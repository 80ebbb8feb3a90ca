
import pytest
from hypothesis import given, strategies as st

from oracles import (
    min_triple_with_difference,
    primes_below,
    primitive_triples,
    smallest_pell_b,
    x2_minus_8y2_hits,
)
from pytree.diffs import (
    DiffForm,
    NotRepresentableError,
    QuadInt,
    difference_path,
    difference_value,
    differences,
    invariant_child_kind,
    is_difference,
    is_norm,
    is_representable_R,
    lagrange_descent,
    prime_element,
    reconstruct,
    reduce_by_units,
    root_triple_for_difference,
    solve_norm,
)
from pytree.tree import KINDS, ROOT, ChildKind, PrimTriple, level_iter, locate, node_at, params_from_triple, parent

quads = st.builds(QuadInt, st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))


class TestQuadInt:
    @given(quads, quads)
    def test_norm_multiplicative(self, u, v):
        assert (u * v).norm == u.norm * v.norm

    def test_str(self):
        assert str(QuadInt(11, 4)) == "11+4√2"
        assert str(QuadInt(3, -7)) == "3-7√2"
        assert QuadInt(-1, 3).ascii() == "-1+3*sqrt2"

    def test_exact_div(self):
        # (39 - 2√2) / (5 + 2√2) is not integral, (39 + 2√2) / (5 + 2√2) is
        assert QuadInt(5, 2).exact_div(QuadInt(39, -2)) is None
        assert QuadInt(5, 2).exact_div(QuadInt(39, 2)) == QuadInt(11, -4)

    @given(quads)
    def test_reduce_keeps_norm(self, u):
        r = reduce_by_units(u)
        assert r.norm == u.norm
        assert abs(r.b) <= abs(u.b)


class TestDifferences:
    @pytest.mark.parametrize(
        "t, pqr", [((3, 4, 5), (1, 2, 1)), ((15, 8, 17), (9, 2, -7)), ((33, 56, 65), (9, 32, 23))]
    )
    def test_examples(self, t, pqr):
        assert differences(PrimTriple(*t)) == pqr

    def test_against_params(self):
        for k in range(6):
            for t in level_iter(k):
                m, n = params_from_triple(t)
                p, q, r = differences(t)
                assert (p, q, r) == ((m - n) ** 2, 2 * n * n, 2 * m * n - m * m + n * n)
                assert p > 0 and q > 0

    def test_invariant_kinds(self):
        assert invariant_child_kind(DiffForm.P) is ChildKind.U_MINUS
        assert invariant_child_kind(DiffForm.Q) is ChildKind.L_PLUS
        assert invariant_child_kind(DiffForm.R) is ChildKind.U_PLUS

    def test_each_difference_persists_for_exactly_one_kind(self):
        for k in range(5):
            for t in level_iter(k):
                d = differences(t)
                kids = [differences(c) for c in (node_at(locate(t) + (kd,)) for kd in KINDS)]
                assert [kd.p == d.p for kd in kids] == [True, False, False]
                assert [kd.q == d.q for kd in kids] == [False, True, False]
                assert [kd.r == -d.r for kd in kids] == [False, False, True]


class TestDifferencePath:
    def test_r_path_from_15_8_17(self):
        assert difference_path(PrimTriple(15, 8, 17), DiffForm.R, 3) == [
            (15, 8, 17), (65, 72, 97), (403, 396, 565)
        ]

    def test_p_path(self):
        assert difference_path(ROOT, DiffForm.P, 2) == [(3, 4, 5), (5, 12, 13)]
        assert difference_path(ROOT, DiffForm.P, 4)[-1] == (9, 40, 41)

    def test_single(self):
        assert difference_path(ROOT, DiffForm.Q, 1) == [ROOT]

    def test_rejects_zero_length(self):
        with pytest.raises(ValueError):
            difference_path(ROOT, DiffForm.Q, 0)

    def test_paper_values(self):
        assert [differences(t).r for t in difference_path(ROOT, DiffForm.R, 4)] == [1, -1, 1, -1]
        assert [differences(t).q for t in difference_path(ROOT, DiffForm.Q, 2)] == [2, 2]

    @pytest.mark.parametrize("form", list(DiffForm))
    def test_invariance_up_to_level_five(self, form):
        for k in range(6):
            for t in level_iter(k):
                vals = [difference_value(x, form) for x in difference_path(t, form, 4)]
                v = vals[0]
                if form is DiffForm.R:
                    assert vals == [v, -v, v, -v]
                else:
                    assert vals == [v] * 4


class TestRepresentability:
    def test_examples(self):
        assert is_representable_R(17)
        assert is_representable_R(89)
        assert not is_representable_R(3)

    def test_rejects_even(self):
        with pytest.raises(ValueError):
            is_representable_R(4)

    def test_against_scan(self):
        hits = x2_minus_8y2_hits(500, 10**4)
        for D in range(-499, 500, 2):
            assert is_representable_R(D) == (D in hits), D

    def test_sevens_mod_eight_allowed(self):
        # -7 = 1 - 8 and 161 = 7 * 23 = 13^2 - 8
        assert is_representable_R(-7) and is_representable_R(161)

    def test_is_difference_against_triples(self):
        # every |S - C| <= 150 that occurs at all occurs below this hypotenuse
        seen = {s - c for s, c, _ in primitive_triples(60000)}
        for D in range(-149, 150, 2):
            assert is_difference(D) == (D in seen), D

    def test_is_norm_against_scan(self):
        for D in range(-199, 200, 2):
            expected = any((D + 2 * b * b) >= 0 and int((D + 2 * b * b) ** 0.5 + 0.5) ** 2 == D + 2 * b * b
                           for b in range(400))
            assert is_norm(D) == expected, D


class TestDescent:
    def test_89(self):
        tr = lagrange_descent(89)
        assert tr.steps == ((39, 17), (5, 1))
        u = reconstruct(tr)
        assert u.norm == 89 and abs(u.b) == 4

    def test_17(self):
        assert lagrange_descent(17).steps == ((5, 1),)

    def test_73(self):
        tr = lagrange_descent(73)
        assert abs(tr.steps[-1][1]) <= 2
        assert reconstruct(tr).norm == 73

    @pytest.mark.parametrize("p", [7, 23, 91, 3])
    def test_rejects(self, p):
        with pytest.raises(ValueError):
            lagrange_descent(p)

    def test_all_primes_below_10000(self):
        for p in primes_below(10000):
            if p % 8 != 1:
                continue
            tr = lagrange_descent(p)
            q = p
            for z, q_next in tr.steps:
                assert (z * z - 8) == q * q_next
                assert 0 <= z <= q // 2
                q = q_next
            assert abs(q) <= 2
            assert reconstruct(tr).norm == p

    def test_prime_elements_for_7_mod_8(self):
        for p in primes_below(5000):
            if p % 8 == 7:
                assert prime_element(p).norm == p


class TestSolveNorm:
    def test_examples(self):
        assert solve_norm(17) == QuadInt(5, 2)
        assert solve_norm(-17) == QuadInt(-1, 3)
        assert solve_norm(89) == QuadInt(11, 4)

    def test_negative_via_unit(self):
        assert solve_norm(-89) == QuadInt(-1, 1) * QuadInt(11, 4)
        assert solve_norm(-89).norm == -89

    def test_rejects(self):
        with pytest.raises(NotRepresentableError):
            solve_norm(3)
        with pytest.raises(ValueError):
            solve_norm(10)

    def test_smallest_b_matches_scan(self):
        for D in range(1, 3000, 2):
            if is_norm(D):
                a, b = smallest_pell_b(D)
                assert solve_norm(D) == QuadInt(a, b), D

    def test_y_even_iff_one_mod_eight(self):
        for D in range(-999, 1000, 2):
            if is_norm(D):
                assert (solve_norm(D).b % 2 == 0) == (D % 8 == 1)

    def test_composites(self):
        for D in (17 * 89, 7 * 23, 49, 9 * 17, 17**3, 7 * 17 * 41):
            u = solve_norm(D)
            assert u.norm == D


class TestRootTriple:
    @pytest.mark.parametrize(
        "D, t", [(17, (45, 28, 53)), (-17, (7, 24, 25)), (-89, (51, 140, 149)), (89, (209, 120, 241))]
    )
    def test_examples(self, D, t):
        assert root_triple_for_difference(D) == t

    def test_neighbours_of_33_56_65(self):
        # the ±89 roots are children of (33, 56, 65)
        assert parent(root_triple_for_difference(89))[0] == (33, 56, 65)
        assert parent(root_triple_for_difference(-89))[0] == (33, 56, 65)

    @pytest.mark.parametrize("D", [3, 5, 21, -45])
    def test_rejects_non_differences(self, D):
        with pytest.raises(NotRepresentableError):
            root_triple_for_difference(D)

    def test_rejects_even(self):
        with pytest.raises(ValueError):
            root_triple_for_difference(8)

    def test_against_brute_force(self):
        for D in range(-199, 200, 2):
            if not is_difference(D):
                continue
            root = root_triple_for_difference(D)
            assert root.s - root.c == D
            assert root == min_triple_with_difference(D, root.n), D

    def test_no_ancestor_shares_signed_difference(self):
        for D in range(-299, 300, 2):
            if not is_difference(D):
                continue
            t = root_triple_for_difference(D)
            while (up := parent(t)) is not None:
                t = up[0]
                assert t.s - t.c != D

    def test_large(self):
        for D in (17 * 89 * 113 * 7, -(10**9 + 7), 2**61 - 1):
            root = root_triple_for_difference(D)
            assert root.s - root.c == D
