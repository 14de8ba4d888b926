import pytest

from lrhive.lrcalc import enumerate_lr
from lrhive.tab_commuter import (
    delete_corner,
    full_row_deletion,
    internal_insert,
    rho,
    rho_inverse,
)
from lrhive.tableaux import EMPTY, SkewTableau, adjoin_cell, validate_lr

from conftest import REF_S4, REF_T4, REF_T5, REF_T5_DELETED

# 5-row example with a two-cell bottom row for the full-deletion fixture
WIDE_T5 = SkewTableau(
    (
        (0, 0, 0, 0, 0, 0, 0, 1, 1),
        (0, 0, 0, 0, 0, 1, 1, 2, 2),
        (0, 0, 0, 1, 1, 2, 3),
        (1, 2, 2, 3, 4),
        (3, 5),
    )
)


class TestDeleteCorner:
    def test_reference_bumping_chain(self):
        res = delete_corner(REF_T5, 4)
        assert res.tableau == REF_T5_DELETED
        assert res.terminating_row == 1
        assert res.path == ((1, 7), (2, 7), (3, 6), (4, 4))

    def test_single_cell_matching_row(self):
        res = delete_corner(SkewTableau(((1,),)), 1)
        assert res.tableau == EMPTY and res.terminating_row == 0 and res.path == ()

    def test_inner_corner_cell(self):
        res = delete_corner(SkewTableau(((0,),)), 1)
        assert res.tableau == EMPTY and res.terminating_row == 1
        assert res.path == ((1, 1),)

    def test_not_a_corner(self):
        with pytest.raises(ValueError):
            delete_corner(SkewTableau(((1, 1), (2, 2))), 1)

    def test_preserves_lr(self, small_sweep):
        for lam, mu, nu, tabs in small_sweep[:150]:
            for t in tabs:
                r = len(t.outer)
                if r == 0:
                    continue
                res = delete_corner(t, r)
                assert validate_lr(res.tableau).ok

    def test_path_is_vertical_strip(self, small_sweep):
        for lam, mu, nu, tabs in small_sweep[:150]:
            for t in tabs:
                if not t.outer:
                    continue
                res = delete_corner(t, len(t.outer))
                cols = [c for _, c in res.path]
                rows = [r for r, _ in res.path]
                assert rows == sorted(rows)
                assert cols == sorted(cols, reverse=True)


class TestFullRowDeletion:
    def test_two_cell_bottom_row(self):
        out, terms = full_row_deletion(WIDE_T5, 5)
        assert terms == [0, 2]
        assert out.outer == (9, 9, 7, 5)

    def test_row_beyond_shape_is_identity(self):
        out, terms = full_row_deletion(REF_T4, 7)
        assert out == REF_T4 and terms == []

    def test_reference_terminating_rows(self):
        out, terms = full_row_deletion(REF_T4, 4)
        assert terms == [1, 2, 3, 3]
        assert out.rows == ((0, 0, 0, 0, 0, 1, 1, 1), (0, 0, 0, 0, 1, 2), (1, 2, 2, 2, 3))

    def test_phases_emerge_in_order(self, small_sweep):
        # corner strips first, bumping chains next, inner strips last
        for lam, mu, nu, tabs in small_sweep[:150]:
            for t in tabs:
                r = len(t.outer)
                if r == 0:
                    continue
                nu_r = t.weight()[r - 1] if len(t.weight()) >= r else 0
                mu_r = (t.inner + (0,) * r)[r - 1]
                _, terms = full_row_deletion(t, r)
                assert terms[:nu_r] == [0] * nu_r
                assert terms[len(terms) - mu_r :] == [r] * mu_r
                mids = terms[nu_r : len(terms) - mu_r]
                assert all(k for k in mids) and mids == sorted(mids)


class TestRho:
    def test_reference(self):
        assert rho(REF_T4, 4) == REF_S4

    def test_empty(self):
        assert rho(EMPTY, 3) == EMPTY

    def test_forced_singleton(self):
        src = enumerate_lr((2, 1), (1,), (1, 1), 2)
        dst = enumerate_lr((2, 1), (1, 1), (1,), 2)
        assert len(src) == 1 and len(dst) == 1
        assert rho(src[0], 2) == dst[0]

    def test_non_lr_rejected(self):
        with pytest.raises(ValueError):
            rho(SkewTableau(((2,),)), 1)

    def test_trace_records_each_sweep(self):
        s, trace = rho(REF_T4, 4, trace=True)
        assert s == REF_S4
        assert [step.r for step in trace.steps] == [4, 3, 2, 1]
        assert trace.steps[0].terminating_rows == (1, 2, 3, 3)
        # new rows of the partner appear bottom-up
        assert [step.terminating_rows for step in trace.steps] == [
            tuple(row) for row in reversed(REF_S4.rows)
        ]


class TestPathComparison:
    @staticmethod
    def _phase2_paths(t, r):
        rows = t
        paths = []
        terms = []
        width = t.outer[r - 1] if len(t.outer) >= r else 0
        cur = t
        for _ in range(width):
            res = delete_corner(cur, r)
            if res.terminating_row and res.path and len(res.path) > 1:
                paths.append(res.path)
                terms.append(res.terminating_row)
            cur = res.tableau
        return cur, paths, terms

    def test_horizontal_comparison(self, small_sweep):
        # within one bottom-row sweep, later chains run strictly left and
        # terminate weakly higher up the page (larger row index comes later)
        for lam, mu, nu, tabs in small_sweep[:200]:
            for t in tabs:
                if not t.outer:
                    continue
                _, paths, terms = self._phase2_paths(t, len(t.outer))
                assert terms == sorted(terms)
                for p, q in zip(paths, paths[1:]):
                    cols_p = {r: c for r, c in p}
                    for r, c in q:
                        if r in cols_p:
                            assert c < cols_p[r]

    def test_vertical_comparison(self, small_sweep):
        # j-th late-phase chain of the sweep at r ends strictly below the
        # j-th chain of the following sweep at r - 1
        for lam, mu, nu, tabs in small_sweep[:200]:
            for t in tabs:
                r = len(t.outer)
                if r < 2:
                    continue
                u_fore = sum(1 for x in t.rows[r - 1] if x == r - 1)
                cur, paths, terms = self._phase2_paths(t, r)
                m = len(terms) - u_fore
                if m <= 0:
                    continue
                cur, _, terms2 = self._phase2_paths(cur, r - 1)
                assert len(terms2) >= m
                for tj, tj2 in zip(terms[u_fore:], terms2[:m]):
                    assert tj2 < tj


class TestInternalInsert:
    def test_inverts_reference_deletion(self):
        back = internal_insert(REF_T5_DELETED, 1, 4)
        assert back == REF_T5

    def test_type_three_reverse(self):
        t = SkewTableau(((0, 1), (0,)))
        shrunk = delete_corner(t, 2).tableau
        assert shrunk.rows == ((0, 1),)
        assert internal_insert(shrunk, 2, 2) == t

    def test_wrong_target_row_rejected(self):
        with pytest.raises(ValueError):
            internal_insert(REF_T5_DELETED, 1, 3)

    def test_missing_corner_rejected(self):
        with pytest.raises(ValueError):
            internal_insert(SkewTableau(((1, 1),)), 2, 2)

    def test_delete_then_insert_roundtrip(self, small_sweep):
        for lam, mu, nu, tabs in small_sweep[:250]:
            for t in tabs:
                r = len(t.outer)
                if r == 0:
                    continue
                res = delete_corner(t, r)
                if res.terminating_row == 0:
                    continue
                assert internal_insert(res.tableau, res.terminating_row, r) == t


class TestRhoInverse:
    def test_reference(self):
        assert rho_inverse(REF_S4, 4) == REF_T4

    def test_empty(self):
        assert rho_inverse(EMPTY, 2) == EMPTY

    def test_round_trip_sweep(self, small_sweep):
        for lam, mu, nu, tabs in small_sweep:
            n = max(len(lam), 1)
            for t in tabs:
                assert rho_inverse(rho(t, n), n) == t


class TestInvolutionAndBijection:
    def test_involution_sweep(self, small_sweep):
        for lam, mu, nu, tabs in small_sweep:
            n = max(len(lam), 1)
            for t in tabs:
                assert rho(rho(t, n), n) == t

    def test_bijection_per_triple(self, small_sweep):
        for lam, mu, nu, tabs in small_sweep[:200]:
            n = max(len(lam), 1)
            target = {s.rows for s in enumerate_lr(lam, nu, mu, n)}
            images = {rho(t, n).rows for t in tabs}
            assert images == target and len(images) == len(tabs)

    def test_per_deletion_preservation(self, small_sweep):
        for lam, mu, nu, tabs in small_sweep[:150]:
            for t in tabs:
                cur = t
                r = len(t.outer)
                if r == 0:
                    continue
                for _ in range(t.outer[r - 1]):
                    res = delete_corner(cur, r)
                    assert validate_lr(res.tableau).ok
                    cur = res.tableau


def delayed_deletion_cases(max_weight, max_n):
    """LR tableaux with a one-cell bottom row holding a small letter."""
    from lrhive.lrcalc import sweep_triples

    for lam, mu, nu in sweep_triples(max_weight, max_n):
        n = len(lam)
        if n < 3 or lam[-1] != 1:
            continue
        for s in enumerate_lr(lam, mu, nu, n):
            e = s.rows[n - 1][0]
            if 1 <= e <= n - 2:
                yield s, n, e


class TestDelayedBottomCellDeletion:
    def test_operator_orders_agree(self):
        checked = 0
        for s, n, e in delayed_deletion_cases(10, 4):
            s_minus = SkewTableau(s.rows[: n - 1])

            def hatted(t, row, letter=e):
                return delete_corner(adjoin_cell(t, (row, 1), letter), row)

            left = full_row_deletion(hatted(s_minus, n).tableau, n - 1)[0]
            right = hatted(full_row_deletion(s_minus, n - 1)[0], n - 1).tableau
            assert left == right
            checked += 1
        assert checked > 50

    def test_terminating_row_exchange(self):
        checked = 0
        for s, n, e in delayed_deletion_cases(10, 4):
            s_minus = SkewTableau(s.rows[: n - 1])
            hat = delete_corner(adjoin_cell(s_minus, (n, 1), e), n)
            l_prime = hat.terminating_row
            _, r_prime = full_row_deletion(hat.tableau, n - 1)
            _, r_dblprime = full_row_deletion(s_minus, n - 1)
            swap_at = max(i for i, k in enumerate(r_prime) if k < l_prime)
            l_dblprime = r_prime[swap_at]
            assert l_dblprime > 0
            expected = list(r_prime)
            expected[swap_at] = l_prime
            assert r_dblprime == expected
            hat2 = delete_corner(
                adjoin_cell(full_row_deletion(s_minus, n - 1)[0], (n - 1, 1), e), n - 1
            )
            assert hat2.terminating_row == l_dblprime
            checked += 1
        assert checked > 50
