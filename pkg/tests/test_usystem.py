import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lrhive.hive import Hive, is_lr_hive, is_rational_hive
from lrhive.hive_commuter import sigma
from lrhive.usystem import (
    USystem,
    canonical_dressing,
    dressing_constraints,
    dressing_feasible,
    from_literal,
    of_hive,
    sample_dressings,
    shift_dressing,
    sigma_u,
    to_literal,
)

from conftest import REF_H4, REF_K4

REF_U = from_literal("1;1,2;1,2,1")


def random_systems(count, max_n=5, max_entry=3, seed=20240817):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        diags = tuple(
            tuple(rng.randint(0, max_entry) for _ in range(d + 1)) for d in range(n - 1)
        )
        out.append(USystem(n, diags))
    return out


class TestLiteral:
    def test_round_trip(self):
        assert to_literal(REF_U) == "1;1,2;1,2,1"
        assert from_literal(to_literal(REF_U)) == REF_U

    def test_empty(self):
        assert from_literal("") == USystem(1, ())
        assert to_literal(USystem(1, ())) == ""

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            from_literal("-1")


diagonal_arrays = st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        *[st.tuples(*[st.integers(0, 3)] * (d + 1)) for d in range(n - 1)]
    ).map(lambda u: USystem(n, u))
)


class TestSigmaU:
    def test_reference(self):
        assert to_literal(sigma_u(REF_U)) == "1;1,3;1,1,2"

    @given(diagonal_arrays)
    def test_involution_generated(self, s):
        assert sigma_u(sigma_u(s)) == s

    def test_zero(self):
        z = USystem(4, ((0,), (0, 0), (0, 0, 0)))
        assert sigma_u(z) == z

    def test_involution_random(self):
        for s in random_systems(120):
            assert sigma_u(sigma_u(s)) == s

    def test_matches_dressed_map(self):
        assert of_hive(sigma(REF_H4)) == sigma_u(of_hive(REF_H4))

    def test_dressing_independence(self):
        for s in random_systems(40, max_n=4):
            images = {of_hive(sigma(h)) for h in sample_dressings(s, 4, seed=5)}
            assert images == {sigma_u(s)}


class TestCanonicalDressing:
    def test_two_cell(self):
        h = canonical_dressing(from_literal("1"))
        assert (h.lam, h.mu, h.nu) == ((1, 1), (1, 0), (1, 0))

    def test_zero(self):
        h = canonical_dressing(USystem(3, ((0,), (0, 0))))
        assert h == Hive(3, (0, 0, 0), (0, 0, 0), (0, 0, 0), ((0,), (0, 0)))

    def test_reference_values(self):
        h = canonical_dressing(REF_U)
        assert (h.lam, h.mu, h.nu) == ((13, 9, 7, 4), (8, 7, 4, 0), (8, 5, 1, 0))
        assert is_lr_hive(h)

    def test_always_valid(self):
        for s in random_systems(120):
            h = canonical_dressing(s)
            assert is_lr_hive(h)
            ok, lam = dressing_feasible(s, h.mu, h.nu)
            assert ok and lam == h.lam


class TestDressingFeasible:
    def test_reference_constraints(self):
        mu_req, nu_req = dressing_constraints(REF_U)
        assert mu_req == (1, 2, 2)
        assert nu_req == (1, 3, 1)

    def test_reference_boundaries(self):
        ok, lam = dressing_feasible(REF_U, (6, 5, 2, 0), (5, 4, 1, 0))
        assert ok and lam == (8, 6, 5, 4)

    def test_shifted_boundaries(self):
        ok, lam = dressing_feasible(REF_U, (8, 7, 4, 2), (9, 8, 5, 4))
        assert ok and lam == (14, 12, 11, 10)

    def test_zero_boundaries_infeasible(self):
        ok, _ = dressing_feasible(REF_U, (0, 0, 0, 0), (0, 0, 0, 0))
        assert not ok


class TestShiftDressing:
    def test_reference_shift(self):
        h = shift_dressing(REF_H4, 2, 4)
        assert (h.lam, h.mu, h.nu) == ((14, 12, 11, 10), (8, 7, 4, 2), (9, 8, 5, 4))
        assert h.u == REF_H4.u
        assert is_lr_hive(h)

    def test_identity(self):
        assert shift_dressing(REF_H4, 0, 0) == REF_H4

    def test_negative_shift_gives_rational_hive(self):
        h = shift_dressing(REF_H4, -2, -4)
        assert (h.lam, h.mu, h.nu) == ((2, 0, -1, -2), (4, 3, 0, -2), (1, 0, -3, -4))
        assert is_rational_hive(h)
        assert not is_lr_hive(h)

    def test_commutes_with_sigma_on_gradients(self):
        shifted = shift_dressing(REF_H4, 3, 1)
        assert of_hive(sigma(shifted)) == of_hive(sigma(REF_H4)) == of_hive(REF_K4)
        back = sigma(shifted)
        assert (back.lam, back.mu, back.nu) == (
            tuple(x + 4 for x in REF_K4.lam),
            tuple(x + 1 for x in REF_K4.mu),
            tuple(x + 3 for x in REF_K4.nu),
        )
