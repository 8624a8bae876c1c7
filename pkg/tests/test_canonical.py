import random

import pytest

from trivalent import (
    CanonicalCode,
    NotConnected,
    are_conjugate,
    canonical_code,
    min_root_code,
    relabel,
    validate,
)

TORUS_CODE = CanonicalCode(6, (2, 3, 1, 5, 6, 4), (5, 6, 4, 3, 1, 2))


def _as_mappings(code, rho):
    """Transport a code's tables along the bijection label -> rho[label]."""
    n = code.n
    s0 = {rho[i + 1]: rho[code.t0[i]] for i in range(n)}
    s1 = {rho[i + 1]: rho[code.t1[i]] for i in range(n)}
    return s0, s1


class TestRelabel:
    def test_single_edge(self):
        assert relabel(1, {1: 1}, {1: 1}, 1) == CanonicalCode(1, (1,), (1,))

    def test_torus_from_root_one(self, torus):
        s0 = {i: torus.s0[i - 1] for i in range(1, 7)}
        s1 = {i: torus.s1[i - 1] for i in range(1, 7)}
        assert relabel(6, s0, s1, 1) == TORUS_CODE

    def test_invariant_under_alphabet_bijection(self, torus):
        base = canonical_code(torus, 1)
        rng = random.Random(7)
        alphabet = ["a", "b", "c", "d", "e", "f"]
        for _ in range(25):
            rng.shuffle(alphabet)
            rho = {i + 1: alphabet[i] for i in range(6)}
            s0, s1 = _as_mappings(CanonicalCode(6, torus.s0, torus.s1), rho)
            assert relabel(6, s0, s1, rho[1]) == base

    def test_idempotent_on_own_output(self, sphere):
        code = canonical_code(sphere, 3)
        s0 = {i: code.t0[i - 1] for i in range(1, 7)}
        s1 = {i: code.t1[i - 1] for i in range(1, 7)}
        assert relabel(6, s0, s1, 1) == code

    def test_disconnected_alphabet(self):
        s = {1: 1, 2: 2}
        with pytest.raises(NotConnected):
            relabel(2, s, s, 1)


class TestCanonicalCode:
    def test_torus_root_one(self, torus):
        assert canonical_code(torus, 1) == TORUS_CODE

    def test_torus_any_root_gives_same_code(self, torus):
        # the torus map is edge-transitive, so every rooting is isomorphic
        codes = {canonical_code(torus, r) for r in range(1, 7)}
        assert codes == {TORUS_CODE}

    def test_single_edge(self):
        d = validate(1, (1,), (1,))
        assert canonical_code(d, 1) == CanonicalCode(1, (1,), (1,))

    def test_root_out_of_range(self, torus):
        with pytest.raises(ValueError):
            canonical_code(torus, 0)

    def test_codes_are_totally_ordered(self, torus, sphere):
        a = canonical_code(torus, 1)
        b = canonical_code(sphere, 1)
        assert (a < b) != (b < a)
        small = CanonicalCode(1, (1,), (1,))
        assert small < a and small < b  # size compares first

    def test_fixpoint(self, sphere):
        code = canonical_code(sphere, 5)
        assert canonical_code(code.to_diagram(), 1) == code


class TestMinRootCode:
    def test_single_edge(self):
        d = validate(1, (1,), (1,))
        assert min_root_code(d) == (CanonicalCode(1, (1,), (1,)), 1)

    def test_torus_has_one_rooted_class(self, torus):
        code, distinct = min_root_code(torus)
        assert code == TORUS_CODE
        assert distinct == 1

    def test_sphere_rootings(self, sphere):
        code, distinct = min_root_code(sphere)
        assert canonical_code(sphere, 1) in {canonical_code(sphere, r) for r in range(1, 7)}
        assert 1 <= distinct <= 6
        # minimum really is the least over all rootings
        assert code == min(canonical_code(sphere, r) for r in range(1, 7))

    def test_invariant_under_rerooting(self, sphere):
        rerooted = canonical_code(sphere, 4).to_diagram()
        assert min_root_code(rerooted) == min_root_code(sphere)


class TestAreConjugate:
    def test_rerooted_diagram_is_conjugate(self, sphere):
        rerooted = canonical_code(sphere, 2).to_diagram()
        assert are_conjugate(sphere, rerooted)

    def test_different_sizes(self, torus):
        assert not are_conjugate(torus, validate(1, (1,), (1,)))

    def test_torus_vs_sphere(self, torus, sphere):
        assert not are_conjugate(torus, sphere)
