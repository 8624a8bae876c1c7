import pytest

from trivalent import MaskedStack


def _snapshot(stack):
    return list(stack.N), list(stack.P)


class TestPushPop:
    def test_lifo(self):
        stack = MaskedStack(4)
        for s in (1, 2, 3):
            stack.push(s)
        assert [stack.pop() for _ in range(3)] == [3, 2, 1]
        assert stack.is_empty()

    def test_pop_empty_raises(self):
        with pytest.raises(IndexError):
            MaskedStack(2).pop()

    def test_emptiness_is_sentinel_self_loop(self):
        stack = MaskedStack(3)
        assert stack.N[0] == 0 and stack.P[0] == 0
        stack.push(1)
        assert not stack.is_empty()

    def test_iteration_most_recent_first(self):
        stack = MaskedStack(5)
        for s in (4, 1, 3):
            stack.push(s)
        assert list(stack) == [3, 1, 4]
        assert len(stack) == 3


class TestMaskReveal:
    def test_mask_hides_reveal_restores(self):
        stack = MaskedStack(3)
        stack.push(1)
        stack.push(2)
        before = _snapshot(stack)
        stack.mask(1)
        assert list(stack) == [2]
        stack.reveal(1)
        assert list(stack) == [2, 1]
        assert _snapshot(stack) == before

    def test_masked_singleton_looks_empty(self):
        stack = MaskedStack(1)
        stack.push(1)
        assert not stack.is_empty()
        stack.mask(1)
        assert stack.is_empty()  # N[0] = P[0] = 0 while masked
        assert list(stack) == []
        stack.reveal(1)
        assert not stack.is_empty()
        assert stack.pop() == 1

    def test_nested_mask_reveal_restores_exact_linkage(self):
        stack = MaskedStack(4)
        for s in (1, 2, 3, 4):
            stack.push(s)
        before = _snapshot(stack)
        stack.mask(2)
        stack.mask(1)
        assert list(stack) == [4, 3]
        stack.reveal(1)
        stack.reveal(2)
        assert _snapshot(stack) == before

    def test_masked_element_invisible_to_pop(self):
        stack = MaskedStack(3)
        stack.push(1)
        stack.push(2)
        stack.mask(2)  # 2 is the top; 1 becomes visible top
        assert stack.pop() == 1
        stack.push(1)
        stack.reveal(2)
        assert [stack.pop(), stack.pop()] == [2, 1]

    def test_debug_asserts_lifo_discipline(self):
        stack = MaskedStack(3, debug=True)
        for s in (1, 2, 3):
            stack.push(s)
        stack.mask(3)
        stack.mask(2)
        with pytest.raises(AssertionError):
            stack.reveal(3)  # 2 was masked more recently

    def test_linkage_consistency_after_churn(self):
        stack = MaskedStack(6)
        for s in (1, 2, 3, 4, 5):
            stack.push(s)
        stack.mask(3)
        stack.pop()
        stack.push(5)
        stack.mask(5)
        stack.reveal(5)
        stack.reveal(3)
        for x in stack:
            assert stack.P[stack.N[x]] == x
            assert stack.N[stack.P[x]] == x
