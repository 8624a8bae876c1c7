import pytest

from trivalent import (
    Diagram,
    InvolutionViolated,
    NotPermutation,
    NotRegular,
    NotTransitive,
    OrderThreeViolated,
    elementary_move,
    format_line,
    is_transitive,
    map_stats,
    parse_line,
    validate,
)


class TestValidate:
    def test_single_edge(self):
        d = validate(1, (1,), (1,))
        assert d == Diagram(1, (1,), (1,))

    def test_two_fixed_points_not_transitive(self):
        with pytest.raises(NotTransitive) as exc:
            validate(2, (1, 2), (1, 2))
        assert "1" in str(exc.value)

    def test_two_cycle_violates_order_three(self):
        with pytest.raises(OrderThreeViolated):
            validate(2, (2, 1), (1, 2))

    def test_three_cycle_with_transposition(self):
        assert validate(3, (2, 3, 1), (2, 1, 3)).n == 3

    def test_involution_violated(self):
        # s1 is a 3-cycle
        with pytest.raises(InvolutionViolated):
            validate(3, (1, 2, 3), (2, 3, 1))

    def test_not_permutation_out_of_range(self):
        with pytest.raises(NotPermutation) as exc:
            validate(2, (1, 3), (1, 2))
        assert "s0[2]" in str(exc.value)

    def test_not_permutation_duplicate(self):
        with pytest.raises(NotPermutation) as exc:
            validate(2, (2, 1), (1, 1))
        assert "s1[2]" in str(exc.value)

    def test_empty_diagram_rejected(self):
        with pytest.raises(ValueError):
            validate(0, (), ())

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            validate(3, (1, 2), (1, 2, 3))

    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_accepted_diagrams_satisfy_orders(self, n, torus):
        samples = {
            1: validate(1, (1,), (1,)),
            3: validate(3, (2, 3, 1), (2, 1, 3)),
            6: torus,
        }
        d = samples[n]
        for i in range(1, d.n + 1):
            assert d.s0[d.s0[d.s0[i - 1] - 1] - 1] == i
            assert d.s1[d.s1[i - 1] - 1] == i


class TestTransitive:
    def test_three_cycle_alone(self):
        assert is_transitive((2, 3, 1), (1, 2, 3))

    def test_disjoint_fixed_points(self):
        assert not is_transitive((1, 2), (1, 2))

    def test_six_edges_joined_by_white(self):
        assert is_transitive((2, 3, 1, 5, 6, 4), (5, 6, 4, 3, 1, 2))

    def test_two_three_cycles_disconnected(self):
        assert not is_transitive((2, 3, 1, 5, 6, 4), (1, 2, 3, 4, 5, 6))


class TestElementaryMoves:
    def test_move_a_is_white_step(self, torus):
        assert elementary_move(torus, 1, "A") == 4

    def test_move_b_is_black_step(self, torus):
        assert elementary_move(torus, 1, "B") == 2

    def test_move_t_is_white_then_inverse_black(self, torus):
        # white sends 1 to 4, inverse black sends 4 to 6
        assert elementary_move(torus, 1, "T") == 6

    def test_a_is_involution(self, torus, sphere):
        for d in (torus, sphere):
            for a in range(1, d.n + 1):
                assert elementary_move(d, elementary_move(d, a, "A"), "A") == a

    def test_b_cubed_is_identity(self, torus):
        for a in range(1, torus.n + 1):
            b = a
            for _ in range(3):
                b = elementary_move(torus, b, "B")
            assert b == a

    def test_t_iterates_orbits_cyclically(self, torus):
        a, orbit = 1, []
        while True:
            orbit.append(a)
            a = elementary_move(torus, a, "T")
            if a == 1:
                break
        assert orbit == [1, 6, 2, 4, 3, 5]

    def test_bad_move_and_label(self, torus):
        with pytest.raises(ValueError):
            elementary_move(torus, 1, "X")
        with pytest.raises(ValueError):
            elementary_move(torus, 7, "A")


class TestMapStats:
    def test_torus(self, torus):
        st = map_stats(torus)
        assert (st.vertices, st.edges, st.faces) == (1, 3, 2)
        assert (st.euler, st.genus) == (0, 1)

    def test_sphere(self, sphere):
        st = map_stats(sphere)
        assert (st.vertices, st.edges, st.faces) == (3, 3, 2)
        assert (st.euler, st.genus) == (2, 0)

    def test_single_edge_not_regular(self):
        with pytest.raises(NotRegular):
            map_stats(validate(1, (1,), (1,)))

    def test_white_fixed_point_not_regular(self):
        d = validate(3, (2, 3, 1), (1, 3, 2))
        with pytest.raises(NotRegular) as exc:
            map_stats(d)
        assert "white" in str(exc.value)


class TestLineFormat:
    def test_exact_bytes(self, torus):
        assert torus.to_line() == "6\t2 3 1 5 6 4\t4 5 6 1 2 3\n"
        assert format_line(1, (1,), (1,)) == "1\t1\t1\n"

    def test_round_trip(self, torus, sphere):
        for d in (torus, sphere):
            assert parse_line(d.to_line()) == d

    def test_parse_without_newline(self):
        assert parse_line("1\t1\t1") == Diagram(1, (1,), (1,))

    def test_parse_rejects_malformed(self):
        with pytest.raises(ValueError):
            parse_line("1 1 1\n")
        with pytest.raises(ValueError):
            parse_line("2\t1 x\t1 2\n")

    def test_parse_validates(self):
        with pytest.raises(NotTransitive):
            parse_line("2\t1 2\t1 2\n")
