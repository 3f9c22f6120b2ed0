import itertools

import pytest

from cnotsynth.errors import LineOutOfRange, LinesNotDistinct, ValidationError
from cnotsynth.gates import (
    Circuit,
    Gate,
    GateKind,
    circuit_permutation,
    decompose_nonadjacent_toffoli,
    gate_permutation,
    lower_mct_to_cnts,
    swap_to_cnots,
)
from cnotsynth.perm import compose, from_image_list, identity, tensor

from oracles import dense_controlled_not, dense_swap, list_from_dense

TOFFOLI3 = from_image_list([1, 2, 3, 4, 5, 6, 8, 7])
SWAP2 = from_image_list([1, 3, 2, 4])
NOT1 = from_image_list([2, 1])
CNOT2 = from_image_list([1, 2, 4, 3])


def all_single_gates(width):
    lines = range(1, width + 1)
    yield from (Gate.not_(t) for t in lines)
    yield from (Gate.cnot(c, t) for c, t in itertools.permutations(lines, 2))
    for c1, c2 in itertools.combinations(lines, 2):
        for t in lines:
            if t not in (c1, c2):
                yield Gate.toffoli(c1, c2, t)
    yield from (Gate.swap(a, b) for a, b in itertools.combinations(lines, 2))
    for k in range(3, width):
        for ctrl in itertools.combinations(lines, k):
            for t in lines:
                if t not in ctrl:
                    yield Gate.mct(ctrl, t)


def dense_oracle(gate, width):
    if gate.kind is GateKind.SWAP:
        return dense_swap(*gate.targets, width)
    return dense_controlled_not(set(gate.controls), gate.target, width)


def adjacent_tensor_oracle(gate, width):
    """Identity factors around the base gate, for gates on consecutive lines in textbook order."""
    base = {
        GateKind.NOT: NOT1,
        GateKind.CNOT: CNOT2,
        GateKind.TOFFOLI: TOFFOLI3,
        GateKind.SWAP: SWAP2,
    }[gate.kind]
    first = min(gate.lines)
    return tensor(tensor(identity(first - 1), base), identity(width - first - base.width + 1))


class TestGateConstruction:
    def test_controls_sorted(self):
        assert Gate.toffoli(3, 1, 2).controls == (1, 3)
        assert Gate.swap(4, 3) == Gate.swap(3, 4)

    def test_distinct_lines(self):
        with pytest.raises(LinesNotDistinct):
            Gate.cnot(2, 2)

    def test_arity(self):
        with pytest.raises(ValidationError):
            Gate(GateKind.TOFFOLI, (1,), (2,))

    def test_circuit_rejects_out_of_range(self):
        with pytest.raises(LineOutOfRange):
            Circuit(2, (Gate.cnot(1, 3),))

    def test_controlled_not_narrowest(self):
        assert Gate.controlled_not((), 2).kind is GateKind.NOT
        assert Gate.controlled_not((1,), 2).kind is GateKind.CNOT
        assert Gate.controlled_not((1, 3), 2).kind is GateKind.TOFFOLI
        assert Gate.controlled_not((1, 3, 4), 2).kind is GateKind.MCT


class TestGatePermutation:
    def test_toffoli3(self):
        assert gate_permutation(Gate.toffoli(1, 2, 3), 3) == TOFFOLI3

    def test_swap2(self):
        assert gate_permutation(Gate.swap(1, 2), 2).to_image_list() == [1, 3, 2, 4]

    def test_toffoli_on_four_lines(self):
        assert gate_permutation(Gate.toffoli(1, 2, 3), 4) == tensor(TOFFOLI3, identity(1))

    def test_line_out_of_range(self):
        with pytest.raises(LineOutOfRange):
            gate_permutation(Gate.not_(4), 3)

    def test_identity_gate(self):
        assert gate_permutation(Gate.identity(2), 3) == identity(3)

    @pytest.mark.parametrize("width", range(1, 7))
    def test_matches_kronecker_oracle(self, width):
        for g in all_single_gates(width):
            expected = list_from_dense(dense_oracle(g, width))
            assert gate_permutation(g, width).to_image_list() == expected, str(g)

    @pytest.mark.parametrize("width", range(1, 7))
    def test_adjacent_gates_match_tensor_embedding(self, width):
        cases = [Gate.not_(t) for t in range(1, width + 1)]
        cases += [Gate.cnot(i, i + 1) for i in range(1, width)]
        cases += [Gate.swap(i, i + 1) for i in range(1, width)]
        cases += [Gate.toffoli(i, i + 1, i + 2) for i in range(1, width - 1)]
        for g in cases:
            assert gate_permutation(g, width) == adjacent_tensor_oracle(g, width), str(g)

    @pytest.mark.parametrize("width", range(1, 6))
    def test_every_gate_is_involution(self, width):
        for g in all_single_gates(width):
            p = gate_permutation(g, width)
            assert compose(p, p) == identity(width)

    def test_control_symmetry(self):
        for i, j, k in itertools.permutations(range(1, 5), 3):
            assert gate_permutation(Gate.toffoli(i, j, k), 4) == gate_permutation(Gate.toffoli(j, i, k), 4)


class TestCircuitPermutation:
    def test_empty(self):
        assert circuit_permutation(Circuit(3)) == identity(3)

    def test_comparator(self):
        c = Circuit(2, (Gate.cnot(2, 1), Gate.not_(1)))
        assert circuit_permutation(c).to_image_list() == [3, 2, 1, 4]

    def test_ciw(self):
        c = Circuit(3, (Gate.cnot(1, 2),))
        assert circuit_permutation(c).to_image_list() == [1, 2, 3, 4, 7, 8, 5, 6]

    def test_execution_order(self):
        # Not(1) then Cnot(1;2) sends |00> to |11>; the reverse order sends it to |10>
        forward = Circuit(2, (Gate.not_(1), Gate.cnot(1, 2)))
        backward = Circuit(2, (Gate.cnot(1, 2), Gate.not_(1)))
        assert circuit_permutation(forward).image[0] == 3
        assert circuit_permutation(backward).image[0] == 2
        g1 = gate_permutation(Gate.not_(1), 2)
        g2 = gate_permutation(Gate.cnot(1, 2), 2)
        assert circuit_permutation(forward) == compose(g2, g1)

    def test_concatenation(self):
        c1 = Circuit(3, (Gate.not_(1), Gate.toffoli(1, 2, 3)))
        c2 = Circuit(3, (Gate.swap(1, 3), Gate.cnot(3, 2)))
        assert circuit_permutation(c1.then(c2)) == compose(circuit_permutation(c2), circuit_permutation(c1))


class TestDecomposeToffoli:
    def test_already_adjacent(self):
        c = decompose_nonadjacent_toffoli(1, 2, 3, 3)
        assert c.gates == (Gate.toffoli(1, 2, 3),)

    def test_target_two_away(self):
        c = decompose_nonadjacent_toffoli(1, 2, 4, 4)
        assert c.gates == (Gate.swap(3, 4), Gate.toffoli(1, 2, 3), Gate.swap(3, 4))
        assert circuit_permutation(c) == gate_permutation(Gate.toffoli(1, 2, 4), 4)

    def test_ladders_on_both_sides(self):
        c = decompose_nonadjacent_toffoli(1, 3, 5, 5)
        swaps = [g for g in c.gates if g.kind is GateKind.SWAP]
        toffolis = [g for g in c.gates if g.kind is GateKind.TOFFOLI]
        assert len(toffolis) == 1 and toffolis[0] == Gate.toffoli(2, 3, 4)
        assert swaps == [Gate.swap(1, 2), Gate.swap(4, 5), Gate.swap(4, 5), Gate.swap(1, 2)]
        assert circuit_permutation(c) == gate_permutation(Gate.toffoli(1, 3, 5), 5)

    def test_long_ladder_order(self):
        c = decompose_nonadjacent_toffoli(1, 4, 7, 7)
        assert c.gates == (
            Gate.swap(1, 2), Gate.swap(2, 3),
            Gate.swap(6, 7), Gate.swap(5, 6),
            Gate.toffoli(3, 4, 5),
            Gate.swap(5, 6), Gate.swap(6, 7),
            Gate.swap(2, 3), Gate.swap(1, 2),
        )

    @pytest.mark.parametrize("width", range(3, 7))
    def test_exhaustive(self, width):
        for i, j, k in itertools.permutations(range(1, width + 1), 3):
            c = decompose_nonadjacent_toffoli(i, j, k, width)
            core = [g for g in c.gates if g.kind is GateKind.TOFFOLI]
            assert len(core) == 1
            lo = min(core[0].lines)
            assert sorted(core[0].lines) == [lo, lo + 1, lo + 2]
            assert all(g.kind is GateKind.SWAP and g.targets[1] == g.targets[0] + 1
                       for g in c.gates if g.kind is not GateKind.TOFFOLI)
            assert circuit_permutation(c) == gate_permutation(Gate.toffoli(i, j, k), width)

    def test_errors(self):
        with pytest.raises(LinesNotDistinct):
            decompose_nonadjacent_toffoli(1, 1, 3, 3)
        with pytest.raises(LineOutOfRange):
            decompose_nonadjacent_toffoli(1, 2, 5, 4)


class TestSwapToCnots:
    def test_two_lines(self):
        c = swap_to_cnots(1, 2)
        assert [g.kind for g in c.gates] == [GateKind.CNOT] * 3
        assert circuit_permutation(c).to_image_list() == [1, 3, 2, 4]

    def test_double_swap(self):
        c = swap_to_cnots(1, 2, 4).then(swap_to_cnots(3, 4, 4))
        assert len(c) == 6
        assert circuit_permutation(c).to_image_list() == [1, 3, 2, 4, 9, 11, 10, 12, 5, 7, 6, 8, 13, 15, 14, 16]

    def test_equal_lines(self):
        with pytest.raises(LinesNotDistinct):
            swap_to_cnots(2, 2)

    @pytest.mark.parametrize("a,b", [(1, 3), (4, 2), (2, 3)])
    def test_matches_swap_gate(self, a, b):
        assert circuit_permutation(swap_to_cnots(a, b, 4)) == gate_permutation(Gate.swap(a, b), 4)


class TestLowering:
    def test_no_controls(self):
        out = lower_mct_to_cnts(Circuit(3, (Gate.mct((), 2),)))
        assert out.circuit.gates == (Gate.not_(2),) and out.unlowered == ()

    def test_two_controls(self):
        out = lower_mct_to_cnts(Circuit(3, (Gate.mct((1, 2), 3),)))
        assert out.circuit.gates == (Gate.toffoli(1, 2, 3),)

    def test_three_controls_flagged(self):
        g = Gate.mct((1, 2, 3), 4)
        out = lower_mct_to_cnts(Circuit(4, (g, Gate.mct((4,), 1))))
        assert out.circuit.gates == (g, Gate.cnot(4, 1))
        assert out.unlowered == (g,)

    def test_preserves_function(self):
        c = Circuit(4, (Gate.mct((), 1), Gate.mct((2,), 3), Gate.mct((1, 4), 2), Gate.mct((1, 2, 4), 3)))
        assert circuit_permutation(lower_mct_to_cnts(c).circuit) == circuit_permutation(c)
