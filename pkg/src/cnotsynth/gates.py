"""CNTS gates (identity, NOT, CNOT, Toffoli, SWAP) plus multi-control Toffoli.

Lines are numbered from 1; line 1 is the most significant bit of a basis index.
A :class:`Circuit` lists gates in execution order (first gate acts first).
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import LineOutOfRange, LinesNotDistinct, ValidationError, WidthMismatch
from .perm import PermutationMap, compose, identity


class GateKind(str, enum.Enum):
    IDENTITY = "identity"
    NOT = "not"
    CNOT = "cnot"
    TOFFOLI = "toffoli"
    SWAP = "swap"
    MCT = "mct"


_CONTROL_COUNT = {GateKind.IDENTITY: 0, GateKind.NOT: 0, GateKind.CNOT: 1, GateKind.TOFFOLI: 2}

CNTS_KINDS = frozenset({GateKind.IDENTITY, GateKind.NOT, GateKind.CNOT, GateKind.TOFFOLI, GateKind.SWAP})


@dataclass(frozen=True)
class Gate:
    """A single gate.

    ``targets`` holds one line for every kind except ``SWAP``, which holds its
    two exchanged lines (stored ascending).  ``controls`` are stored ascending.
    """

    kind: GateKind
    controls: tuple[int, ...]
    targets: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "controls", tuple(sorted(self.controls)))
        if self.kind is GateKind.SWAP:
            object.__setattr__(self, "targets", tuple(sorted(self.targets)))
            if len(self.targets) != 2 or self.controls:
                raise ValidationError("swap takes exactly two lines and no controls")
        elif len(self.targets) != 1:
            raise ValidationError(f"{self.kind.value} takes exactly one target")
        expected = _CONTROL_COUNT.get(self.kind)
        if expected is not None and len(self.controls) != expected:
            raise ValidationError(f"{self.kind.value} takes {expected} controls, got {len(self.controls)}")
        lines = self.lines
        if len(set(lines)) != len(lines):
            raise LinesNotDistinct(f"{self.kind.value} gate uses a line twice: {lines}")
        if any(line < 1 for line in lines):
            raise LineOutOfRange(f"line numbers start at 1: {lines}")

    @property
    def lines(self) -> tuple[int, ...]:
        return self.controls + self.targets

    @property
    def target(self) -> int:
        return self.targets[0]

    def fits(self, width: int) -> bool:
        return max(self.lines) <= width

    def __str__(self) -> str:
        if self.kind is GateKind.SWAP:
            return f"Swap({self.targets[0]},{self.targets[1]})"
        name = {
            GateKind.IDENTITY: "I",
            GateKind.NOT: "Not",
            GateKind.CNOT: "Cnot",
            GateKind.TOFFOLI: "Toffoli",
            GateKind.MCT: "Mct",
        }[self.kind]
        if not self.controls:
            return f"{name}({self.target})"
        return f"{name}({','.join(map(str, self.controls))};{self.target})"

    # constructors mirroring the usual notation

    @classmethod
    def identity(cls, line: int) -> Gate:
        return cls(GateKind.IDENTITY, (), (line,))

    @classmethod
    def not_(cls, target: int) -> Gate:
        return cls(GateKind.NOT, (), (target,))

    @classmethod
    def cnot(cls, control: int, target: int) -> Gate:
        return cls(GateKind.CNOT, (control,), (target,))

    @classmethod
    def toffoli(cls, c1: int, c2: int, target: int) -> Gate:
        return cls(GateKind.TOFFOLI, (c1, c2), (target,))

    @classmethod
    def swap(cls, a: int, b: int) -> Gate:
        return cls(GateKind.SWAP, (), (a, b))

    @classmethod
    def mct(cls, controls: Iterable[int], target: int) -> Gate:
        return cls(GateKind.MCT, tuple(controls), (target,))

    @classmethod
    def controlled_not(cls, controls: Iterable[int], target: int) -> Gate:
        """The narrowest CNTS kind for ``controls``, falling back to ``MCT``."""
        controls = tuple(controls)
        if len(controls) == 0:
            return cls.not_(target)
        if len(controls) == 1:
            return cls.cnot(controls[0], target)
        if len(controls) == 2:
            return cls.toffoli(controls[0], controls[1], target)
        return cls.mct(controls, target)


@dataclass(frozen=True)
class Circuit:
    width: int
    gates: tuple[Gate, ...] = ()
    names: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        if not self.names:
            object.__setattr__(self, "names", default_names(self.width))
        else:
            object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != self.width:
            raise ValidationError(f"{len(self.names)} line names for width {self.width}")
        for g in self.gates:
            if not g.fits(self.width):
                raise LineOutOfRange(f"{g} does not fit in {self.width} lines")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def then(self, other: Circuit) -> Circuit:
        if other.width != self.width:
            raise WidthMismatch(f"cannot concatenate widths {self.width} and {other.width}")
        return Circuit(self.width, self.gates + other.gates, self.names)


def default_names(width: int) -> tuple[str, ...]:
    return tuple(f"v{k}" for k in range(1, width + 1))


def _bit(line: int, width: int) -> int:
    return 1 << (width - line)


def gate_permutation(gate: Gate, width: int) -> PermutationMap:
    """Permutation of ``gate`` placed on a ``width``-line register."""
    if not gate.fits(width):
        raise LineOutOfRange(f"{gate} does not fit in {width} lines")
    size = 1 << width
    if gate.kind is GateKind.IDENTITY:
        return identity(width)
    if gate.kind is GateKind.SWAP:
        ba, bb = (_bit(t, width) for t in gate.targets)
        image = []
        for x in range(size):
            if bool(x & ba) != bool(x & bb):
                x ^= ba | bb
            image.append(x)
        return PermutationMap(width, tuple(image))
    mask = 0
    for c in gate.controls:
        mask |= _bit(c, width)
    flip = _bit(gate.target, width)
    return PermutationMap(width, tuple(x ^ flip if x & mask == mask else x for x in range(size)))


def circuit_permutation(circuit: Circuit) -> PermutationMap:
    result = identity(circuit.width)
    for g in circuit.gates:
        result = compose(gate_permutation(g, circuit.width), result)
    return result


def _check_lines(lines: Sequence[int], width: int) -> None:
    if len(set(lines)) != len(lines):
        raise LinesNotDistinct(f"lines must be distinct: {tuple(lines)}")
    for line in lines:
        if not 1 <= line <= width:
            raise LineOutOfRange(f"line {line} outside 1..{width}")


def decompose_nonadjacent_toffoli(i: int, j: int, k: int, width: int) -> Circuit:
    """Rewrite Toffoli(i,j;k) as adjacent swaps around one adjacent-line Toffoli.

    The lowest of the three lines is walked up to sit just above the middle
    one, the highest is walked down to sit just below it, the Toffoli acts on
    three neighbouring lines, and the swaps are undone in mirror order.  With
    ``i < j < k`` this is exactly the textbook ladder; other orderings are
    handled by the same construction since the controls are interchangeable.
    """
    _check_lines((i, j, k), width)
    low, mid, high = sorted((i, j, k))
    up = [Gate.swap(t, t + 1) for t in range(low, mid - 1)]
    down = [Gate.swap(t - 1, t) for t in range(high, mid + 1, -1)]
    # where each original line sits after migration
    placed = {low: mid - 1, mid: mid, high: mid + 1}
    core = Gate.toffoli(placed[i], placed[j], placed[k])
    before = up + down
    return Circuit(width, tuple(before + [core] + before[::-1]))


def swap_to_cnots(a: int, b: int, width: int | None = None) -> Circuit:
    if a == b:
        raise LinesNotDistinct(f"swap lines must differ: {a}")
    width = width if width is not None else max(a, b)
    _check_lines((a, b), width)
    return Circuit(width, (Gate.cnot(a, b), Gate.cnot(b, a), Gate.cnot(a, b)))


@dataclass(frozen=True)
class LoweringResult:
    circuit: Circuit
    unlowered: tuple[Gate, ...]


def lower_mct_to_cnts(circuit: Circuit) -> LoweringResult:
    """Rewrite MCT gates with at most two controls as NOT/CNOT/Toffoli.

    Gates with three or more controls are kept and listed in ``unlowered``;
    no ancilla lines are introduced.
    """
    out = []
    unlowered = []
    for g in circuit.gates:
        if g.kind is GateKind.MCT:
            if len(g.controls) <= 2:
                g = Gate.controlled_not(g.controls, g.target)
            else:
                unlowered.append(g)
        out.append(g)
    return LoweringResult(Circuit(circuit.width, tuple(out), circuit.names), tuple(unlowered))
