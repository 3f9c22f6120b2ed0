"""Well-formed (0/1, one-per-row-and-column) matrices stored as permutations.

A basis register ``|q1 q2 ... qn>`` has index ``sum(q_i * 2**(n - i))``: line 1
is the most significant bit.  Indices are 0-based here; the 1-based lists used
in text formats are converted by :func:`from_image_list` / :meth:`to_image_list`.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import (
    DuplicateImage,
    IndexOutOfRange,
    LengthNotPowerOfTwo,
    NonBinaryEntry,
    RowOrColumnWeightNotOne,
    WidthMismatch,
    WidthOverflow,
)

DEFAULT_MAX_WIDTH = 20


class Parity(str, enum.Enum):
    EVEN = "even"
    ODD = "odd"

    def __xor__(self, other: "Parity") -> "Parity":
        return Parity.ODD if (self is Parity.ODD) != (other is Parity.ODD) else Parity.EVEN


def _width_of(size: int) -> int:
    if size < 1 or size & (size - 1):
        raise LengthNotPowerOfTwo(f"length {size} is not a power of two")
    return size.bit_length() - 1


@dataclass(frozen=True)
class PermutationMap:
    """Bijection on ``2**width`` basis indices; ``image[i]`` is the output for input ``i``."""

    width: int
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.image, tuple):
            object.__setattr__(self, "image", tuple(self.image))
        if self.width < 0:
            raise ValueError("width must be non-negative")
        size = 1 << self.width
        if len(self.image) != size:
            raise LengthNotPowerOfTwo(
                f"expected {size} entries for width {self.width}, got {len(self.image)}"
            )
        seen = bytearray(size)
        for pos, value in enumerate(self.image):
            if not 0 <= value < size:
                raise IndexOutOfRange(f"image[{pos}] = {value} outside [0, {size})")
            if seen[value]:
                raise DuplicateImage(f"index {value} appears more than once (position {pos})")
            seen[value] = 1

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, index: int) -> int:
        return self.image[index]

    def __len__(self) -> int:
        return len(self.image)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.image))

    def to_image_list(self) -> list[int]:
        """1-based image list, the inverse of :func:`from_image_list`."""
        return [v + 1 for v in self.image]

    def to_dense(self) -> list[list[int]]:
        """Dense matrix acting on column vectors: entry ``[image[c]][c]`` is 1."""
        n = self.size
        rows = [[0] * n for _ in range(n)]
        for col, row in enumerate(self.image):
            rows[row][col] = 1
        return rows

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.to_image_list()) + ")"


@dataclass(frozen=True)
class PureState:
    width: int
    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index < (1 << self.width):
            raise IndexOutOfRange(f"state index {self.index} outside width {self.width}")

    def bits(self) -> tuple[int, ...]:
        """Register value, line 1 first."""
        return tuple((self.index >> (self.width - 1 - k)) & 1 for k in range(self.width))


def identity(width: int) -> PermutationMap:
    return PermutationMap(width, tuple(range(1 << width)))


def from_image_list(values: Sequence[int]) -> PermutationMap:
    """Build a permutation from a 1-based list read as input ``i`` -> output ``values[i]``."""
    values = list(values)
    width = _width_of(len(values))
    size = len(values)
    image = []
    for pos, v in enumerate(values, start=1):
        if not 1 <= v <= size:
            raise IndexOutOfRange(f"entry {pos} = {v} outside [1, {size}]")
        image.append(v - 1)
    return PermutationMap(width, tuple(image))


def validate_dense(matrix: Sequence[Sequence[int]]) -> PermutationMap:
    """Check both well-formedness conditions and return the permutation.

    Condition 1 (entries are 0 or 1) is checked over the whole matrix before
    condition 2 (exactly one 1 per row and per column).
    """
    rows = [list(r) for r in matrix]
    dim = len(rows)
    width = _width_of(dim)
    for r, row in enumerate(rows):
        if len(row) != dim:
            raise LengthNotPowerOfTwo(f"row {r + 1} has {len(row)} entries, expected {dim}")
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if v not in (0, 1):
                raise NonBinaryEntry(
                    f"entry ({r + 1},{c + 1}) = {v} is not 0 or 1", row=r + 1, column=c + 1
                )
    image = [-1] * dim
    for r, row in enumerate(rows):
        if sum(row) != 1:
            raise RowOrColumnWeightNotOne(
                f"row {r + 1} has {sum(row)} ones", axis="row", index=r + 1
            )
    for c in range(dim):
        hits = [r for r in range(dim) if rows[r][c]]
        if len(hits) != 1:
            raise RowOrColumnWeightNotOne(
                f"column {c + 1} has {len(hits)} ones", axis="column", index=c + 1
            )
        image[c] = hits[0]
    return PermutationMap(width, tuple(image))


def tensor(a: PermutationMap, b: PermutationMap, max_width: int = DEFAULT_MAX_WIDTH) -> PermutationMap:
    """Permutation of ``A (x) B``; ``a`` acts on the high-order lines."""
    width = a.width + b.width
    if width > max_width:
        raise WidthOverflow(f"tensor width {width} exceeds cap {max_width}")
    shift = b.width
    image = tuple((pa << shift) | pb for pa in a.image for pb in b.image)
    return PermutationMap(width, image)


def tensor_all(factors: Iterable[PermutationMap], max_width: int = DEFAULT_MAX_WIDTH) -> PermutationMap:
    result = identity(0)
    for f in factors:
        result = tensor(result, f, max_width)
    return result


def compose(a: PermutationMap, b: PermutationMap) -> PermutationMap:
    """Matrix product ``A @ B``: apply ``b`` first, then ``a``."""
    if a.width != b.width:
        raise WidthMismatch(f"cannot compose widths {a.width} and {b.width}")
    ai = a.image
    return PermutationMap(a.width, tuple(ai[x] for x in b.image))


def apply(p: PermutationMap, state: PureState) -> PureState:
    if p.width != state.width:
        raise WidthMismatch(f"permutation width {p.width} vs state width {state.width}")
    return PureState(p.width, p.image[state.index])


def inverse(p: PermutationMap) -> PermutationMap:
    inv = [0] * p.size
    for i, v in enumerate(p.image):
        inv[v] = i
    return PermutationMap(p.width, tuple(inv))


def cycles(p: PermutationMap) -> list[tuple[int, ...]]:
    """Cycle decomposition including fixed points, each cycle starting at its least element."""
    seen = bytearray(p.size)
    out = []
    for start in range(p.size):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = 1
            cyc.append(x)
            x = p.image[x]
        out.append(tuple(cyc))
    return out


def parity(p: PermutationMap) -> Parity:
    transpositions = p.size - len(cycles(p))
    return Parity.ODD if transpositions % 2 else Parity.EVEN
