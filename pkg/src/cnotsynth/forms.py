"""Truth tables and two-level forms: SOP, disjoint ESOP and PPRM.

Variables are positional: variable 0 is line 1, the most significant bit of
an input index.  A :class:`Cube` is a string over ``0``/``1``/``-`` with one
character per variable; a PPRM monomial is a frozenset of variable positions
(the empty set is the constant-1 term).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import LengthMismatch, WidthTooLarge
from .perm import PermutationMap

Pprm = frozenset  # frozenset[frozenset[int]]

EXACT_COVER_MAX_VARS = 4
QKMAP_MAX_WIDTH = 6


@dataclass(frozen=True)
class TruthTable:
    inputs: int
    outputs: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.columns) != self.outputs:
            raise LengthMismatch(f"{len(self.columns)} columns for {self.outputs} outputs")
        for col in self.columns:
            if len(col) != 1 << self.inputs:
                raise LengthMismatch(f"column length {len(col)} != 2^{self.inputs}")

    def row(self, index: int) -> tuple[int, ...]:
        return tuple(col[index] for col in self.columns)

    def is_bijective(self) -> bool:
        words = {self.row(i) for i in range(1 << self.inputs)}
        return self.inputs == self.outputs and len(words) == 1 << self.inputs


@dataclass(frozen=True, order=True)
class Cube:
    pattern: str

    def __post_init__(self) -> None:
        if set(self.pattern) - set("01-"):
            raise ValueError(f"bad cube pattern {self.pattern!r}")

    @property
    def nvars(self) -> int:
        return len(self.pattern)

    @property
    def literal_count(self) -> int:
        return sum(ch != "-" for ch in self.pattern)

    def contains(self, index: int) -> bool:
        n = len(self.pattern)
        for k, ch in enumerate(self.pattern):
            if ch != "-" and int(ch) != (index >> (n - 1 - k)) & 1:
                return False
        return True

    def minterms(self) -> list[int]:
        return [i for i in range(1 << self.nvars) if self.contains(i)]

    def intersects(self, other: Cube) -> bool:
        return all(a == "-" or b == "-" or a == b for a, b in zip(self.pattern, other.pattern))

    def to_text(self, names: Sequence[str] | None = None) -> str:
        names = names or variable_names(self.nvars)
        parts = [names[k] + ("'" if ch == "0" else "") for k, ch in enumerate(self.pattern) if ch != "-"]
        return "".join(parts) if parts else "1"

    @classmethod
    def minterm(cls, index: int, n: int) -> Cube:
        return cls(format(index, f"0{n}b") if n else "")


def variable_names(n: int) -> list[str]:
    return [f"v{k}" for k in range(1, n + 1)]


def cover_to_text(cover: Iterable[Cube], names: Sequence[str] | None = None, op: str = " + ") -> str:
    terms = [c.to_text(names) for c in cover]
    return op.join(terms) if terms else "0"


def eval_sop(cover: Iterable[Cube], index: int) -> int:
    return int(any(c.contains(index) for c in cover))


def eval_esop(cover: Iterable[Cube], index: int) -> int:
    return sum(c.contains(index) for c in cover) & 1


def sop_column(cover: Sequence[Cube], n: int) -> tuple[int, ...]:
    return tuple(eval_sop(cover, i) for i in range(1 << n))


def esop_column(cover: Sequence[Cube], n: int) -> tuple[int, ...]:
    return tuple(eval_esop(cover, i) for i in range(1 << n))


def extract_truth_table(p: PermutationMap) -> TruthTable:
    n = p.width
    columns = tuple(tuple((y >> (n - 1 - o)) & 1 for y in p.image) for o in range(n))
    return TruthTable(n, n, columns)


def _check_column(column: Sequence[int], n: int) -> None:
    if len(column) != 1 << n:
        raise LengthMismatch(f"column has {len(column)} entries, expected 2^{n} = {1 << n}")


# --- Quine-McCluskey --------------------------------------------------------

def prime_implicants(on_set: Iterable[int], n: int) -> list[Cube]:
    """All prime implicants of the ON-set, sorted for deterministic output."""
    level = {Cube.minterm(m, n).pattern for m in on_set}
    primes: set[str] = set()
    while level:
        merged: set[str] = set()
        used: set[str] = set()
        by_ones: dict[tuple[str, int], list[str]] = {}
        for pat in level:
            key = ("".join("-" if ch == "-" else "x" for ch in pat), pat.count("1"))
            by_ones.setdefault(key, []).append(pat)
        for (dashes, ones), group in by_ones.items():
            partners = by_ones.get((dashes, ones + 1), ())
            for a in group:
                for b in partners:
                    diff = [k for k in range(n) if a[k] != b[k]]
                    if len(diff) == 1:
                        k = diff[0]
                        merged.add(a[:k] + "-" + a[k + 1:])
                        used.add(a)
                        used.add(b)
        primes |= level - used
        level = merged
    return sorted(Cube(p) for p in primes)


def _cube_cost(c: Cube) -> tuple[int, str]:
    return (c.literal_count, c.pattern)


def _exact_cover(primes: list[Cube], targets: set[int]) -> list[Cube]:
    """Minimum-cardinality cover, ties broken by total literal count."""
    covers = {p: set(p.minterms()) & targets for p in primes}
    best: list[list[Cube] | None] = [None]
    best_cost = [(len(primes) + 1, 0)]

    def cost(sel: list[Cube]) -> tuple[int, int]:
        return (len(sel), sum(c.literal_count for c in sel))

    def search(uncovered: set[int], chosen: list[Cube]) -> None:
        if len(chosen) > best_cost[0][0]:
            return
        if not uncovered:
            c = cost(chosen)
            if c < best_cost[0]:
                best_cost[0] = c
                best[0] = list(chosen)
            return
        if len(chosen) + 1 > best_cost[0][0]:
            return
        pivot = min(uncovered, key=lambda m: (sum(m in covers[p] for p in primes), m))
        for p in sorted((p for p in primes if pivot in covers[p]), key=_cube_cost):
            chosen.append(p)
            search(uncovered - covers[p], chosen)
            chosen.pop()

    search(set(targets), [])
    return best[0] or []


def _greedy_cover(primes: list[Cube], targets: set[int]) -> list[Cube]:
    covers = {p: set(p.minterms()) & targets for p in primes}
    chosen: list[Cube] = []
    uncovered = set(targets)
    # essential primes first
    for m in sorted(targets):
        owners = [p for p in primes if m in covers[p]]
        if len(owners) == 1 and owners[0] not in chosen:
            chosen.append(owners[0])
    for p in chosen:
        uncovered -= covers[p]
    while uncovered:
        p = max(primes, key=lambda q: (len(covers[q] & uncovered), -q.literal_count, q.pattern))
        chosen.append(p)
        uncovered -= covers[p]
    # drop cubes made redundant by later picks
    for p in list(chosen):
        rest = set().union(*(covers[q] for q in chosen if q != p)) if len(chosen) > 1 else set()
        if covers[p] <= rest:
            chosen.remove(p)
    return chosen


def minimize_sop(column: Sequence[int], n: int) -> list[Cube]:
    """Prime, irredundant SOP cover of a fully specified single-output function.

    Exact (fewest cubes, then fewest literals) for ``n <= 4``; greedy above.
    """
    _check_column(column, n)
    on_set = [i for i, v in enumerate(column) if v]
    if not on_set:
        return []
    if len(on_set) == 1 << n:
        return [Cube("-" * n)]
    primes = prime_implicants(on_set, n)
    if n <= EXACT_COVER_MAX_VARS:
        cover = _exact_cover(primes, set(on_set))
    else:
        cover = _greedy_cover(primes, set(on_set))
    return sorted(cover, key=lambda c: c.pattern, reverse=True)


# --- ESOP / PPRM ------------------------------------------------------------

def _sharp(a: Cube, b: Cube) -> list[Cube]:
    """Disjoint cubes covering ``a`` minus ``b``."""
    if not a.intersects(b):
        return [a]
    out = []
    cur = list(a.pattern)
    for k, (x, y) in enumerate(zip(a.pattern, b.pattern)):
        if x == "-" and y != "-":
            piece = cur.copy()
            piece[k] = "1" if y == "0" else "0"
            out.append(Cube("".join(piece)))
            cur[k] = y
    return out


def sop_to_esop(cover: Sequence[Cube]) -> list[Cube]:
    """Turn an OR cover into an XOR cover by making its cubes pairwise disjoint."""
    result: list[Cube] = []
    for cube in cover:
        pieces = [cube]
        for d in result:
            pieces = [frag for piece in pieces for frag in _sharp(piece, d)]
        result.extend(pieces)
    return result


def _xor_into(acc: set, terms: Iterable) -> None:
    for t in terms:
        if t in acc:
            acc.remove(t)
        else:
            acc.add(t)


def cube_to_pprm(cube: Cube) -> Pprm:
    """Expand one product term, using ``x' = x XOR 1``."""
    poly = {frozenset()}
    for k, ch in enumerate(cube.pattern):
        if ch == "-":
            continue
        factor = [frozenset({k})] if ch == "1" else [frozenset(), frozenset({k})]
        nxt: set = set()
        for m in poly:
            _xor_into(nxt, (m | f for f in factor))
        poly = nxt
    return frozenset(poly)


def esop_to_pprm(cover: Iterable[Cube], n: int | None = None) -> Pprm:
    acc: set = set()
    for cube in cover:
        if n is not None and cube.nvars != n:
            raise LengthMismatch(f"cube {cube.pattern!r} has {cube.nvars} variables, expected {n}")
        _xor_into(acc, cube_to_pprm(cube))
    return frozenset(acc)


def pprm_from_bits(column: Sequence[int], n: int) -> Pprm:
    """Reed-Muller coefficients via the binary Moebius transform."""
    _check_column(column, n)
    coeff = [int(v) & 1 for v in column]
    step = 1
    while step < len(coeff):
        for i in range(len(coeff)):
            if i & step:
                coeff[i] ^= coeff[i ^ step]
        step <<= 1
    return frozenset(
        frozenset(k for k in range(n) if (mask >> (n - 1 - k)) & 1)
        for mask, c in enumerate(coeff)
        if c
    )


def eval_pprm(poly: Iterable[frozenset], index: int, n: int) -> int:
    value = 0
    for mono in poly:
        if all((index >> (n - 1 - k)) & 1 for k in mono):
            value ^= 1
    return value


def pprm_column(poly: Iterable[frozenset], n: int) -> tuple[int, ...]:
    poly = list(poly)
    return tuple(eval_pprm(poly, i, n) for i in range(1 << n))


def sorted_monomials(poly: Iterable[frozenset]) -> list[tuple[int, ...]]:
    """Canonical listing: by degree, then lexicographically by variable position."""
    return sorted((tuple(sorted(m)) for m in poly), key=lambda t: (len(t), t))


def pprm_to_text(poly: Iterable[frozenset], names: Sequence[str] | None = None, n: int | None = None) -> str:
    mons = sorted_monomials(poly)
    if not mons:
        return "0"
    if names is None:
        n = n if n is not None else (max((max(m) for m in mons if m), default=-1) + 1)
        names = variable_names(n)
    return " ^ ".join("".join(names[k] for k in m) if m else "1" for m in mons)


def pipeline_pprm(column: Sequence[int], n: int) -> Pprm:
    """SOP -> ESOP -> PPRM for one output column."""
    return esop_to_pprm(sop_to_esop(minimize_sop(column, n)), n)


# --- QKmap ------------------------------------------------------------------

def gray_codes(bits: int) -> list[int]:
    return [g ^ (g >> 1) for g in range(1 << bits)]


@dataclass(frozen=True)
class QkMapView:
    row_bits: int
    col_bits: int
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    cells: tuple[tuple[str, ...], ...]

    def to_text(self) -> str:
        head_w = max(self.row_bits, 1)
        cell_w = max([self.row_bits + self.col_bits, self.col_bits, 1])
        lines = [" " * head_w + " | " + " ".join(lbl.rjust(cell_w) for lbl in self.col_labels)]
        lines.append("-" * len(lines[0]))
        for lbl, row in zip(self.row_labels, self.cells):
            lines.append(lbl.rjust(head_w) + " | " + " ".join(c.rjust(cell_w) for c in row))
        return "\n".join(lines)


def render_qkmap(p: PermutationMap) -> QkMapView:
    """Karnaugh-style grid of output registers, Gray-coded on both axes.

    Rows are labelled by the first ``ceil(n/2)`` lines and columns by the rest.
    """
    n = p.width
    if n > QKMAP_MAX_WIDTH:
        raise WidthTooLarge(f"QKmap limited to {QKMAP_MAX_WIDTH} lines, got {n}")
    rb = (n + 1) // 2
    cb = n - rb
    rows = gray_codes(rb)
    cols = gray_codes(cb)
    fmt = lambda v, w: format(v, f"0{w}b") if w else ""
    cells = tuple(
        tuple(fmt(p.image[(r << cb) | c], n) for c in cols) for r in rows
    )
    return QkMapView(rb, cb, tuple(fmt(r, rb) for r in rows), tuple(fmt(c, cb) for c in cols), cells)


def parse_sop_text(text: str, names: Sequence[str]) -> list[Cube]:
    """Parse a cover like ``a'b' + ab`` over the given single-letter-or-longer names."""
    index = {name: k for k, name in enumerate(names)}
    by_len = sorted(names, key=len, reverse=True)
    cubes = []
    for term in text.replace(" ", "").split("+"):
        pat = ["-"] * len(names)
        pos = 0
        while pos < len(term):
            for name in by_len:
                if term.startswith(name, pos):
                    break
            else:
                raise ValueError(f"unknown variable at {term[pos:]!r}")
            pos += len(name)
            neg = pos < len(term) and term[pos] == "'"
            if neg:
                pos += 1
            pat[index[name]] = "0" if neg else "1"
        cubes.append(Cube("".join(pat)))
    return cubes


def cover_equals_column(cover: Sequence[Cube], column: Sequence[int], n: int) -> bool:
    return sop_column(cover, n) == tuple(column)

