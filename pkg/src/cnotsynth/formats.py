"""Text formats: permutation files, dense matrix files, circuit files and PLA.

All formats are ASCII and newline-delimited; lines starting with ``#`` are
comments.  Indices in files are 1-based.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DuplicateImage, IndexOutOfRange, LengthNotPowerOfTwo, ParseError, ValidationError
from .forms import Cube
from .gates import Circuit, Gate, GateKind
from .perm import PermutationMap, from_image_list, validate_dense


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((lineno, line))
    return out


# --- permutations -------------------------------------------------------------

def parse_perm(text: str) -> PermutationMap:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty permutation file")
    lineno, header = lines[0]
    m = re.fullmatch(r"perm\s+(\d+)", header)
    if not m:
        raise ParseError("expected header 'perm <n>'", lineno, 1)
    width = int(m.group(1))
    if len(lines) != 2:
        raise ParseError("expected exactly one line of images after the header",
                         lines[-1][0] if len(lines) > 2 else lineno)
    lineno = lines[1][0]
    raw_line = text.splitlines()[lineno - 1]
    values = []
    columns = []
    for mt in re.finditer(r"[^,\s]+", raw_line):
        tok = mt.group(0)
        if not tok.isdigit():
            raise ParseError(f"not a positive integer: {tok!r}", lineno, mt.start() + 1)
        values.append(int(tok))
        columns.append(mt.start() + 1)
    if len(values) != 1 << width:
        raise ParseError(f"header says width {width} ({1 << width} entries), found {len(values)}", lineno)
    seen: dict[int, int] = {}
    for v, col in zip(values, columns):
        if not 1 <= v <= len(values):
            raise IndexOutOfRange(f"line {lineno}, column {col}: image {v} outside [1, {len(values)}]")
        if v in seen:
            err = DuplicateImage(
                f"line {lineno}, column {col}: image {v} already used at column {seen[v]}"
            )
            err.line, err.column = lineno, col
            raise err
        seen[v] = col
    return from_image_list(values)


def emit_perm(p: PermutationMap) -> str:
    return f"perm {p.width}\n" + ",".join(str(v) for v in p.to_image_list()) + "\n"


def parse_matrix(text: str) -> PermutationMap:
    rows = []
    for lineno, line in _content_lines(text):
        row = []
        for mt in re.finditer(r"\S+", line):
            tok = mt.group(0)
            if not tok.isdigit():
                raise ParseError(f"not a natural number: {tok!r}", lineno, mt.start() + 1)
            row.append(int(tok))
        rows.append(row)
    if not rows:
        raise ParseError("empty matrix file")
    dim = len(rows)
    for r, row in enumerate(rows):
        if len(row) != dim:
            raise ParseError(f"row {r + 1} has {len(row)} entries, matrix is {dim} rows tall")
    if dim & (dim - 1):
        raise LengthNotPowerOfTwo(f"matrix dimension {dim} is not a power of two")
    return validate_dense(rows)


def emit_matrix(p: PermutationMap) -> str:
    return "".join(" ".join(map(str, row)) + "\n" for row in p.to_dense())


def parse_permutation_source(text: str) -> PermutationMap:
    """Accept either a permutation file or a matrix file."""
    lines = _content_lines(text)
    if lines and lines[0][1].startswith("perm"):
        return parse_perm(text)
    return parse_matrix(text)


# --- circuits ---------------------------------------------------------------

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def emit_circuit(circuit: Circuit) -> str:
    names = circuit.names
    out = [".v " + ",".join(names)]
    for g in circuit.gates:
        if g.kind is GateKind.IDENTITY:
            raise ValidationError("identity gates have no circuit-file mnemonic")
        if g.kind is GateKind.SWAP:
            out.append("s2 " + ",".join(names[t - 1] for t in g.targets))
        else:
            lines = g.controls + g.targets
            out.append(f"t{len(lines)} " + ",".join(names[t - 1] for t in lines))
    return "\n".join(out) + "\n"


def parse_circuit(text: str) -> Circuit:
    names: list[str] | None = None
    gates: list[Gate] = []
    for lineno, line in _content_lines(text):
        if line.startswith(".v"):
            if names is not None:
                raise ParseError("duplicate .v line", lineno, 1)
            names = [s.strip() for s in line[2:].split(",")]
            for nm in names:
                if not _NAME_RE.fullmatch(nm):
                    raise ParseError(f"bad line name {nm!r}", lineno)
            if len(set(names)) != len(names):
                raise ParseError("line names must be unique", lineno)
            continue
        if names is None:
            raise ParseError("gate before .v declaration", lineno, 1)
        m = re.fullmatch(r"([ts])(\d+)\s+(.*)", line)
        if not m:
            raise ParseError(f"unknown gate line {line!r}", lineno, 1)
        kind, arity, args = m.group(1), int(m.group(2)), [a.strip() for a in m.group(3).split(",")]
        if len(args) != arity:
            raise ParseError(f"{kind}{arity} expects {arity} lines, got {len(args)}", lineno)
        lines = []
        for a in args:
            if a not in names:
                raise ParseError(f"undeclared line name {a!r}", lineno)
            lines.append(names.index(a) + 1)
        if len(set(lines)) != len(lines):
            raise ParseError(f"repeated line in {line!r}", lineno)
        if kind == "s":
            if arity != 2:
                raise ParseError("only s2 swaps are supported", lineno, 1)
            gates.append(Gate.swap(*lines))
        else:
            if arity < 1:
                raise ParseError("t0 is not a gate", lineno, 1)
            gates.append(Gate.controlled_not(lines[:-1], lines[-1]))
    if names is None:
        raise ParseError("missing .v declaration")
    return Circuit(len(names), tuple(gates), tuple(names))


# --- PLA --------------------------------------------------------------------

PLA_TYPES = ("fr", "esop", "pprm")


@dataclass(frozen=True)
class PlaFile:
    """Multi-output cube list; ``covers[o]`` is the cube list of output ``o``.

    ``pla_type`` is ``fr`` for OR covers, ``esop`` for XOR covers, and
    ``pprm`` for positive Reed-Muller monomials, where an input column of
    ``1`` means the variable occurs in the monomial and ``0`` that it does not.
    """

    inputs: int
    outputs: int
    pla_type: str
    covers: tuple[tuple[Cube, ...], ...]

    def __post_init__(self) -> None:
        # covers are sets; keep one canonical order so emit/parse round-trips
        object.__setattr__(self, "covers", tuple(tuple(sorted(c, key=_cube_order)) for c in self.covers))


_ORDER = str.maketrans("10-", "012")


def _cube_order(c: Cube) -> tuple[int, str]:
    return (c.literal_count, c.pattern.translate(_ORDER))


def _pla_rows(covers: Sequence[Sequence[Cube]]) -> list[tuple[Cube, str]]:
    order: list[Cube] = []
    members: dict[Cube, set[int]] = {}
    for o, cover in enumerate(covers):
        for c in cover:
            if c not in members:
                members[c] = set()
                order.append(c)
            members[c].add(o)
    m = len(covers)
    return [(c, "".join("1" if o in members[c] else "0" for o in range(m))) for c in order]


def emit_pla(pla: PlaFile, comments: Sequence[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out += [f".i {pla.inputs}", f".o {pla.outputs}", f".type {pla.pla_type}"]
    for cube, outs in _pla_rows(pla.covers):
        pattern = cube.pattern if pla.inputs else ""
        if pla.pla_type == "pprm":
            pattern = pattern.replace("-", "0")
        out.append(f"{pattern} {outs}" if pattern else outs)
    out.append(".e")
    return "\n".join(out) + "\n"


def pprm_to_cubes(poly, n: int) -> tuple[Cube, ...]:
    """Monomials as positive cubes, ordered by degree then variable position."""
    mons = sorted((tuple(sorted(m)) for m in poly), key=lambda t: (len(t), t))
    return tuple(Cube("".join("1" if k in m else "-" for k in range(n))) for m in mons)


def cubes_to_pprm(cubes: Sequence[Cube]) -> frozenset:
    return frozenset(frozenset(k for k, ch in enumerate(c.pattern) if ch == "1") for c in cubes)


def parse_pla(text: str) -> PlaFile:
    ni = no = None
    pla_type = "fr"
    rows: list[tuple[str, str, int]] = []
    ended = False
    for lineno, line in _content_lines(text):
        if ended:
            raise ParseError("content after .e", lineno, 1)
        if line.startswith("."):
            key, _, val = line.partition(" ")
            val = val.strip()
            if key == ".i":
                ni = int(val)
            elif key == ".o":
                no = int(val)
            elif key == ".type":
                if val not in PLA_TYPES:
                    raise ParseError(f"unsupported .type {val!r}", lineno)
                pla_type = val
            elif key == ".e":
                ended = True
            else:
                raise ParseError(f"unknown directive {key}", lineno, 1)
            continue
        parts = line.split()
        if ni is None or no is None:
            raise ParseError("cube before .i/.o", lineno, 1)
        if ni == 0 and len(parts) == 1:
            parts = ["", parts[0]]
        if len(parts) != 2:
            raise ParseError("cube line needs an input part and an output part", lineno, 1)
        rows.append((parts[0], parts[1], lineno))
    if ni is None or no is None:
        raise ParseError("missing .i or .o")
    covers: list[list[Cube]] = [[] for _ in range(no)]
    for inp, outp, lineno in rows:
        if len(inp) != ni or set(inp) - set("01-"):
            raise ParseError(f"input part {inp!r} does not match .i {ni}", lineno, 1)
        if len(outp) != no or set(outp) - set("01"):
            raise ParseError(f"output part {outp!r} does not match .o {no}", lineno, len(inp) + 2)
        if pla_type == "pprm":
            if "-" in inp:
                raise ParseError("pprm rows use 0/1 occurrence flags only", lineno, 1)
            inp = inp.replace("0", "-")
        cube = Cube(inp)
        for o, bit in enumerate(outp):
            if bit == "1":
                if cube in covers[o]:
                    raise ParseError(f"duplicate cube {inp!r} for output {o + 1}", lineno)
                covers[o].append(cube)
    return PlaFile(ni, no, pla_type, tuple(tuple(c) for c in covers))
