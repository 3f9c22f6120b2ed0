"""Command-line front end: ``cnotsynth <command> FILE [options]``.

Exit codes: 0 success / equivalent, 1 usage error, 2 validation failure,
3 verification mismatch, 4 search exhausted.  Errors go to stderr as
``error: <category>: <message>``.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from . import forms
from .errors import DepthExhausted, NonBinaryEntry, RowOrColumnWeightNotOne, SynthError
from .formats import (
    PlaFile,
    emit_circuit,
    emit_perm,
    emit_pla,
    parse_circuit,
    parse_permutation_source,
    pprm_to_cubes,
)
from .gates import Circuit
from .perm import PureState, apply, compose, parity, tensor
from .synthesis import Backend, GateSet, SearchConfig, pprm_cost, synthesize, verify_circuit

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_MISMATCH = 3
EXIT_EXHAUSTED = 4

COMMANDS = (
    "check", "truthtable", "qkmap", "sop", "esop", "pprm",
    "synth", "simulate", "verify", "tensor", "compose", "parity",
)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _names(arg: str | None, width: int) -> list[str]:
    if not arg:
        return forms.variable_names(width)
    names = [s.strip() for s in arg.split(",")]
    if len(names) != width:
        raise UsageError(f"--names lists {len(names)} names for {width} lines")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cnotsynth",
        description="Permutation-matrix analysis and reversible circuit synthesis.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("files", nargs="+", help="input file(s); '-' reads stdin")
    parser.add_argument("--backend", choices=[b.value for b in Backend], default=Backend.TRANSFORM.value)
    parser.add_argument("--gates", choices=[g.value for g in GateSet], default=GateSet.MCT.value)
    parser.add_argument("--max-depth", type=int, default=7)
    parser.add_argument("--names", help="comma-separated variable names, line 1 first")
    parser.add_argument("--state", type=int, help="1-based basis index for simulate")
    return parser


_ARITY = {"verify": 2, "tensor": 2, "compose": 2}


def _forms_output(cmd: str, p, names: list[str]) -> str:
    n = p.width
    table = forms.extract_truth_table(p)
    sops = [forms.minimize_sop(col, n) for col in table.columns]
    if cmd == "sop":
        covers = sops
        comments = [f"out{o + 1} = {forms.cover_to_text(c, names)}" for o, c in enumerate(covers)]
        return emit_pla(PlaFile(n, n, "fr", tuple(map(tuple, covers))), comments)
    esops = [forms.sop_to_esop(c) for c in sops]
    if cmd == "esop":
        comments = [f"out{o + 1} = {forms.cover_to_text(c, names, ' ^ ')}" for o, c in enumerate(esops)]
        return emit_pla(PlaFile(n, n, "esop", tuple(map(tuple, esops))), comments)
    polys = [forms.esop_to_pprm(e, n) for e in esops]
    comments = [f"out{o + 1} = {forms.pprm_to_text(poly, names)}" for o, poly in enumerate(polys)]
    comments.append(f"pprm_cost = {pprm_cost(polys)}")
    return emit_pla(PlaFile(n, n, "pprm", tuple(pprm_to_cubes(poly, n) for poly in polys)), comments)


def _truthtable_text(p, names: list[str]) -> str:
    n = p.width
    head = " ".join(names) + " | " + " ".join(f"{nm}'" for nm in names)
    rows = [head]
    for i, y in enumerate(p.image):
        ins = " ".join(str((i >> (n - 1 - k)) & 1).rjust(len(names[k])) for k in range(n))
        outs = " ".join(str((y >> (n - 1 - k)) & 1).rjust(len(names[k]) + 1) for k in range(n))
        rows.append(f"{ins} | {outs}")
    return "\n".join(rows) + "\n"


def run(args: argparse.Namespace, out) -> int:
    cmd = args.command
    need = _ARITY.get(cmd, 1)
    if len(args.files) != need:
        raise UsageError(f"{cmd} takes {need} file argument(s), got {len(args.files)}")

    if cmd == "check":
        try:
            parse_permutation_source(_read(args.files[0]))
        except (NonBinaryEntry, RowOrColumnWeightNotOne) as exc:
            cond = 1 if isinstance(exc, NonBinaryEntry) else 2
            print(f"error: {exc.category}: condition {cond} violated: {exc}", file=sys.stderr)
            out.write(f"NOT WELL-FORMED: condition {cond} violated\n")
            return EXIT_VALIDATION
        out.write("WELL-FORMED\n")
        return EXIT_OK

    if cmd == "verify":
        circuit = parse_circuit(_read(args.files[0]))
        p = parse_permutation_source(_read(args.files[1]))
        ok = verify_circuit(circuit, p)
        out.write("EQUIVALENT\n" if ok else "MISMATCH\n")
        return EXIT_OK if ok else EXIT_MISMATCH

    if cmd in ("tensor", "compose"):
        a = parse_permutation_source(_read(args.files[0]))
        b = parse_permutation_source(_read(args.files[1]))
        out.write(emit_perm(tensor(a, b) if cmd == "tensor" else compose(a, b)))
        return EXIT_OK

    p = parse_permutation_source(_read(args.files[0]))
    names = _names(args.names, p.width)

    if cmd == "parity":
        out.write(parity(p).value + "\n")
    elif cmd == "simulate":
        if args.state is None:
            raise UsageError("simulate needs --state")
        if not 1 <= args.state <= p.size:
            raise UsageError(f"--state must be in 1..{p.size}")
        out.write(f"{apply(p, PureState(p.width, args.state - 1)).index + 1}\n")
    elif cmd == "truthtable":
        out.write(_truthtable_text(p, names))
    elif cmd == "qkmap":
        out.write(forms.render_qkmap(p).to_text() + "\n")
    elif cmd in ("sop", "esop", "pprm"):
        out.write(_forms_output(cmd, p, names))
    elif cmd == "synth":
        if args.max_depth < 1:
            raise UsageError("--max-depth must be at least 1")
        cfg = SearchConfig(max_depth=args.max_depth, gate_set=GateSet(args.gates))
        result = synthesize(p, args.backend, cfg)
        table = forms.extract_truth_table(p)
        cost = pprm_cost(forms.pprm_from_bits(col, p.width) for col in table.columns)
        circuit = Circuit(p.width, result.circuit.gates, tuple(names))
        out.write(emit_circuit(circuit))
        out.write(f"# backend = {result.backend.value}\n")
        out.write(f"# gate_count = {result.gate_count}\n")
        out.write(f"# pprm_cost = {cost}\n")
        out.write(f"# parity = {parity(p).value}\n")
        out.write(f"# verified = {str(result.verified).lower()}\n")
        report = ", ".join(str(g) for g in result.lowering_report) or "none"
        out.write(f"# unlowered = {report}\n")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return run(args, sys.stdout)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DepthExhausted as exc:
        print(f"error: {exc.category}: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except SynthError as exc:
        print(f"error: {exc.category}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
