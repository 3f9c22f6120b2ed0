"""Circuit synthesis from a permutation, with mandatory round-trip checking.

Two backends:

* ``transform`` fixes truth-table rows in ascending order with multi-control
  Toffoli gates that never disturb rows already fixed.  Works for any width.
* ``optimal`` runs an iterative-deepening search over a small gate library
  and returns a minimum-length circuit (first hit in canonical gate order).
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import DepthExhausted, SynthError, ValidationError, WidthMismatch
from .gates import Circuit, Gate, GateKind, circuit_permutation, gate_permutation, lower_mct_to_cnts
from .perm import PermutationMap


class Backend(str, enum.Enum):
    TRANSFORM = "transform"
    OPTIMAL = "optimal"


class GateSet(str, enum.Enum):
    CNTS = "cnts"
    MCT = "mct"


OPTIMAL_MAX_WIDTH = {GateSet.CNTS: 3, GateSet.MCT: 4}


@dataclass(frozen=True)
class SearchConfig:
    max_depth: int = 7
    gate_set: GateSet = GateSet.MCT
    # restricts the optimal backend's library further, e.g. to CNOT only
    allowed_kinds: frozenset[GateKind] | None = None

    def __post_init__(self) -> None:
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")
        object.__setattr__(self, "gate_set", GateSet(self.gate_set))


@dataclass(frozen=True)
class SynthesisResult:
    circuit: Circuit
    backend: Backend
    verified: bool
    lowering_report: tuple[Gate, ...] = field(default=())

    @property
    def gate_count(self) -> int:
        return len(self.circuit)


def verify_circuit(circuit: Circuit, p: PermutationMap) -> bool:
    if circuit.width != p.width:
        raise WidthMismatch(f"circuit has {circuit.width} lines, permutation {p.width}")
    return circuit_permutation(circuit) == p


def pprm_cost(forms: Iterable[frozenset]) -> int:
    """Total number of monomials over all outputs."""
    return sum(len(f) for f in forms)


def _finish(circuit: Circuit, p: PermutationMap, backend: Backend, gate_set: GateSet) -> SynthesisResult:
    lowered = lower_mct_to_cnts(circuit)
    if not verify_circuit(lowered.circuit, p):
        raise SynthError(f"{backend.value} backend produced a circuit that does not realize the permutation")
    report = lowered.unlowered if gate_set is GateSet.CNTS else ()
    return SynthesisResult(lowered.circuit, backend, True, report)


def _line_set(mask: int, width: int) -> tuple[int, ...]:
    return tuple(width - b for b in reversed(range(width)) if mask >> b & 1)


def synth_transform(
    p: PermutationMap,
    gate_set: GateSet | str = GateSet.MCT,
    check_prefix: bool = False,
) -> SynthesisResult:
    n = p.width
    size = 1 << n
    full = size - 1
    residual = list(p.image)
    found: list[tuple[int, int]] = []  # (control mask, target bit)

    def push(controls: int, target: int) -> None:
        found.append((controls, target))
        for x in range(size):
            v = residual[x]
            if v & controls == controls:
                residual[x] = v ^ target

    for i in range(size):
        y = residual[i]
        if y != i:
            missing = i & ~y & full
            b = 1
            while missing:
                if missing & b:
                    push(residual[i], b)
                    missing &= ~b
                b <<= 1
            surplus = residual[i] & ~i
            b = 1
            while surplus:
                if surplus & b:
                    push(i, b)
                    surplus &= ~b
                b <<= 1
        if check_prefix:
            assert all(residual[j] == j for j in range(i + 1)), f"row {i} disturbed a fixed row"

    gates = tuple(
        Gate.mct(_line_set(ctrl, n), n - (t.bit_length() - 1)) for ctrl, t in reversed(found)
    )
    return _finish(Circuit(n, gates), p, Backend.TRANSFORM, GateSet(gate_set))


def gate_library(width: int, gate_set: GateSet = GateSet.CNTS,
                 allowed_kinds: frozenset[GateKind] | None = None) -> list[Gate]:
    """Gates in canonical search order: NOT, CNOT, Toffoli, SWAP, then wider MCT."""
    lines = range(1, width + 1)
    lib: list[Gate] = [Gate.not_(t) for t in lines]
    lib += [Gate.cnot(c, t) for c in lines for t in lines if c != t]
    lib += [
        Gate.toffoli(c1, c2, t)
        for c1, c2 in itertools.combinations(lines, 2)
        for t in lines
        if t not in (c1, c2)
    ]
    lib += [Gate.swap(a, b) for a, b in itertools.combinations(lines, 2)]
    if gate_set is GateSet.MCT:
        for k in range(3, width):
            lib += [
                Gate.mct(ctrl, t)
                for ctrl in itertools.combinations(lines, k)
                for t in lines
                if t not in ctrl
            ]
    if allowed_kinds is not None:
        lib = [g for g in lib if g.kind in allowed_kinds]
    return lib


def synth_optimal(p: PermutationMap, cfg: SearchConfig | None = None) -> SynthesisResult:
    """Minimum gate count circuit by iterative deepening.

    Within one depth bound the search is depth-first in canonical library
    order; a permutation already reached at the same or a shallower depth is
    not expanded again, since its subtree was searched with at least as much
    remaining budget.  Raises :class:`DepthExhausted` past ``cfg.max_depth``.
    """
    cfg = cfg or SearchConfig()
    n = p.width
    limit = OPTIMAL_MAX_WIDTH[cfg.gate_set]
    if n > limit:
        raise ValidationError(f"optimal backend supports at most {limit} lines for gate set {cfg.gate_set.value}")
    lib = gate_library(n, cfg.gate_set, cfg.allowed_kinds)
    perms = [gate_permutation(g, n).image for g in lib]
    start = tuple(range(1 << n))
    goal = p.image

    def dfs(cur: tuple[int, ...], depth: int, bound: int, last: int, path: list[int], seen: dict) -> bool:
        if cur == goal:
            return True
        if depth == bound:
            return False
        for gi, g in enumerate(perms):
            if gi == last:
                continue
            nxt = tuple(g[x] for x in cur)
            prev = seen.get(nxt)
            if prev is not None and prev <= depth + 1:
                continue
            seen[nxt] = depth + 1
            path.append(gi)
            if dfs(nxt, depth + 1, bound, gi, path, seen):
                return True
            path.pop()
        return False

    for bound in range(0, cfg.max_depth + 1):
        path: list[int] = []
        if dfs(start, 0, bound, -1, path, {start: 0}):
            circuit = Circuit(n, tuple(lib[gi] for gi in path))
            return _finish(circuit, p, Backend.OPTIMAL, cfg.gate_set)
    raise DepthExhausted(f"no circuit with at most {cfg.max_depth} gates")


def synthesize(
    p: PermutationMap,
    backend: Backend | str = Backend.TRANSFORM,
    cfg: SearchConfig | None = None,
) -> SynthesisResult:
    cfg = cfg or SearchConfig()
    if Backend(backend) is Backend.OPTIMAL:
        return synth_optimal(p, cfg)
    return synth_transform(p, cfg.gate_set)
