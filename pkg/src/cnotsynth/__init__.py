"""Permutation-matrix algebra and reversible circuit synthesis for CNOT-based circuits."""

from .errors import SynthError
from .forms import (
    Cube,
    QkMapView,
    TruthTable,
    esop_to_pprm,
    extract_truth_table,
    minimize_sop,
    pprm_from_bits,
    render_qkmap,
    sop_to_esop,
)
from .gates import (
    Circuit,
    Gate,
    GateKind,
    circuit_permutation,
    decompose_nonadjacent_toffoli,
    gate_permutation,
    lower_mct_to_cnts,
    swap_to_cnots,
)
from .perm import (
    Parity,
    PermutationMap,
    PureState,
    apply,
    compose,
    from_image_list,
    identity,
    inverse,
    parity,
    tensor,
    validate_dense,
)
from .synthesis import (
    Backend,
    GateSet,
    SearchConfig,
    SynthesisResult,
    pprm_cost,
    synth_optimal,
    synth_transform,
    verify_circuit,
)

__version__ = "0.1.0"

__all__ = [
    "Backend",
    "Circuit",
    "Cube",
    "Gate",
    "GateKind",
    "GateSet",
    "Parity",
    "PermutationMap",
    "PureState",
    "QkMapView",
    "SearchConfig",
    "SynthError",
    "SynthesisResult",
    "TruthTable",
    "apply",
    "circuit_permutation",
    "compose",
    "decompose_nonadjacent_toffoli",
    "esop_to_pprm",
    "extract_truth_table",
    "from_image_list",
    "gate_permutation",
    "identity",
    "inverse",
    "lower_mct_to_cnts",
    "minimize_sop",
    "parity",
    "pprm_cost",
    "pprm_from_bits",
    "render_qkmap",
    "sop_to_esop",
    "swap_to_cnots",
    "synth_optimal",
    "synth_transform",
    "tensor",
    "validate_dense",
    "verify_circuit",
]
