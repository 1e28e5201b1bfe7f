"""Belief propagation decoding of quantum stabilizer codes.

Scalar-message (delta-rule) binary and quaternary decoders with parallel
and serial schedules, message normalization/offset, standard code
constructions, and a reproducible depolarizing-channel Monte Carlo harness.
"""

from .pauli import (
    Pauli,
    PauliString,
    inner,
    inner_single,
    multiply,
    weight,
    to_symplectic,
    from_symplectic,
)
from .gf2 import BinaryMatrix, RowSpace, rank, rref
from .stabilizer import Outcome, StabilizerCode, classify
from .constructions import (
    BicycleSpec,
    bch_parity,
    bicycle_code,
    css_code,
    five_qubit_code,
    hypergraph_product,
)
from .alist import AlistFormatError, load_alist, save_alist
from .bp2 import BinaryPrior, Bp2Decoder, DecodeResult, DecoderConfig, bp2_decode
from .bp4 import (
    Bp4Decoder,
    bp2_on_stabilizer,
    bp4_decode,
    conventional_bp4,
    trace_to_csv,
)
from .channel import (
    CSV_COLUMNS,
    DecoderSetup,
    DepolarizingChannel,
    SimPoint,
    StopRule,
    SweepPlan,
    depolarizing_priors,
    run_point,
    run_sweep,
    sample_depolarizing,
    trial_rng,
    wilson_interval,
    write_csv,
    write_json,
)

__version__ = "0.1.0"
