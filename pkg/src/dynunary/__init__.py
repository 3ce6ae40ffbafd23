"""Dynamic unary bit-string transforms, cycle enumeration, and XOR orbit
combinators."""

from ._backend import BACKEND
from .altcodec import construct, deconstruct, dropt_decode, dropt_encode, dropt_partition
from .bitstring import BitString
from .codec import Direction, decode, encode, iterate, transform
from .cycle_on import CycleOnOrbit, Generator, cycle_on, recover_origin
from .cycles import (
    DEFAULT_BUDGET,
    Cycle,
    SpectrumRecord,
    SpectrumReport,
    SumReport,
    cycle_of,
    cycle_sum,
    cycle_xor,
    partition,
    predicted_spectrum,
    sum_identity_check,
    verify_spectrum,
)
from .errors import (
    BudgetExceededError,
    GoldenParseError,
    MalformedConstructError,
    MalformedUnaryError,
    OrbitBoundError,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BitString",
    "BudgetExceededError",
    "Cycle",
    "CycleOnOrbit",
    "DEFAULT_BUDGET",
    "Direction",
    "Generator",
    "GoldenParseError",
    "MalformedConstructError",
    "MalformedUnaryError",
    "OrbitBoundError",
    "SpectrumRecord",
    "SpectrumReport",
    "SumReport",
    "construct",
    "cycle_of",
    "cycle_on",
    "cycle_sum",
    "cycle_xor",
    "decode",
    "deconstruct",
    "dropt_decode",
    "dropt_encode",
    "dropt_partition",
    "encode",
    "iterate",
    "partition",
    "predicted_spectrum",
    "recover_origin",
    "sum_identity_check",
    "transform",
    "verify_spectrum",
    "__version__",
]
