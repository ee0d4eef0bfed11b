"""Locally recoverable codes from good polynomials, Hermitian curves and towers."""

from .galois import FiniteField, Poly, interpolate, make_field
from .lrc_core import (
    CodeError,
    EvaluationCodeSpec,
    LinearCode,
    Partition,
    RecoveringStructure,
    build_generator,
    designed_params,
    encode,
    local_recover,
)

__version__ = "0.1.0"

__all__ = [
    "CodeError",
    "EvaluationCodeSpec",
    "FiniteField",
    "LinearCode",
    "Partition",
    "Poly",
    "RecoveringStructure",
    "build_generator",
    "designed_params",
    "encode",
    "interpolate",
    "local_recover",
    "make_field",
]
