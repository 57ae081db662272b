"""Minimal linear codes C_f over odd prime-power fields, with exhaustive
verification tools and a Massey secret-sharing scheme on the dual code."""

from .code import (LinearCode, ab_sufficient, covers, dual, enumerate_codewords, is_minimal_code, naive_is_minimal,
                   weight_distribution)
from .construction import (CodeDescriptor, build_code, eval_f, predict, predict_params, support_complement,
                           verify_hyperplane_separation, verify_instance)
from .gf import FieldContext, make_field

__all__ = [
    "CodeDescriptor", "FieldContext", "LinearCode", "ab_sufficient", "build_code", "covers", "dual",
    "enumerate_codewords", "eval_f", "is_minimal_code", "make_field", "naive_is_minimal", "predict",
    "predict_params", "support_complement", "verify_hyperplane_separation", "verify_instance",
    "weight_distribution",
]
