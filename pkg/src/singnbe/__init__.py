"""A small type-checking kernel for dependent type theory with singleton
types and proof-irrelevant propositions, deciding equality by
normalisation by evaluation."""

from .checker import (Checker, check_ctx, check_term, check_type, eq_term,
                      eq_type, erase_tag, infer_ctx, infer_type)
from .config import Options, options
from .errors import (DepthExceeded, DiagKind, KernelError, TypeCheckError)
from .nbe import canonical_env, down, down_t, nbe_term, nbe_type, readback, up
from .semantics import apply_v, case_v, eval_subst, eval_term, fst_v, natrec_v, snd_v
from .session import Session
from .surface import ParseError, elaborate, parse, parse_term, print_term
from .syntax import (contains_star, is_neutral, is_normal, lift, mk_var,
                     subs_chain)

__version__ = "0.1.0"

__all__ = [
    "Checker", "DepthExceeded", "DiagKind", "KernelError", "Options", "ParseError",
    "Session", "TypeCheckError", "apply_v", "canonical_env", "case_v", "check_ctx",
    "check_term", "check_type", "contains_star", "down", "down_t", "elaborate",
    "eq_term", "eq_type", "erase_tag", "eval_subst", "eval_term", "fst_v", "infer_ctx",
    "infer_type", "is_neutral", "is_normal", "lift", "mk_var", "natrec_v", "nbe_term",
    "nbe_type", "options", "parse", "parse_term", "print_term", "readback", "snd_v",
    "subs_chain",
]
