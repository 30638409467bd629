"""Exceptions raised by the kernel.

Semantic errors (``KernelError`` subclasses) signal an internal invariant
violation or ill-typed input that escaped checking.  ``TypeCheckError`` is the
structured diagnostic produced by the checker and the elaborator.
"""

from __future__ import annotations

import enum


class KernelError(Exception):
    """Base class for evaluation/readback failures."""


class NotAFunctionValue(KernelError):
    pass


class NotANatural(KernelError):
    pass


class NotAnEnumValue(KernelError):
    pass


class BranchCountMismatch(KernelError, ValueError):
    pass


class EnvironmentShapeError(KernelError):
    pass


class InternalValueError(KernelError):
    pass


class DepthExceeded(KernelError):
    pass


class DiagKind(enum.Enum):
    TYPE_MISMATCH = "TypeMismatch"
    NOT_INFERABLE = "NotInferable"
    NOT_A_TYPE = "NotAType"
    UNBOUND_INDEX = "UnboundIndex"
    STAR_IN_USER_SYNTAX = "StarInUserSyntax"
    EXPECTED_FUNCTION = "ExpectedFunction"
    EXPECTED_SIGMA = "ExpectedSigma"
    EXPECTED_NAT = "ExpectedNat"
    EXPECTED_ENUM = "ExpectedEnum"
    EXPECTED_PRF = "ExpectedPrf"
    IRRELEVANCE_VIOLATION = "IrrelevanceViolation"
    BRANCH_COUNT_MISMATCH = "BranchCountMismatch"
    NOT_NORMAL_INPUT = "NotNormalInput"
    UNBOUND_NAME = "UnboundName"

    def __str__(self):
        return self.value


class TypeCheckError(Exception):
    """A rejected judgement.

    ``expected``/``got`` hold normal forms when present; ``erased_expected``
    is ``expected`` with its singleton layers stripped.
    """

    def __init__(self, kind, message, *, subject=None, depth=0,
                 expected=None, got=None, erased_expected=None, n=None):
        super().__init__(message)
        self.kind = kind
        self.message = message
        self.subject = subject
        self.context_depth = depth
        self.expected = expected
        self.got = got
        self.erased_expected = erased_expected
        self.n = n

    def __str__(self):
        return f"{self.kind}: {self.message}"
