"""Structured error catalog for qorth.

Every user-facing error has three parts: what happened, why, and what to try.
Errors are rendered via Rich Panel (red border for errors, yellow for warnings).
Stack traces stay in the log, never shown unless --debug.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class QorthError(Exception):
    """Base structured error with code, message, and suggestions."""

    code: str
    message: str
    suggestions: list[str] = field(default_factory=list)
    log_details: str | None = None

    def __str__(self) -> str:
        return self.message


class ConfigError(QorthError):
    """Configuration-related errors."""

    def __init__(
        self,
        message: str,
        *,
        code: str = "CONFIG_ERROR",
        suggestions: list[str] | None = None,
        log_details: str | None = None,
    ) -> None:
        super().__init__(
            code=code,
            message=message,
            suggestions=suggestions or [],
            log_details=log_details,
        )


class ParseError(QorthError):
    """Expression parsing errors. ``column`` is the 1-based failing position."""

    def __init__(
        self,
        message: str,
        *,
        column: int = 0,
        code: str = "PARSE_ERROR",
        suggestions: list[str] | None = None,
        log_details: str | None = None,
    ) -> None:
        super().__init__(
            code=code,
            message=message,
            suggestions=suggestions or [],
            log_details=log_details,
        )
        self.column = column


class AlgebraError(QorthError):
    """Malformed algebraic input: alphabet mismatch, bad rule, unmapped generator."""

    def __init__(
        self,
        message: str,
        *,
        code: str = "ALGEBRA_ERROR",
        suggestions: list[str] | None = None,
        log_details: str | None = None,
    ) -> None:
        super().__init__(
            code=code,
            message=message,
            suggestions=suggestions or [],
            log_details=log_details,
        )


class ShapeError(QorthError):
    """Matrix extents do not agree."""

    def __init__(
        self,
        message: str,
        *,
        code: str = "SHAPE_ERROR",
        suggestions: list[str] | None = None,
        log_details: str | None = None,
    ) -> None:
        super().__init__(
            code=code,
            message=message,
            suggestions=suggestions or [],
            log_details=log_details,
        )


class SpectrumError(QorthError):
    """R-matrix construction or spectral decomposition cannot proceed."""

    def __init__(
        self,
        message: str,
        *,
        code: str = "SPECTRUM_ERROR",
        suggestions: list[str] | None = None,
        log_details: str | None = None,
    ) -> None:
        super().__init__(
            code=code,
            message=message,
            suggestions=suggestions or [],
            log_details=log_details,
        )


class VerificationError(QorthError):
    """A structural check failed in a way that invalidates downstream results."""

    def __init__(
        self,
        message: str,
        *,
        code: str = "VERIFY_ERROR",
        suggestions: list[str] | None = None,
        log_details: str | None = None,
    ) -> None:
        super().__init__(
            code=code,
            message=message,
            suggestions=suggestions or [],
            log_details=log_details,
        )


class SuiteError(QorthError):
    """Suite lookup and orchestration errors."""

    def __init__(
        self,
        message: str,
        *,
        code: str = "SUITE_ERROR",
        suggestions: list[str] | None = None,
        log_details: str | None = None,
    ) -> None:
        super().__init__(
            code=code,
            message=message,
            suggestions=suggestions or [],
            log_details=log_details,
        )


def format_error(error: QorthError) -> str:
    """Format a QorthError into a human-readable string with what/why/try sections."""
    lines = [f"Error: {error.message}"]
    if error.log_details:
        lines.append(f"  Reason: {error.log_details}")
    if error.suggestions:
        lines.append("  Try:")
        for i, suggestion in enumerate(error.suggestions, 1):
            lines.append(f"    {i}. {suggestion}")
    return "\n".join(lines)


# Error catalog: templates for common errors, keyed by error code.
ERROR_CATALOG: dict[str, QorthError] = {
    "SUITE_UNKNOWN": SuiteError(
        "Unknown verification suite",
        code="SUITE_UNKNOWN",
        suggestions=[
            "List available suites with `qorth verify --list`",
            "Use --all to run every suite",
        ],
    ),
    "PARSE_UNEXPECTED": ParseError(
        "Unexpected character in expression",
        code="PARSE_UNEXPECTED",
        suggestions=[
            "Use '*' between factors, e.g. r^2*b*c",
            "Generator names must belong to the selected algebra",
        ],
    ),
    "PARSE_UNKNOWN_GENERATOR": ParseError(
        "Unknown generator",
        code="PARSE_UNKNOWN_GENERATOR",
        suggestions=[
            "Check --algebra; each algebra has its own generators",
        ],
    ),
    "ALGEBRA_MISMATCH": AlgebraError(
        "Polynomials live over different alphabets",
        code="ALGEBRA_MISMATCH",
        suggestions=[
            "Map one operand through a homomorphism before combining",
        ],
    ),
    "ALGEBRA_RULE_NOT_DECREASING": AlgebraError(
        "Rewrite rule is not decreasing in the monomial order",
        code="ALGEBRA_RULE_NOT_DECREASING",
        suggestions=[
            "Adjust generator weights or orient the rule the other way",
        ],
    ),
    "SHAPE_MISMATCH": ShapeError(
        "Matrix extents do not agree",
        code="SHAPE_MISMATCH",
        suggestions=[
            "Both operands of @ must be square of the same size",
        ],
    ),
    "SPECTRUM_DEGENERATE": SpectrumError(
        "Eigenvalues of the braided R-matrix coincide",
        code="SPECTRUM_DEGENERATE",
        suggestions=[
            "The decomposition needs N > 2 and generic q",
        ],
    ),
    "COVERING_RESIDUE": VerificationError(
        "Covering map leaves a nonzero residue",
        code="COVERING_RESIDUE",
        suggestions=[
            "Run `qorth verify --suite covering --debug` to inspect residues",
        ],
    ),
    "SINGULAR_TRACE_DOMAIN": VerificationError(
        "Singular trace argument is not a polynomial in bc",
        code="SINGULAR_TRACE_DOMAIN",
        suggestions=[
            "Only coinvariant elements can be paired with the singular trace",
        ],
    ),
    "IDEMPOTENT_FAILURE": VerificationError(
        "Line bundle projector is not idempotent",
        code="IDEMPOTENT_FAILURE",
        suggestions=[
            "Check the ket and bra generators of p_n against <bra|ket> = 1",
        ],
    ),
    "CONFIG_CORRUPT": ConfigError(
        "Config file is corrupted",
        code="CONFIG_CORRUPT",
        suggestions=[
            "Delete the config file and restart",
            "Check the YAML syntax of config.yaml",
        ],
    ),
}
