"""Exception hierarchy with machine-readable codes for CLI error reporting."""

from __future__ import annotations


class SpectralPairError(Exception):
    """Base class; every subclass carries a stable ``code`` string."""

    code = "error"

    def __init__(self, message: str, **detail):
        super().__init__(message)
        self.detail = detail


class SchemaError(SpectralPairError):
    """Malformed or structurally invalid input document."""

    code = "schema"


class GeneralPositionError(SpectralPairError):
    """The input left the open dense stratum where the formulas apply."""

    code = "general_position"


class DegenerateLeadingCoefficient(GeneralPositionError):
    code = "degenerate_leading_coefficient"


class SingularMatrix(GeneralPositionError):
    code = "singular_matrix"


class RankNotTwo(GeneralPositionError):
    code = "rank_not_two"


class RepeatedEigenvalues(GeneralPositionError):
    code = "repeated_eigenvalues"


class GaugeDegenerate(GeneralPositionError):
    code = "gauge_degenerate"


class DegenerateDivisor(GeneralPositionError):
    code = "degenerate_divisor"


class LinearSystemSingular(GeneralPositionError):
    code = "linear_system_singular"


class CoincidentPoints(GeneralPositionError):
    code = "coincident_points"


class LineOnCurve(GeneralPositionError):
    code = "line_on_curve"


class InputsNotIncident(GeneralPositionError):
    code = "inputs_not_incident"


class SwappedPairDegenerate(GeneralPositionError):
    code = "swapped_pair_degenerate"


class SingularA(GeneralPositionError):
    code = "singular_a"


class InvariantViolation(GeneralPositionError):
    """Loaded or constructed spectral data fails its own consistency checks."""

    code = "invariant_violation"


class ClosedFormMismatch(SpectralPairError):
    """The two independent routes for the lower-left entries disagree.

    This is not a degeneracy: it signals a formula transcription bug and is
    surfaced loudly rather than averaged away.
    """

    code = "closed_form_mismatch"


class DeterminantNotUnit(SpectralPairError):
    code = "determinant_not_unit"


class IntermediateDegeneracy(GeneralPositionError):
    """A word action hit a degenerate intermediate; carries the failing prefix."""

    code = "intermediate_degeneracy"

    def __init__(self, message: str, prefix=None, cause=None, **detail):
        super().__init__(message, **detail)
        self.prefix = prefix
        self.cause = cause
