"""Exception hierarchy; each class carries the CLI exit code it maps to."""


class Hyp2MzvError(Exception):
    exit_code = 1
    reason = "ERROR"


class ParseError(Hyp2MzvError, ValueError):
    exit_code = 2
    reason = "PARSE"

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class SemanticError(ParseError):
    reason = "SEMANTIC"


class TerminatingError(SemanticError):
    exit_code = 3
    reason = "TERMINATING"


class DivergentError(Hyp2MzvError):
    exit_code = 3
    reason = "DIVERGENT"


class PoleError(Hyp2MzvError, ValueError):
    """A pole lies off the admissible lattice or inside the summation range."""

    exit_code = 4
    reason = "POLE"


class UnmatchedShapeError(Hyp2MzvError, ValueError):
    exit_code = 4
    reason = "UNMATCHED_SHAPE"


class ReductionMiss(Hyp2MzvError):
    """Base table has no entry for the key the reduction needs."""

    exit_code = 4
    reason = "REDUCTION_MISS"

    def __init__(self, key, message=None):
        self.key = key
        super().__init__(message or f"base table has no entry for {key}")


class PrecisionError(Hyp2MzvError):
    exit_code = 5
    reason = "PRECISION"

    def __init__(self, message, achieved=None):
        self.achieved = achieved
        super().__init__(message)


class VerificationError(Hyp2MzvError):
    exit_code = 5
    reason = "VERIFICATION_FAIL"


class UnknownIdError(Hyp2MzvError, KeyError):
    exit_code = 2
    reason = "UNKNOWN_ID"

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class NoRelation(Hyp2MzvError):
    """Lattice reduction found no verified relation within the height bound."""

    exit_code = 5
    reason = "NO_RELATION"

    def __init__(self, message, quality=None):
        self.quality = quality
        super().__init__(message)
