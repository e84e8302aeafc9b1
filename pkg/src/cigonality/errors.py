"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class CigonalityError(Exception):
    """Base class for all library errors."""


class ArgumentError(CigonalityError, ValueError):
    """An input violates a function's precondition (bad shape, sign, range)."""


class HypothesisError(CigonalityError):
    """A theorem's hypothesis fails for the given parameters.

    ``hypothesis`` names the violated inequality so that reports and the CLI
    can echo it back verbatim.
    """

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        self.detail = detail
        msg = f"hypothesis '{hypothesis}' violated"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class ThresholdError(HypothesisError):
    """Degrees lie below the certified threshold A(e) of the prime selection."""


class ExhaustedError(CigonalityError, RuntimeError):
    """No admissible prime is left in a selection interval.

    Never raised on inputs above the threshold; seeing it means a bug.
    """
