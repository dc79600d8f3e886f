# errors.py
"""Exception hierarchy shared by the services, the CLI and the MCP server."""


class SemistabError(Exception):
    """Base class of every error raised by semistab."""


class InvalidRootSystemError(SemistabError, ValueError):
    """Unknown kind or a rank outside the kind's allowed range."""


class RankMismatchError(SemistabError, ValueError):
    """A weight, index or element does not fit the root system's rank."""


class EnumerationLimitError(SemistabError):
    """Refusal to enumerate a Weyl group larger than the configured limit."""

    def __init__(self, label: str, group_order: int, limit: int, what: str = "|W|"):
        self.label = label
        self.group_order = group_order
        self.limit = limit
        super().__init__(f"{what}({label}) = {group_order} exceeds the limit {limit}")


class PreconditionError(SemistabError, ValueError):
    """An input violates the hypotheses of the semistability criterion."""


class NotDominantError(PreconditionError):
    pass


class NotInRootLatticeError(PreconditionError):
    pass


class NotMinimalCosetRepError(PreconditionError):
    pass


class MinimalityCrossCheckError(SemistabError):
    """Global and local Bruhat-minimality filters disagree (engine bug)."""


class WitnessVerificationError(SemistabError):
    """A feasibility witness failed exact re-verification (engine bug)."""
