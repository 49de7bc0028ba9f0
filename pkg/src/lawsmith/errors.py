"""Exception hierarchy shared by the library and the CLI."""


class LawsmithError(Exception):
    """Base class for every error raised by lawsmith."""


class LawOutOfUniverse(LawsmithError, ValueError):
    """A law bans an action that no agent of the game has."""


class UnknownAgent(LawsmithError, KeyError):
    """An agent identifier is not part of the game."""

    def __str__(self):
        return Exception.__str__(self)


class NotProhibited(LawsmithError, ValueError):
    """Responsibility was requested for a profile outside the prohibition."""


class NotACover(LawsmithError, ValueError):
    """A vertex set fails to cover the hypergraph it was used on."""


class NotSafable(LawsmithError, ValueError):
    """The action cannot become a safe action under any law."""


class ActionNotAvailable(LawsmithError, ValueError):
    """The action is not in the agent's action set."""


class NamesNotFresh(LawsmithError, ValueError):
    """Gadget names collide with identifiers already used by the game."""


class NotUseful(LawsmithError, ValueError):
    """A useful law was required."""


class NotGapFree(LawsmithError, ValueError):
    """A gap-free law was required."""


class BudgetExceeded(LawsmithError, RuntimeError):
    """An exact search would exceed its size or time budget."""


class CapExceeded(LawsmithError, ValueError):
    """Generator size parameters are above the documented caps."""


class ParseError(LawsmithError, ValueError):
    """A document could not be decoded into the expected shape.

    ``where`` names the offending field, e.g. ``prohibited[2].b``.
    """

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class ValidationError(LawsmithError, ValueError):
    """A decoded object violates structural invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
