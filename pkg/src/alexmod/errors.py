"""Exception types raised across the package."""


class AlexmodError(Exception):
    """Base class for all errors raised by alexmod."""


class DimensionMismatch(AlexmodError, ValueError):
    pass


class GroupMismatch(AlexmodError, ValueError):
    pass


class InfiniteGroupError(AlexmodError, ValueError):
    """An operation needs a finite group but was handed an infinite one."""


class InvalidHomomorphism(AlexmodError, ValueError):
    pass


class RelatorNotKilled(InvalidHomomorphism):
    """A relator does not map to the identity under a proposed homomorphism."""

    def __init__(self, relator_index, element):
        self.relator_index = relator_index
        self.element = element
        super().__init__(
            f"relator {relator_index} maps to {element}, not the identity")


class NonSurjective(AlexmodError, ValueError):
    pass


class NotInSpan(AlexmodError, ValueError):
    """A relation vector lies outside the lattice it is supposed to live in."""


class ChainNotExact(AlexmodError, ValueError):
    pass


class NonIntegralGenus(AlexmodError, ValueError):
    pass


class OracleDisagreement(AlexmodError, RuntimeError):
    """Two independent computations of the same invariant disagree."""

    def __init__(self, message, first, second):
        self.first = first
        self.second = second
        super().__init__(f"{message}: {first} != {second}")


class ParseError(AlexmodError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
