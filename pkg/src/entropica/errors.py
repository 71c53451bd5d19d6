"""Exception hierarchy.

Every error raised on bad input derives from :class:`EntropicaError`, which
is itself a :class:`ValueError`, so the CLI can map the whole family to exit
code 2.
"""


class EntropicaError(ValueError):
    pass


# distributions
class EmptyAlphabetError(EntropicaError):
    pass


class DuplicateSymbolError(EntropicaError):
    pass


class NotNormalizedError(EntropicaError):
    pass


class NegativeProbabilityError(EntropicaError):
    pass


class EmptyInputError(EntropicaError):
    pass


# entropy / coding
class DomainError(EntropicaError):
    pass


class BadBaseError(EntropicaError):
    pass


class AlphabetMismatchError(EntropicaError):
    pass


# codec
class UnknownSymbolError(EntropicaError):
    pass


class TruncatedError(EntropicaError):
    pass


class BadPaddingError(EntropicaError):
    pass


class UnknownPrefixError(EntropicaError):
    pass


class BadMagicError(EntropicaError):
    pass


class UnsupportedVersionError(EntropicaError):
    pass


class UnsupportedBaseError(EntropicaError):
    pass


class CorruptTableError(EntropicaError):
    pass


# sources
class UnknownModelError(EntropicaError):
    pass
