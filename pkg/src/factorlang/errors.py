"""Exception hierarchy shared by every factorlang module."""


class FactorlangError(Exception):
    """Base class for all library errors."""


class AlphabetError(FactorlangError, ValueError):
    """Malformed alphabet, or a symbol that is not part of it."""


class UnknownSymbolError(AlphabetError):
    def __init__(self, symbol, position=None):
        self.symbol = symbol
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown symbol {symbol!r}{where}")


class AlphabetMismatchError(AlphabetError):
    """Two automata combined over different alphabets."""


class RegexSyntaxError(FactorlangError, ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (position {position})")


class EpsilonInLanguageError(FactorlangError, ValueError):
    """The construction requires the empty word to be outside L.

    When the empty word is in L no word of L* has a unique factorization,
    so uf(L) is empty.
    """


class SliceOverflowError(FactorlangError, OverflowError):
    def __init__(self, cap, count=None):
        self.cap = cap
        self.count = count
        super().__init__(f"result count exceeded cap {cap}")


class StateExplosionError(FactorlangError, OverflowError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"reachable state count exceeded cap {cap}")


class FactorizationCapError(FactorlangError, OverflowError):
    def __init__(self, cap, partial):
        self.cap = cap
        self.partial = partial
        super().__init__(f"more than {cap} factorizations (partial count {partial})")


class NotInStarError(FactorlangError, ValueError):
    """The word has no factorization at all, so the predicate is undefined."""


class SpecFormatError(FactorlangError, ValueError):
    """A LanguageSpec document could not be parsed."""
