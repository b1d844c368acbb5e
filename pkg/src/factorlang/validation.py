"""Input checking shared by the estimators and the CLI."""

from __future__ import annotations

from typing import Optional

from .automata import Dfa, LanguageSpec, Nfa, as_word, check_alphabet, determinize, minimize
from .errors import EpsilonInLanguageError


def _infer_alphabet(items) -> tuple:
    symbols = set()
    for item in items:
        if isinstance(item, str) and any(ch.isspace() for ch in item):
            item = item.split()
        symbols.update(item)
    return tuple(sorted(symbols))


def check_language(language, alphabet: Optional[tuple] = None, allow_epsilon: bool = False):
    """Normalize ``language`` to a LanguageSpec or a Dfa.

    Accepts a LanguageSpec, a Dfa, an Nfa (determinized and minimized) or an
    iterable of words given as strings or token sequences.
    """
    if isinstance(language, (LanguageSpec, Dfa)):
        result = language
    elif isinstance(language, Nfa):
        result = minimize(determinize(language))
    elif isinstance(language, (str, bytes)):
        raise TypeError("expected a collection of words, got a single string")
    else:
        items = list(language)
        if not items:
            raise ValueError("language has no words")
        alphabet = check_alphabet(alphabet) if alphabet is not None else _infer_alphabet(items)
        result = LanguageSpec.finite([as_word(w, alphabet) for w in items], alphabet)
    if not allow_epsilon:
        dfa = result if isinstance(result, Dfa) else result.dfa
        if dfa.accepts_epsilon():
            raise EpsilonInLanguageError("the empty word is in L; uf(L) is empty")
    return result


def language_dfa(language) -> Dfa:
    return language if isinstance(language, Dfa) else language.dfa


def check_words(words, alphabet) -> list:
    """List of token tuples; strings are tokenized against ``alphabet``."""
    if isinstance(words, (str, bytes)):
        raise TypeError("expected a collection of words, got a single string")
    return [as_word(w, alphabet) for w in words]
