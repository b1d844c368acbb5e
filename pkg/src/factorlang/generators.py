"""Random languages for property checks."""

from __future__ import annotations

import random

from .automata import Dfa, LanguageSpec


def random_dfa(rng: random.Random, max_states: int = 4, alphabet=("a", "b"),
               p_final: float = 0.5) -> Dfa:
    """Complete DFA with a non-final initial state, so the empty word is outside L."""
    n = rng.randint(1, max_states)
    delta = [[rng.randrange(n) for _ in alphabet] for _ in range(n)]
    finals = {q for q in range(1, n) if rng.random() < p_final}
    return Dfa(tuple(alphabet), delta, 0, finals)


def random_finite_language(rng: random.Random, max_words: int = 4, max_len: int = 3,
                           alphabet=("a", "b")) -> LanguageSpec:
    k = rng.randint(1, max_words)
    words = set()
    while len(words) < k:
        words.add(tuple(rng.choice(alphabet) for _ in range(rng.randint(1, max_len))))
    return LanguageSpec.finite(sorted(words), alphabet)


def random_prefix_code(rng: random.Random, max_words: int = 4, max_len: int = 4,
                       alphabet=("a", "b")) -> LanguageSpec:
    """Finite prefix code: no word is a proper prefix of another."""
    k = rng.randint(1, max_words)
    words = []
    attempts = 0
    while len(words) < k and attempts < 200:
        attempts += 1
        w = tuple(rng.choice(alphabet) for _ in range(rng.randint(1, max_len)))
        if all(w[: len(u)] != u and u[: len(w)] != w for u in words):
            words.append(w)
    return LanguageSpec.finite(sorted(words), alphabet)
