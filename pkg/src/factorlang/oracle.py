"""Brute-force ground truth for factorizations.

Everything here works straight from the definitions by segmentation
dynamic programming over the substrings of a word.  None of it touches the
automaton constructions in ``uf``, ``su``, ``ufp`` or ``ufs``, which is what
makes it usable as an oracle against them.

Convention for the empty word: it lies in L* through the empty
factorization, and every predicate holds for it vacuously.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .automata import (
    DEFAULT_SLICE_CAP,
    Dfa,
    LanguageSpec,
    Nfa,
    all_words,
    check_alphabet,
    determinize,
    enumerate_slice,
    format_word,
    minimize,
)
from .errors import (
    EpsilonInLanguageError,
    FactorizationCapError,
    NotInStarError,
    SliceOverflowError,
)

DEFAULT_FACTORIZATION_CAP = 10**6
PREDICATES = ("uf", "su", "ufp", "ufs")


@dataclass(frozen=True)
class MembershipOracle:
    """Uniform view of a language L for the factorization DP.

    ``words`` is set for finite languages and ``dfa`` for regular ones;
    either lets the oracle list factor candidates without a full scan.
    """

    test: Callable
    description: str
    alphabet: Optional[tuple] = None
    words: Optional[frozenset] = None
    dfa: Optional[Dfa] = None

    def __call__(self, word) -> bool:
        return self.test(tuple(word))

    @classmethod
    def from_words(cls, words: Iterable, alphabet=None, description=None):
        words = frozenset(tuple(w) for w in words)
        if alphabet is None:
            alphabet = tuple(sorted({s for w in words for s in w})) or None
        desc = description or "{" + ", ".join(sorted(format_word(w) for w in words)) + "}"
        return cls(words.__contains__, desc, alphabet, words=words)

    @classmethod
    def from_dfa(cls, dfa: Dfa, description="regular language"):
        return cls(dfa.accepts, description, dfa.alphabet, dfa=dfa)

    @classmethod
    def from_spec(cls, spec: LanguageSpec):
        if spec.is_finite:
            return cls.from_words(spec.words, spec.alphabet)
        return cls.from_dfa(spec.dfa, spec.pattern)

    def ends(self, x: tuple, i: int) -> list:
        """Positions ``j > i`` with ``x[i:j]`` in L."""
        n = len(x)
        if self.dfa is not None:
            d = self.dfa
            q = d.initial
            out = []
            for j in range(i, n):
                q = d.step(q, x[j])
                if q in d.finals:
                    out.append(j + 1)
            return out
        if self.words is not None:
            return [j for j in range(i + 1, n + 1) if x[i:j] in self.words]
        return [j for j in range(i + 1, n + 1) if self.test(x[i:j])]

    def factor_words(self, max_len: int, cap: int = DEFAULT_SLICE_CAP) -> list:
        """Words of L of length 1..max_len."""
        if self.words is not None:
            return sorted(w for w in self.words if 0 < len(w) <= max_len)
        if self.dfa is not None:
            return [w for w in enumerate_slice(self.dfa, max_len, cap) if w]
        if self.alphabet is None:
            raise ValueError("oracle needs an alphabet to enumerate L")
        return [w for w in all_words(self.alphabet, max_len) if w and self.test(w)]


def as_oracle(language) -> MembershipOracle:
    """Accept a MembershipOracle, LanguageSpec, Dfa, Nfa or word collection."""
    if isinstance(language, MembershipOracle):
        return language
    if isinstance(language, LanguageSpec):
        return MembershipOracle.from_spec(language)
    if isinstance(language, Dfa):
        return MembershipOracle.from_dfa(language)
    if isinstance(language, Nfa):
        return MembershipOracle.from_dfa(minimize(determinize(language)))
    return MembershipOracle.from_words(language)


def _checked(language) -> MembershipOracle:
    oracle = as_oracle(language)
    if oracle(()):
        raise EpsilonInLanguageError("the empty word is in L; uf(L) is empty")
    return oracle


def _ends_table(x, oracle):
    return [oracle.ends(x, i) for i in range(len(x))]


def count_factorizations(x, language, saturate_at: Optional[int] = 2) -> int:
    """Number of factorizations of ``x``, capped at ``saturate_at``."""
    oracle = _checked(language)
    x = tuple(x)
    n = len(x)
    ends = _ends_table(x, oracle)
    counts = [0] * (n + 1)
    counts[n] = 1
    for i in range(n - 1, -1, -1):
        total = sum(counts[j] for j in ends[i])
        counts[i] = total if saturate_at is None else min(total, saturate_at)
    return counts[0]


def factorizations(x, language, cap: int = DEFAULT_FACTORIZATION_CAP) -> list:
    """All factorizations of ``x`` into words of L, each a tuple of factors.

    The empty word has exactly one factorization, the empty tuple.
    """
    oracle = _checked(language)
    x = tuple(x)
    n = len(x)
    ends = _ends_table(x, oracle)
    counts = [0] * (n + 1)
    counts[n] = 1
    for i in range(n - 1, -1, -1):
        counts[i] = sum(counts[j] for j in ends[i])
    if counts[0] > cap:
        raise FactorizationCapError(cap, counts[0])

    memo = {n: [()]}

    def suffix(i):
        if i not in memo:
            memo[i] = [
                (x[i:j],) + rest for j in ends[i] if counts[j] for rest in suffix(j)
            ]
        return memo[i]

    return sorted(suffix(0), key=lambda f: [len(w) for w in f])


def factor_multiset(factorization) -> frozenset:
    """Hashable multiset of factors: a frozenset of (word, count) pairs."""
    return frozenset(Counter(factorization).items())


def factor_support(factorization) -> frozenset:
    return frozenset(factorization)


def _summaries(x, oracle, kind):
    """Set of per-factorization summaries of ``x``, by suffix DP.

    ``kind`` is "length", "multiset" or "support".  Summaries compose
    factor by factor, so no factorization is ever materialized.
    """
    x = tuple(x)
    n = len(x)
    ends = _ends_table(x, oracle)
    if kind == "length":
        empty, add = 0, lambda w, v: v + 1
    elif kind == "multiset":
        empty = frozenset()

        def add(w, v):
            c = dict(v)
            c[w] = c.get(w, 0) + 1
            return frozenset(c.items())

    elif kind == "support":
        empty, add = frozenset(), lambda w, v: v | {w}
    else:
        raise ValueError(kind)
    table = [set() for _ in range(n + 1)]
    table[n].add(empty)
    for i in range(n - 1, -1, -1):
        for j in ends[i]:
            w = x[i:j]
            table[i].update(add(w, v) for v in table[j])
    return table[0]


def _require_star(x, summaries):
    if not summaries:
        raise NotInStarError(f"{format_word(x)!r} has no factorization")


def is_uf(x, language) -> bool:
    count = count_factorizations(x, language)
    if count == 0:
        raise NotInStarError(f"{format_word(x)!r} has no factorization")
    return count == 1


def is_su(x, language) -> bool:
    s = _summaries(x, _checked(language), "length")
    _require_star(x, s)
    return len(s) == 1


def is_ufp(x, language) -> bool:
    s = _summaries(x, _checked(language), "multiset")
    _require_star(x, s)
    return len(s) == 1


def is_ufs(x, language) -> bool:
    s = _summaries(x, _checked(language), "support")
    _require_star(x, s)
    return len(s) == 1


PREDICATE_FUNCS = {"uf": is_uf, "su": is_su, "ufp": is_ufp, "ufs": is_ufs}


def check_predicate(predicate: str):
    try:
        return PREDICATE_FUNCS[predicate]
    except KeyError:
        raise ValueError(f"unknown predicate {predicate!r}; expected one of {PREDICATES}") from None


def star_slice(language, max_len: int, cap: int = DEFAULT_SLICE_CAP) -> list:
    """Words of L* up to ``max_len`` by concatenating factor words.

    Sorted length-then-lex in alphabet order when the alphabet is known.
    """
    oracle = _checked(language)
    factors = oracle.factor_words(max_len, cap)
    levels = [set() for _ in range(max_len + 1)]
    levels[0].add(())
    total = 1
    for length in range(1, max_len + 1):
        for w in factors:
            if len(w) <= length:
                levels[length].update(v + w for v in levels[length - len(w)])
        total += len(levels[length])
        if total > cap:
            raise SliceOverflowError(cap, total)
    return _length_lex([w for level in levels for w in level], oracle.alphabet)


def _length_lex(words, alphabet):
    if alphabet is None:
        return sorted(words, key=lambda w: (len(w), w))
    index = {s: i for i, s in enumerate(alphabet)}
    return sorted(words, key=lambda w: (len(w), [index[s] for s in w]))


def slice_by_predicate(language, predicate: str, max_len: int,
                       cap: int = DEFAULT_SLICE_CAP) -> list:
    """``{x in L* : |x| <= max_len and predicate(x)}``, length-then-lex."""
    test = check_predicate(predicate)
    oracle = _checked(language)
    return [x for x in star_slice(oracle, max_len, cap) if test(x, oracle)]


def cut_free_ambiguities(language, max_len: int) -> list:
    """Words up to ``max_len`` with two factorizations sharing no inner cut.

    Grown two rows at a time: the row that is behind appends a factor that
    must agree with the dangling suffix of the row ahead.  A word whose two
    factorizations share an inner cut ``x = uv`` has a violating ``u`` or
    ``v`` for each predicate here, so every shortest violation is found
    among these words.
    """
    oracle = _checked(language)
    factors = oracle.factor_words(max_len)
    found = set()
    # (word so far, dangling suffix of the row that is ahead)
    stack = []
    for u in factors:
        for v in factors:
            if len(u) < len(v) and v[: len(u)] == u:
                stack.append((v, v[len(u):]))
    while stack:
        word, dangling = stack.pop()
        for f in factors:
            if len(f) <= len(dangling):
                if dangling[: len(f)] != f:
                    continue
                rest = dangling[len(f):]
                if rest:
                    stack.append((word, rest))
                else:
                    found.add(word)
            elif f[: len(dangling)] == dangling and len(word) + len(f) - len(dangling) <= max_len:
                tail = f[len(dangling):]
                stack.append((word + tail, tail))
    return _length_lex(found, oracle.alphabet)


def shortest_violation(language, predicate: str, max_len: int) -> Optional[tuple]:
    """Shortest word of L* (length <= max_len) failing ``predicate``.

    Ties are broken lexicographically in alphabet order.
    """
    test = check_predicate(predicate)
    oracle = _checked(language)
    for x in cut_free_ambiguities(oracle, max_len):
        if not test(x, oracle):
            return x
    return None


def multi_factorization_slice(language, max_len: int) -> list:
    """Words of L* up to ``max_len`` with at least two factorizations."""
    oracle = _checked(language)
    return [x for x in star_slice(oracle, max_len) if count_factorizations(x, oracle) >= 2]


def violation_slice(language, predicate: str, max_len: int) -> list:
    """Complement of ``slice_by_predicate`` inside the L* slice."""
    test = check_predicate(predicate)
    oracle = _checked(language)
    return [x for x in star_slice(oracle, max_len) if not test(x, oracle)]


def all_predicates(x, language) -> dict:
    oracle = _checked(language)
    return {name: f(x, oracle) for name, f in PREDICATE_FUNCS.items()}


def alphabet_of(language) -> tuple:
    oracle = as_oracle(language)
    if oracle.alphabet is None:
        raise ValueError("language has no alphabet")
    return check_alphabet(oracle.alphabet)
