"""Subset-invariant factorization for finite languages.

Every factorization of a word in ufs(L) uses the same set of factors.  For
finite L the complement L* − ufs(L) is regular: an NFA reads two
factorizations in lockstep, remembering for each the factor in progress,
its unread suffix, and the set of factors used so far as a bit vector.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .automata import (
    Dfa,
    LanguageSpec,
    Nfa,
    complement_within,
    determinize,
    dfa_from_words,
    format_word,
    minimize,
    shortest_accepted,
    star_dfa,
)
from .families import UFS_REGULAR_PATTERN, bell_word, ufs_regular_shapes
from .oracle import factorizations, is_ufs
from .ufp import WitnessReport, WitnessRow, finite_words


class UfsState(NamedTuple):
    """``[w1, s1, v1, w2, s2, v2]`` with suffixes stored as read offsets."""

    w1: int
    i1: int
    v1: int
    w2: int
    i2: int
    v2: int


def _format_state(st: UfsState, words) -> str:
    def side(w, i, v):
        word = words[w]
        bits = "".join("1" if v >> k & 1 else "0" for k in range(len(words)))
        return f"{format_word(word)}|{format_word(word[i:])}|{bits}"

    return f"({side(st.w1, st.i1, st.v1)}‖{side(st.w2, st.i2, st.v2)})"


def _closure(st: UfsState, words) -> list:
    """Epsilon closure: reload a side whose suffix is exhausted."""
    out = [st]
    firsts = [st]
    if st.i1 == len(words[st.w1]):
        firsts += [st._replace(w1=w, i1=0, v1=st.v1 | 1 << w) for w in range(len(words))]
    for s in firsts:
        if s is not st:
            out.append(s)
        if s.i2 == len(words[s.w2]):
            out += [s._replace(w2=w, i2=0, v2=s.v2 | 1 << w) for w in range(len(words))]
    return out


def _is_final(st: UfsState, words) -> bool:
    return st.i1 == len(words[st.w1]) and st.i2 == len(words[st.w2]) and st.v1 != st.v2


def ufs_state_space(language):
    """Reachable states and the epsilon-free NFA built over them."""
    words, alphabet = finite_words(language)
    index = {s: i for i, s in enumerate(alphabet)}
    init = [
        UfsState(w, 0, 1 << w, x, 0, 1 << x) for w in range(len(words)) for x in range(len(words))
    ]
    ids = {st: i for i, st in enumerate(init)}
    states = list(init)
    rows = []
    queue = deque(init)
    while queue:
        st = queue.popleft()
        row = [set() for _ in alphabet]
        for s in _closure(st, words):
            w1, w2 = words[s.w1], words[s.w2]
            if s.i1 < len(w1) and s.i2 < len(w2) and w1[s.i1] == w2[s.i2]:
                nxt = s._replace(i1=s.i1 + 1, i2=s.i2 + 1)
                if nxt not in ids:
                    ids[nxt] = len(states)
                    states.append(nxt)
                    queue.append(nxt)
                row[index[w1[s.i1]]].add(ids[nxt])
        rows.append(row)
    finals = {ids[st] for st in states if _is_final(st, words)}
    labels = tuple(_format_state(st, words) for st in states)
    nfa = Nfa(alphabet, rows, set(range(len(init))), finals, labels)
    return states, words, nfa


def build_ufs_nfa(language) -> Nfa:
    """NFA accepting L* − ufs(L) for finite L."""
    return ufs_state_space(language)[2]


def ufs_dfa(language) -> Dfa:
    words, alphabet = finite_words(language)
    base = dfa_from_words(words, alphabet)
    violations = determinize(build_ufs_nfa(language))
    return minimize(complement_within(violations, star_dfa(base)))


@dataclass(frozen=True)
class UfsViolation:
    word: Optional[tuple]
    longest: int
    n_words: int

    @property
    def bound(self) -> int:
        """``2 m² n²`` with m the longest word length and n = |L|."""
        return 2 * self.longest ** 2 * self.n_words ** 2

    @property
    def within_bound(self) -> bool:
        return self.word is None or len(self.word) <= self.bound


def build_ufs_witness_nfa(language) -> Nfa:
    """Smaller NFA for the same language as ``build_ufs_nfa``.

    Two supports differ iff some factor ``z`` is in exactly one of them, so
    it suffices to guess ``z`` up front and keep one bit per side instead of
    the whole vector.  States are ``(z, w1, i1, b1, w2, i2, b2)``; their
    number is polynomial in the size of L.
    """
    words, alphabet = finite_words(language)
    index = {s: i for i, s in enumerate(alphabet)}
    k = len(words)
    init = [
        (z, w, 0, w == z, x, 0, x == z) for z in range(k) for w in range(k) for x in range(k)
    ]
    ids = {st: i for i, st in enumerate(init)}
    states = list(init)
    rows = []
    queue = deque(init)
    while queue:
        z, w1, i1, b1, w2, i2, b2 = queue.popleft()
        firsts = [(w1, i1, b1)]
        if i1 == len(words[w1]):
            firsts += [(w, 0, b1 or w == z) for w in range(k)]
        row = [set() for _ in alphabet]
        for f1 in firsts:
            seconds = [(w2, i2, b2)]
            if i2 == len(words[w2]):
                seconds += [(w, 0, b2 or w == z) for w in range(k)]
            for f2 in seconds:
                u1, j1, c1 = f1
                u2, j2, c2 = f2
                x1, x2 = words[u1], words[u2]
                if j1 < len(x1) and j2 < len(x2) and x1[j1] == x2[j2]:
                    nxt = (z, u1, j1 + 1, c1, u2, j2 + 1, c2)
                    if nxt not in ids:
                        ids[nxt] = len(states)
                        states.append(nxt)
                        queue.append(nxt)
                    row[index[x1[j1]]].add(ids[nxt])
        rows.append(row)
    finals = {
        i for i, (z, w1, i1, b1, w2, i2, b2) in enumerate(states)
        if i1 == len(words[w1]) and i2 == len(words[w2]) and b1 != b2
    }
    return Nfa(alphabet, rows, set(range(len(init))), finals)


def shortest_ufs_violation(language) -> UfsViolation:
    """Shortest word of L* − ufs(L), searched on ``build_ufs_witness_nfa``."""
    words, _ = finite_words(language)
    word = shortest_accepted(build_ufs_witness_nfa(language))
    return UfsViolation(word, max(len(w) for w in words), len(words))


def ufs_regular_witness_check(r_max: int = 3) -> WitnessReport:
    """Check ufs(L) ∩ R = {r = t and s = q} for the regular witness language."""
    if r_max > 3:
        raise ValueError("r_max above 3 is beyond desk scale")
    spec = LanguageSpec.regex(UFS_REGULAR_PATTERN, ("a", "b", "c"))
    report = WitnessReport("ufs-regular")
    rng = range(1, r_max + 1)
    for r in rng:
        for s in rng:
            for t in rng:
                for q in rng:
                    w = bell_word(r, s, t, q)
                    facts = set(factorizations(w, spec))
                    report.rows.append(WitnessRow(
                        r, s, t, q,
                        member=is_ufs(w, spec),
                        expected=(r == t and s == q),
                        n_factorizations=len(facts),
                        shapes_match=ufs_regular_shapes(r, s, t, q) <= facts,
                    ))
    return report
