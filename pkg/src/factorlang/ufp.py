"""Permutationally unique factorization for finite languages.

Two factorizations are the same up to permutation when they use every
factor the same number of times.  The complement L* − ufp(L) is accepted
by a one-counter machine that fixes a factor ``t`` up front and counts how
often each of two guessed factorizations uses it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .automata import LanguageSpec, format_word
from .counter import (
    COUNTER_ANY,
    NONZERO,
    TOP,
    OneCounterPda,
    signed_moves,
)
from .errors import EpsilonInLanguageError
from .families import BELL_FACTORS, bell_shapes, bell_word
from .oracle import factorizations, is_ufp, slice_by_predicate


def finite_words(language):
    """``(words, alphabet)`` of a finite language, words in length-lex order."""
    if isinstance(language, LanguageSpec):
        if not language.is_finite:
            raise ValueError("this construction needs a finite language")
        words, alphabet = language.words, language.alphabet
    else:
        words = [tuple(w) for w in language]
        alphabet = tuple(sorted({s for w in words for s in w}))
    if any(len(w) == 0 for w in words):
        raise EpsilonInLanguageError("the empty word is in L")
    index = {s: i for i, s in enumerate(alphabet)}
    words = tuple(sorted(set(words), key=lambda w: (len(w), [index[s] for s in w])))
    return words, alphabet


def build_ufp_counter_machine(language) -> OneCounterPda:
    """One-counter machine accepting L* − ufp(L) for finite L.

    A run first picks the counted factor ``t`` and the first factor of each
    factorization.  States ``(t, w1, i1, w2, i2, flag)`` record the factor
    each side is reading and how much of it has been read.  When a side
    finishes a factor it reloads a new one by an epsilon move; loading
    ``t`` moves the signed difference toward that side.  Acceptance needs
    both sides at a factor boundary and a nonzero counter.
    """
    words, alphabet = finite_words(language)
    ids = {}
    labels = []
    transitions = []
    queue = deque()

    def sid(state):
        if state not in ids:
            ids[state] = len(labels)
            if state[0] == "init":
                labels.append(f"start t={format_word(state[1])}")
            elif state[0] == "accept":
                labels.append("accept")
            else:
                t, w1, i1, w2, i2, flag = state
                labels.append(
                    f"t={format_word(t)} {format_word(w1[:i1])}.{format_word(w1[i1:])}"
                    f" / {format_word(w2[:i2])}.{format_word(w2[i2:])}"
                    f" {'top' if flag == TOP else 'bottom'}"
                )
            queue.append(state)
        return ids[state]

    accept = sid(("accept",))
    initials = {sid(("init", t)) for t in words}
    while queue:
        state = queue.popleft()
        if state[0] == "accept":
            continue
        src = ids[state]
        if state[0] == "init":
            t = state[1]
            for w1 in words:
                for w2 in words:
                    diff = (w1 == t) - (w2 == t)
                    for test, delta, flag in signed_moves(TOP, diff):
                        dst = sid((t, w1, 0, w2, 0, flag))
                        transitions.append((src, None, test, delta, dst))
            continue
        t, w1, i1, w2, i2, flag = state
        done1, done2 = i1 == len(w1), i2 == len(w2)
        if not done1 and not done2 and w1[i1] == w2[i2]:
            dst = sid((t, w1, i1 + 1, w2, i2 + 1, flag))
            transitions.append((src, w1[i1], "any", 0, dst))
        if done1:
            for w in words:
                for test, delta, nflag in signed_moves(flag, int(w == t)):
                    dst = sid((t, w, 0, w2, i2, nflag))
                    transitions.append((src, None, test, delta, dst))
        if done2:
            for w in words:
                for test, delta, nflag in signed_moves(flag, -int(w == t)):
                    dst = sid((t, w1, i1, w, 0, nflag))
                    transitions.append((src, None, test, delta, dst))
        if done1 and done2:
            transitions.append((src, None, NONZERO, 0, accept))
    return OneCounterPda(
        len(labels), alphabet, transitions, initials, {accept}, COUNTER_ANY, tuple(labels)
    )


def ufp_slice(language, max_len: int) -> list:
    return slice_by_predicate(language, "ufp", max_len)


def unique_three_four_representation(k: int) -> bool:
    """Whether ``k = 3a + 4b`` has exactly one solution in non-negative integers."""
    return sum(1 for b in range(k // 4 + 1) if (k - 4 * b) % 3 == 0) == 1


@dataclass
class WitnessRow:
    r: int
    s: int
    t: int
    q: int
    member: bool
    expected: bool
    n_factorizations: int
    shapes_match: bool

    @property
    def ok(self) -> bool:
        return self.member == self.expected and self.shapes_match


@dataclass
class WitnessReport:
    name: str
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.rows) and all(row.ok for row in self.rows)

    @property
    def failures(self) -> list:
        return [row for row in self.rows if not row.ok]


def bell_intersection_check(r_max: int = 3) -> WitnessReport:
    """Check ufp(L) ∩ R = {r = t and s = q} on all exponents up to ``r_max``."""
    if r_max > 3:
        raise ValueError("r_max above 3 is beyond desk scale")
    words = [tuple(w) for w in BELL_FACTORS.values()]
    report = WitnessReport("bell")
    rng = range(1, r_max + 1)
    for r in rng:
        for s in rng:
            for t in rng:
                for q in rng:
                    w = bell_word(r, s, t, q)
                    facts = factorizations(w, words)
                    report.rows.append(WitnessRow(
                        r, s, t, q,
                        member=is_ufp(w, words),
                        expected=(r == t and s == q),
                        n_factorizations=len(facts),
                        shapes_match=set(facts) == bell_shapes(r, s, t, q),
                    ))
    return report
