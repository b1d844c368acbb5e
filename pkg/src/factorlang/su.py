"""Semi-unique factorization: all factorizations have the same length.

The complement L* − su(L) is accepted by a one-counter machine that runs
two factorizations side by side and counts the difference in their
numbers of terms.  Emptiness of that machine is decided through its
context-free grammar.
"""

from __future__ import annotations

from .automata import Dfa
from .counter import (
    BOTTOM,
    COUNTER_ANY,
    NONZERO,
    TOP,
    OneCounterPda,
    cfg_nonempty,
    pda_to_cfg,
    signed_moves,
)
from .errors import EpsilonInLanguageError
from .oracle import slice_by_predicate


def build_su_counter_machine(dfa: Dfa) -> OneCounterPda:
    """One-counter machine accepting L* − su(L).

    States are ``(p, q, flag)``: the positions of two independent runs of
    the DFA, both starting at ``q0``, plus which run has cut more often.
    On each letter a run sitting in a final state may reset to ``q0``
    (ending a term); the counter tracks the difference in cuts.  From
    ``F × F`` an epsilon move testing nonzero reaches the accepting state.
    """
    if dfa.accepts_epsilon():
        raise EpsilonInLanguageError("su machine requires the empty word outside L")
    n = dfa.n_states
    q0 = dfa.initial
    F = dfa.finals

    def sid(p, q, flag):
        return (p * n + q) * 2 + flag

    accept = 2 * n * n
    transitions = []
    for p in range(n):
        for q in range(n):
            for flag in (TOP, BOTTOM):
                src = sid(p, q, flag)
                for a, sym in enumerate(dfa.alphabet):
                    firsts = [(dfa.delta[p][a], 0)]
                    if p in F:
                        firsts.append((dfa.delta[q0][a], 1))
                    seconds = [(dfa.delta[q][a], 0)]
                    if q in F:
                        seconds.append((dfa.delta[q0][a], 1))
                    for r1, cut1 in firsts:
                        for r2, cut2 in seconds:
                            for test, delta, nflag in signed_moves(flag, cut1 - cut2):
                                transitions.append((src, sym, test, delta, sid(r1, r2, nflag)))
                if p in F and q in F:
                    transitions.append((src, None, NONZERO, 0, accept))
    labels = tuple(
        f"({p},{q},{'top' if f == TOP else 'bottom'})"
        for p in range(n)
        for q in range(n)
        for f in (TOP, BOTTOM)
    ) + ("accept",)
    machine = OneCounterPda(
        accept + 1,
        dfa.alphabet,
        transitions,
        {sid(q0, q0, TOP)},
        {accept},
        COUNTER_ANY,
        labels,
    )
    return machine.trim()


def su_gap_exists(dfa: Dfa) -> bool:
    """Whether some word of L* has factorizations of different lengths."""
    return cfg_nonempty(pda_to_cfg(build_su_counter_machine(dfa)))


def su_slice(language, max_len: int) -> list:
    return slice_by_predicate(language, "su", max_len)
