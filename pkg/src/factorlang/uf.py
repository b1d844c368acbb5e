"""Regular constructions for uf(L), the words with unique factorization.

Two independent routes are provided.  ``build_double_nfa`` guesses two
factorizations at once and accepts the words having at least two, so
uf(L) is its complement inside L*.  ``matrix_uf_dfa`` instead tracks path
counts of the star automaton as matrices saturated at 2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian

from .automata import (
    Dfa,
    Nfa,
    complement_within,
    determinize,
    empty_dfa,
    minimize,
    shortest_accepted,
    star_dfa,
    star_nfa,
)
from .errors import EpsilonInLanguageError, StateExplosionError

DEFAULT_MATRIX_CAP = 10**5


def pair_state(n: int, p: int, q: int) -> int:
    return n + p * n + q


def build_double_nfa(dfa: Dfa) -> Nfa:
    """NFA over ``Q ∪ Q×Q`` accepting words of L* with two factorizations.

    Single states follow one shared factorization.  From a final single
    state ``q`` the next letter may continue the current factor, start a
    new one, or split into the pair ``[δ(q0,a), δ(q,a)]`` where the first
    coordinate cut and the second did not.  In pair states each coordinate
    may independently reset to ``q0`` whenever it sits in a final state.
    Pair states with both coordinates final are accepting.
    """
    if dfa.accepts_epsilon():
        raise EpsilonInLanguageError("uf(L) is empty when L contains the empty word")
    n = dfa.n_states
    k = len(dfa.alphabet)
    q0 = dfa.initial
    F = dfa.finals
    rows = []
    for q in range(n):
        row = []
        for a in range(k):
            r, t = dfa.delta[q][a], dfa.delta[q0][a]
            if q in F:
                row.append({r, t, pair_state(n, t, r)})
            else:
                row.append({r})
        rows.append(row)
    for p in range(n):
        for q in range(n):
            row = []
            for a in range(k):
                r, s, t = dfa.delta[p][a], dfa.delta[q][a], dfa.delta[q0][a]
                firsts = (r, t) if p in F else (r,)
                seconds = (s, t) if q in F else (s,)
                row.append({pair_state(n, x, y) for x in firsts for y in seconds})
            rows.append(row)
    finals = {pair_state(n, p, q) for p in F for q in F}
    labels = tuple(str(q) for q in range(n)) + tuple(
        f"[{p},{q}]" for p in range(n) for q in range(n)
    )
    return Nfa(dfa.alphabet, rows, {q0}, finals, labels)


def uf_dfa(dfa: Dfa) -> Dfa:
    """Minimal DFA for uf(L) = L* minus L(M')."""
    if dfa.accepts_epsilon():
        return empty_dfa(dfa.alphabet)
    ambiguous = determinize(build_double_nfa(dfa))
    return minimize(complement_within(ambiguous, star_dfa(dfa)))


def _transition_matrices(nfa: Nfa):
    """Per letter, the successor lists of each state (a sparse 0/1 matrix)."""
    return [
        [tuple(sorted(nfa.delta[q][a])) for q in range(nfa.n_states)]
        for a in range(len(nfa.alphabet))
    ]


def saturating_product(x: tuple, succ, m: int) -> tuple:
    """``x · M`` with entries clipped to 2; ``x`` is a flat m×m tuple."""
    out = [0] * (m * m)
    for i in range(m):
        base = i * m
        for kk in range(m):
            v = x[base + kk]
            if v:
                for j in succ[kk]:
                    out[base + j] = min(2, out[base + j] + v)
    return tuple(out)


def matrix_uf_dfa(dfa: Dfa, max_states: int = DEFAULT_MATRIX_CAP, minimal: bool = True) -> Dfa:
    """DFA whose states are the reachable saturated transition matrices.

    A word is accepted iff its matrix has a 1 in the (start, start) entry
    of the star automaton, i.e. exactly one path, i.e. one factorization.
    The identity matrix is the initial state, so the empty word is accepted.
    """
    star = star_nfa(dfa)
    m = star.n_states
    s0 = next(iter(star.initials))
    letters = _transition_matrices(star)
    identity = tuple(int(i == j) for i in range(m) for j in range(m))
    ids = {identity: 0}
    order = [identity]
    delta = []
    i = 0
    while i < len(order):
        x = order[i]
        row = []
        for succ in letters:
            y = saturating_product(x, succ, m)
            if y not in ids:
                if len(order) >= max_states:
                    raise StateExplosionError(max_states)
                ids[y] = len(order)
                order.append(y)
            row.append(ids[y])
        delta.append(row)
        i += 1
    finals = {ids[x] for x in order if x[s0 * m + s0] == 1}
    result = Dfa(dfa.alphabet, delta, 0, finals)
    return minimize(result) if minimal else result


@dataclass(frozen=True)
class CodeTest:
    is_code: bool
    witness: tuple = None
    n_states: int = 0

    @property
    def bound(self) -> int:
        """Witness length bound ``n² + n`` (strict)."""
        return self.n_states ** 2 + self.n_states

    def __bool__(self):
        return self.is_code


def is_code(dfa: Dfa) -> CodeTest:
    """Decide whether L(dfa) is a code; otherwise give the shortest ambiguous word."""
    n = dfa.n_states
    if dfa.accepts_epsilon():
        return CodeTest(False, (), n)
    witness = shortest_accepted(build_double_nfa(dfa))
    return CodeTest(witness is None, witness, n)


# --------------------------------------------------------------------------
# PALSTAR: concatenations of one or more even-length palindromes


@lru_cache(maxsize=None)
def _is_even_pal(s: str) -> bool:
    return len(s) % 2 == 0 and len(s) > 0 and s == s[::-1]


@lru_cache(maxsize=None)
def is_palstar(s: str) -> bool:
    return any(
        _is_even_pal(s[:k]) and (k == len(s) or is_palstar(s[k:]))
        for k in range(2, len(s) + 1, 2)
    )


def is_primepalstar(s: str) -> bool:
    """In PALSTAR but not a product of two or more PALSTAR words."""
    if not is_palstar(s):
        return False
    return not any(is_palstar(s[:k]) and is_palstar(s[k:]) for k in range(1, len(s)))


@lru_cache(maxsize=None)
def count_palstar_factorizations(s: str) -> int:
    """Factorizations of ``s`` into PALSTAR words, saturated at 2."""
    if not s:
        return 1
    total = 0
    for k in range(2, len(s) + 1, 2):
        if is_palstar(s[:k]):
            total += count_palstar_factorizations(s[k:])
            if total >= 2:
                return 2
    return total


@lru_cache(maxsize=None)
def count_evenpal_factorizations(s: str) -> int:
    """Factorizations of ``s`` into even palindromes, saturated at 2."""
    if not s:
        return 1
    total = 0
    for k in range(2, len(s) + 1, 2):
        if _is_even_pal(s[:k]):
            total += count_evenpal_factorizations(s[k:])
            if total >= 2:
                return 2
    return total


@dataclass
class PalstarReport:
    max_len: int
    alphabet: tuple
    words_checked: int = 0
    palstar: int = 0
    primepalstar: int = 0
    uf: int = 0
    mismatches: list = field(default_factory=list)
    evenpal_unique_not_prime: list = field(default_factory=list)
    evenpal_unique_not_prime_count: int = 0

    @property
    def agrees(self) -> bool:
        return not self.mismatches


def palstar_uf_check(max_len: int = 14, alphabet=("0", "1")) -> PalstarReport:
    """Compare uf(PALSTAR) with PRIMEPALSTAR on all non-empty words up to ``max_len``.

    uf membership counts factorizations into PALSTAR words.  Words with a
    single even-palindrome factorization that are still not prime (such as
    ``0011``) are recorded separately, since the two notions differ.
    """
    if max_len > 20:
        raise ValueError("max_len above 20 is beyond desk scale")
    a, b = alphabet
    report = PalstarReport(max_len, tuple(alphabet))
    for length in range(1, max_len + 1):
        for letters in cartesian((a, b), repeat=length):
            s = "".join("0" if c == a else "1" for c in letters)
            report.words_checked += 1
            in_ps = is_palstar(s)
            prime = is_primepalstar(s)
            unique = in_ps and count_palstar_factorizations(s) == 1
            report.palstar += in_ps
            report.primepalstar += prime
            report.uf += unique
            if unique != prime:
                report.mismatches.append("".join(letters))
            if in_ps and count_evenpal_factorizations(s) == 1 and not prime:
                report.evenpal_unique_not_prime_count += 1
                if len(report.evenpal_unique_not_prime) < 20:
                    report.evenpal_unique_not_prime.append("".join(letters))
    return report
