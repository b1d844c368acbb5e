"""Finite automata over token alphabets.

Words are tuples of symbol tokens, never flat strings, so alphabets such as
``("a1", "a2", "b")`` stay unambiguous.  Every automaton is an immutable
value; all operations return new automata.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence, Union

from .errors import (
    AlphabetError,
    AlphabetMismatchError,
    EpsilonInLanguageError,
    RegexSyntaxError,
    SliceOverflowError,
    SpecFormatError,
    StateExplosionError,
    UnknownSymbolError,
)

Symbol = str
Word = tuple  # tuple[Symbol, ...]

DEFAULT_SLICE_CAP = 10**6
REGEX_OPERATORS = frozenset("|*+()")


def check_alphabet(alphabet: Iterable[Symbol]) -> tuple:
    alphabet = tuple(alphabet)
    if not alphabet:
        raise AlphabetError("alphabet must be non-empty")
    if len(set(alphabet)) != len(alphabet):
        raise AlphabetError(f"duplicate symbols in alphabet {alphabet!r}")
    for sym in alphabet:
        if not isinstance(sym, str) or not sym:
            raise AlphabetError(f"symbols must be non-empty strings, got {sym!r}")
        if any(ch.isspace() for ch in sym):
            raise AlphabetError(f"symbol {sym!r} contains whitespace")
    return alphabet


def as_word(obj, alphabet: Sequence[Symbol]) -> Word:
    """Coerce ``obj`` into a word over ``alphabet``.

    Sequences are taken token by token.  A string is split on whitespace if
    it contains any, otherwise it is tokenized greedily by longest match.
    """
    if isinstance(obj, str):
        if any(ch.isspace() for ch in obj):
            word = tuple(obj.split())
        else:
            word = tokenize(obj, alphabet)
    else:
        word = tuple(obj)
    known = set(alphabet)
    for i, sym in enumerate(word):
        if sym not in known:
            raise UnknownSymbolError(sym, i)
    return word


def tokenize(text: str, alphabet: Sequence[Symbol]) -> Word:
    by_length = sorted(alphabet, key=len, reverse=True)
    out = []
    i = 0
    while i < len(text):
        for sym in by_length:
            if text.startswith(sym, i):
                out.append(sym)
                i += len(sym)
                break
        else:
            raise UnknownSymbolError(text[i], i)
    return tuple(out)


def format_word(word: Word) -> str:
    if not word:
        return "ε"
    if all(len(sym) == 1 for sym in word):
        return "".join(word)
    return " ".join(word)


def format_factorization(factors) -> str:
    """Parenthesized display, e.g. ``(a)(ab)``."""
    return "".join(f"({format_word(f)})" for f in factors)


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton with states ``0..n-1``.

    ``delta[q][i]`` is the successor of ``q`` on ``alphabet[i]``.
    """

    alphabet: tuple
    delta: tuple
    initial: int
    finals: frozenset
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        n = len(self.delta)
        if n == 0:
            raise ValueError("a Dfa needs at least one state")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")
        for q, row in enumerate(self.delta):
            if len(row) != len(self.alphabet):
                raise ValueError(f"state {q} is missing transitions")
            for r in row:
                if not 0 <= r < n:
                    raise ValueError(f"transition target {r} out of range")
        if not all(0 <= f < n for f in self.finals):
            raise ValueError("final state out of range")

    @property
    def n_states(self) -> int:
        return len(self.delta)

    @cached_property
    def index(self) -> dict:
        return {sym: i for i, sym in enumerate(self.alphabet)}

    def step(self, q: int, symbol: Symbol) -> int:
        return self.delta[q][self.index[symbol]]

    def run(self, word: Iterable[Symbol], start: Optional[int] = None) -> int:
        q = self.initial if start is None else start
        idx = self.index
        for sym in word:
            try:
                q = self.delta[q][idx[sym]]
            except KeyError:
                raise UnknownSymbolError(sym) from None
        return q

    def accepts(self, word: Iterable[Symbol]) -> bool:
        return self.run(word) in self.finals

    def accepts_epsilon(self) -> bool:
        return self.initial in self.finals

    def successors(self, states: Iterable[int], i: int) -> frozenset:
        return frozenset(self.delta[q][i] for q in states)

    @property
    def start_states(self) -> frozenset:
        return frozenset((self.initial,))


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton without epsilon moves.

    ``delta[q][i]`` is the frozenset of successors of ``q`` on
    ``alphabet[i]``.  Several initial states are allowed.
    """

    alphabet: tuple
    delta: tuple
    initials: frozenset
    finals: frozenset
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(
            self, "delta", tuple(tuple(frozenset(t) for t in row) for row in self.delta)
        )
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        n = len(self.delta)
        for q, row in enumerate(self.delta):
            if len(row) != len(self.alphabet):
                raise ValueError(f"state {q} has {len(row)} transition sets")
            for targets in row:
                if any(not 0 <= r < n for r in targets):
                    raise ValueError(f"transition target out of range from state {q}")
        if any(not 0 <= q < n for q in self.initials | self.finals):
            raise ValueError("initial/final state out of range")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must cover every state")

    @classmethod
    def from_edges(cls, n_states, alphabet, edges, initials, finals, labels=None) -> "Nfa":
        """Build from ``{(state, symbol): iterable_of_states}``."""
        alphabet = check_alphabet(alphabet)
        index = {sym: i for i, sym in enumerate(alphabet)}
        rows = [[set() for _ in alphabet] for _ in range(n_states)]
        for (q, sym), targets in edges.items():
            rows[q][index[sym]].update(targets)
        return cls(alphabet, rows, initials, finals, labels)

    @property
    def n_states(self) -> int:
        return len(self.delta)

    @cached_property
    def index(self) -> dict:
        return {sym: i for i, sym in enumerate(self.alphabet)}

    @property
    def start_states(self) -> frozenset:
        return self.initials

    def successors(self, states: Iterable[int], i: int) -> frozenset:
        out = set()
        for q in states:
            out |= self.delta[q][i]
        return frozenset(out)

    def accepts(self, word: Iterable[Symbol]) -> bool:
        current = self.initials
        for sym in word:
            if sym not in self.index:
                raise UnknownSymbolError(sym)
            current = self.successors(current, self.index[sym])
            if not current:
                return False
        return bool(current & self.finals)

    def accepts_epsilon(self) -> bool:
        return bool(self.initials & self.finals)


Automaton = Union[Dfa, Nfa]


# --------------------------------------------------------------------------
# constructors for simple languages


def empty_dfa(alphabet) -> Dfa:
    alphabet = check_alphabet(alphabet)
    return Dfa(alphabet, [[0] * len(alphabet)], 0, ())


def universal_dfa(alphabet) -> Dfa:
    alphabet = check_alphabet(alphabet)
    return Dfa(alphabet, [[0] * len(alphabet)], 0, (0,))


def dfa_from_words(words: Iterable[Word], alphabet) -> Dfa:
    """Trie automaton for a finite language, completed with a sink."""
    alphabet = check_alphabet(alphabet)
    index = {sym: i for i, sym in enumerate(alphabet)}
    trie = [dict()]
    finals = set()
    for word in words:
        q = 0
        for sym in word:
            if sym not in index:
                raise UnknownSymbolError(sym)
            nxt = trie[q].get(sym)
            if nxt is None:
                trie.append(dict())
                nxt = len(trie) - 1
                trie[q][sym] = nxt
            q = nxt
        finals.add(q)
    sink = len(trie)
    delta = [[trie[q].get(sym, sink) for sym in alphabet] for q in range(len(trie))]
    delta.append([sink] * len(alphabet))
    return Dfa(alphabet, delta, 0, finals)


# --------------------------------------------------------------------------
# regular expressions: | union, * star, + Kleene plus, parentheses, tokens


def _lex_regex(pattern: str, alphabet):
    by_length = sorted(alphabet, key=len, reverse=True)
    tokens = []
    i = 0
    while i < len(pattern):
        ch = pattern[i]
        if ch.isspace():
            i += 1
            continue
        if ch in REGEX_OPERATORS:
            tokens.append((ch, None, i))
            i += 1
            continue
        for sym in by_length:
            if pattern.startswith(sym, i):
                tokens.append(("sym", sym, i))
                i += len(sym)
                break
        else:
            raise UnknownSymbolError(ch, i)
    tokens.append(("end", None, len(pattern)))
    return tokens


class _Thompson:
    """Epsilon-NFA fragments built while parsing."""

    def __init__(self):
        self.eps = []
        self.moves = []  # (src, symbol, dst)

    def new_state(self) -> int:
        self.eps.append([])
        return len(self.eps) - 1

    def symbol(self, sym):
        s, t = self.new_state(), self.new_state()
        self.moves.append((s, sym, t))
        return s, t

    def concat(self, a, b):
        self.eps[a[1]].append(b[0])
        return a[0], b[1]

    def union(self, a, b):
        s, t = self.new_state(), self.new_state()
        self.eps[s] += [a[0], b[0]]
        self.eps[a[1]].append(t)
        self.eps[b[1]].append(t)
        return s, t

    def star(self, a):
        s, t = self.new_state(), self.new_state()
        self.eps[s] += [a[0], t]
        self.eps[a[1]] += [a[0], t]
        return s, t

    def plus(self, a):
        s, t = self.new_state(), self.new_state()
        self.eps[s].append(a[0])
        self.eps[a[1]] += [a[0], t]
        return s, t


class _RegexParser:
    def __init__(self, tokens, builder):
        self.tokens = tokens
        self.pos = 0
        self.b = builder

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self):
        frag = self.union()
        kind, _, at = self.peek()
        if kind != "end":
            raise RegexSyntaxError(f"unexpected {kind!r}", at)
        return frag

    def union(self):
        frag = self.concat()
        while self.peek()[0] == "|":
            self.take()
            frag = self.b.union(frag, self.concat())
        return frag

    def concat(self):
        kind, _, at = self.peek()
        if kind not in ("sym", "("):
            what = "end of pattern" if kind == "end" else repr(kind)
            raise RegexSyntaxError(f"expected a symbol or '(' but found {what}", at)
        frag = self.postfix()
        while self.peek()[0] in ("sym", "("):
            frag = self.b.concat(frag, self.postfix())
        return frag

    def postfix(self):
        frag = self.atom()
        while self.peek()[0] in ("*", "+"):
            op = self.take()[0]
            frag = self.b.star(frag) if op == "*" else self.b.plus(frag)
        return frag

    def atom(self):
        kind, sym, at = self.take()
        if kind == "sym":
            return self.b.symbol(sym)
        if kind == "(":
            frag = self.union()
            closing = self.take()
            if closing[0] != ")":
                raise RegexSyntaxError("unbalanced parenthesis", closing[2])
            return frag
        raise RegexSyntaxError(f"unexpected {kind!r}", at)


def _eps_closure(eps, q):
    seen = {q}
    stack = [q]
    while stack:
        p = stack.pop()
        for r in eps[p]:
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return seen


def compile_regex(pattern: str, alphabet) -> Nfa:
    """Compile ``pattern`` to an epsilon-free NFA over ``alphabet``."""
    alphabet = check_alphabet(alphabet)
    if any(ch in REGEX_OPERATORS for sym in alphabet for ch in sym):
        raise AlphabetError("alphabet symbols may not contain regex operators")
    builder = _Thompson()
    start, accept = _RegexParser(_lex_regex(pattern, alphabet), builder).parse()

    closures = [_eps_closure(builder.eps, q) for q in range(len(builder.eps))]
    moves_from = [[] for _ in builder.eps]
    for s, sym, t in builder.moves:
        moves_from[s].append((sym, t))

    # keep only the start state and targets of symbol moves
    keep = [start] + sorted({t for _, _, t in builder.moves} - {start})
    renum = {q: i for i, q in enumerate(keep)}
    edges = {}
    finals = set()
    for q in keep:
        if accept in closures[q]:
            finals.add(renum[q])
        for p in closures[q]:
            for sym, t in moves_from[p]:
                edges.setdefault((renum[q], sym), set()).add(renum[t])
    return trim(Nfa.from_edges(len(keep), alphabet, edges, {0}, finals))


def trim(nfa: Nfa) -> Nfa:
    """Drop states that are unreachable or cannot reach a final state."""
    reach = _reachable(nfa)
    co = _coreachable(nfa)
    live = sorted(reach & co)
    if not live:
        return Nfa(nfa.alphabet, [], (), ())
    renum = {q: i for i, q in enumerate(live)}
    rows = [
        [{renum[r] for r in nfa.delta[q][i] if r in renum} for i in range(len(nfa.alphabet))]
        for q in live
    ]
    labels = None if nfa.labels is None else tuple(nfa.labels[q] for q in live)
    return Nfa(
        nfa.alphabet,
        rows,
        {renum[q] for q in nfa.initials if q in renum},
        {renum[q] for q in nfa.finals if q in renum},
        labels,
    )


def _reachable(m: Automaton) -> set:
    seen = set(m.start_states)
    queue = deque(seen)
    k = len(m.alphabet)
    while queue:
        q = queue.popleft()
        for i in range(k):
            for r in m.successors((q,), i):
                if r not in seen:
                    seen.add(r)
                    queue.append(r)
    return seen


def _coreachable(m: Automaton) -> set:
    preds = [set() for _ in range(m.n_states)]
    for q in range(m.n_states):
        for i in range(len(m.alphabet)):
            for r in m.successors((q,), i):
                preds[r].add(q)
    seen = set(m.finals)
    stack = list(seen)
    while stack:
        r = stack.pop()
        for q in preds[r]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


# --------------------------------------------------------------------------
# determinization, minimization, Boolean combinations


def determinize(nfa: Automaton, max_states: Optional[int] = None) -> Dfa:
    """Subset construction; the empty subset acts as the sink."""
    if isinstance(nfa, Dfa):
        return nfa
    start = nfa.initials
    ids = {start: 0}
    order = [start]
    delta = []
    k = len(nfa.alphabet)
    i = 0
    while i < len(order):
        subset = order[i]
        row = []
        for a in range(k):
            nxt = nfa.successors(subset, a)
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
                if max_states is not None and len(order) > max_states:
                    raise StateExplosionError(max_states)
            row.append(ids[nxt])
        delta.append(row)
        i += 1
    finals = {ids[s] for s in order if s & nfa.finals}
    return Dfa(nfa.alphabet, delta, 0, finals)


def minimize(dfa: Dfa) -> Dfa:
    """Moore partition refinement on the reachable part, canonically numbered."""
    reach = sorted(_reachable(dfa))
    k = len(dfa.alphabet)
    block = {q: int(q in dfa.finals) for q in reach}
    n_blocks = len(set(block.values()))
    while True:
        sigs = {}
        new_block = {}
        for q in reach:
            sig = (block[q],) + tuple(block[dfa.delta[q][a]] for a in range(k))
            new_block[q] = sigs.setdefault(sig, len(sigs))
        block = new_block
        if len(sigs) == n_blocks:
            break
        n_blocks = len(sigs)

    # BFS renumbering from the initial block gives a canonical form
    rep = {}
    for q in reach:
        rep.setdefault(block[q], q)
    order = {block[dfa.initial]: 0}
    queue = deque([block[dfa.initial]])
    delta = []
    while queue:
        b = queue.popleft()
        q = rep[b]
        row = []
        for a in range(k):
            nb = block[dfa.delta[q][a]]
            if nb not in order:
                order[nb] = len(order)
                queue.append(nb)
            row.append(order[nb])
        delta.append(row)
    finals = {order[block[q]] for q in reach if q in dfa.finals}
    return Dfa(dfa.alphabet, delta, 0, finals)


def _aligned(a: Automaton, b: Automaton) -> list:
    """Index map from ``a``'s alphabet positions to ``b``'s."""
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetMismatchError(f"{a.alphabet!r} != {b.alphabet!r}")
    return [b.index[sym] for sym in a.alphabet]


def product(a: Dfa, b: Dfa, combine: Callable[[bool, bool], bool]) -> Dfa:
    """Reachable product automaton accepting ``combine(a(w), b(w))``."""
    amap = _aligned(a, b)
    k = len(a.alphabet)
    start = (a.initial, b.initial)
    ids = {start: 0}
    order = [start]
    delta = []
    i = 0
    while i < len(order):
        p, q = order[i]
        row = []
        for s in range(k):
            nxt = (a.delta[p][s], b.delta[q][amap[s]])
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
            row.append(ids[nxt])
        delta.append(row)
        i += 1
    finals = {
        ids[(p, q)] for (p, q) in order if combine(p in a.finals, q in b.finals)
    }
    return Dfa(a.alphabet, delta, 0, finals)


def intersection(a: Dfa, b: Dfa) -> Dfa:
    return product(a, b, lambda x, y: x and y)


def union(a: Dfa, b: Dfa) -> Dfa:
    return product(a, b, lambda x, y: x or y)


def complement(a: Dfa) -> Dfa:
    return Dfa(a.alphabet, a.delta, a.initial, set(range(a.n_states)) - a.finals)


def complement_within(a: Dfa, universe: Dfa) -> Dfa:
    """Accepts the words of ``universe`` that ``a`` rejects."""
    return product(universe, a, lambda u, x: u and not x)


def star_nfa(dfa: Dfa) -> Nfa:
    """Epsilon-free NFA for ``L(dfa)*``.

    Built by adding epsilon moves from every final state back to a start
    state and eliminating them.  A fresh start state ``n`` (accepting, and
    the only final state) stands for "at a factor boundary", so the original
    initial state may safely have incoming transitions.  Accepting paths are
    in bijection with factorizations, which the saturating-matrix
    construction relies on.
    """
    if dfa.accepts_epsilon():
        raise EpsilonInLanguageError("star_nfa requires the empty word outside L")
    n = dfa.n_states
    boundary = n
    k = len(dfa.alphabet)
    rows = []
    for q in list(range(n)) + [boundary]:
        src = dfa.initial if q == boundary else q
        row = []
        for a in range(k):
            r = dfa.delta[src][a]
            row.append({r, boundary} if r in dfa.finals else {r})
        rows.append(row)
    labels = tuple(str(q) for q in range(n)) + ("•",)
    return Nfa(dfa.alphabet, rows, {boundary}, {boundary}, labels)


def star_dfa(dfa: Dfa) -> Dfa:
    return minimize(determinize(star_nfa(dfa)))


# --------------------------------------------------------------------------
# searches


def shortest_accepted(m: Automaton) -> Optional[Word]:
    """Shortest accepted word, lexicographically least in alphabet order.

    BFS over single states, one level at a time.  States first reached by
    the same word form a group; groups are expanded in word order and each
    group symbol by symbol, so every state is first reached by the
    length-lex least word leading to it.
    """
    starts = sorted(m.start_states)
    if any(q in m.finals for q in starts):
        return ()
    seen = set(starts)
    level = [((), starts)]
    while level:
        nxt = []
        for word, states in level:
            for a, sym in enumerate(m.alphabet):
                group = []
                for r in sorted(m.successors(states, a)):
                    if r not in seen:
                        seen.add(r)
                        group.append(r)
                if not group:
                    continue
                longer = word + (sym,)
                if any(r in m.finals for r in group):
                    return longer
                nxt.append((longer, group))
        level = nxt
    return None


def is_empty(m: Automaton) -> bool:
    return shortest_accepted(m) is None


def equivalent(a: Dfa, b: Dfa):
    """Return ``(True, None)`` or ``(False, shortest distinguishing word)``."""
    amap = _aligned(a, b)
    k = len(a.alphabet)
    start = (a.initial, b.initial)
    parent = {start: None}
    queue = deque([start])
    while queue:
        p, q = pair = queue.popleft()
        if (p in a.finals) != (q in b.finals):
            word = []
            while parent[pair] is not None:
                pair, s = parent[pair]
                word.append(a.alphabet[s])
            return False, tuple(reversed(word))
        for s in range(k):
            nxt = (a.delta[p][s], b.delta[q][amap[s]])
            if nxt not in parent:
                parent[nxt] = (pair, s)
                queue.append(nxt)
    return True, None


def enumerate_slice(m: Automaton, max_len: int, cap: int = DEFAULT_SLICE_CAP) -> list:
    """All accepted words of length at most ``max_len``, length-then-lex.

    Raises SliceOverflowError once more than ``cap`` words (or live
    prefixes) are produced.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    live = _coreachable(m)
    start = frozenset(m.start_states) & live
    out = []
    if not start:
        return out
    frontier = [((), start)]
    k = len(m.alphabet)
    for length in range(max_len + 1):
        for word, states in frontier:
            if states & m.finals:
                out.append(word)
                if len(out) > cap:
                    raise SliceOverflowError(cap, len(out))
        if length == max_len:
            break
        nxt = []
        for word, states in frontier:
            for a in range(k):
                succ = m.successors(states, a) & live
                if succ:
                    nxt.append((word + (m.alphabet[a],), succ))
        if len(nxt) > cap:
            raise SliceOverflowError(cap, len(nxt))
        frontier = nxt
    return out


def all_words(alphabet, max_len: int):
    """Every word over ``alphabet`` up to ``max_len``, length-then-lex."""
    level = [()]
    for length in range(max_len + 1):
        yield from level
        if length < max_len:
            level = [w + (a,) for w in level for a in alphabet]


# --------------------------------------------------------------------------
# DOT export


def _dot_quote(text) -> str:
    return '"{}"'.format(str(text).replace("\\", "\\\\").replace('"', '\\"'))


def to_dot(m: Automaton, name: str = "automaton") -> str:
    labels = m.labels if m.labels is not None else tuple(str(q) for q in range(m.n_states))
    lines = [f"digraph {_dot_quote(name)} {{", "  rankdir=LR;"]
    for q in range(m.n_states):
        shape = "doublecircle" if q in m.finals else "circle"
        lines.append(f"  q{q} [label={_dot_quote(labels[q])}, shape={shape}];")
    for i, q in enumerate(sorted(m.start_states)):
        lines.append(f"  start{i} [shape=point];")
        lines.append(f"  start{i} -> q{q};")
    for q in range(m.n_states):
        grouped = {}
        for a, sym in enumerate(m.alphabet):
            for r in sorted(m.successors((q,), a)):
                grouped.setdefault(r, []).append(sym)
        for r, syms in sorted(grouped.items()):
            lines.append(f"  q{q} -> q{r} [label={_dot_quote(','.join(syms))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# language descriptions


@dataclass(frozen=True)
class LanguageSpec:
    """A finite word list or a regex, over a declared alphabet."""

    kind: str
    alphabet: tuple
    words: tuple = ()
    pattern: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        if self.kind == "finite":
            words = tuple(as_word(w, self.alphabet) for w in self.words)
            if len(set(words)) != len(words):
                raise SpecFormatError("finite language lists a word twice")
            object.__setattr__(self, "words", words)
        elif self.kind == "regex":
            if not isinstance(self.pattern, str):
                raise SpecFormatError("regex language needs a pattern")
        else:
            raise SpecFormatError(f"unknown kind {self.kind!r}")

    @classmethod
    def finite(cls, words, alphabet) -> "LanguageSpec":
        return cls("finite", tuple(alphabet), tuple(words))

    @classmethod
    def regex(cls, pattern, alphabet) -> "LanguageSpec":
        return cls("regex", tuple(alphabet), pattern=pattern)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def to_nfa(self) -> Automaton:
        if self.is_finite:
            return dfa_from_words(self.words, self.alphabet)
        return compile_regex(self.pattern, self.alphabet)

    @cached_property
    def dfa(self) -> Dfa:
        """Minimal complete DFA."""
        return minimize(determinize(self.to_nfa()))

    def contains(self, word) -> bool:
        word = tuple(word)
        if self.is_finite:
            return word in self._word_set
        return self.dfa.accepts(word)

    @cached_property
    def _word_set(self) -> frozenset:
        return frozenset(self.words)

    def to_json(self) -> dict:
        doc = {"alphabet": list(self.alphabet), "kind": self.kind}
        if self.is_finite:
            doc["words"] = [list(w) for w in self.words]
        else:
            doc["pattern"] = self.pattern
        return doc

    @classmethod
    def from_json(cls, doc) -> "LanguageSpec":
        if not isinstance(doc, dict):
            raise SpecFormatError("language spec must be a JSON object")
        try:
            kind = doc["kind"]
            alphabet = doc["alphabet"]
        except KeyError as exc:
            raise SpecFormatError(f"missing field {exc.args[0]!r}") from None
        if not isinstance(alphabet, list):
            raise SpecFormatError("alphabet must be a list of tokens")
        try:
            if kind == "finite":
                words = doc.get("words")
                if not isinstance(words, list):
                    raise SpecFormatError("finite language needs a 'words' list")
                return cls.finite(words, alphabet)
            return cls(kind, tuple(alphabet), pattern=doc.get("pattern"))
        except AlphabetError as exc:
            raise SpecFormatError(str(exc)) from exc

    @classmethod
    def load(cls, path) -> "LanguageSpec":
        try:
            doc = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise SpecFormatError(f"{path}: {exc}") from exc
        return cls.from_json(doc)

    def dump(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=2) + "\n")
