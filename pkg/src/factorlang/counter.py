"""One-counter pushdown machines, their grammars, and grammar emptiness.

A one-counter machine is a PDA whose stack holds ``X^c Z`` for a counter
value ``c``.  ``pda_to_cfg`` is the usual state-triple construction applied
to that stack; ``cfg_nonempty`` is the generating-nonterminal fixpoint.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .automata import _dot_quote, check_alphabet

ZERO, NONZERO, ANY = "zero", "nonzero", "any"
COUNTER_NONZERO, COUNTER_ANY = "counter_nonzero", "counter_any"
TOP, BOTTOM = 0, 1


class Transition(NamedTuple):
    src: int
    symbol: Optional[str]  # None for an epsilon move
    test: str
    delta: int
    dst: int


@dataclass(frozen=True)
class OneCounterPda:
    n_states: int
    alphabet: tuple
    transitions: tuple
    initials: frozenset
    finals: frozenset
    accept_condition: str = COUNTER_ANY
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(self, "transitions", tuple(Transition(*t) for t in self.transitions))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        known = set(self.alphabet)
        for t in self.transitions:
            if not (0 <= t.src < self.n_states and 0 <= t.dst < self.n_states):
                raise ValueError(f"state out of range in {t}")
            if t.symbol is not None and t.symbol not in known:
                raise ValueError(f"unknown symbol in {t}")
            if t.test not in (ZERO, NONZERO, ANY):
                raise ValueError(f"bad counter test in {t}")
            if t.delta not in (-1, 0, 1):
                raise ValueError(f"counter delta must be -1, 0 or +1 in {t}")
            if t.delta == -1 and t.test != NONZERO:
                raise ValueError(f"decrement without a nonzero test in {t}")
        if self.accept_condition not in (COUNTER_NONZERO, COUNTER_ANY):
            raise ValueError(self.accept_condition)

    def _by_source(self):
        table = defaultdict(list)
        for t in self.transitions:
            table[t.src, t.symbol].append(t)
        return table

    @staticmethod
    def _fires(t: Transition, c: int) -> bool:
        return t.test == ANY or (t.test == ZERO) == (c == 0)

    def _closure(self, configs, table, bound):
        seen = set(configs)
        queue = deque(configs)
        while queue:
            q, c = queue.popleft()
            for t in table.get((q, None), ()):
                if self._fires(t, c):
                    nxt = (t.dst, c + t.delta)
                    if nxt[1] <= bound and nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
        return seen

    def accepts(self, word, max_counter: Optional[int] = None) -> bool:
        """Simulate with the counter bounded by ``max_counter``.

        The default bound ``len(word) + 2`` is exact for the machines in
        this package, whose counters never exceed the number of factors.
        """
        word = tuple(word)
        bound = len(word) + 2 if max_counter is None else max_counter
        table = self._by_source()
        configs = self._closure({(q, 0) for q in self.initials}, table, bound)
        for sym in word:
            stepped = set()
            for q, c in configs:
                for t in table.get((q, sym), ()):
                    if self._fires(t, c) and c + t.delta <= bound:
                        stepped.add((t.dst, c + t.delta))
            if not stepped:
                return False
            configs = self._closure(stepped, table, bound)
        for q, c in configs:
            if q in self.finals and (self.accept_condition == COUNTER_ANY or c > 0):
                return True
        return False

    def trim(self) -> "OneCounterPda":
        """Drop states unreachable from an initial state or unable to reach a final one.

        The counter is ignored, so this over-approximates usefulness and
        never changes the language.
        """
        fwd = defaultdict(set)
        bwd = defaultdict(set)
        for t in self.transitions:
            fwd[t.src].add(t.dst)
            bwd[t.dst].add(t.src)
        reach = _closure_graph(self.initials, fwd)
        co = _closure_graph(self.finals, bwd)
        live = sorted(reach & co)
        renum = {q: i for i, q in enumerate(live)}
        trans = [
            t._replace(src=renum[t.src], dst=renum[t.dst])
            for t in self.transitions
            if t.src in renum and t.dst in renum
        ]
        labels = None if self.labels is None else tuple(self.labels[q] for q in live)
        return OneCounterPda(
            len(live),
            self.alphabet,
            trans,
            {renum[q] for q in self.initials if q in renum},
            {renum[q] for q in self.finals if q in renum},
            self.accept_condition,
            labels,
        )


def signed_moves(flag: int, diff: int):
    """Counter transitions realizing a signed change ``diff`` in {-1, 0, 1}.

    A signed difference is kept as a magnitude on the counter plus a flag
    naming the side (TOP or BOTTOM) that is ahead.  Yields
    ``(test, delta, new_flag)`` alternatives.
    """
    if diff == 0:
        yield ANY, 0, flag
        return
    ahead = TOP if diff > 0 else BOTTOM
    if flag == ahead:
        yield ANY, 1, flag
    else:
        yield NONZERO, -1, flag
        yield ZERO, 1, ahead


def pda_to_dot(pda: OneCounterPda, name: str = "machine") -> str:
    """DOT rendering; edges read ``symbol; test; counter change``."""
    labels = pda.labels if pda.labels is not None else tuple(map(str, range(pda.n_states)))
    lines = [f"digraph {_dot_quote(name)} {{", "  rankdir=LR;"]
    for q in range(pda.n_states):
        shape = "doublecircle" if q in pda.finals else "circle"
        lines.append(f"  q{q} [label={_dot_quote(labels[q])}, shape={shape}];")
    for i, q in enumerate(sorted(pda.initials)):
        lines.append(f"  start{i} [shape=point];")
        lines.append(f"  start{i} -> q{q};")
    for t in sorted(pda.transitions, key=lambda t: (t.src, t.dst, t.symbol or "", t.test, t.delta)):
        label = f"{t.symbol or 'ε'}; {t.test}; {t.delta:+d}"
        lines.append(f"  q{t.src} -> q{t.dst} [label={_dot_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _closure_graph(start, edges) -> set:
    seen = set(start)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for r in edges[q]:
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return seen


# --------------------------------------------------------------------------
# context-free grammars


@dataclass(frozen=True)
class Cfg:
    """Grammar whose terminals are strings and nonterminals are tuples.

    ``productions`` is a tuple of ``(head, body)`` with ``body`` a tuple of
    terminals and nonterminals; the empty body derives the empty word.
    """

    nonterminals: frozenset
    terminals: frozenset
    productions: tuple
    start: tuple

    def __post_init__(self):
        for head, body in self.productions:
            if head not in self.nonterminals:
                raise ValueError(f"undeclared head {head!r}")
            for sym in body:
                if isinstance(sym, tuple):
                    if sym not in self.nonterminals:
                        raise ValueError(f"undeclared nonterminal {sym!r}")
                elif sym not in self.terminals:
                    raise ValueError(f"undeclared terminal {sym!r}")

    def dump(self) -> str:
        """One line per nonterminal: ``S -> a T | ε``."""
        grouped = defaultdict(list)
        for head, body in self.productions:
            grouped[head].append(body)

        def name(sym):
            if not isinstance(sym, tuple):
                return sym
            return sym[0] if len(sym) == 1 else "[" + ",".join(map(str, sym)) + "]"

        heads = [self.start] + sorted((h for h in grouped if h != self.start), key=repr)
        lines = []
        for head in heads:
            if head not in grouped:
                continue
            alts = [" ".join(name(s) for s in body) or "ε" for body in grouped[head]]
            lines.append(f"{name(head)} -> {' | '.join(alts)}")
        return "\n".join(lines) + "\n"


def generating_nonterminals(g: Cfg) -> set:
    """Least fixpoint of "some production has an all-generating body"."""
    pending = []
    users = defaultdict(list)
    generating = set()
    queue = deque()
    for idx, (head, body) in enumerate(g.productions):
        needs = {s for s in body if isinstance(s, tuple)}
        pending.append(len(needs))
        for s in needs:
            users[s].append(idx)
        if not needs and head not in generating:
            generating.add(head)
            queue.append(head)
    while queue:
        nt = queue.popleft()
        for idx in users[nt]:
            pending[idx] -= 1
            if pending[idx] == 0:
                head = g.productions[idx][0]
                if head not in generating:
                    generating.add(head)
                    queue.append(head)
    return generating


def cfg_nonempty(g: Cfg) -> bool:
    return g.start in generating_nonterminals(g)


STACK_X, STACK_Z = "X", "Z"
DRAIN = "drain"
START = ("S",)


def pda_to_cfg(pda: OneCounterPda) -> Cfg:
    """Triple construction ``[p, A, r]`` for the stack ``X^c Z``.

    ``[p, A, r]`` derives the inputs that take the machine from ``p`` with
    ``A`` on top to ``r`` having just popped ``A``.  Acceptance by final
    state becomes acceptance by empty stack through a drain state entered
    from final states (from ``X`` only when the counter must be nonzero).
    Only nonterminals reachable from the start symbol are produced, and a
    push ``[p,A,r] -> a [p',X,s][s,A,r]`` is emitted only for ``s`` that
    some transition can enter by popping, since no other ``[p',X,s]``
    derives anything.
    """
    pda = pda.trim()
    table = defaultdict(list)
    for t in pda.transitions:
        table[t.src].append(t)
    pop_targets = sorted({t.dst for t in pda.transitions if t.delta == -1}) + [DRAIN]

    productions = []
    nonterminals = {START}
    queue = deque()

    def nt(p, a, r):
        sym = (p, a, r)
        if sym not in nonterminals:
            nonterminals.add(sym)
            queue.append(sym)
        return sym

    for q in sorted(pda.initials):
        productions.append((START, (nt(q, STACK_Z, DRAIN),)))

    while queue:
        head = queue.popleft()
        p, top, r = head
        if p == DRAIN:
            if r == DRAIN:
                productions.append((head, ()))
            continue
        if p in pda.finals:
            if top == STACK_X and r == DRAIN:
                productions.append((head, ()))
            if top == STACK_Z and r == DRAIN and pda.accept_condition == COUNTER_ANY:
                productions.append((head, ()))
        for t in table[p]:
            if top == STACK_Z and t.test == NONZERO:
                continue
            if top == STACK_X and t.test == ZERO:
                continue
            read = () if t.symbol is None else (t.symbol,)
            if t.delta == -1:
                if t.dst == r:
                    productions.append((head, read))
            elif t.delta == 0:
                productions.append((head, read + (nt(t.dst, top, r),)))
            else:
                for s in pop_targets:
                    productions.append(
                        (head, read + (nt(t.dst, STACK_X, s), nt(s, top, r)))
                    )
    # [p, Z, r] can only pop Z through the drain, so r is always DRAIN.
    return Cfg(frozenset(nonterminals), frozenset(pda.alphabet), tuple(productions), START)
