"""Hypothesis strategies for small automata and finite languages."""

from hypothesis import strategies as st

from factorlang.automata import Dfa, LanguageSpec


@st.composite
def dfas(draw, max_states=4, alphabet=("a", "b")):
    """Complete DFAs whose initial state is not final."""
    n = draw(st.integers(1, max_states))
    delta = [[draw(st.integers(0, n - 1)) for _ in alphabet] for _ in range(n)]
    finals = draw(st.sets(st.integers(1, n - 1))) if n > 1 else set()
    return Dfa(alphabet, delta, 0, finals)


def finite_languages(alphabet="ab", max_words=4, max_len=3):
    words = st.text(alphabet=alphabet, min_size=1, max_size=max_len)
    return st.sets(words, min_size=1, max_size=max_words).map(
        lambda ws: LanguageSpec.finite(sorted(ws), tuple(alphabet))
    )


def words(alphabet="ab", max_len=6):
    return st.text(alphabet=alphabet, max_size=max_len).map(tuple)


@st.composite
def nfas(draw, max_states=4, alphabet=("a", "b")):
    """NFAs with possibly several initial states and nondeterministic moves."""
    from factorlang.automata import Nfa

    n = draw(st.integers(1, max_states))
    states = st.integers(0, n - 1)
    delta = [[draw(st.sets(states, max_size=2)) for _ in alphabet] for _ in range(n)]
    initials = draw(st.sets(states, min_size=1, max_size=2))
    finals = draw(st.sets(states))
    return Nfa(alphabet, delta, initials, finals)
