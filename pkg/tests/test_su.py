import pytest
from hypothesis import given
from hypothesis import strategies as st

from factorlang.automata import LanguageSpec, compile_regex, enumerate_slice
from factorlang.counter import (
    ANY,
    BOTTOM,
    NONZERO,
    TOP,
    ZERO,
    Cfg,
    OneCounterPda,
    cfg_nonempty,
    generating_nonterminals,
    pda_to_cfg,
    pda_to_dot,
    signed_moves,
)
from factorlang.errors import EpsilonInLanguageError
from factorlang.families import thm8_language
from factorlang.oracle import shortest_violation, slice_by_predicate, star_slice, violation_slice
from factorlang.su import build_su_counter_machine, su_gap_exists
from strategies import dfas, finite_languages

AB = ("a", "b")
EXAMPLE = LanguageSpec.finite(["a", "ab", "aab"], AB)


class TestSignedCounter:
    @given(st.lists(st.sampled_from([-1, 0, 1]), max_size=12))
    def test_tracks_signed_difference(self, diffs):
        # every run of the alternatives that respects the tests lands on
        # |sum| with the flag pointing at the side that is ahead
        configs = {(0, TOP)}
        for d in diffs:
            nxt = set()
            for count, flag in configs:
                for test, delta, new_flag in signed_moves(flag, d):
                    if test == ZERO and count != 0 or test == NONZERO and count == 0:
                        continue
                    nxt.add((count + delta, new_flag))
            configs = nxt
        total = sum(diffs)
        counts = {c for c, _ in configs}
        assert counts == {abs(total)}
        if total:
            assert {f for _, f in configs} == {TOP if total > 0 else BOTTOM}


class TestMachine:
    def test_example_slice(self):
        machine = build_su_counter_machine(EXAMPLE.dfa)
        semi_unique = [x for x in star_slice(EXAMPLE, 10) if not machine.accepts(x)]
        expected = enumerate_slice(compile_regex("(ab)*a*", AB), 10)
        assert semi_unique == expected
        assert slice_by_predicate(EXAMPLE, "su", 10) == expected

    @given(dfas(3))
    def test_accepts_exactly_the_violations(self, dfa):
        machine = build_su_counter_machine(dfa)
        assert [x for x in star_slice(dfa, 6) if machine.accepts(x)] == violation_slice(dfa, "su", 6)

    def test_epsilon_rejected(self):
        with pytest.raises(EpsilonInLanguageError):
            build_su_counter_machine(LanguageSpec.regex("a*", ("a",)).dfa)

    def test_decrement_needs_nonzero_test(self):
        with pytest.raises(ValueError):
            OneCounterPda(1, AB, [(0, "a", ANY, -1, 0)], {0}, {0})

    def test_dot(self):
        text = pda_to_dot(build_su_counter_machine(EXAMPLE.dfa), "su")
        assert text.startswith('digraph "su"')
        assert "nonzero" in text and "accept" in text


class TestGrammar:
    def test_dump_format(self):
        s, t = ("S",), ("T",)
        g = Cfg(frozenset({s, t}), frozenset({"a"}), ((s, ("a", t)), (s, ()), (t, ("a",))), s)
        assert g.dump() == "S -> a T | ε\nT -> a\n"

    def test_generating_fixpoint(self):
        s, t, u = ("S",), ("T",), ("U",)
        g = Cfg(
            frozenset({s, t, u}),
            frozenset({"a"}),
            ((s, (t, u)), (t, ("a",)), (u, (u, "a"))),
            s,
        )
        assert generating_nonterminals(g) == {t}
        assert not cfg_nonempty(g)

    def test_empty_machine_gives_empty_grammar(self):
        machine = OneCounterPda(2, AB, [(0, "a", ZERO, 0, 0)], {0}, {1})
        assert not cfg_nonempty(pda_to_cfg(machine))

    def test_counter_must_balance(self):
        # push on a, pop on b, accept only from the empty-counter branch
        machine = OneCounterPda(
            2, AB,
            [(0, "a", ANY, 1, 0), (0, "b", NONZERO, -1, 1), (1, "b", NONZERO, -1, 1)],
            {0}, {1},
        )
        assert cfg_nonempty(pda_to_cfg(machine))
        assert machine.accepts(("a", "a", "b", "b"))
        assert not machine.accepts(("a", "b", "b"))

    def test_grammar_dump_mentions_start(self):
        dump = pda_to_cfg(build_su_counter_machine(EXAMPLE.dfa)).dump()
        assert dump.startswith("S -> ")


class TestGapDecision:
    @pytest.mark.parametrize(
        "words, alphabet, expected",
        [
            (["a", "aa"], ("a",), True),
            (["a", "ab", "aab"], AB, True),
            (["a", "ba"], AB, False),
            (["aa", "aaa"], ("a",), True),
            (["ab", "ba"], AB, False),
        ],
    )
    def test_examples(self, words, alphabet, expected):
        assert su_gap_exists(LanguageSpec.finite(words, alphabet).dfa) is expected

    def test_regular_witness_language(self):
        assert su_gap_exists(thm8_language(0).language.dfa)

    @given(finite_languages())
    def test_agrees_with_oracle(self, spec):
        gap = su_gap_exists(spec.dfa)
        found = shortest_violation(spec, "su", 10)
        if found is not None:
            assert gap
        else:
            # for languages this small every gap seen so far shows up by length 10
            assert not gap
