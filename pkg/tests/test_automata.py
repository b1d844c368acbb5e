import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from factorlang.automata import (
    Dfa,
    LanguageSpec,
    Nfa,
    all_words,
    as_word,
    compile_regex,
    complement,
    determinize,
    dfa_from_words,
    empty_dfa,
    enumerate_slice,
    equivalent,
    format_factorization,
    format_word,
    intersection,
    is_empty,
    minimize,
    shortest_accepted,
    star_dfa,
    star_nfa,
    to_dot,
    union,
    universal_dfa,
)
from factorlang.errors import (
    AlphabetError,
    EpsilonInLanguageError,
    RegexSyntaxError,
    SliceOverflowError,
    SpecFormatError,
    StateExplosionError,
    UnknownSymbolError,
)
from factorlang.oracle import star_slice
from strategies import dfas, finite_languages, nfas

AB = ("a", "b")


def brute(pred, alphabet, n):
    return {w for w in all_words(alphabet, n) if pred(w)}


class TestRegex:
    @pytest.mark.parametrize(
        "pattern, accepted, rejected",
        [
            ("a|b", ["a", "b"], ["", "ab"]),
            ("(ab)*a*", ["", "ab", "aba", "abaa", "a"], ["b", "ba", "aab"]),
            ("(ab)+", ["ab", "abab"], ["", "a", "aba"]),
            ("b(aa)*|(aaa)*b", ["b", "baa", "aaab", "aaaaaab"], ["aab", "baaa", ""]),
        ],
    )
    def test_membership(self, pattern, accepted, rejected):
        nfa = compile_regex(pattern, AB)
        for w in accepted:
            assert nfa.accepts(tuple(w)), w
        for w in rejected:
            assert not nfa.accepts(tuple(w)), w

    @pytest.mark.parametrize("pattern", ["a|", "(", "a)", "*a", "()", "a||b", "+"])
    def test_syntax_errors(self, pattern):
        with pytest.raises(RegexSyntaxError):
            compile_regex(pattern, AB)

    def test_unknown_symbol(self):
        with pytest.raises(UnknownSymbolError):
            compile_regex("ac", AB)

    def test_multi_character_tokens(self):
        alphabet = ("a1", "a2", "b")
        nfa = compile_regex("a1 b|a2+", alphabet)
        assert nfa.accepts(("a1", "b"))
        assert nfa.accepts(("a2", "a2"))
        assert not nfa.accepts(("a1",))

    def test_no_epsilon_moves_left(self):
        nfa = compile_regex("(a|b)*", AB)
        assert isinstance(nfa, Nfa)
        assert nfa.accepts(())


class TestWords:
    def test_as_word_longest_match(self):
        assert as_word("a1a2b", ("a", "a1", "a2", "b")) == ("a1", "a2", "b")

    def test_as_word_whitespace(self):
        assert as_word("a1 b", ("a1", "b")) == ("a1", "b")

    def test_as_word_rejects_unknown(self):
        with pytest.raises(UnknownSymbolError) as info:
            as_word(("a", "z"), AB)
        assert info.value.position == 1

    def test_format(self):
        assert format_word(()) == "ε"
        assert format_word(("a", "b")) == "ab"
        assert format_word(("a1", "b")) == "a1 b"
        assert format_factorization([("a",), ("a", "b")]) == "(a)(ab)"

    @pytest.mark.parametrize("alphabet", [(), ("a", "a"), ("",), ("a b",), (1,)])
    def test_bad_alphabets(self, alphabet):
        with pytest.raises(AlphabetError):
            empty_dfa(alphabet)


class TestDeterminizeMinimize:
    @given(dfas())
    def test_minimize_preserves_language(self, dfa):
        small = minimize(dfa)
        assert equivalent(dfa, small)[0]
        assert small.n_states <= dfa.n_states
        assert minimize(small).n_states == small.n_states

    @given(st.sampled_from(["(ab)*a*", "a(a|b)*b", "(aa|b)*", "b(aa)*|(aaa)*b", "(a|b)*abb"]))
    def test_determinize_matches_nfa(self, pattern):
        nfa = compile_regex(pattern, AB)
        dfa = determinize(nfa)
        assert brute(nfa.accepts, AB, 7) == brute(dfa.accepts, AB, 7)

    def test_known_minimal_size(self):
        # (a|b)*abb needs 4 states
        assert minimize(determinize(compile_regex("(a|b)*abb", AB))).n_states == 4

    def test_state_cap(self):
        # the k-th letter from the end needs 2^k subsets
        nfa = compile_regex("(a|b)*a(a|b)(a|b)(a|b)(a|b)", AB)
        with pytest.raises(StateExplosionError):
            determinize(nfa, max_states=8)


class TestBooleanOps:
    @given(dfas(3), dfas(3))
    def test_ops_pointwise(self, x, y):
        words = list(all_words(AB, 5))
        inter, uni, comp = intersection(x, y), union(x, y), complement(x)
        for w in words:
            assert inter.accepts(w) == (x.accepts(w) and y.accepts(w))
            assert uni.accepts(w) == (x.accepts(w) or y.accepts(w))
            assert comp.accepts(w) != x.accepts(w)

    def test_equivalent_counterexample(self):
        same, witness = equivalent(universal_dfa(AB), empty_dfa(AB))
        assert not same and witness == ()
        assert equivalent(empty_dfa(AB), empty_dfa(AB)) == (True, None)


class TestStar:
    @given(finite_languages())
    def test_star_matches_oracle(self, spec):
        expected = star_slice(spec, 7)
        assert enumerate_slice(star_nfa(spec.dfa), 7) == expected
        assert enumerate_slice(star_dfa(spec.dfa), 7) == expected

    def test_epsilon_rejected(self):
        with pytest.raises(EpsilonInLanguageError):
            star_nfa(minimize(determinize(compile_regex("a*", AB))))

    def test_boundary_state_is_sole_initial_and_final(self):
        dfa = dfa_from_words([("a",), ("a", "b")], AB)
        star = star_nfa(dfa)
        assert star.initials == star.finals == frozenset({dfa.n_states})


class TestSearch:
    @given(dfas())
    def test_shortest_is_length_lex_least(self, dfa):
        words = enumerate_slice(dfa, 6)
        best = shortest_accepted(dfa)
        if words:
            assert best == words[0]
        elif best is not None:
            assert len(best) > 6
        assert is_empty(dfa) == (best is None)

    @given(nfas())
    def test_shortest_is_length_lex_least_for_nfas(self, nfa):
        words = enumerate_slice(nfa, 6)
        best = shortest_accepted(nfa)
        if words:
            assert best == words[0]
        elif best is not None:
            assert len(best) > 6

    def test_ties_between_states_reached_by_one_word(self):
        # both successors of 0 on a are reached by "a"; "aa" must win over "ab"
        nfa = Nfa(AB, [[{1, 2}, set()], [set(), {3}], [{3}, set()], [set(), set()]],
                  {0}, {3})
        assert shortest_accepted(nfa) == ("a", "a")

    @given(dfas())
    def test_slice_is_sorted_and_exact(self, dfa):
        words = enumerate_slice(dfa, 6)
        assert set(words) == brute(dfa.accepts, AB, 6)
        keys = [(len(w), [AB.index(s) for s in w]) for w in words]
        assert keys == sorted(keys)

    def test_slice_cap(self):
        with pytest.raises(SliceOverflowError) as info:
            enumerate_slice(universal_dfa(AB), 10, cap=100)
        assert info.value.cap == 100

    def test_all_words_count(self):
        assert len(list(all_words(AB, 4))) == sum(2**k for k in range(5))


class TestDot:
    def test_labels_and_shapes(self):
        dfa = dfa_from_words([("a",)], AB)
        text = to_dot(dfa, "one")
        assert text.startswith('digraph "one" {')
        assert "doublecircle" in text
        assert 'label="a"' in text
        assert text.rstrip().endswith("}")

    def test_quotes_are_escaped(self):
        nfa = Nfa(AB, [[set(), set()]], {0}, {0}, ('say "hi"',))
        assert '\\"hi\\"' in to_dot(nfa)


class TestLanguageSpec:
    @given(finite_languages("abc"))
    def test_json_round_trip(self, spec):
        doc = json.loads(json.dumps(spec.to_json()))
        assert LanguageSpec.from_json(doc) == spec

    def test_regex_round_trip(self, tmp_path):
        spec = LanguageSpec.regex("(ab)*a", AB)
        path = tmp_path / "r.json"
        spec.dump(path)
        again = LanguageSpec.load(path)
        assert again == spec
        assert again.contains(("a", "b", "a"))

    @pytest.mark.parametrize(
        "doc",
        [
            [],
            {"kind": "finite"},
            {"alphabet": "ab", "kind": "finite", "words": []},
            {"alphabet": ["a"], "kind": "finite"},
            {"alphabet": ["a"], "kind": "finite", "words": [["a"], ["a"]]},
            {"alphabet": ["a"], "kind": "finite", "words": [["b"]]},
            {"alphabet": ["a"], "kind": "regex"},
            {"alphabet": ["a"], "kind": "other"},
        ],
    )
    def test_malformed(self, doc):
        with pytest.raises(SpecFormatError):
            LanguageSpec.from_json(doc)

    def test_bad_json_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(SpecFormatError):
            LanguageSpec.load(path)

    def test_finite_and_regex_agree(self):
        words = ["a", "ab", "aab"]
        finite = LanguageSpec.finite(words, AB)
        regex = LanguageSpec.regex("a|ab|aab", AB)
        assert equivalent(finite.dfa, regex.dfa)[0]
        for w in itertools.product(AB, repeat=3):
            assert finite.contains(w) == regex.contains(w)
