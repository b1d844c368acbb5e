import pytest
from hypothesis import given

from factorlang.automata import LanguageSpec
from factorlang.errors import EpsilonInLanguageError
from factorlang.families import bell_shapes, bell_word
from factorlang.oracle import factorizations, is_ufp, slice_by_predicate, star_slice, violation_slice
from factorlang.ufp import (
    bell_intersection_check,
    build_ufp_counter_machine,
    finite_words,
    unique_three_four_representation,
)
from strategies import finite_languages

A3A4 = [("a",) * 3, ("a",) * 4]


class TestUnaryExample:
    def test_slice(self):
        lengths = [len(x) for x in slice_by_predicate(A3A4, "ufp", 40) if x]
        assert lengths == [3, 4, 6, 7, 8, 9, 10, 11, 13, 14, 17]

    def test_matches_unique_representation(self):
        for k in range(1, 41):
            x = ("a",) * k
            if factorizations(x, A3A4):
                assert is_ufp(x, A3A4) == unique_three_four_representation(k)

    def test_machine(self):
        machine = build_ufp_counter_machine(A3A4)
        accepted = [len(x) for x in star_slice(A3A4, 20) if machine.accepts(x)]
        assert accepted == [12, 15, 16, 18, 19, 20]


class TestMachine:
    @given(finite_languages(max_words=3))
    def test_accepts_exactly_the_violations(self, spec):
        machine = build_ufp_counter_machine(spec)
        got = [x for x in star_slice(spec, 6) if machine.accepts(x)]
        assert got == violation_slice(spec, "ufp", 6)

    def test_labels(self):
        machine = build_ufp_counter_machine(LanguageSpec.finite(["a", "aa"], ("a",)))
        assert "accept" in machine.labels
        assert any(label.startswith("start t=") for label in machine.labels)

    def test_needs_finite_language(self):
        with pytest.raises(ValueError):
            build_ufp_counter_machine(LanguageSpec.regex("a+", ("a",)))

    def test_rejects_empty_word(self):
        with pytest.raises(EpsilonInLanguageError):
            finite_words([(), ("a",)])


class TestBellWitness:
    def test_shapes_are_factorizations(self):
        words = [tuple(w) for w in ("aa", "aaa", "ab", "ac", "ba", "ca")]
        w = bell_word(1, 2, 1, 2)
        assert set(factorizations(w, words)) == bell_shapes(1, 2, 1, 2)
        assert is_ufp(w, words)
        assert not is_ufp(bell_word(1, 2, 2, 1), words)

    def test_full_check(self):
        report = bell_intersection_check(2)
        assert report.passed and len(report.rows) == 16
        assert all(row.n_factorizations == 2 for row in report.rows)

    def test_scale_guard(self):
        with pytest.raises(ValueError):
            bell_intersection_check(4)
