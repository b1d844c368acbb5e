import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from factorlang.automata import LanguageSpec
from factorlang.families import (
    FAMILIES,
    THM8_ALPHABET,
    binary_recode,
    block_width,
    decode_word,
    get_family,
    prop3_family,
    prop5_family,
    prop5_recoded,
    prop5_target,
    recode_word,
    recoding_preserves_counts,
    thm8_language,
    thm8_term_counts,
    thm8_word,
    thm9_language,
    thm9_term_counts,
    thm9_word,
    word_of,
)
from factorlang.oracle import count_factorizations, factorizations, is_su, star_slice
from strategies import finite_languages


def all_pass(instance):
    failed = [r for r in instance.check() if not r.passed]
    assert not failed, failed


class TestUfFamilies:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_long_witness_family(self, n):
        all_pass(prop3_family(n))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_finite_family(self, n):
        inst = prop5_family(n)
        all_pass(inst)
        assert len(inst.language.alphabet) == n + 1

    def test_finite_family_target_has_two_factorizations(self):
        spec = prop5_family(4).language
        assert len(factorizations(prop5_target(4), spec)) == 2
        assert prop5_target(3) == ("a1", "b", "a2", "b", "b", "a3")

    @pytest.mark.parametrize("n", [4, 5, 8])
    def test_recoded_family(self, n):
        inst = prop5_recoded(n)
        all_pass(inst)
        assert inst.language.alphabet == ("0", "1", "b")
        assert inst.extras["block_width"] == block_width(n)

    def test_block_width(self):
        assert [block_width(n) for n in (2, 3, 4, 5, 8, 9)] == [1, 2, 2, 3, 3, 4]

    @pytest.mark.parametrize("make", [prop3_family, prop5_family, prop5_recoded])
    def test_parameter_guard(self, make):
        with pytest.raises(ValueError):
            make(1)


class TestSuFamilies:
    def test_regular_words(self):
        spec = thm8_language(0).language
        assert spec.alphabet == THM8_ALPHABET
        w = thm8_word(1, 1, 2)
        assert "".join(w) == "a0b1c232323d"
        assert sorted(len(f) for f in factorizations(w, spec)) == thm8_term_counts(1, 1, 2)
        assert is_su(w, spec)
        assert not is_su(thm8_word(2, 1, 2), spec)

    def test_regular_claims(self):
        all_pass(thm8_language(2))

    def test_finite_claims(self):
        inst = thm9_language(2)
        all_pass(inst)
        assert len(inst.language.words) == 29

    def test_finite_words(self):
        spec = thm9_language(0).language
        w = thm9_word(1, 2, 1)
        assert len(factorizations(w, spec)) == 3
        assert sorted(len(f) for f in factorizations(w, spec)) == thm9_term_counts(1, 2, 1)

    def test_tokens(self):
        spec = thm9_language(0).language
        assert word_of("cd127", spec) == ("c", "d", "1", "2", "7")


class TestOtherFamilies:
    @pytest.mark.parametrize("name", ["bell", "ufs-regular"])
    def test_claims(self, name):
        all_pass(get_family(name))


class TestRegistry:
    def test_unknown(self):
        with pytest.raises(KeyError):
            get_family("nope")

    def test_parametric_needs_n(self):
        with pytest.raises(ValueError):
            get_family("prop3")

    @pytest.mark.parametrize("name", sorted(FAMILIES))
    def test_manifest_round_trip(self, name):
        inst = get_family(name, 3)
        if name in ("thm8", "thm9"):
            inst.claims = inst.claims[:4]
        manifest = json.loads(json.dumps(inst.manifest()))
        assert LanguageSpec.from_json(manifest["language"]) == inst.language
        assert all(c["passed"] for c in manifest["claims"])


class TestRecoding:
    @given(st.text("abc", max_size=6))
    def test_decode_inverts_encode(self, text):
        alphabet = ("a", "b", "c")
        word = tuple(text)
        assert decode_word(recode_word(word, alphabet), alphabet) == word

    def test_block_shape(self):
        assert "".join(recode_word(("x", "y"), ("x", "y"))) == "babbaab"

    def test_decode_rejects_garbage(self):
        with pytest.raises(ValueError):
            decode_word(tuple("bb"), ("a",))

    @given(finite_languages("abc", max_words=3))
    def test_counts_preserved(self, spec):
        assert recoding_preserves_counts(spec, star_slice(spec, 5))

    def test_recoded_language(self):
        spec = LanguageSpec.finite(["a", "aa"], ("a",))
        image = binary_recode(spec)
        assert image.words == (tuple("bab"), tuple("babbab"))
        assert count_factorizations(tuple("bab" * 3), image, None) == 3
