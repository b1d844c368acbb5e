"""Concrete witness languages, each carrying its claimed properties.

Every claim is executable: ``FamilyInstance.check()`` evaluates it and
compares the result with the expected value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .automata import LanguageSpec, as_word, format_word
from .oracle import count_factorizations, factorizations, is_su
from .uf import is_code


@dataclass(frozen=True)
class Claim:
    description: str
    expected: Any
    evaluate: Callable[[], Any] = field(compare=False, repr=False)

    def check(self) -> "ClaimResult":
        actual = self.evaluate()
        return ClaimResult(self.description, self.expected, actual, actual == self.expected)


@dataclass(frozen=True)
class ClaimResult:
    description: str
    expected: Any
    actual: Any
    passed: bool


@dataclass
class FamilyInstance:
    name: str
    language: LanguageSpec
    n: Optional[int] = None
    claims: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    def claim(self, description, expected, evaluate):
        self.claims.append(Claim(description, expected, evaluate))

    def check(self) -> list:
        return [c.check() for c in self.claims]

    def manifest(self) -> dict:
        """LanguageSpec JSON plus the evaluated claims."""
        return {
            "name": self.name,
            "n": self.n,
            "language": self.language.to_json(),
            "claims": [
                {
                    "description": r.description,
                    "expected": _jsonable(r.expected),
                    "actual": _jsonable(r.actual),
                    "passed": r.passed,
                }
                for r in self.check()
            ],
        }


def _jsonable(value):
    if isinstance(value, tuple) and all(isinstance(s, str) for s in value):
        return format_word(value)
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _witness(language):
    return is_code(language.dfa).witness


# --------------------------------------------------------------------------
# uf witnesses


def prop3_family(n: int) -> FamilyInstance:
    """``b(a^n)* | (a^(n+1))* b``: a non-code whose shortest ambiguous word is long."""
    if n < 2:
        raise ValueError("n must be at least 2")
    spec = LanguageSpec.regex(f"b({'a' * n})*|({'a' * (n + 1)})*b", ("a", "b"))
    inst = FamilyInstance("prop3", spec, n)
    target = ("b",) + ("a",) * (n * (n + 1)) + ("b",)
    inst.claim(f"minimal DFA has at most {2 * n + 5} states", True,
               lambda: spec.dfa.n_states <= 2 * n + 5)
    inst.claim("is a code", False, lambda: bool(is_code(spec.dfa)))
    inst.claim("shortest ambiguous word", target, lambda: _witness(spec))
    inst.claim("shortest ambiguous length", n * n + n + 2, lambda: len(_witness(spec)))
    return inst


def prop5_words(n: int):
    a = [f"a{i}" for i in range(1, n + 1)]
    words = [(a[0],), (a[n - 1],)]
    words += [("b",) * i + (a[i],) for i in range(1, n)]
    words += [(a[i - 1],) + ("b",) * i for i in range(1, n)]
    return words, tuple(a) + ("b",)


def prop5_target(n: int) -> tuple:
    """``a1 b a2 b² ... a(n-1) b^(n-1) an``."""
    out = []
    for i in range(1, n + 1):
        out.append(f"a{i}")
        if i < n:
            out.extend(["b"] * i)
    return tuple(out)


def prop5_family(n: int) -> FamilyInstance:
    """Finite 2n-word non-code over n+1 letters with quadratic shortest ambiguity."""
    if n < 2:
        raise ValueError("n must be at least 2")
    words, alphabet = prop5_words(n)
    spec = LanguageSpec.finite(words, alphabet)
    inst = FamilyInstance("prop5", spec, n)
    inst.claim("number of words", 2 * n, lambda: len(spec.words))
    inst.claim(f"minimal DFA has at most {2 * n + 2} states", True,
               lambda: spec.dfa.n_states <= 2 * n + 2)
    inst.claim("shortest ambiguous word", prop5_target(n), lambda: _witness(spec))
    inst.claim("shortest ambiguous length", n * (n + 1) // 2, lambda: len(_witness(spec)))
    return inst


def block_width(n: int) -> int:
    return max(1, math.ceil(math.log2(n)))


def prop5_recoded(n: int) -> FamilyInstance:
    """Prop. 5 words with ``a_i`` replaced by a fixed-width binary block.

    Block ``i`` is the binary expansion of ``i - 1`` padded to
    ``max(1, ceil(log2 n))`` digits, so the n blocks are distinct.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    width = block_width(n)
    code = {f"a{i}": tuple(format(i - 1, f"0{width}b")) for i in range(1, n + 1)}
    code["b"] = ("b",)
    words, _ = prop5_words(n)
    recoded = [tuple(s for sym in w for s in code[sym]) for w in words]
    spec = LanguageSpec.finite(recoded, ("0", "1", "b"))
    inst = FamilyInstance("prop5-recoded", spec, n, extras={"block_width": width})
    # fixed-width blocks form a code, so factorizations transfer one to one
    expected_len = width * n + n * (n - 1) // 2
    inst.claim("is a code", False, lambda: bool(is_code(spec.dfa)))
    inst.claim("shortest ambiguous length", expected_len, lambda: len(_witness(spec)))
    return inst


# --------------------------------------------------------------------------
# su witnesses


THM8_ALPHABET = ("a", "b", "c", "d", "0", "1", "2", "3")
THM8_PATTERN = "a0+b|1|c(23)+|23d|a|0|b1+c(23)+|a0+b1+c2|32|3d"


def thm8_word(i: int, j: int, k: int) -> tuple:
    """``a 0^i b 1^j c (23)^(k+1) d``; k counts the (32) factors."""
    return tuple("a" + "0" * i + "b" + "1" * j + "c" + "23" * (k + 1) + "d")


def thm8_term_counts(i: int, j: int, k: int) -> list:
    return sorted([j + 3, i + 3, k + 2])


def thm8_language(max_exp: int = 3) -> FamilyInstance:
    spec = LanguageSpec.regex(THM8_PATTERN, THM8_ALPHABET)
    inst = FamilyInstance("thm8", spec)
    rng = range(1, max_exp + 1)
    for i in rng:
        for j in rng:
            for k in rng:
                w = thm8_word(i, j, k)
                inst.claim(
                    f"i={i} j={j} k={k}: term counts of the factorizations",
                    thm8_term_counts(i, j, k),
                    lambda w=w: sorted(len(f) for f in factorizations(w, spec)),
                )
                inst.claim(
                    f"i={i} j={j} k={k}: in su(L)",
                    i == j == k - 1,
                    lambda w=w: is_su(w, spec),
                )
    return inst


THM9_ALPHABET = tuple("012345678abcdefghijkl")
THM9_L1 = ("0ab", "cd", "ab", "cd127", "efgh", "efgh3", "4ijkl", "ijkl", "5", "68")
THM9_L2 = ("0abc", "dabc", "d1", "27e", "fg", "he", "h34ij", "klij", "kl568")
THM9_L3 = ("0a", "bcda", "bcd12", "7ef", "ghef", "gh34i", "jk", "li", "jkl56", "8")


def thm9_word(m: int, n: int, p: int) -> tuple:
    return tuple("0" + "abcd" * m + "127" + "efgh" * n + "34" + "ijkl" * p + "568")


def thm9_term_counts(m: int, n: int, p: int) -> list:
    return sorted([2 * m + n + p + 2, m + 2 * n + p + 2, m + n + 2 * p + 2])


def thm9_language(max_exp: int = 3) -> FamilyInstance:
    words = [tuple(w) for w in THM9_L1 + THM9_L2 + THM9_L3]
    spec = LanguageSpec.finite(words, THM9_ALPHABET)
    inst = FamilyInstance("thm9", spec)
    inst.claim("number of words", 29, lambda: len(spec.words))
    inst.claim("alphabet size", 21, lambda: len(spec.alphabet))
    rng = range(1, max_exp + 1)
    for m in rng:
        for n in rng:
            for p in rng:
                w = thm9_word(m, n, p)
                inst.claim(
                    f"m={m} n={n} p={p}: term counts of the factorizations",
                    thm9_term_counts(m, n, p),
                    lambda w=w: sorted(len(f) for f in factorizations(w, spec)),
                )
                inst.claim(
                    f"m={m} n={n} p={p}: in su(L)",
                    m == n == p,
                    lambda w=w: is_su(w, spec),
                )
    return inst


# --------------------------------------------------------------------------
# ufp and ufs witnesses


BELL_FACTORS = {"A": "aa", "B": "aaa", "S1": "ab", "S2": "ac", "T1": "ba", "T2": "ca"}
BELL_R_PATTERN = "aa(ab)+(ac)+aa(ba)+(ca)+aaa"
UFS_REGULAR_PATTERN = "(ab)+(ac)+aa|(ba)+(ca)+|aa|aaa"


def bell_word(r: int, s: int, t: int, q: int) -> tuple:
    return tuple("aa" + "ab" * r + "ac" * s + "aa" + "ba" * t + "ca" * q + "aaa")


def bell_shapes(r: int, s: int, t: int, q: int) -> set:
    """The two factorizations displayed for the bell word, as tuples of factors."""
    A, B, S1, S2, T1, T2 = (tuple(BELL_FACTORS[k]) for k in ("A", "B", "S1", "S2", "T1", "T2"))
    first = (A,) + (S1,) * r + (S2,) * s + (A,) + (T1,) * t + (T2,) * q + (B,)
    second = (B,) + (T1,) * r + (T2,) * s + (S1,) * t + (S2,) * q + (A, A)
    return {first, second}


def ufs_regular_shapes(r: int, s: int, t: int, q: int) -> set:
    first = (
        tuple("aa"),
        tuple("ab" * r + "ac" * s + "aa"),
        tuple("ba" * t + "ca" * q),
        tuple("aaa"),
    )
    second = (
        tuple("aaa"),
        tuple("ba" * r + "ca" * s),
        tuple("ab" * t + "ac" * q + "aa"),
        tuple("aa"),
    )
    return {first, second}


def bell_language() -> FamilyInstance:
    words = [tuple(w) for w in BELL_FACTORS.values()]
    spec = LanguageSpec.finite(words, ("a", "b", "c"))
    inst = FamilyInstance("bell", spec, extras={"R": BELL_R_PATTERN})
    inst.claim("number of words", 6, lambda: len(spec.words))
    inst.claim("empty word outside L", False, lambda: spec.contains(()))
    inst.claim("ufp(L) ∩ R matches r=t and s=q for exponents up to 2", True,
               lambda: _bell_ok(2))
    return inst


def _bell_ok(r_max):
    from .ufp import bell_intersection_check

    return bell_intersection_check(r_max).passed


def ufs_regular_language() -> FamilyInstance:
    spec = LanguageSpec.regex(UFS_REGULAR_PATTERN, ("a", "b", "c"))
    inst = FamilyInstance("ufs-regular", spec, extras={"R": BELL_R_PATTERN})
    inst.claim("empty word outside L", False, lambda: spec.contains(()))
    inst.claim("ufs(L) ∩ R matches r=t and s=q for exponents up to 2", True,
               lambda: _ufs_regular_ok(2))
    return inst


def _ufs_regular_ok(r_max):
    from .ufs import ufs_regular_witness_check

    return ufs_regular_witness_check(r_max).passed


# --------------------------------------------------------------------------
# binary recoding


def recode_word(word, alphabet) -> tuple:
    """Map the i-th letter (1-based) of ``alphabet`` to ``b a^i b``."""
    index = {sym: i for i, sym in enumerate(alphabet, start=1)}
    out = []
    for sym in word:
        out.append("b")
        out.extend("a" * index[sym])
        out.append("b")
    return tuple(out)


def decode_word(word, alphabet) -> tuple:
    """Inverse of ``recode_word``; raises ValueError on malformed input."""
    text = "".join(word)
    out = []
    i = 0
    while i < len(text):
        if text[i] != "b":
            raise ValueError(f"expected 'b' at {i}")
        j = text.index("b", i + 1) if "b" in text[i + 1:] else -1
        if j < 0 or j == i + 1 or j - i - 1 > len(alphabet):
            raise ValueError(f"malformed block at {i}")
        out.append(alphabet[j - i - 2])
        i = j + 1
    return tuple(out)


def binary_recode(spec: LanguageSpec) -> LanguageSpec:
    if not spec.is_finite:
        raise ValueError("binary recoding is defined for finite languages")
    return LanguageSpec.finite([recode_word(w, spec.alphabet) for w in spec.words], ("a", "b"))


FAMILIES = {
    "prop3": prop3_family,
    "prop5": prop5_family,
    "prop5-recoded": prop5_recoded,
    "thm8": lambda n=None: thm8_language(),
    "thm9": lambda n=None: thm9_language(),
    "bell": lambda n=None: bell_language(),
    "ufs-regular": lambda n=None: ufs_regular_language(),
}
PARAMETRIC = {"prop3", "prop5", "prop5-recoded"}


def get_family(name: str, n: Optional[int] = None) -> FamilyInstance:
    try:
        make = FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None
    if name in PARAMETRIC:
        if n is None:
            raise ValueError(f"family {name!r} needs a parameter n")
        return make(n)
    return make()


def word_of(text, spec: LanguageSpec) -> tuple:
    return as_word(text, spec.alphabet)


def recoding_preserves_counts(spec: LanguageSpec, words) -> bool:
    image = binary_recode(spec)
    return all(
        count_factorizations(w, spec, None)
        == count_factorizations(recode_word(w, spec.alphabet), image, None)
        for w in words
    )
