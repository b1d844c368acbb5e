"""Executable acceptance criteria.

Each ``criterion_*`` function runs one check end to end and returns a
``CriterionResult``.  ``run_all`` drives them for the CLI ``accept`` verb;
the pytest suite calls them one by one.  All checks are exact.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .automata import (
    LanguageSpec,
    compile_regex,
    enumerate_slice,
    equivalent,
    format_word,
)
from .families import (
    prop3_family,
    prop5_family,
    prop5_recoded,
    thm8_language,
    thm8_term_counts,
    thm8_word,
    thm9_language,
    thm9_term_counts,
    thm9_word,
)
from .generators import random_dfa, random_finite_language, random_prefix_code
from .oracle import (
    PREDICATE_FUNCS,
    count_factorizations,
    factorizations,
    is_su,
    multi_factorization_slice,
    shortest_violation,
    slice_by_predicate,
    star_slice,
    violation_slice,
)
from .su import build_su_counter_machine, su_gap_exists
from .uf import build_double_nfa, is_code, matrix_uf_dfa, palstar_uf_check, uf_dfa
from .ufp import bell_intersection_check
from .ufs import build_ufs_nfa, shortest_ufs_violation, ufs_regular_witness_check

SEED = 20140401


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.title} ({self.seconds:.1f}s) {self.detail}"


def _random_dfas(count, max_states, seed):
    rng = random.Random(seed)
    return [random_dfa(rng, max_states) for _ in range(count)]


def criterion_1(count=200, max_len=8) -> CriterionResult:
    """Doubled-state NFA and uf_dfa slices equal the oracle's."""
    failures = []
    for dfa in _random_dfas(count, 4, SEED):
        if enumerate_slice(build_double_nfa(dfa), max_len) != multi_factorization_slice(dfa, max_len):
            failures.append(("double", dfa))
        if enumerate_slice(uf_dfa(dfa), max_len) != slice_by_predicate(dfa, "uf", max_len):
            failures.append(("uf", dfa))
    return CriterionResult(1, "uf construction = oracle", not failures,
                           f"{count} random DFAs, slices <= {max_len}", failures=failures)


def criterion_2(count=50) -> CriterionResult:
    failures = []
    for dfa in _random_dfas(count, 3, SEED + 2):
        same, witness = equivalent(uf_dfa(dfa), matrix_uf_dfa(dfa))
        if not same:
            failures.append((dfa, witness))
    return CriterionResult(2, "uf_dfa ≡ matrix_uf_dfa", not failures,
                           f"{count} random DFAs, full equivalence", failures=failures)


def criterion_3(count=200) -> CriterionResult:
    failures = []
    non_codes = 0
    for dfa in _random_dfas(count, 4, SEED):
        test = is_code(dfa)
        if test.is_code:
            continue
        non_codes += 1
        w = test.witness
        if not len(w) < test.bound or count_factorizations(w, dfa) < 2:
            failures.append((dfa, w))
    return CriterionResult(3, "shortest ambiguous word < n²+n", not failures,
                           f"{non_codes} non-codes checked", failures=failures)


def criterion_4(ns=range(2, 7)) -> CriterionResult:
    failures = []
    for n in ns:
        fam = prop3_family(n)
        test = is_code(fam.language.dfa)
        expected = ("b",) + ("a",) * (n * (n + 1)) + ("b",)
        if test.witness != expected or len(test.witness) != n * n + n + 2:
            failures.append((n, "witness", test.witness))
        if fam.language.dfa.n_states > 2 * n + 5:
            failures.append((n, "dfa size", fam.language.dfa.n_states))
    return CriterionResult(4, "b(a^n)*|(a^(n+1))*b numbers", not failures,
                           f"n = {ns.start}..{ns.stop - 1}", failures=failures)


def criterion_5(ns=range(2, 7), recoded_ns=range(4, 9)) -> CriterionResult:
    failures = []
    for n in ns:
        fam = prop5_family(n)
        test = is_code(fam.language.dfa)
        if test.is_code or len(test.witness) != n * (n + 1) // 2:
            failures.append((n, "witness", test.witness))
        if fam.language.dfa.n_states > 2 * n + 2:
            failures.append((n, "dfa size", fam.language.dfa.n_states))
    lengths = []
    for n in recoded_ns:
        test = is_code(prop5_recoded(n).language.dfa)
        if test.is_code:
            failures.append((n, "recoded is a code"))
            continue
        lengths.append(len(test.witness))
        ratio = len(test.witness) / n ** 2
        if not 0.2 <= ratio <= 3:
            failures.append((n, "ratio", ratio))
    if any(b <= a for a, b in zip(lengths, lengths[1:])):
        failures.append(("recoded lengths not increasing", lengths))
    return CriterionResult(5, "finite 2n-word family numbers", not failures,
                           f"recoded witness lengths {lengths}", failures=failures)


def criterion_6(max_len=14) -> CriterionResult:
    report = palstar_uf_check(max_len, ("a", "b"))
    return CriterionResult(
        6, "uf(PALSTAR) = PRIMEPALSTAR", report.agrees,
        f"{report.words_checked} words, {report.primepalstar} prime; "
        f"{report.evenpal_unique_not_prime_count} words such as "
        f"{report.evenpal_unique_not_prime[0]} have one even-palindrome "
        "factorization without being prime",
        failures=report.mismatches,
    )


def criterion_7(max_len=10) -> CriterionResult:
    spec = LanguageSpec.finite(["a", "ab", "aab"], ("a", "b"))
    expected = enumerate_slice(compile_regex("(ab)*a*", ("a", "b")), max_len)
    by_oracle = slice_by_predicate(spec, "su", max_len)
    machine = build_su_counter_machine(spec.dfa)
    by_machine = [x for x in star_slice(spec, max_len) if not machine.accepts(x)]
    failures = []
    if by_oracle != expected:
        failures.append("oracle")
    if by_machine != expected:
        failures.append("machine")
    return CriterionResult(7, "su({a,ab,aab}) = (ab)*a*", not failures,
                           f"{len(expected)} words <= {max_len}", failures=failures)


def su_test_languages():
    rng = random.Random(SEED + 8)
    gaps = [
        LanguageSpec.finite(["a", "aa"], ("a",)),
        LanguageSpec.finite(["a", "ab", "aab"], ("a", "b")),
        thm8_language().language,
        thm9_language().language,
    ]
    codes = [random_prefix_code(rng) for _ in range(20)]
    return gaps, codes


def criterion_8(oracle_len=12) -> CriterionResult:
    gaps, codes = su_test_languages()
    failures = []
    for spec in gaps:
        if not su_gap_exists(spec.dfa):
            failures.append(("expected gap", spec))
    for spec in codes:
        if su_gap_exists(spec.dfa):
            failures.append(("prefix code reported gap", spec))
    for spec in gaps + codes:
        if shortest_violation(spec, "su", oracle_len) is not None and not su_gap_exists(spec.dfa):
            failures.append(("oracle disagreement", spec))
    return CriterionResult(8, "su decidability chain", not failures,
                           f"{len(gaps)} gap languages, {len(codes)} prefix codes",
                           failures=failures)


def criterion_9(max_exp=3) -> CriterionResult:
    failures = []
    rng = range(1, max_exp + 1)
    thm8 = thm8_language(0).language
    thm9 = thm9_language(0).language
    for i in rng:
        for j in rng:
            for k in rng:
                w = thm8_word(i, j, k)
                counts = sorted(len(f) for f in factorizations(w, thm8))
                if counts != thm8_term_counts(i, j, k) or is_su(w, thm8) != (i == j == k - 1):
                    failures.append(("thm8", i, j, k, counts))
                w = thm9_word(i, j, k)
                counts = sorted(len(f) for f in factorizations(w, thm9))
                if counts != thm9_term_counts(i, j, k) or is_su(w, thm9) != (i == j == k):
                    failures.append(("thm9", i, j, k, counts))
    return CriterionResult(9, "regular and finite su witnesses", not failures,
                           f"exponents <= {max_exp}", failures=failures)


UFP_A3_A4 = [3, 4, 6, 7, 8, 9, 10, 11, 13, 14, 17]


def criterion_10(max_len=40) -> CriterionResult:
    words = [("a",) * 3, ("a",) * 4]
    got = [len(x) for x in slice_by_predicate(words, "ufp", max_len) if x]
    return CriterionResult(10, "ufp({a³,a⁴})", got == UFP_A3_A4,
                           f"lengths {got}", failures=[] if got == UFP_A3_A4 else [got])


def criterion_11(r_max=3) -> CriterionResult:
    report = bell_intersection_check(r_max)
    return CriterionResult(11, "ufp(L) ∩ R for the 6-word witness", report.passed,
                           f"{len(report.rows)} words", failures=report.failures)


def criterion_12(count=200, max_len=8, ns=range(2, 7)) -> CriterionResult:
    failures = []
    rng = random.Random(SEED + 12)
    for _ in range(count):
        spec = random_finite_language(rng)
        if enumerate_slice(build_ufs_nfa(spec), max_len) != violation_slice(spec, "ufs", max_len):
            failures.append(("slice", spec))
        if not shortest_ufs_violation(spec).within_bound:
            failures.append(("bound", spec))
    for n in ns:
        v = shortest_ufs_violation(prop5_family(n).language)
        if v.word is None or len(v.word) != n * (n + 1) // 2 or not v.within_bound:
            failures.append(("prop5", n, v.word))
    return CriterionResult(12, "ufs construction", not failures,
                           f"{count} random finite L; n = {ns.start}..{ns.stop - 1}",
                           failures=failures)


def criterion_13(r_max=3) -> CriterionResult:
    report = ufs_regular_witness_check(r_max)
    return CriterionResult(13, "ufs(L) ∩ R for the regular witness", report.passed,
                           f"{len(report.rows)} words", failures=report.failures)


def implication_languages():
    rng = random.Random(SEED + 14)
    langs = [
        LanguageSpec.finite(["a", "ab", "aab"], ("a", "b")),
        LanguageSpec.finite(["a", "aa"], ("a",)),
        LanguageSpec.finite(["aaa", "aaaa"], ("a",)),
        LanguageSpec.finite(["aa", "aaa", "ab", "ac", "ba", "ca"], ("a", "b", "c")),
        LanguageSpec.regex("(ab)+(ac)+aa|(ba)+(ca)+|aa|aaa", ("a", "b", "c")),
        prop5_family(3).language,
        prop3_family(2).language,
        thm8_language(0).language,
    ]
    langs += [random_finite_language(rng) for _ in range(40)]
    langs += [random_dfa(rng, 3) for _ in range(20)]
    return langs


def criterion_14(max_len=8) -> CriterionResult:
    failures = []
    checked = 0
    for lang in implication_languages():
        for x in star_slice(lang, max_len):
            p = {name: f(x, lang) for name, f in PREDICATE_FUNCS.items()}
            checked += 1
            if (p["uf"] and not p["ufp"]) or (p["ufp"] and not p["su"]) or (
                p["ufp"] and not p["ufs"]
            ):
                failures.append((lang, format_word(x), p))
    return CriterionResult(14, "uf ⇒ ufp ⇒ su and ufp ⇒ ufs", not failures,
                           f"{checked} words", failures=failures)


CRITERIA = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12,
    criterion_13, criterion_14,
]


def run_criterion(func) -> CriterionResult:
    start = time.perf_counter()
    result = func()
    result.seconds = time.perf_counter() - start
    return result


def run_all(echo=None) -> list:
    results = []
    for func in CRITERIA:
        result = run_criterion(func)
        results.append(result)
        if echo is not None:
            echo(result.line())
    return results
