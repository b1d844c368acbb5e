"""Command-line interface: ``factorlang analyze | family | export-dot | accept``.

Exit codes: 0 ok, 2 construction and oracle disagree (or a claim fails),
3 bad input, 4 the empty word is in L, 5 output could not be written.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .automata import (
    DEFAULT_SLICE_CAP,
    LanguageSpec,
    enumerate_slice,
    format_factorization,
    format_word,
    star_nfa,
    to_dot,
)
from .counter import cfg_nonempty, pda_to_cfg, pda_to_dot
from .errors import EpsilonInLanguageError, FactorlangError, SliceOverflowError
from .families import FAMILIES, PARAMETRIC, get_family
from .oracle import (
    PREDICATES,
    check_predicate,
    factorizations,
    shortest_violation,
    slice_by_predicate,
    star_slice,
)
from .su import build_su_counter_machine
from .uf import build_double_nfa, is_code, matrix_uf_dfa, uf_dfa
from .ufp import build_ufp_counter_machine
from .ufs import build_ufs_nfa, build_ufs_witness_nfa, shortest_ufs_violation

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_EPSILON, EXIT_IO = 0, 2, 3, 4, 5
HUMAN_SLICE_LIMIT = 60


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def load_spec(path) -> LanguageSpec:
    try:
        spec = LanguageSpec.load(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}", EXIT_INPUT) from exc
    except FactorlangError as exc:
        raise CliError(f"malformed language spec {path}: {exc}", EXIT_INPUT) from exc
    try:
        accepts_epsilon = spec.dfa.accepts_epsilon()
    except FactorlangError as exc:
        raise CliError(f"malformed language spec {path}: {exc}", EXIT_INPUT) from exc
    if accepts_epsilon:
        raise CliError(
            "the empty word is in L; every word of L* then has infinitely many "
            "factorizations, so uf(L) = ∅ and nothing further is analyzed",
            EXIT_EPSILON,
        )
    return spec


def language_summary(spec: LanguageSpec) -> dict:
    summary = {"kind": spec.kind, "alphabet": list(spec.alphabet)}
    if spec.is_finite:
        summary["words"] = [format_word(w) for w in spec.words]
    else:
        summary["pattern"] = spec.pattern
    summary["dfa_states"] = spec.dfa.n_states
    return summary


def _witness_entry(word, spec, bound=None) -> dict:
    facts = factorizations(word, spec)
    entry = {
        "word": format_word(word),
        "tokens": list(word),
        "length": len(word),
        "factorizations": [format_factorization(f) for f in facts],
    }
    if bound is not None:
        entry["bound"] = bound
        entry["within_bound"] = len(word) <= bound
    return entry


def _revalidate(word, spec, predicate) -> bool:
    """The witness is in L* and fails ``predicate`` according to the oracle."""
    facts = factorizations(word, spec)
    return bool(facts) and not check_predicate(predicate)(word, spec)


def _slice_block(construction, oracle) -> dict:
    block = {"oracle": [format_word(w) for w in oracle], "size": len(oracle)}
    if construction is not None:
        block["construction"] = [format_word(w) for w in construction]
        block["agree"] = construction == oracle
    return block


def analyze(spec: LanguageSpec, predicate: str, max_len: int, cap: int = DEFAULT_SLICE_CAP,
            timing: bool = False, cfg_out=None) -> dict:
    """Run the construction for ``predicate`` and cross-check it with the oracle."""
    check_predicate(predicate)
    if predicate == "ufp" and not spec.is_finite:
        raise CliError("the ufp construction needs a finite language", EXIT_INPUT)
    clock = {}
    start = time.perf_counter()
    report = {
        "language": language_summary(spec),
        "predicate": predicate,
        "max_len": max_len,
        "results": {},
        "witness": None,
    }
    checks = {}
    results = report["results"]
    oracle_slice = slice_by_predicate(spec, predicate, max_len, cap)
    clock["oracle_slice"] = time.perf_counter() - start
    construction_slice = None
    witness = None
    bound = None

    t0 = time.perf_counter()
    if predicate == "uf":
        test = is_code(spec.dfa)
        results["is_code"] = test.is_code
        results["witness_bound"] = test.bound
        construction_slice = enumerate_slice(uf_dfa(spec.dfa), max_len, cap)
        witness, bound = test.witness, test.bound
        if witness is not None:
            checks["witness_is_shortest"] = shortest_violation(spec, "uf", len(witness)) == witness
            checks["witness_below_bound"] = len(witness) < bound
        else:
            checks["oracle_finds_no_ambiguity"] = shortest_violation(spec, "uf", max_len) is None
    elif predicate == "su":
        machine = build_su_counter_machine(spec.dfa)
        grammar = pda_to_cfg(machine)
        gap = cfg_nonempty(grammar)
        results["su_gap_exists"] = gap
        results["machine_states"] = machine.n_states
        results["cfg_nonterminals"] = len(grammar.nonterminals)
        results["cfg_productions"] = len(grammar.productions)
        if cfg_out is not None:
            _write(cfg_out, grammar.dump())
        construction_slice = [
            x for x in star_slice(spec, max_len, cap) if not machine.accepts(x)
        ]
        witness = shortest_violation(spec, "su", max_len)
        if witness is not None:
            checks["gap_matches_oracle"] = gap
    elif predicate == "ufp":
        machine = build_ufp_counter_machine(spec)
        results["machine_states"] = machine.n_states
        construction_slice = [
            x for x in star_slice(spec, max_len, cap) if not machine.accepts(x)
        ]
        witness = shortest_violation(spec, "ufp", max_len)
    else:
        if spec.is_finite:
            violation = shortest_ufs_violation(spec)
            ufs_nfa = build_ufs_nfa(spec)
            results["ufs_nfa_states"] = ufs_nfa.n_states
            results["all_ufs"] = violation.word is None
            witness, bound = violation.word, violation.bound
            if witness is not None:
                checks["witness_is_shortest"] = (
                    shortest_violation(spec, "ufs", len(witness)) == witness
                )
                checks["witness_within_bound"] = violation.within_bound
            violations = set(enumerate_slice(ufs_nfa, max_len, cap))
            construction_slice = [x for x in star_slice(spec, max_len, cap) if x not in violations]
        else:
            results["construction"] = "skipped: the ufs construction needs a finite language"
            witness = shortest_violation(spec, "ufs", max_len)
    clock["construction"] = time.perf_counter() - t0

    if witness is not None:
        report["witness"] = _witness_entry(witness, spec, bound)
        checks["witness_revalidated"] = _revalidate(witness, spec, predicate)
    report["slice"] = _slice_block(construction_slice, oracle_slice)
    if construction_slice is not None:
        checks["slice_agrees"] = construction_slice == oracle_slice
    report["checks"] = checks
    report["agree"] = all(checks.values())
    if timing:
        clock["total"] = time.perf_counter() - start
        report["timing"] = {k: round(v, 4) for k, v in clock.items()}
    return report


def render_analysis(report: dict) -> str:
    lang = report["language"]
    p = report["predicate"]
    lines = []
    alphabet = "{" + ", ".join(lang["alphabet"]) + "}"
    if lang["kind"] == "finite":
        lines.append(f"language: finite, {len(lang['words'])} words over {alphabet}: "
                     + ", ".join(lang["words"]))
    else:
        lines.append(f"language: regex {lang['pattern']} over {alphabet}")
    lines.append(f"minimal DFA: {lang['dfa_states']} states")
    lines.append(f"predicate: {p}, words up to length {report['max_len']}")
    for key, value in report["results"].items():
        if isinstance(value, bool):
            value = "yes" if value else "no"
        lines.append(f"{key.replace('_', ' ')}: {value}")
    w = report["witness"]
    if w is None:
        lines.append("shortest violation: none found")
    else:
        extra = ""
        if "bound" in w:
            extra = f", bound {w['bound']}"
        lines.append(f"shortest violation: {w['word']} (length {w['length']}{extra})")
        lines.extend(f"  {f}" for f in w["factorizations"])
    sl = report["slice"]
    status = ""
    if "agree" in sl:
        status = ", construction = oracle" if sl["agree"] else ", CONSTRUCTION DIFFERS FROM ORACLE"
    lines.append(f"{p}(L) up to length {report['max_len']}: {sl['size']} words{status}")
    shown = sl["oracle"][:HUMAN_SLICE_LIMIT]
    more = "" if sl["size"] <= HUMAN_SLICE_LIMIT else f", ... ({sl['size'] - HUMAN_SLICE_LIMIT} more)"
    lines.append("  " + ", ".join(shown) + more)
    for name, ok in report["checks"].items():
        lines.append(f"check {name.replace('_', ' ')}: {'ok' if ok else 'FAILED'}")
    if "timing" in report:
        lines.append("timing: " + ", ".join(f"{k} {v:.3f}s" for k, v in report["timing"].items()))
    return "\n".join(lines)


def parse_range(text: str) -> list:
    """``"4"`` or ``"2..5"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(text)]
    except ValueError:
        raise CliError(f"bad range {text!r}; expected N or A..B", EXIT_INPUT) from None
    if not values:
        raise CliError(f"empty range {text!r}", EXIT_INPUT)
    return values


def run_family(name: str, n_range) -> list:
    if name not in FAMILIES:
        raise CliError(f"unknown family {name!r}; choose from {', '.join(sorted(FAMILIES))}",
                       EXIT_INPUT)
    if name in PARAMETRIC:
        if n_range is None:
            raise CliError(f"family {name} needs a range such as 2..5", EXIT_INPUT)
        try:
            return [get_family(name, n).manifest() for n in parse_range(n_range)]
        except ValueError as exc:
            raise CliError(str(exc), EXIT_INPUT) from exc
    return [get_family(name).manifest()]


def render_family(manifests: list) -> str:
    lines = []
    lengths = []
    for m in manifests:
        head = m["name"] if m["n"] is None else f"{m['name']} n={m['n']}"
        lines.append(head)
        for c in m["claims"]:
            mark = "ok" if c["passed"] else "FAILED"
            lines.append(f"  [{mark}] {c['description']}: {c['actual']}")
            if "length" in c["description"] and isinstance(c["actual"], int):
                lengths.append(c["actual"])
    if len(manifests) > 1 and lengths:
        lines.append("witness lengths: " + ", ".join(map(str, lengths)))
    return "\n".join(lines)


def _dfa_constructions():
    return {
        "dfa": lambda spec: spec.dfa,
        "star": lambda spec: star_nfa(spec.dfa),
        "double": lambda spec: build_double_nfa(spec.dfa),
        "uf": lambda spec: uf_dfa(spec.dfa),
        "matrix-uf": lambda spec: matrix_uf_dfa(spec.dfa),
        "ufs": build_ufs_nfa,
        "ufs-witness": build_ufs_witness_nfa,
    }


def _machine_constructions():
    return {
        "su-machine": lambda spec: build_su_counter_machine(spec.dfa),
        "ufp-machine": build_ufp_counter_machine,
    }


CONSTRUCTIONS = tuple(_dfa_constructions()) + tuple(_machine_constructions())


def export_dot(spec: LanguageSpec, construction: str) -> str:
    builders = _dfa_constructions()
    try:
        if construction in builders:
            return to_dot(builders[construction](spec), construction)
        machine = _machine_constructions()[construction](spec)
    except KeyError:
        raise CliError(f"unknown construction {construction!r}; choose from "
                       + ", ".join(CONSTRUCTIONS), EXIT_INPUT) from None
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    return pda_to_dot(machine, construction)


def _write(path, text: str) -> None:
    if str(path) == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}", EXIT_IO) from exc


def _emit(args, payload, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(human)


def cmd_analyze(args) -> int:
    spec = load_spec(args.spec)
    try:
        report = analyze(spec, args.predicate, args.max_len, args.cap, args.timing, args.cfg_out)
    except SliceOverflowError as exc:
        raise CliError(f"{exc}; lower --max-len or raise --cap", EXIT_INPUT) from exc
    _emit(args, report, render_analysis(report))
    return EXIT_OK if report["agree"] else EXIT_VIOLATION


def cmd_family(args) -> int:
    manifests = run_family(args.name, args.range)
    _emit(args, manifests, render_family(manifests))
    ok = all(c["passed"] for m in manifests for c in m["claims"])
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_export_dot(args) -> int:
    spec = load_spec(args.spec)
    _write(args.out, export_dot(spec, args.construction))
    return EXIT_OK


def cmd_accept(args) -> int:
    from .acceptance import run_all

    results = run_all(None if args.json else print)
    if args.json:
        print(json.dumps(
            [{"criterion": r.number, "title": r.title, "passed": r.passed, "detail": r.detail}
             for r in results],
            indent=2, ensure_ascii=False,
        ))
    else:
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} criteria passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factorlang",
        description="Factorization analysis for regular and finite languages.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")

    p = sub.add_parser("analyze", parents=[common], help="run a construction against the oracle")
    p.add_argument("spec", help="LanguageSpec JSON file")
    p.add_argument("predicate", choices=PREDICATES)
    p.add_argument("max_len_pos", nargs="?", type=int, metavar="MAX_LEN",
                   help="same as --max-len")
    p.add_argument("--max-len", type=int, default=None, help="slice length (default 8)")
    p.add_argument("--cap", type=int, default=DEFAULT_SLICE_CAP,
                   help="largest slice to enumerate")
    p.add_argument("--timing", action="store_true", help="add wall-clock timings")
    p.add_argument("--cfg-out", default=None, help="su only: write the grammar dump here")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("family", parents=[common], help="check the claims of a witness family")
    p.add_argument("name", help=", ".join(sorted(FAMILIES)))
    p.add_argument("range", nargs="?", default=None, help="N or A..B for parametric families")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("export-dot", help="write an automaton as Graphviz DOT")
    p.add_argument("spec", help="LanguageSpec JSON file")
    p.add_argument("construction", choices=CONSTRUCTIONS)
    p.add_argument("out", help="output path, or - for stdout")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("accept", parents=[common], help="run every acceptance criterion")
    p.set_defaults(func=cmd_accept)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "analyze":
        if args.max_len is None:
            args.max_len = args.max_len_pos if args.max_len_pos is not None else 8
        if args.max_len < 0 or args.cap < 1:
            print("error: --max-len must be >= 0 and --cap >= 1", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except EpsilonInLanguageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EPSILON
    except FactorlangError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
