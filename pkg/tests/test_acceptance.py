"""Acceptance criteria, one check per criterion.

Each check prints a single ``[PASS]``/``[FAIL]`` line. Run with pytest (the
lines are echoed in the terminal summary) or directly as a script.
"""
from __future__ import annotations

import contextlib
import io
import random
import socket
import sys
import tempfile
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qmigrate.baseline import scan_snippet  # noqa: E402
from qmigrate.cli import main as cli_main  # noqa: E402
from qmigrate.corpus import load_corpus, number_lines, strip_line_numbers  # noqa: E402
from qmigrate.evaluation import ConfusionCounts, format_metric, precision, recall, render_report  # noqa: E402
from qmigrate.llm_client import ReplayProvider  # noqa: E402
from qmigrate.modes import PromptMode  # noqa: E402
from qmigrate.pipeline import (  # noqa: E402
    RunSettings,
    reference_cassette_path,
    reference_corpus_path,
    reference_taxonomy_path,
    run_corpus,
    score_label,
)
from qmigrate.response_parser import ParseError, parse_findings  # noqa: E402
from qmigrate.taxonomy import census_line, parse_taxonomy, serialize_taxonomy, validate_taxonomy  # noqa: E402

pytestmark = pytest.mark.acceptance

FIXTURES = Path(__file__).parent / "fixtures"
TOL = 0.005
LINES: list[str] = []


def _emit(n: int, title: str, ok: bool, elapsed: float, limit: float, detail: str) -> bool:
    ok = ok and elapsed < limit
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title} ({elapsed:.2f}s < {limit:g}s) {detail}"
    LINES.append(line)
    print(line)
    return ok


@contextlib.contextmanager
def network_disabled():
    def refuse(*a, **k):
        raise OSError("network disabled for acceptance run")

    saved = socket.socket.connect, socket.create_connection, socket.getaddrinfo
    socket.socket.connect, socket.create_connection, socket.getaddrinfo = refuse, refuse, refuse
    try:
        yield
    finally:
        socket.socket.connect, socket.create_connection, socket.getaddrinfo = saved


def _reference():
    t = parse_taxonomy(reference_taxonomy_path().read_text(encoding="utf-8"))
    return t, load_corpus(reference_corpus_path(), t)


# --- 1 --------------------------------------------------------------------

METRIC_CASES = [
    # (metric, tp, other, published value)
    ("precision", 12, 9, 0.57),
    ("precision", 10, 11, 0.47),
    ("precision", 50, 40, 0.55),
    ("precision", 29, 61, 0.32),
    ("recall", 10, 3, 0.76),
    ("recall", 50, 31, 0.62),
    ("recall", 29, 52, 0.35),
    ("recall", 12, 3, 0.80),  # the published table prints 0.85 here; the formula gives 0.80
]


def criterion_1() -> bool:
    start = time.perf_counter()
    misses = []
    for metric, tp, other, want in METRIC_CASES:
        c = ConfusionCounts(tp=tp, fp=other) if metric == "precision" else ConfusionCounts(tp=tp, fn=other)
        got = float(format_metric((precision if metric == "precision" else recall)(c)))
        if abs(got - want) > TOL:
            misses.append(f"{metric}({tp},{other})={got:.2f}!={want:.2f}")
    notes = score_label(_reference()[1], FIXTURES / "reference_counts", "with-tax").notes
    documented = any("0.80" in n and "0.85" in n for n in notes)
    ok = not misses and documented
    detail = f"{len(METRIC_CASES) - len(misses)}/{len(METRIC_CASES)} match" + (
        f"; off: {', '.join(misses)}" if misses else ""
    ) + ("" if documented else "; 0.85 note missing")
    return _emit(1, "metric reproduction on published counts", ok, time.perf_counter() - start, 1, detail)


# --- 2 --------------------------------------------------------------------

def criterion_2() -> bool:
    start = time.perf_counter()
    reports = []
    sink = io.StringIO()
    with network_disabled(), tempfile.TemporaryDirectory() as tmp, contextlib.redirect_stdout(sink):
        for i in range(3):
            out = Path(tmp) / f"run{i}"
            codes = [
                cli_main(["run", "--mode", "with-tax", "--out", str(out)]),
                cli_main(["run", "--mode", "no-tax", "--out", str(out)]),
                cli_main(["score", "--findings", str(out)]),
            ]
            if codes != [0, 0, 0]:
                return _emit(2, "end-to-end replay", False, time.perf_counter() - start, 30, f"exit codes {codes}")
            reports.append(tuple((out / name).read_bytes() for name in ("report.txt", "report.csv", "report.json")))
    cassettes = len(list(reference_cassette_path().glob("*.json")))
    ok = cassettes == 50 and len(set(reports)) == 1
    detail = f"{cassettes} cassettes, {len(set(reports))} distinct report set(s) over 3 runs"
    return _emit(2, "end-to-end replay", ok, time.perf_counter() - start, 30, detail)


# --- 3 --------------------------------------------------------------------

def criterion_3() -> bool:
    start = time.perf_counter()
    _, pairs = _reference()
    r = score_label(pairs, FIXTURES / "reference_counts", "with-tax")
    sc, ln = r.scenario_counts, r.line_counts
    counts_ok = (sc.tp, sc.fp, sc.fn, sc.tn) == (12, 9, 3, 1) and (ln.tp, ln.fp, ln.fn) == (50, 40, 31)
    text = render_report([r], "table-text")
    lines = text.splitlines()
    want = {"0.57": "Precision", "0.55": "Precision", "0.62": "Recall"}
    missing = [v for v, metric in want.items() if f"{metric} | {v}" not in lines]
    ok = counts_ok and not missing
    detail = f"counts {'ok' if counts_ok else 'WRONG'}" + (f"; rows without {missing}" if missing else "; rows present")
    return _emit(3, "reference-count pipeline fixture", ok, time.perf_counter() - start, 5, detail)


# --- 4 --------------------------------------------------------------------

def criterion_4() -> bool:
    start = time.perf_counter()
    t = parse_taxonomy(reference_taxonomy_path().read_text(encoding="utf-8"))
    round_trip = parse_taxonomy(serialize_taxonomy(t)) == t
    diags = validate_taxonomy(t)
    clean = not any(d.is_error for d in diags)
    census = census_line(t) == "scenarios: 43 (deprecation 29, new-feature 6, structural 8)"
    ok = round_trip and clean and census
    return _emit(4, "taxonomy round-trip and census", ok, time.perf_counter() - start, 1, census_line(t))


# --- 5 --------------------------------------------------------------------

def criterion_5() -> bool:
    from collections import Counter

    from test_response_parser import MALFORMED, WELL_FORMED, _summary

    start = time.perf_counter()
    bad = []
    for name, raw, mode, expected in WELL_FORMED:
        try:
            if _summary(parse_findings(raw, mode)) != Counter(expected):
                bad.append(name)
        except ParseError:
            bad.append(name)
    for name, raw, mode, error in MALFORMED:
        try:
            parse_findings(raw, mode)
            bad.append(name)
        except error:
            pass
        except ParseError:
            bad.append(name)
    rng = random.Random(7)
    alphabet = "| -–\\`*\n0123456789abcLineCodeScenarioIDArtifactRefactoring()<br>→"
    crashes = 0
    for _ in range(10_000):
        raw = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 120)))
        for mode in PromptMode:
            try:
                parse_findings(raw, mode)
            except ParseError:
                pass
            except Exception:  # noqa: BLE001 - any other exception is a crash
                crashes += 1
    cases = len(WELL_FORMED) + len(MALFORMED)
    ok = cases >= 20 and not bad and crashes == 0
    detail = f"{cases} cases, {len(bad)} wrong, 10000 fuzz inputs, {crashes} crashes"
    return _emit(5, "parser robustness corpus", ok, time.perf_counter() - start, 60, detail)


# --- 6 --------------------------------------------------------------------

def criterion_6() -> bool:
    from test_baseline import _as_set, brute_force

    start = time.perf_counter()
    t, pairs = _reference()
    diffs = [s.id for s, _ in pairs if _as_set(scan_snippet(s, t)) != brute_force(s, t)]
    ok = len(pairs) >= 10 and not diffs
    return _emit(6, "baseline oracle equivalence", ok, time.perf_counter() - start, 5,
                 f"{len(pairs)} snippets, {len(diffs)} differ")


# --- 7 --------------------------------------------------------------------

def criterion_7() -> bool:
    start = time.perf_counter()
    _, pairs = _reference()
    failures = sum(strip_line_numbers(number_lines(s.source)) != s.source for s, _ in pairs)
    rng = random.Random(11)
    pool = "abc xyz:0123456789\t|`→θ"
    for _ in range(1000):
        lines = ["".join(rng.choice(pool) for _ in range(rng.randint(0, 30))) for _ in range(rng.randint(1, 30))]
        s = "\n".join(lines) + ("\n" if rng.random() < 0.5 else "")
        failures += strip_line_numbers(number_lines(s)) != s
    return _emit(7, "preprocessing inverse", failures == 0, time.perf_counter() - start, 5,
                 f"{len(pairs)} corpus files + 1000 random strings, {failures} failures")


# --- 8 --------------------------------------------------------------------

def criterion_8() -> bool:
    start = time.perf_counter()
    t, pairs = _reference()
    provider = ReplayProvider(reference_cassette_path())
    with network_disabled(), tempfile.TemporaryDirectory() as tmp:
        for mode in PromptMode:
            run_corpus(pairs, t, provider, RunSettings(mode=mode), tmp)
    return _emit(8, "invocation count", provider.calls == 50, time.perf_counter() - start, 30,
                 f"{len(pairs)} snippets x 2 modes = {provider.calls} completions")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_criterion(check):
    assert check()


if __name__ == "__main__":
    results = [check() for check in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
