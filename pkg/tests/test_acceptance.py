"""Acceptance criteria 1-10, one test each.

Every test records a ``PASS``/``FAIL`` line in ``RESULTS``; the lines are
printed in the terminal summary and by ``python3 tests/test_acceptance.py``.
"""

import gc
import random
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import EXAMPLE_WORD, random_word  # noqa: E402
from plateaurc.counting import compute_rollercoaster_table, count_maximum_rollercoasters  # noqa: E402
from plateaurc.enumeration import MaximumRollercoasterEnumerator, enumerate_maximum  # noqa: E402
from plateaurc.lcr import lcr_length  # noqa: E402
from plateaurc.longest import compute_longest_tables, longest_length  # noqa: E402
from plateaurc.neg import Label, build_neg  # noqa: E402
from plateaurc.oracle import brute_force_enumerate_max, brute_force_lcr, brute_force_neg_edges  # noqa: E402
from plateaurc.predecessor import PredecessorTable  # noqa: E402
from plateaurc.words import (  # noqa: E402
    DOWN,
    UP,
    Word,
    decompose_runs,
    family_label,
    is_plateau_k_h_xi_rollercoaster,
    is_plateau_k_rollercoaster,
    relabel,
    reverse,
)

RESULTS: dict[int, str] = {}

# Fixed delay constant: candidate checks between two outputs stay below DELAY_C * n.
DELAY_C = 4
SCALING_RATIO = 2.5

EXAMPLE_P = """\
- - - - - - - 1
- - - - - - 2 1
3 - - - - - 2 1
3 4 - - - - 2 1
3 4 - - - 5 2 1
3 4 - 6 - 5 2 1
3 4 - 7 - 5 2 1
3 4 8 7 - 5 2 1
3 4 8 7 9 5 2 1
10 4 8 7 9 5 2 1
10 4 8 7 9 11 2 1
12 4 8 7 9 11 2 1"""
DOWN3 = [0, 0, 3, 3, 3, 4, 5, 8, 4, 9, 4, 10]
UP3 = [0, 0, 0, 0, 5, 5, 6, 5, 7, 0, 10, 0]


def record(number: int, ok: bool, detail: str, seconds: float) -> None:
    RESULTS[number] = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}  [{seconds:.2f} s]"
    print(RESULTS[number])


def corpus(seed: int, count: int, max_len: int, sigmas, ks=(None,), min_len: int = 0):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_word(rng, rng.randint(min_len, max_len), rng.choice(sigmas)), rng.choice(ks)


def leftmost_embedding(u, w):
    pos, i = [], 1
    for x in u:
        while w[i] != x:
            i += 1
        pos.append(i)
        i += 1
    return pos


def test_criterion_01_worked_example():
    t0 = time.perf_counter()
    w = Word.from_string(EXAMPLE_WORD)
    P = PredecessorTable(w)
    expected = [[None if c == "-" else int(c) for c in line.split()] for line in EXAMPLE_P.splitlines()]
    p_ok = all(P.get(i, x) == expected[i - 1][x - 1] for i in range(1, 13) for x in range(1, 9))
    t = compute_longest_tables(w, 3)
    R = compute_rollercoaster_table(w, 3, t)
    checks = {
        "P (96 cells)": p_ok,
        "L down,3": t.row(DOWN, 3) == DOWN3,
        "L up,3": t.row(UP, 3) == UP3,
        "length 10": longest_length(w, 3) == 10,
        "count 2": count_maximum_rollercoasters(w, 3) == 2,
        "enumerate": {str(u) for u in enumerate_maximum(w, 3)} == {"8712644311", "8712644356"},
        "R cells": (R[11, UP, 3], R[12, DOWN, 3], R[3, DOWN, 2]) == (1, 1, 2),
    }
    dt = time.perf_counter() - t0
    ok = all(checks.values()) and dt < 1.0
    bad = [name for name, v in checks.items() if not v]
    record(1, ok, "worked example 871264435161 exact" + (f"; failed {bad}" if bad else ""), dt)
    assert ok


def test_criterion_02_textual_witnesses():
    t0 = time.perf_counter()
    w = Word.from_string(EXAMPLE_WORD)
    t = compute_longest_tables(w, 3)
    up9, down8 = t.witness(UP, 3, 9), t.witness(DOWN, 2, 8)
    ok = (
        t.value(UP, 3, 9) == 7
        and t.value(DOWN, 2, 8) == 7
        and str(up9) == "8712445"
        and is_plateau_k_h_xi_rollercoaster(up9, 3, 3, UP)
        and is_plateau_k_h_xi_rollercoaster(down8, 3, 2, DOWN)
    )
    dt = time.perf_counter() - t0
    ok = ok and dt < 1.0
    record(2, ok, f"L[up,3][9]=7 -> {up9}, L[down,2][8]=7 -> {down8}", dt)
    assert ok


def _criterion_3_4_corpus():
    return list(corpus(seed=2024, count=500, max_len=12, sigmas=(2, 3, 4), ks=(3, 4), min_len=4))


def test_criterion_03_oracle_equivalence():
    t0 = time.perf_counter()
    mismatches = nonempty = 0
    for w, k in _criterion_3_4_corpus():
        truth = brute_force_enumerate_max(w, k)
        nonempty += truth.max_length > 0
        listed = [u.letters for u in enumerate_maximum(w, k)]
        if (
            longest_length(w, k) != truth.max_length
            or count_maximum_rollercoasters(w, k) != len(truth.max_words)
            or len(listed) != len(set(listed))
            or set(listed) != truth.max_words
        ):
            mismatches += 1
    dt = time.perf_counter() - t0
    ok = mismatches == 0 and dt < 60
    record(3, ok, f"500 words vs oracle ({nonempty} with a rollercoaster), {mismatches} mismatches", dt)
    assert ok


def test_criterion_04_unique_embeddings():
    t0 = time.perf_counter()
    words = multi = 0
    for w, k in _criterion_3_4_corpus():
        for u, e in brute_force_enumerate_max(w, k).embeddings_per_word.items():
            words += 1
            multi += e != 1
    dt = time.perf_counter() - t0
    ok = multi == 0
    record(4, ok, f"{words} maximum words, {multi} with more than one embedding", dt)
    assert ok


def test_criterion_05_neg_soundness():
    t0 = time.perf_counter()
    edge_bad = path_bad = 0
    for w, _ in corpus(seed=55, count=300, max_len=10, sigmas=(1, 2, 3, 4)):
        g = build_neg(w)
        edge_bad += g.edges() != brute_force_neg_edges(w)
        for u in brute_force_enumerate_max(w, 3).max_words:
            pos = leftmost_embedding(u, w)
            for p, q in zip(pos, pos[1:]):
                want = Label.EQ if w[p] == w[q] else (Label.UP if w[p] < w[q] else Label.DOWN)
                path_bad += g.label(p, q) is not want
    dt = time.perf_counter() - t0
    ok = edge_bad == 0 and path_bad == 0 and dt < 30
    record(5, ok, f"300 graphs, {edge_bad} edge-set mismatches, {path_bad} non-path steps", dt)
    assert ok


def test_criterion_06_enumeration_delay():
    t0 = time.perf_counter()
    rng = random.Random(606)
    worst = {}
    for n in (50, 100, 200, 400):
        ratio = 0.0
        for sigma in (3, 4, 6):
            for _ in range(2):
                w = random_word(rng, n, sigma)
                e = MaximumRollercoasterEnumerator(w, 3)
                for _u in zip(range(3000), e):
                    ratio = max(ratio, e.state.check_budget / n)
        worst[n] = ratio
    dt = time.perf_counter() - t0
    ok = all(r <= DELAY_C for r in worst.values())
    shown = ", ".join(f"n={n}: {r:.2f}" for n, r in worst.items())
    record(6, ok, f"C={DELAY_C}; worst checks/n per output {shown}", dt)
    assert ok


def _median_times(jobs, repeats=5, min_sample=0.3):
    """Median per-call wall time of each job over ``repeats`` samples.

    A sample runs its job enough times to last about ``min_sample`` seconds,
    and jobs are visited round-robin so background load hits every size alike.
    """
    calls = {}
    for key, fn in jobs.items():
        t0 = time.perf_counter()
        fn()
        calls[key] = max(1, round(min_sample / max(time.perf_counter() - t0, 1e-6)))
    times = {key: [] for key in jobs}
    gc.disable()
    try:
        for _ in range(repeats):
            for key, fn in jobs.items():
                t0 = time.perf_counter()
                for _ in range(calls[key]):
                    fn()
                times[key].append((time.perf_counter() - t0) / calls[key])
    finally:
        gc.enable()
    return {key: statistics.median(v) for key, v in times.items()}


def _scaling_ratios():
    rng = random.Random(77)
    sigma, k = 8, 4
    base = random_word(rng, 40000, sigma).letters
    sizes = (10000, 20000, 40000)
    words = {n: Word(base[:n], sigma) for n in sizes}
    longest = _median_times({n: (lambda w=words[n]: longest_length(w, k)) for n in sizes})
    count = _median_times({n: (lambda w=words[n]: count_maximum_rollercoasters(w, k)) for n in sizes})
    other = random_word(rng, 1000, 3)
    first = random_word(rng, 800, 3).letters
    pairs = {n: [Word(first[:n], 3), other] for n in (200, 400, 800)}
    lcr = _median_times({n: (lambda ws=pairs[n]: lcr_length(ws, 3)) for n in pairs})
    return {
        "longest": [longest[b] / longest[a] for a, b in zip(sizes, sizes[1:])],
        "count": [count[b] / count[a] for a, b in zip(sizes, sizes[1:])],
        "lcr": [lcr[400] / lcr[200], lcr[800] / lcr[400]],
    }


def test_criterion_07_scaling():
    # wall time on a shared machine is bursty; one re-measurement is allowed and reported
    t0 = time.perf_counter()
    attempts = []
    for _ in range(2):
        ratios = _scaling_ratios()
        attempts.append(ratios)
        if max(max(v) for v in ratios.values()) <= SCALING_RATIO:
            break
    dt = time.perf_counter() - t0
    ok = max(max(v) for v in attempts[-1].values()) <= SCALING_RATIO and dt < 120
    detail = " | ".join(
        "; ".join(f"{name} " + ", ".join(f"{r:.2f}" for r in v) for name, v in ratios.items()) for ratios in attempts
    )
    record(7, ok, f"doubling ratios {detail} (limit {SCALING_RATIO}, {len(attempts)} attempt(s))", dt)
    assert ok


def test_criterion_08_lcr():
    t0 = time.perf_counter()
    rng = random.Random(808)
    bad = 0
    for _ in range(200):
        words = [random_word(rng, rng.randint(0, 8), rng.randint(1, 3)) for _ in range(2)]
        bad += lcr_length(words, 3) != brute_force_lcr(words, 3)
    for _ in range(50):
        words = [random_word(rng, rng.randint(0, 6), rng.randint(1, 3)) for _ in range(3)]
        bad += lcr_length(words, 3) != brute_force_lcr(words, 3)
    self_bad = 0
    for _ in range(200):
        w = random_word(rng, rng.randint(0, 14), rng.randint(1, 4))
        self_bad += lcr_length([w, w], 3) != longest_length(w, 3)
    dt = time.perf_counter() - t0
    ok = bad == 0 and self_bad == 0 and dt < 60
    record(8, ok, f"250 tuples vs oracle, {bad} mismatches; 200 self-pairs, {self_bad} mismatches", dt)
    assert ok


def test_criterion_09_invariance():
    t0 = time.perf_counter()
    rng = random.Random(909)
    bad = 0
    for _ in range(200):
        w = random_word(rng, rng.randint(1, 40), rng.randint(2, 5))
        k = rng.choice((3, 4))
        ref = (longest_length(w, k), count_maximum_rollercoasters(w, k))
        shift = rng.randint(0, 5)
        up = relabel(w, lambda x: 2 * x + shift)
        for v in (reverse(w), up):
            bad += (longest_length(v, k), count_maximum_rollercoasters(v, k)) != ref
    perm_bad = 0
    for _ in range(50):
        words = [random_word(rng, rng.randint(0, 8), 3) for _ in range(rng.choice((2, 3)))]
        ref = lcr_length(words, 3)
        shuffled = words[:]
        rng.shuffle(shuffled)
        perm_bad += lcr_length(shuffled, 3) != ref
        perm_bad += lcr_length(words[::-1], 3) != ref
    dt = time.perf_counter() - t0
    ok = bad == 0 and perm_bad == 0
    record(9, ok, f"200 words reversal/relabel, {bad} mismatches; lcr permutations, {perm_bad} mismatches", dt)
    assert ok


def test_criterion_10_validator_fixtures():
    t0 = time.perf_counter()
    W = Word.from_string
    w = W("12223444321112345")
    runs = [str(w.factor(r.start, r.end)) for r in decompose_runs(w)]
    r = W("12234322")
    checks = {
        "12345435667": is_plateau_k_rollercoaster(W("12345435667"), 3),
        "1234554567": not is_plateau_k_rollercoaster(W("1234554567"), 3),
        "11223 k=3": is_plateau_k_rollercoaster(Word((1, 1, 2, 2, 3)), 3),
        "11223 k=5": not is_plateau_k_rollercoaster(Word((1, 1, 2, 2, 3)), 5),
        "runs": runs == ["12223444", "44432111", "1112345"],
        "43321": is_plateau_k_h_xi_rollercoaster(W("43321"), 3, 3, DOWN)
        and is_plateau_k_h_xi_rollercoaster(W("43321"), 3, 1, UP),
        "12234322": not is_plateau_k_rollercoaster(r, 4)
        and is_plateau_k_h_xi_rollercoaster(r, 4, 3, DOWN)
        and family_label(r, 4) is UP,
    }
    dt = time.perf_counter() - t0
    ok = all(checks.values())
    bad = [name for name, v in checks.items() if not v]
    record(10, ok, "prose validator fixtures" + (f"; failed {bad}" if bad else ""), dt)
    assert ok


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
