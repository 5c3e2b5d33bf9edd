"""Exhaustive verification sweeps used by the CLI and the acceptance tests.

Every suite compares a closed-form expansion against an independent oracle
on an exhaustive grid bounded by total word length, and reports failures as
data rather than raising.  `pattern_cases_*` give the finer oracles that
split a product by the y-interleaving case, used to pin down each case of
the two-factor restricted expansions separately.
"""

from __future__ import annotations

import itertools
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import equivalence
from .closed_form import (
    expand_1_2,
    expand_1_3,
    expand_2_2,
    expand_2_3,
    expand_3_3,
    expand_euler,
    expand_1_s,
    expand_general,
)
from .combinat import binom, weak_composition_list
from .lincomb import LinComb
from .restricted import (
    expand_nfold,
    expand_nfold_depth1,
    expand_res_1_1,
    expand_res_1_2,
    expand_res_2_2,
)
from .shuffle import _shuffle_raw, shuffle_nfold, shuffle_permutation, shuffle_recursive
from .words import Word, from_exponent_form

DEFAULT_WEIGHT_CAP = 10
ENV_WEIGHT_CAP = "MZV_MAX_WEIGHT"


def weight_cap() -> int:
    raw = os.environ.get(ENV_WEIGHT_CAP, "")
    return int(raw) if raw else DEFAULT_WEIGHT_CAP


@dataclass
class VerifyReport:
    suite: str
    grid: str
    checked: int
    failures: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "grid": self.grid,
            "checked": self.checked,
            "failures": list(self.failures),
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


# ---------------------------------------------------------------------------
# grids


def h1_exponent_forms(max_total: int):
    """Exponent forms of all nonempty words ending in y, length <= max_total."""
    for length in range(1, max_total + 1):
        for depth in range(1, length + 1):
            yield from weak_composition_list(length - depth, depth)


def words_of_length(length: int):
    for bits in itertools.product("xy", repeat=length):
        yield "".join(bits)


def _points_general(max_total: int):
    for ea in h1_exponent_forms(max_total - 1):
        la = sum(ea) + len(ea)
        for eb in h1_exponent_forms(max_total - la):
            yield (ea, eb)


def _points_res11(max_total: int):
    for r in range(1, max_total):
        for s in range(1, max_total - r + 1):
            for a in range(0, max_total - r - s + 1):
                for b in range(0, max_total - r - s - a + 1):
                    yield (a, r, b, s)


def _points_res12(max_total: int):
    for r in range(1, max_total - 1):
        for s1 in range(1, max_total - r):
            for s2 in range(1, max_total - r - s1 + 1):
                rem = max_total - r - s1 - s2
                for a in range(0, rem + 1):
                    for b1 in range(0, rem - a + 1):
                        for b2 in range(0, rem - a - b1 + 1):
                            yield (a, r, b1, s1, b2, s2)


def _points_res22(max_total: int):
    for r1 in range(1, max_total - 2):
        for r2 in range(1, max_total - r1 - 1):
            for s1 in range(1, max_total - r1 - r2):
                for s2 in range(1, max_total - r1 - r2 - s1 + 1):
                    rem = max_total - r1 - r2 - s1 - s2
                    for a1 in range(0, rem + 1):
                        for a2 in range(0, rem - a1 + 1):
                            for b1 in range(0, rem - a1 - a2 + 1):
                                for b2 in range(0, rem - a1 - a2 - b1 + 1):
                                    yield (a1, r1, a2, r2, b1, s1, b2, s2)


def _points_nfold(max_total: int):
    for n in (2, 3):
        for runs in itertools.product(range(1, max_total + 1), repeat=n):
            if sum(runs) >= max_total + 1:
                continue
            rem = max_total - sum(runs)
            for exps in weak_composition_list_any(rem, n):
                yield tuple(zip(exps, runs))


def weak_composition_list_any(max_total: int, parts: int):
    for total in range(max_total + 1):
        yield from weak_composition_list(total, parts)


# ---------------------------------------------------------------------------
# per-point checks (top level so a process pool can pickle them)


def _run_word(a: int, r: int) -> Word:
    return Word("x" * a + "y" * r)


def _check_general(point) -> str | None:
    ea, eb = point
    want = shuffle_recursive(from_exponent_form(ea), from_exponent_form(eb))
    if expand_general(ea, eb) != want:
        return f"general mismatch at a={ea} b={eb}"
    return None


def _check_res11(point) -> str | None:
    a, r, b, s = point
    want = shuffle_recursive(_run_word(a, r), _run_word(b, s))
    if expand_res_1_1(a, r, b, s) != want:
        return f"res11 mismatch at (a,r,b,s)={point}"
    return None


def _check_res12(point) -> str | None:
    a, r, b1, s1, b2, s2 = point
    want = shuffle_recursive(_run_word(a, r), Word("x" * b1 + "y" * s1 + "x" * b2 + "y" * s2))
    if expand_res_1_2(a, r, b1, s1, b2, s2) != want:
        return f"res12 mismatch at (a,r,b1,s1,b2,s2)={point}"
    return None


def _check_res22(point) -> str | None:
    a1, r1, a2, r2, b1, s1, b2, s2 = point
    u = Word("x" * a1 + "y" * r1 + "x" * a2 + "y" * r2)
    v = Word("x" * b1 + "y" * s1 + "x" * b2 + "y" * s2)
    if expand_res_2_2(*point) != shuffle_recursive(u, v):
        return f"res22 mismatch at (a1,r1,a2,r2,b1,s1,b2,s2)={point}"
    return None


def _check_nfold(point) -> str | None:
    pairs = list(point)
    want = shuffle_nfold([_run_word(a, r) for a, r in pairs])
    if expand_nfold(pairs) != want:
        return f"nfold mismatch at {pairs}"
    if all(r == 1 for _, r in pairs):
        if expand_nfold_depth1([a for a, _ in pairs]) != want:
            return f"nfold depth1 mismatch at {pairs}"
    return None


_SUITES = {
    "general": (8, _points_general, _check_general, "pairs of words ending in y"),
    "res11": (10, _points_res11, _check_res11, "x^a y^r . x^b y^s grids"),
    "res12": (10, _points_res12, _check_res12, "x^a y^r . x^b1 y^s1 x^b2 y^s2 grids"),
    "res22": (10, _points_res22, _check_res22, "two-run by two-run grids"),
    "nfold": (9, _points_nfold, _check_nfold, "2- and 3-fold run products"),
}
SUITE_NAMES = ("general", "res11", "res12", "res22", "nfold", "appendixA", "appendixB")


def run_suite(name: str, max_weight: int | None = None, jobs: int = 1) -> VerifyReport:
    """Run one named verification suite up to a total word length."""
    cap = weight_cap()
    if max_weight is not None and max_weight > cap:
        raise ValueError(f"max weight {max_weight} exceeds the cap {cap} "
                         f"(override with {ENV_WEIGHT_CAP})")
    if name in ("appendixA", "appendixB"):
        bound = min(max_weight if max_weight is not None else 10, cap)
        report = equivalence.check_equivalence("A" if name == "appendixA" else "B", bound)
        return VerifyReport(
            suite=name,
            grid=report.grid,
            checked=report.checked,
            failures=report.failures,
            elapsed_ms=report.elapsed_ms,
        )
    try:
        default_bound, points_fn, check_fn, describe = _SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITE_NAMES + ('all',)}") from None
    bound = min(max_weight if max_weight is not None else default_bound, cap)
    start = time.perf_counter()
    points = list(points_fn(bound))
    failures: list[str] = []
    if jobs > 1 and len(points) > 64:
        chunk = max(64, len(points) // (jobs * 8))
        chunks = [points[i : i + chunk] for i in range(0, len(points), chunk)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(_check_chunk, [(name, c) for c in chunks]):
                failures.extend(result)
    else:
        for point in points:
            failure = check_fn(point)
            if failure:
                failures.append(failure)
    failures.sort()
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerifyReport(
        suite=name,
        grid=f"{describe}, total word length <= {bound}",
        checked=len(points),
        failures=failures,
        elapsed_ms=elapsed_ms,
    )


def _check_chunk(args) -> list[str]:
    name, points = args
    check_fn = _SUITES[name][2]
    return [f for f in (check_fn(p) for p in points) if f]


def run_all(max_weight: int | None = None, jobs: int = 1) -> list[VerifyReport]:
    return [run_suite(name, max_weight, jobs) for name in SUITE_NAMES]


# ---------------------------------------------------------------------------
# shuffle-operation properties


def run_shuffle_property_sweep(max_total: int = 10) -> VerifyReport:
    """recursive == permutation, commutativity, homogeneity, closure and
    the interleaving count, over every word pair up to max_total letters."""
    start = time.perf_counter()
    failures: list[str] = []
    checked = 0
    for la in range(0, max_total + 1):
        for ua in words_of_length(la):
            for lb in range(0, max_total - la + 1):
                for ub in words_of_length(lb):
                    if (la, ua) > (lb, ub):
                        continue  # unordered pairs; both orders run below
                    checked += 1
                    fwd = _shuffle_raw(ua, ub)
                    rev = _shuffle_raw(ub, ua)
                    if fwd != rev:
                        failures.append(f"commutativity fails for {ua!r},{ub!r}")
                        continue
                    perm = shuffle_permutation(Word(ua), Word(ub))
                    if LinComb(fwd) != perm:
                        failures.append(f"recursive != permutation for {ua!r},{ub!r}")
                        continue
                    if sum(fwd.values()) != binom(la + lb, la):
                        failures.append(f"coefficient sum wrong for {ua!r},{ub!r}")
                        continue
                    ys = ua.count("y") + ub.count("y")
                    for word in fwd:
                        if len(word) != la + lb or word.count("y") != ys:
                            failures.append(f"homogeneity fails for {ua!r},{ub!r}")
                            break
                    in_h1 = (not ua or ua.endswith("y")) and (not ub or ub.endswith("y"))
                    admissible = Word(ua).is_admissible and Word(ub).is_admissible
                    for word in fwd:
                        if in_h1 and word and not word.endswith("y"):
                            failures.append(f"h1 closure fails for {ua!r},{ub!r}")
                            break
                        if admissible and not Word(word).is_admissible:
                            failures.append(f"h0 closure fails for {ua!r},{ub!r}")
                            break
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerifyReport(
        suite="shuffle-properties",
        grid=f"all word pairs with total length <= {max_total}",
        checked=checked,
        failures=failures,
        elapsed_ms=elapsed_ms,
    )


def run_associativity_sweep(max_total: int = 9) -> VerifyReport:
    """(u . v) . w independent of grouping and of which factor sits outside.

    Commutativity (verified separately up to a larger bound) reduces the six
    orderings of each triple to the three choices of outer factor.
    """
    start = time.perf_counter()
    cache: dict[tuple[str, str], dict[str, int]] = {}

    def shuf(x: str, y: str) -> dict[str, int]:
        key = (x, y)
        hit = cache.get(key)
        if hit is None:
            hit = _shuffle_raw(x, y)
            cache[key] = hit
        return hit

    def fold(x: str, y: str, outer: str) -> dict[str, int]:
        out: dict[str, int] = {}
        for word, coeff in shuf(x, y).items():
            for word2, mult in shuf(word, outer).items():
                out[word2] = out.get(word2, 0) + coeff * mult
        return out

    failures: list[str] = []
    checked = 0
    for la in range(0, max_total + 1):
        for ua in words_of_length(la):
            for lb in range(la, max_total - la + 1):
                for ub in words_of_length(lb):
                    if la == lb and ua > ub:
                        continue
                    for lc in range(lb, max_total - la - lb + 1):
                        for uc in words_of_length(lc):
                            if lb == lc and ub > uc:
                                continue
                            checked += 1
                            first = fold(ua, ub, uc)
                            if first != fold(ua, uc, ub) or first != fold(ub, uc, ua):
                                failures.append(
                                    f"associativity fails for {ua!r},{ub!r},{uc!r}"
                                )
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerifyReport(
        suite="associativity",
        grid=f"all word triples with total length <= {max_total}",
        checked=checked,
        failures=failures,
        elapsed_ms=elapsed_ms,
    )


def run_specialization_sweep(max_total: int = 9) -> VerifyReport:
    """Euler, 1 x s and the five transcribed small cases against the oracle."""
    start = time.perf_counter()
    failures: list[str] = []
    checked = 0

    def compare(got, ea, eb, label):
        nonlocal checked
        checked += 1
        want = shuffle_recursive(from_exponent_form(ea), from_exponent_form(eb))
        if got != want:
            failures.append(f"{label} mismatch at a={ea} b={eb}")

    for a in range(0, max_total - 1):
        for b in range(0, max_total - 1 - a):
            compare(expand_euler(a, b), (a,), (b,), "euler")
    for s in range(1, max_total - 1):
        for a in range(0, max_total - 1 - s):
            for eb in weak_composition_list_any(max_total - 1 - s - a, s):
                compare(expand_1_s(a, eb), (a,), eb, "1_s")
    small = [
        (expand_1_2, 1, 2, "c12"),
        (expand_1_3, 1, 3, "c13"),
        (expand_2_2, 2, 2, "c22"),
        (expand_2_3, 2, 3, "c23"),
        (expand_3_3, 3, 3, "c33"),
    ]
    for fn, r, s, label in small:
        for exps in weak_composition_list_any(max_total - r - s, r + s):
            compare(fn(*exps), exps[:r], exps[r:], label)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerifyReport(
        suite="specializations",
        grid=f"full parameter grids with total word length <= {max_total}",
        checked=checked,
        failures=failures,
        elapsed_ms=elapsed_ms,
    )


# ---------------------------------------------------------------------------
# pattern-restricted oracles (fine-grained ground truth for the case splits)


def _interleavings(su: str, sv: str):
    n, m = len(su), len(sv)
    for positions in itertools.combinations(range(n + m), n):
        chars = [""] * (n + m)
        from_u = [False] * (n + m)
        for idx, pos in enumerate(positions):
            chars[pos] = su[idx]
            from_u[pos] = True
        fill = iter(sv)
        for pos in range(n + m):
            if not chars[pos]:
                chars[pos] = next(fill)
        yield chars, from_u


def pattern_cases_1_2(a: int, r: int, b1: int, s1: int, b2: int, s2: int) -> dict[str, LinComb]:
    """Split the oracle for x^a y^r . x^{b1} y^{s1} x^{b2} y^{s2} by the
    number of second-factor y's preceding the first first-factor y."""
    su = "x" * a + "y" * r
    sv = "x" * b1 + "y" * s1 + "x" * b2 + "y" * s2
    cases: dict[str, dict[str, int]] = {}
    for chars, from_u in _interleavings(su, sv):
        first_u_y = min(i for i, c in enumerate(chars) if c == "y" and from_u[i])
        k = sum(1 for i, c in enumerate(chars) if c == "y" and not from_u[i] and i < first_u_y)
        if k == 0:
            label = "i"
        elif k <= s1 - 1:
            label = "ii"
        elif k == s1:
            label = "iii"
        else:
            label = "iv"
        word = "".join(chars)
        bucket = cases.setdefault(label, {})
        bucket[word] = bucket.get(word, 0) + 1
    return {label: LinComb(words) for label, words in cases.items()}


def pattern_cases_2_2(
    a1: int, r1: int, a2: int, r2: int, b1: int, s1: int, b2: int, s2: int
) -> dict[str, LinComb]:
    """Split the two-run oracle by y-interleaving case.

    Interleavings whose first y comes from the second factor land in the
    'swap' bucket (they are covered by the symmetrized term).
    """
    su = "x" * a1 + "y" * r1 + "x" * a2 + "y" * r2
    sv = "x" * b1 + "y" * s1 + "x" * b2 + "y" * s2
    cases: dict[str, dict[str, int]] = {}
    for chars, from_u in _interleavings(su, sv):
        ypos_u = [i for i, c in enumerate(chars) if c == "y" and from_u[i]]
        ypos_v = [i for i, c in enumerate(chars) if c == "y" and not from_u[i]]
        if ypos_v[0] < ypos_u[0]:
            label = "swap"
        else:
            label = _classify_2_2(ypos_u, ypos_v, r1, s1)
        word = "".join(chars)
        bucket = cases.setdefault(label, {})
        bucket[word] = bucket.get(word, 0) + 1
    return {label: LinComb(words) for label, words in cases.items()}


def _classify_2_2(ypos_u: list[int], ypos_v: list[int], r1: int, s1: int) -> str:
    first_v = ypos_v[0]
    end_first_u = ypos_u[r1 - 1]
    start_second_u = ypos_u[r1]
    end_first_v = ypos_v[s1 - 1]
    start_second_v = ypos_v[s1]
    if end_first_u < first_v:
        if start_second_u < first_v:
            return "i"
        k = sum(1 for q in ypos_v if q < start_second_u)
        if k <= s1 - 1:
            return "ii"
        return "iii" if k == s1 else "iv"
    if end_first_u < end_first_v:
        if start_second_u < end_first_v:
            return "v"
        return "vi" if start_second_u < start_second_v else "vii"
    if end_first_u < start_second_v:
        return "viii" if start_second_u < start_second_v else "ix"
    return "x"
