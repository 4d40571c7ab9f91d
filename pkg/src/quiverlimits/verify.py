"""Regression checks behind ``quiverlimits verify``.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
comparison.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .bps import bps_numbers, specialize
from .catalog import NAMES, bottom_row_946, get_entry
from .closedform import RegularizationFailure, coeff_b
from .exact import LaurentPoly
from .lattice import (
    convolution_check,
    count_paths,
    level_count,
    level_ratio,
    quantum_coeff,
    raney_number,
)
from .series import QuiverSpec, classical_limit_oracle, factorized_limit


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


def _timed(name, func):
    start = time.perf_counter()
    passed, detail, data = func()
    return CheckResult(name, passed, detail, time.perf_counter() - start, data)


def random_spec(rng: random.Random, max_m=3, max_entry=3, max_level=3, allow_zero_level=True) -> QuiverSpec:
    m = rng.randint(1, max_m)
    C = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            C[i][j] = C[j][i] = rng.randint(-max_entry, max_entry)
    low = 0 if allow_zero_level else 1
    levels = [rng.randint(low, max_level) for _ in range(m)]
    if not any(levels):
        levels[rng.randrange(m)] = rng.randint(1, max_level)
    return QuiverSpec(C, levels)


def zero_level_caps(spec: QuiverSpec, cap: int = 2):
    return [cap if n == 0 else None for n in spec.levels]


def sweep_specs(count: int, seed: int, **kwargs) -> list:
    rng = random.Random(seed)
    return [random_spec(rng, **kwargs) for _ in range(count)]


def check_knot(name: str) -> CheckResult:
    def run():
        entry = get_entry(name)
        a = specialize(entry.spec, entry.order).coeffs
        table = bps_numbers(a)
        got_a = tuple(a[1:])
        got_N = tuple(rec.N for rec in table)
        ok = got_a == entry.expected_a and got_N == entry.expected_N
        detail = f"a={[str(x) for x in got_a]} N={[str(x) for x in got_N]}"
        return ok, detail, {"a": got_a, "N": got_N}

    return _timed(f"knot {name}", run)


def check_integrality() -> CheckResult:
    def run():
        bad = []
        for name in NAMES:
            entry = get_entry(name)
            for rec in bps_numbers(specialize(entry.spec, entry.order).coeffs):
                if not rec.integral:
                    bad.append((name, rec.r, str(rec.N)))
        return not bad, f"non-integral: {bad}" if bad else "all N_r integral", {}

    return _timed("integrality of catalog BPS numbers", run)


def check_closed_vs_oracle(count: int = 220, seed: int = 20240, D: int = 5) -> CheckResult:
    def run():
        mismatches = []
        for spec in sweep_specs(count, seed):
            caps = zero_level_caps(spec)
            y = classical_limit_oracle(spec, D, caps)
            for l in y.window():
                try:
                    b = coeff_b(spec, l)
                except RegularizationFailure:
                    b = None
                if b != y[l]:
                    mismatches.append((spec.matrix, spec.levels, l))
        return not mismatches, f"{count} specs, {len(mismatches)} mismatches", {"mismatches": mismatches}

    return _timed("closed form vs q->1 oracle", run)


def check_factorization(count: int = 60, seed: int = 7, D: int = 6) -> CheckResult:
    def run():
        bad = []
        for spec in sweep_specs(count, seed, max_level=2):
            caps = zero_level_caps(spec)
            if classical_limit_oracle(spec, D, caps) != factorized_limit(spec, D, caps):
                bad.append((spec.matrix, spec.levels))
        return not bad, f"{count} specs, {len(bad)} failures", {"failures": bad}

    return _timed("factorization into partial limits", run)


def check_quantum_identity(max_f=3, max_N=3, max_n=4) -> CheckResult:
    def run():
        bad = []
        for f in range(max_f + 1):
            for N in range(1, max_N + 1):
                ratio = level_ratio(f, N, max_n)
                for n in range(1, max_n + 1):
                    if ratio[n] != quantum_coeff(f, N, n):
                        bad.append((f, N, n))
        return not bad, f"{len(bad)} failures", {"failures": bad}

    return _timed("quantum lattice identity", run)


def check_raney() -> CheckResult:
    def run():
        problems = []
        if raney_number(1, 1, 2) != 5 or count_paths(1, 1, 2) != 5:
            problems.append("Raney(1,1,2) != 5")
        if [level_count(2, 1, n) for n in range(5)] != [1, 1, 2, 5, 14]:
            problems.append("Catalan sequence")
        for f in range(3):
            for N in range(3):
                for i in range(6):
                    if raney_number(f, N, i) != count_paths(f, N, i):
                        problems.append(f"raney({f},{N},{i})")
        return not problems, "; ".join(problems) or "ok", {}

    return _timed("Raney and Catalan counts", run)


def check_convolution(max_NM=4, max_c=4, max_m=8) -> CheckResult:
    def run():
        bad = []
        total = 0
        for N in range(1, max_NM + 1):
            for M in range(1, max_NM + 1):
                for c in range(1, max_c + 1):
                    for m in range(max_m + 1):
                        total += 1
                        if not convolution_check(N, M, c, m):
                            bad.append((N, M, c, m))
        return not bad, f"{total} instances, {len(bad)} failures", {}

    return _timed("convolution lemma", run)


def check_bottom_row() -> CheckResult:
    def run():
        q = lambda k: LaurentPoly.monomial(2 * k)  # noqa: E731
        expected = {
            1: LaurentPoly.constant(2),
            2: 2 + q(-1) + q(-2),
            3: (q(0) + q(1) + q(2) + q(4)) * q(-4).scale(2),
        }
        got = {r: bottom_row_946(r) for r in expected}
        ok = got == expected
        return ok, ", ".join(f"P_{r}={got[r]}" for r in sorted(got)), {}

    return _timed("9_46 bottom row", run)


SUITE = {
    "knots": lambda: [check_knot(name) for name in NAMES],
    "closed_vs_oracle": lambda: [check_closed_vs_oracle()],
    "factorization": lambda: [check_factorization()],
    "quantum_identity": lambda: [check_quantum_identity()],
    "raney": lambda: [check_raney()],
    "convolution": lambda: [check_convolution()],
    "bottom_row": lambda: [check_bottom_row()],
    "integrality": lambda: [check_integrality()],
}


def run_all() -> list:
    results = []
    for run in SUITE.values():
        results.extend(run())
    return results


def summarize(results) -> dict:
    return {
        "passed": all(r.passed for r in results),
        "checks": [r.to_json() for r in results],
    }


__all__ = ["CheckResult", "run_all", "summarize", "check_knot"]
