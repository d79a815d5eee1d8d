"""Brute-force distributions and the named-check verification suites.

``distribution`` sums a monomial over an enumerated permutation family,
which is the ground truth the rest of the package is tested against.
Family sizes grow fast, so sizes above a guard (default 12, override with
the CROSSNEST_ENUM_LIMIT environment variable or allow_large=True) are
refused rather than silently churning.

``run_suite`` executes named checks, each an exhaustive scan up to the
smaller of its own bound and the caller's max_n, and returns a report
whose counterexamples are the lexicographically first failures.
"""

from __future__ import annotations

import enum
import os
import time
from dataclasses import dataclass
from typing import Callable

from .bijections import involution_shape_path, phi1, phi2, phi3, phi3_inverse
from .paths import (
    PathStatRecord,
    enumerate_paths,
    path_from_head_tail,
    path_statistics,
    sequential_matching,
    strip_decomposition,
    tunnel_matching,
)
from .permutations import (
    PermClass,
    _crs_nes_inv,
    enumerate_class,
    head_tail_pairs,
    one_line,
    perm_statistics,
    permutation_from_head_tail,
)
from .polynomials import MultiPoly, UniPoly
from .qmotzkin import (
    h_recursion_rhs,
    h_tableau,
    motzkin_number,
    q_motzkin,
    q_motzkin_tilde,
    stieltjes_tableau,
)
from .series import FractionSpec, PowerSeries, jfraction_series, named_series

DEFAULT_ENUM_LIMIT = 12
ENUM_LIMIT_ENV = "CROSSNEST_ENUM_LIMIT"


class SizeLimitError(ValueError):
    """Raised when an enumeration would exceed the size guard."""


class StatSpec(enum.Enum):
    """Statistic (or joint statistic) to distribute over a family."""

    CRS = "crs"
    NES = "nes"
    CRS_PLUS_NES = "crs+nes"
    JOINT_FP_EXC_CRS_NES = "fp-exc-crs-nes"
    JOINT_EXC_CRS = "exc-crs"

    @classmethod
    def from_name(cls, name: str) -> "StatSpec":
        for member in cls:
            if member.value == name:
                return member
        known = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown statistic {name!r} (known: {known})")

    @property
    def variables(self) -> tuple[str, ...]:
        if self in (StatSpec.CRS, StatSpec.NES, StatSpec.CRS_PLUS_NES):
            return ("q",)
        if self is StatSpec.JOINT_FP_EXC_CRS_NES:
            return ("x", "y", "p", "q")
        return ("y", "q")

    def exponents(self, fp: int, exc: int, crs: int, nes: int) -> tuple[int, ...]:
        if self is StatSpec.CRS:
            return (crs,)
        if self is StatSpec.NES:
            return (nes,)
        if self is StatSpec.CRS_PLUS_NES:
            return (crs + nes,)
        if self is StatSpec.JOINT_FP_EXC_CRS_NES:
            return (fp, exc, crs, nes)
        return (exc, crs)


def _enum_limit() -> int:
    raw = os.environ.get(ENUM_LIMIT_ENV)
    if raw is None:
        return DEFAULT_ENUM_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(
            f"{ENUM_LIMIT_ENV} must be an integer, got {raw!r}"
        ) from None


def distribution(
    cls: PermClass, n: int, spec: StatSpec, *, allow_large: bool = False
) -> MultiPoly:
    """Monomial sum of a statistic over one family, by full enumeration.

    >>> str(distribution(PermClass.I4321, 3, StatSpec.CRS_PLUS_NES))
    '3 + q'
    """
    limit = _enum_limit()
    if n > limit and not allow_large:
        raise SizeLimitError(
            f"n={n} exceeds the enumeration guard ({limit}); raise "
            f"{ENUM_LIMIT_ENV} or pass allow_large=True"
        )
    counts: dict[tuple[int, ...], int] = {}
    for w in enumerate_class(n, cls):
        crs, nes, _ = _crs_nes_inv(w)
        fp = exc = 0
        for i, v in enumerate(w, start=1):
            if v == i:
                fp += 1
            elif v > i:
                exc += 1
        key = spec.exponents(fp, exc, crs, nes)
        counts[key] = counts.get(key, 0) + 1
    result = MultiPoly.from_terms(spec.variables, counts)
    return result if counts else MultiPoly.zero(spec.variables)


@dataclass(frozen=True)
class CheckResult:
    name: str
    bounds: str
    passed: bool
    counterexample: str | None
    elapsed_ms: int

    def to_json_dict(self) -> dict:
        data: dict = {
            "name": self.name,
            "range": self.bounds,
            "pass": self.passed,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample
        return data


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    max_n: int
    checks: tuple[CheckResult, ...]
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "checks": [c.to_json_dict() for c in self.checks],
            "elapsed_ms": self.elapsed_ms,
        }


CheckFn = Callable[[int], "str | None"]


def _perm_fp_exc(w: tuple[int, ...]) -> tuple[int, int]:
    fp = exc = 0
    for i, v in enumerate(w, start=1):
        if v == i:
            fp += 1
        elif v > i:
            exc += 1
    return fp, exc


def _check_inv_identity(cap: int) -> str | None:
    for n in range(cap + 1):
        for w in enumerate_class(n, PermClass.ALL):
            crs, nes, inv = _crs_nes_inv(w)
            _, exc = _perm_fp_exc(w)
            if inv != exc + crs + 2 * nes:
                return f"n={n} word={one_line(w)}: inv={inv}, exc+crs+2*nes={exc + crs + 2 * nes}"
    return None


def _check_head_tail_roundtrip(cap: int) -> str | None:
    for n in range(cap + 1):
        for w in enumerate_class(n, PermClass.ALL):
            back = permutation_from_head_tail(head_tail_pairs(w), n)
            if back != w:
                return f"n={n} word={one_line(w)}: rebuilt {one_line(back)}"
    return None


def _check_class_tails(cap: int) -> str | None:
    for n in range(cap + 1):
        for w in enumerate_class(n, PermClass.S321_B3142):
            pairs = head_tail_pairs(w)
            tails = tuple(t for _, t in pairs)
            for a, b in zip(tails, tails[1:]):
                if b < a + 2:
                    return f"n={n} word={one_line(w)}: tails {tails} too close"
            rec = perm_statistics(w)
            if rec.des_set != tuple(sorted(tails)) or rec.exc_set != tuple(sorted(tails)):
                return (
                    f"n={n} word={one_line(w)}: tails {tuple(sorted(tails))}, "
                    f"des {rec.des_set}, exc {rec.exc_set}"
                )
    return None


def _check_class_nonnesting(cap: int) -> str | None:
    for n in range(cap + 1):
        for w in enumerate_class(n, PermClass.S321_B3142):
            _, nes, _ = _crs_nes_inv(w)
            if nes:
                return f"n={n} word={one_line(w)}: nes={nes}"
    return None


def _check_area_down(cap: int) -> str | None:
    for n in range(cap + 1):
        for p in enumerate_paths(n):
            r = path_statistics(p)
            if r.area != 2 * r.sh_d + r.sh_h - r.down:
                return f"{p}: area={r.area}, 2*sh_d+sh_h-down={2 * r.sh_d + r.sh_h - r.down}"
    return None


def _check_area_up(cap: int) -> str | None:
    for n in range(cap + 1):
        for p in enumerate_paths(n):
            r = path_statistics(p)
            if r.area != 2 * r.sh_u + r.sh_h + r.up:
                return f"{p}: area={r.area}, 2*sh_u+sh_h+up={2 * r.sh_u + r.sh_h + r.up}"
    return None


def _check_height_sums(cap: int) -> str | None:
    for n in range(cap + 1):
        for p in enumerate_paths(n):
            r = path_statistics(p)
            if r.sh_u != r.sh_d - r.down:
                return f"{p}: sh_u={r.sh_u}, sh_d-down={r.sh_d - r.down}"
    return None


def _check_strip_roundtrip(cap: int) -> str | None:
    for n in range(cap + 1):
        for p in enumerate_paths(n):
            back = path_from_head_tail(strip_decomposition(p), n)
            if back != p:
                return f"{p}: rebuilt {back}"
    return None


def _check_matchings(cap: int) -> str | None:
    for n in range(cap + 1):
        for p in enumerate_paths(n):
            r = path_statistics(p)
            for pairs in (sequential_matching(p), tunnel_matching(p)):
                if len(pairs) != r.up:
                    return f"{p}: {len(pairs)} pairs for {r.up} up steps"
                touched = [a for a, _ in pairs] + [b for _, b in pairs]
                if any(a >= b for a, b in pairs) or len(set(touched)) != len(touched):
                    return f"{p}: matching {pairs} not a perfect up/down pairing"
    return None


def _check_path_counts(cap: int) -> str | None:
    for n in range(cap + 1):
        count = sum(1 for _ in enumerate_paths(n))
        if count != motzkin_number(n):
            return f"n={n}: {count} paths, recurrence gives {motzkin_number(n)}"
    return None


def _check_phi1_transport(cap: int) -> str | None:
    for n in range(cap + 1):
        for p in enumerate_paths(n):
            r = path_statistics(p)
            img = phi1(p)
            crs, nes, _ = _crs_nes_inv(img)
            fp, exc = _perm_fp_exc(img)
            if (fp, exc, crs, nes) != (r.hor, r.up, 2 * r.sh_u, r.sh_h):
                return (
                    f"{p}: image stats {(fp, exc, crs, nes)}, "
                    f"path predicts {(r.hor, r.up, 2 * r.sh_u, r.sh_h)}"
                )
    return None


def _check_phi2_transport(cap: int) -> str | None:
    for n in range(cap + 1):
        for p in enumerate_paths(n):
            r = path_statistics(p)
            img = phi2(p)
            crs, nes, _ = _crs_nes_inv(img)
            fp, exc = _perm_fp_exc(img)
            if (fp, exc, crs, nes) != (r.hor, r.up, 0, 2 * r.sh_u + r.sh_h):
                return (
                    f"{p}: image stats {(fp, exc, crs, nes)}, "
                    f"path predicts {(r.hor, r.up, 0, 2 * r.sh_u + r.sh_h)}"
                )
    return None


def _check_phi3_transport(cap: int) -> str | None:
    for n in range(cap + 1):
        for p in enumerate_paths(n):
            r = path_statistics(p)
            img = phi3(p)
            crs, nes, inv = _crs_nes_inv(img)
            _, exc = _perm_fp_exc(img)
            if (exc, crs) != (r.up, r.sh_u + r.sh_h):
                return (
                    f"{p}: image (exc, crs)={(exc, crs)}, "
                    f"path predicts {(r.up, r.sh_u + r.sh_h)}"
                )
            if inv != r.area - r.sh_u:
                return f"{p}: image inv={inv}, area-sh_u={r.area - r.sh_u}"
    return None


def _check_phi_bijectivity(cap: int) -> str | None:
    targets = (
        (phi1, PermClass.I4321),
        (phi2, PermClass.I3412),
        (phi3, PermClass.S321_B3142),
    )
    for n in range(cap + 1):
        paths = list(enumerate_paths(n))
        for fn, cls in targets:
            images = [fn(p) for p in paths]
            expected = list(enumerate_class(n, cls))
            if len(set(images)) != len(images) or sorted(images) != expected:
                return f"n={n}: {fn.__name__} images do not match its class"
    return None


def _check_phi_roundtrips(cap: int) -> str | None:
    for n in range(cap + 1):
        for p in enumerate_paths(n):
            if involution_shape_path(phi1(p)) != p:
                return f"{p}: phi1 then shape path differs"
            if involution_shape_path(phi2(p)) != p:
                return f"{p}: phi2 then shape path differs"
            if phi3_inverse(phi3(p)) != p:
                return f"{p}: phi3 then phi3_inverse differs"
    return None


def _check_qmotzkin_at_one(cap: int) -> str | None:
    for n in range(cap + 1):
        m = motzkin_number(n)
        if q_motzkin(n).evaluate(1) != m:
            return f"n={n}: first kind evaluates to {q_motzkin(n).evaluate(1)}, not {m}"
        if q_motzkin_tilde(n).evaluate(1) != m:
            return f"n={n}: second kind evaluates to {q_motzkin_tilde(n).evaluate(1)}, not {m}"
    return None


def _check_tableau_recursion(cap: int) -> str | None:
    table = h_tableau(cap)
    for n in range(1, cap + 1):
        for i in range(1, n + 1):
            direct = table[n][i]
            rhs = h_recursion_rhs(n, i, table)
            if direct != rhs:
                return f"(n={n}, i={i}): tableau {direct}, closed form {rhs}"
    return None


def _check_tableau_first_column(cap: int) -> str | None:
    table = h_tableau(cap)
    for n in range(cap + 1):
        if table[n][0] != q_motzkin_tilde(n):
            return f"n={n}: column {table[n][0]}, recurrence {q_motzkin_tilde(n)}"
    return None


def _check_tableau_row_pair(cap: int) -> str | None:
    table = h_tableau(cap)
    for n in range(1, cap + 1):
        expect = table[n - 1][0]
        if n >= 2:
            expect = expect + table[n - 1][1]
        if table[n][0] != expect:
            return f"n={n}: H(n,0) != H(n-1,0) + H(n-1,1)"
    return None


def _uni_level(fn: Callable[[int], UniPoly]) -> Callable[[int], MultiPoly]:
    return lambda k: MultiPoly.from_unipoly(fn(k), ("q",), "q")


def _check_dumont(cap: int) -> str | None:
    shapes = (
        ("constant", lambda k: UniPoly((1,)), lambda k: UniPoly((1,))),
        (
            "geometric",
            lambda k: UniPoly.q_power(k - 1),
            lambda k: UniPoly.q_power(k - 1),
        ),
    )
    for label, alpha, beta in shapes:
        spec = FractionSpec.jfraction(("q",), _uni_level(alpha), _uni_level(beta))
        series = jfraction_series(spec, cap)
        table = stieltjes_tableau(alpha, beta, cap)
        for n in range(cap + 1):
            got = series.coefficient(n).as_unipoly("q")
            if got != table[n][0]:
                return f"{label} levels, n={n}: series {got}, tableau {table[n][0]}"
    return None


def _check_a_series(cap: int) -> str | None:
    series = named_series("A", cap)
    for n in range(cap + 1):
        got = series.coefficient(n).as_unipoly("q")
        if got != q_motzkin(n):
            return f"n={n}: fraction {got}, recurrence {q_motzkin(n)}"
    return None


def _check_mtilde_equation(cap: int) -> str | None:
    v = ("q",)
    m = named_series("Mtilde", cap)
    mq = m.scale_argument(MultiPoly.variable(v, "q"))
    q = MultiPoly.variable(v, "q")
    one = PowerSeries.one(v, cap)
    bracket = one - mq.shift(2).scale(q)
    t_plus_t2 = PowerSeries.one(v, cap).shift(1) + PowerSeries.one(v, cap).shift(2)
    lhs = m * bracket
    rhs = bracket + t_plus_t2 * m
    if lhs != rhs:
        for n in range(cap + 1):
            if lhs.coefficient(n) != rhs.coefficient(n):
                return f"t^{n}: {lhs.coefficient(n)} vs {rhs.coefficient(n)}"
    return None


def _check_main12(cap: int) -> str | None:
    lhs = named_series("main12-lhs", cap)
    rhs = named_series("main12-rhs", cap)
    for n in range(cap + 1):
        if lhs.coefficient(n) != rhs.coefficient(n):
            return f"t^{n}: {lhs.coefficient(n)} vs {rhs.coefficient(n)}"
    return None


def _check_i_abcd_vs_paths(cap: int) -> str | None:
    v = ("a", "b", "c", "d")
    series = named_series("I-abcd", cap)
    for n in range(cap + 1):
        counts: dict[tuple[int, ...], int] = {}
        for p in enumerate_paths(n):
            r = path_statistics(p)
            key = (r.hor, r.up, r.sh_u, r.sh_h)
            counts[key] = counts.get(key, 0) + 1
        direct = MultiPoly.from_terms(v, counts)
        if series.coefficient(n) != direct:
            return f"n={n}: fraction {series.coefficient(n)}, paths {direct}"
    return None


def _dist(cls: PermClass, n: int, spec: StatSpec) -> MultiPoly:
    return distribution(cls, n, spec, allow_large=True)


def _check_dist_4321(cap: int) -> str | None:
    for n in range(cap + 1):
        got = _dist(PermClass.I4321, n, StatSpec.CRS_PLUS_NES).as_unipoly("q")
        if got != q_motzkin(n):
            return f"n={n}: enumeration {got}, polynomial {q_motzkin(n)}"
    return None


def _check_dist_3412(cap: int) -> str | None:
    for n in range(cap + 1):
        got = _dist(PermClass.I3412, n, StatSpec.NES).as_unipoly("q")
        if got != q_motzkin(n):
            return f"n={n}: enumeration {got}, polynomial {q_motzkin(n)}"
    return None


def _check_dist_321(cap: int) -> str | None:
    table = h_tableau(cap)
    for n in range(cap + 1):
        got = _dist(PermClass.S321_B3142, n, StatSpec.CRS).as_unipoly("q")
        if got != q_motzkin_tilde(n) or got != table[n][0]:
            return f"n={n}: enumeration {got}, polynomial {q_motzkin_tilde(n)}"
    return None


def _check_dist_4321_joint(cap: int) -> str | None:
    series = named_series("I4321-joint", cap)
    for n in range(cap + 1):
        got = _dist(PermClass.I4321, n, StatSpec.JOINT_FP_EXC_CRS_NES)
        if got != series.coefficient(n):
            return f"n={n}: enumeration {got}, fraction {series.coefficient(n)}"
    return None


def _check_dist_3412_joint(cap: int) -> str | None:
    series = named_series("I3412-joint", cap)
    for n in range(cap + 1):
        got = _dist(PermClass.I3412, n, StatSpec.JOINT_FP_EXC_CRS_NES)
        if got != series.coefficient(n):
            return f"n={n}: enumeration {got}, fraction {series.coefficient(n)}"
    return None


def _check_dist_321_joint(cap: int) -> str | None:
    series = named_series("S321-exc-crs", cap)
    for n in range(cap + 1):
        got = _dist(PermClass.S321_B3142, n, StatSpec.JOINT_EXC_CRS)
        if got != series.coefficient(n):
            return f"n={n}: enumeration {got}, fraction {series.coefficient(n)}"
    return None


def _check_dist_transport(cap: int) -> str | None:
    for n in range(cap + 1):
        stats = [path_statistics(p) for p in enumerate_paths(n)]

        def tally(keyfn: Callable[[PathStatRecord], tuple[int, ...]], variables):
            counts: dict[tuple[int, ...], int] = {}
            for r in stats:
                key = keyfn(r)
                counts[key] = counts.get(key, 0) + 1
            return MultiPoly.from_terms(variables, counts)

        via1 = tally(lambda r: (r.hor, r.up, 2 * r.sh_u, r.sh_h), ("x", "y", "p", "q"))
        if via1 != _dist(PermClass.I4321, n, StatSpec.JOINT_FP_EXC_CRS_NES):
            return f"n={n}: sequential-matching transport disagrees"
        via2 = tally(
            lambda r: (r.hor, r.up, 0, 2 * r.sh_u + r.sh_h), ("x", "y", "p", "q")
        )
        if via2 != _dist(PermClass.I3412, n, StatSpec.JOINT_FP_EXC_CRS_NES):
            return f"n={n}: tunnel-matching transport disagrees"
        via3 = tally(lambda r: (r.up, r.sh_u + r.sh_h), ("y", "q"))
        if via3 != _dist(PermClass.S321_B3142, n, StatSpec.JOINT_EXC_CRS):
            return f"n={n}: strip transport disagrees"
    return None


@dataclass(frozen=True)
class _Check:
    name: str
    suite: str
    bound: int
    fn: CheckFn


_CHECKS: tuple[_Check, ...] = (
    _Check("inv-identity", "statistics", 8, _check_inv_identity),
    _Check("head-tail-roundtrip", "statistics", 8, _check_head_tail_roundtrip),
    _Check("class-tails-des-exc", "statistics", 9, _check_class_tails),
    _Check("class-nonnesting", "statistics", 9, _check_class_nonnesting),
    _Check("area-down-identity", "paths", 12, _check_area_down),
    _Check("area-up-identity", "paths", 12, _check_area_up),
    _Check("height-sum-difference", "paths", 12, _check_height_sums),
    _Check("strip-roundtrip", "paths", 10, _check_strip_roundtrip),
    _Check("matchings-perfect", "paths", 10, _check_matchings),
    _Check("path-count-recurrence", "paths", 12, _check_path_counts),
    _Check("phi1-transport", "bijections", 10, _check_phi1_transport),
    _Check("phi2-transport", "bijections", 10, _check_phi2_transport),
    _Check("phi3-transport", "bijections", 10, _check_phi3_transport),
    _Check("phi-bijectivity", "bijections", 9, _check_phi_bijectivity),
    _Check("phi-roundtrips", "bijections", 10, _check_phi_roundtrips),
    _Check("qmotzkin-at-one", "qpoly", 30, _check_qmotzkin_at_one),
    _Check("tableau-recursion", "qpoly", 25, _check_tableau_recursion),
    _Check("tableau-first-column", "qpoly", 30, _check_tableau_first_column),
    _Check("tableau-row-pair", "qpoly", 30, _check_tableau_row_pair),
    _Check("dumont-expansion", "qpoly", 20, _check_dumont),
    _Check("a-series-recurrence", "qpoly", 20, _check_a_series),
    _Check("mtilde-functional-equation", "qpoly", 20, _check_mtilde_equation),
    _Check("main12-identity", "qpoly", 40, _check_main12),
    _Check("i-abcd-vs-paths", "qpoly", 10, _check_i_abcd_vs_paths),
    _Check("dist-4321-crs-nes", "distributions", 10, _check_dist_4321),
    _Check("dist-3412-nes", "distributions", 10, _check_dist_3412),
    _Check("dist-321-crs", "distributions", 9, _check_dist_321),
    _Check("dist-4321-joint-fraction", "distributions", 9, _check_dist_4321_joint),
    _Check("dist-3412-joint-fraction", "distributions", 9, _check_dist_3412_joint),
    _Check("dist-321-joint-fraction", "distributions", 9, _check_dist_321_joint),
    _Check("dist-path-transport", "distributions", 9, _check_dist_transport),
)

SUITES: tuple[str, ...] = (
    "all",
    "statistics",
    "paths",
    "bijections",
    "qpoly",
    "distributions",
)


def run_suite(suite: str, max_n: int) -> VerificationReport:
    """Run every check of a suite up to min(its bound, max_n).

    >>> run_suite("paths", 0).passed
    True
    """
    if suite not in SUITES:
        known = ", ".join(SUITES)
        raise ValueError(f"unknown suite {suite!r} (known: {known})")
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    selected = [c for c in _CHECKS if suite in ("all", c.suite)]
    selected.sort(key=lambda c: c.name)
    results = []
    suite_start = time.perf_counter()
    for check in selected:
        cap = min(check.bound, max_n)
        start = time.perf_counter()
        counterexample = check.fn(cap)
        elapsed = int((time.perf_counter() - start) * 1000)
        results.append(
            CheckResult(
                name=check.name,
                bounds=f"n≤{cap}",
                passed=counterexample is None,
                counterexample=counterexample,
                elapsed_ms=elapsed,
            )
        )
    total = int((time.perf_counter() - suite_start) * 1000)
    return VerificationReport(
        suite=suite, max_n=max_n, checks=tuple(results), elapsed_ms=total
    )
