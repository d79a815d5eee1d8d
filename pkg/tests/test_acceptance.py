"""Acceptance gate: the headline identities at desk scale, exactly.

Each test covers one numbered criterion and prints a single PASS or FAIL
line (run ``pytest tests/test_acceptance.py -s`` to watch the scoreboard).
Every comparison is exact integer or polynomial equality; criteria with a
stated time budget also assert it.
"""

from itertools import permutations
import time

import pytest

from crossnest import (
    MultiPoly,
    PermClass,
    StatSpec,
    distribution,
    enumerate_class,
    enumerate_paths,
    h_recursion_rhs,
    h_tableau,
    involution_shape_path,
    named_series,
    path_statistics,
    perm_statistics,
    phi1,
    phi2,
    phi3,
    phi3_inverse,
    q_motzkin,
    q_motzkin_tilde,
    step_height,
    strip_decomposition,
)

MOTZKIN = (1, 1, 2, 4, 9, 21, 51, 127, 323, 835)

SHOWCASE_PERM = (4, 6, 2, 9, 8, 1, 7, 3, 10, 5)
SHOWCASE_PATH = "uuhuudddudduuhdd"
PHI1_IMAGE = (6, 7, 3, 8, 10, 1, 2, 4, 11, 5, 9, 15, 16, 14, 12, 13)
PHI2_IMAGE = (11, 8, 3, 7, 6, 5, 4, 2, 10, 9, 1, 16, 15, 14, 13, 12)
PHI3_IMAGE = (6, 1, 7, 2, 3, 8, 4, 10, 5, 11, 9, 15, 12, 16, 13, 14)
STRIP_PAIRS = ((5, 1), (6, 3), (7, 6), (9, 8), (10, 10), (14, 12), (15, 14))

TABLEAU_4 = [
    ["1"],
    ["1", "1"],
    ["2", "1 + q", "q"],
    ["3 + q", "2 + 2*q + q^2", "q + q^2 + q^3", "q^3"],
    [
        "5 + 3*q + q^2",
        "3 + 4*q + 3*q^2 + 2*q^3",
        "2*q + 2*q^2 + 3*q^3 + q^4 + q^5",
        "q^3 + q^4 + q^5 + q^6",
        "q^6",
    ],
]


def report(tag: str, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} {tag}: {detail}")
    assert ok, f"{tag}: {detail}"


@pytest.fixture(scope="module")
def paths_by_n():
    return {n: list(enumerate_paths(n)) for n in range(13)}


def test_01_motzkin_counts(paths_by_n):
    t0 = time.perf_counter()
    families = (PermClass.I4321, PermClass.I3412, PermClass.S321_B3142)
    ok = True
    for n, expected in enumerate(MOTZKIN):
        sizes = [len(paths_by_n[n])]
        sizes += [sum(1 for _ in enumerate_class(n, family)) for family in families]
        ok = ok and sizes == [expected] * 4
    elapsed = time.perf_counter() - t0
    report(
        "C01",
        ok and elapsed < 60.0,
        f"paths and three permutation families are Motzkin-counted for "
        f"n<=9 ({elapsed:.1f}s)",
    )


def test_02_worked_examples():
    r = perm_statistics(SHOWCASE_PERM)
    ok = (r.exc, r.crs, r.nes, r.inv) == (5, 7, 4, 20)

    s = path_statistics(SHOWCASE_PATH)
    ok = ok and (s.hor, s.up, s.down, s.sh_u, s.sh_h, s.sh_d, s.area) == (
        2, 7, 7, 8, 4, 15, 27,
    )

    ok = ok and step_height(SHOWCASE_PATH, 7) == 3
    ok = ok and step_height(SHOWCASE_PATH, 14) == 2

    ok = ok and phi1(SHOWCASE_PATH) == PHI1_IMAGE
    ok = ok and phi2(SHOWCASE_PATH) == PHI2_IMAGE
    ok = ok and strip_decomposition(SHOWCASE_PATH) == STRIP_PAIRS
    ok = ok and phi3(SHOWCASE_PATH) == PHI3_IMAGE

    report("C02", ok, "showcase permutation, path, heights, and images reproduce")


def test_03_involution_distributions():
    t0 = time.perf_counter()
    ok = True
    for n in range(11):
        expected = q_motzkin(n)
        got_a = distribution(PermClass.I4321, n, StatSpec.CRS_PLUS_NES)
        got_b = distribution(PermClass.I3412, n, StatSpec.NES)
        ok = ok and got_a.as_unipoly("q") == expected
        ok = ok and got_b.as_unipoly("q") == expected
    elapsed = time.perf_counter() - t0
    report(
        "C03",
        ok and elapsed < 120.0,
        f"crs+nes over I(4321) and nes over I(3412) give M_n(q), "
        f"n<=10 ({elapsed:.1f}s)",
    )


def test_04_full_symmetric_group_scan():
    t0 = time.perf_counter()
    table = h_tableau(9)
    ok = True
    for n in range(10):
        got = distribution(PermClass.S321_B3142, n, StatSpec.CRS).as_unipoly("q")
        expected = q_motzkin_tilde(n)
        ok = ok and got == expected and expected == table[n][0]
    elapsed = time.perf_counter() - t0
    report(
        "C04",
        ok and elapsed < 180.0,
        f"crs over the doubly restricted class gives the tilde polynomial "
        f"and the first tableau column, n<=9 ({elapsed:.1f}s)",
    )


def test_05_tableau_values():
    rendered = [[str(entry) for entry in row] for row in h_tableau(4)]
    ok = rendered == TABLEAU_4
    report("C05", ok, "all 15 tableau entries up to n=4 render byte-for-byte")


def test_06_tableau_recursion():
    t0 = time.perf_counter()
    table = h_tableau(25)
    ok = all(
        table[n][i] == h_recursion_rhs(n, i, table)
        for n in range(1, 26)
        for i in range(1, n + 1)
    )
    elapsed = time.perf_counter() - t0
    report(
        "C06",
        ok and elapsed < 30.0,
        f"closed-form right side matches every tableau entry, "
        f"1<=i<=n<=25 ({elapsed:.1f}s)",
    )


def test_07_continued_fraction_identity():
    t0 = time.perf_counter()
    ok = named_series("main12-lhs", 40) == named_series("main12-rhs", 40)
    elapsed = time.perf_counter() - t0
    report(
        "C07",
        ok and elapsed < 30.0,
        f"nested and J-type fractions agree coefficientwise to t^40 "
        f"({elapsed:.1f}s)",
    )


def test_08_area_identities(paths_by_n):
    t0 = time.perf_counter()
    ok = True
    for n in range(13):
        for p in paths_by_n[n]:
            r = path_statistics(p)
            ok = ok and r.area == 2 * r.sh_d + r.sh_h - r.down
            ok = ok and r.area == 2 * r.sh_u + r.sh_h + r.up
            ok = ok and r.sh_u == r.sh_d - r.down
    elapsed = time.perf_counter() - t0
    report(
        "C08",
        ok and elapsed < 60.0,
        f"area and height-sum identities hold on all paths n<=12 "
        f"({elapsed:.1f}s)",
    )


def test_09_transport_and_round_trips(paths_by_n):
    ok = True
    for n in range(11):
        for p in paths_by_n[n]:
            s = path_statistics(p)

            w = phi1(p)
            r = perm_statistics(w)
            ok = ok and (r.fp, r.exc, r.crs, r.nes) == (
                s.hor, s.up, 2 * s.sh_u, s.sh_h,
            )
            ok = ok and involution_shape_path(w) == p

            w = phi2(p)
            r = perm_statistics(w)
            ok = ok and (r.fp, r.exc, r.crs, r.nes) == (
                s.hor, s.up, 0, 2 * s.sh_u + s.sh_h,
            )
            ok = ok and involution_shape_path(w) == p

            w = phi3(p)
            r = perm_statistics(w)
            ok = ok and (r.exc, r.crs, r.nes) == (s.up, s.sh_u + s.sh_h, 0)
            ok = ok and r.inv == s.area - s.sh_u
            ok = ok and phi3_inverse(w) == p
    report(
        "C09",
        ok,
        "all three maps transport statistics and invert on all paths n<=10",
    )


def test_10_inversion_identity():
    ok = True
    for n in range(9):
        for w in permutations(range(1, n + 1)):
            r = perm_statistics(w)
            ok = ok and r.inv == r.exc + r.crs + 2 * r.nes
    report("C10", ok, "inv = exc + crs + 2*nes across all of S_n, n<=8")


def test_11_joint_distributions_match_fractions():
    t0 = time.perf_counter()
    i4321 = named_series("I4321-joint", 9)
    i3412 = named_series("I3412-joint", 9)
    s321 = named_series("S321-exc-crs", 9)
    ok = True
    for n in range(10):
        joint = StatSpec.JOINT_FP_EXC_CRS_NES
        ok = ok and distribution(PermClass.I4321, n, joint) == i4321.coefficient(n)
        ok = ok and distribution(PermClass.I3412, n, joint) == i3412.coefficient(n)
        got = distribution(PermClass.S321_B3142, n, StatSpec.JOINT_EXC_CRS)
        ok = ok and got == s321.coefficient(n)
    elapsed = time.perf_counter() - t0
    report(
        "C11",
        ok,
        f"four-variable and two-variable fractions match enumerated joint "
        f"distributions, n<=9 ({elapsed:.1f}s)",
    )


def test_12_path_generating_function(paths_by_n):
    variables = ("a", "b", "c", "d")
    series = named_series("I-abcd", 10)
    ok = True
    for n in range(11):
        counts: dict[tuple[int, ...], int] = {}
        for p in paths_by_n[n]:
            r = path_statistics(p)
            key = (r.hor, r.up, r.sh_u, r.sh_h)
            counts[key] = counts.get(key, 0) + 1
        expected = MultiPoly.from_terms(variables, counts)
        ok = ok and series.coefficient(n) == expected
    report(
        "C12",
        ok,
        "four-variable fraction coefficients equal path statistic sums, n<=10",
    )
