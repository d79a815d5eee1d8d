import pytest

from crossnest.paths import enumerate_paths, path_statistics
from crossnest.polynomials import MultiPoly, UniPoly
from crossnest.qmotzkin import (
    motzkin_number,
    q_motzkin,
    q_motzkin_tilde,
    stieltjes_tableau,
)
from crossnest.series import (
    PRESETS,
    FractionSpec,
    PowerSeries,
    jfraction_series,
    named_series,
)


def uni_coeffs(series: PowerSeries) -> list[UniPoly]:
    return [c.as_unipoly("q") for c in series.coeffs]


class TestPowerSeries:
    def test_one_and_shift(self):
        s = PowerSeries.one(("q",), 3)
        assert [str(c) for c in s.coeffs] == ["1", "0", "0", "0"]
        assert [str(c) for c in s.shift(2).coeffs] == ["0", "0", "1", "0"]

    def test_mul_truncates(self):
        v = ("q",)
        t = PowerSeries.one(v, 4).shift(1)
        prod = t * t
        assert [str(c) for c in prod.coeffs] == ["0", "0", "1", "0", "0"]

    def test_scale_argument(self):
        v = ("q",)
        s = PowerSeries.one(v, 2) + PowerSeries.one(v, 2).shift(1)
        scaled = s.scale_argument(MultiPoly.variable(v, "q"))
        assert [str(c) for c in scaled.coeffs] == ["1", "q", "0"]

    def test_variable_mismatch(self):
        with pytest.raises(ValueError):
            PowerSeries.one(("q",), 2) + PowerSeries.one(("y", "q"), 2)

    def test_coefficient_bounds(self):
        s = PowerSeries.one(("q",), 2)
        with pytest.raises(ValueError):
            s.coefficient(3)

    def test_json_dict(self):
        s = named_series("Mtilde", 3)
        assert s.to_json_dict() == {
            "order": 3,
            "vars": ["q"],
            "coeffs": ["1", "1", "2", "3 + q"],
        }


class TestJFraction:
    def test_all_ones_gives_motzkin(self):
        v = ("q",)
        one = MultiPoly.one(v)
        spec = FractionSpec.jfraction(v, lambda k: one, lambda k: one)
        series = jfraction_series(spec, 5)
        assert [c.evaluate({"q": 1}) for c in series.coeffs] == [1, 1, 2, 4, 9, 21]

    def test_order_zero(self):
        v = ("q",)
        one = MultiPoly.one(v)
        spec = FractionSpec.jfraction(v, lambda k: one, lambda k: one)
        series = jfraction_series(spec, 0)
        assert series.order == 0
        assert str(series.coefficient(0)) == "1"

    def test_deeper_depth_changes_nothing(self):
        v = ("q",)
        one = MultiPoly.one(v)
        spec = FractionSpec.jfraction(v, lambda k: one, lambda k: one)
        for order in (0, 1, 5, 9, 12):
            default_depth = (order + 1) // 2 + 1
            base = jfraction_series(spec, order)
            assert jfraction_series(spec, order, depth=default_depth + 1) == base
            assert jfraction_series(spec, order, depth=default_depth + 5) == base

    def test_shallower_depth_does_change(self):
        v = ("q",)
        one = MultiPoly.one(v)
        spec = FractionSpec.jfraction(v, lambda k: one, lambda k: one)
        full = jfraction_series(spec, 10)
        shallow = jfraction_series(spec, 10, depth=2)
        assert full != shallow

    def test_matches_stieltjes_tableau_column(self):
        # The fraction expansion and the tableau must agree level by level.
        def alpha(i: int) -> UniPoly:
            return UniPoly.q_power(i - 1)

        def beta(i: int) -> UniPoly:
            return UniPoly.q_power(2 * (i - 1))

        v = ("q",)
        spec = FractionSpec.jfraction(
            v,
            lambda k: MultiPoly.from_unipoly(alpha(k), v, "q"),
            lambda k: MultiPoly.from_unipoly(beta(k), v, "q"),
        )
        series = jfraction_series(spec, 14)
        table = stieltjes_tableau(alpha, beta, 14)
        assert uni_coeffs(series) == [row[0] for row in table]

    def test_unknown_kind(self):
        spec = FractionSpec("weird", ("q",))
        with pytest.raises(ValueError):
            jfraction_series(spec, 3)

    def test_negative_order(self):
        v = ("q",)
        one = MultiPoly.one(v)
        spec = FractionSpec.jfraction(v, lambda k: one, lambda k: one)
        with pytest.raises(ValueError):
            jfraction_series(spec, -1)


class TestPresets:
    def test_catalogue(self):
        assert set(PRESETS) == {
            "motzkin",
            "I-abcd",
            "I4321-joint",
            "I3412-joint",
            "A",
            "S321-exc-crs",
            "M",
            "Mtilde",
            "main12-lhs",
            "main12-rhs",
        }

    def test_unknown_preset(self):
        with pytest.raises(ValueError):
            named_series("nope", 3)

    def test_motzkin_preset(self):
        series = named_series("motzkin", 9)
        assert [str(c) for c in series.coeffs] == [
            str(motzkin_number(n)) for n in range(10)
        ]

    def test_a_preset_matches_first_kind_recurrence(self):
        series = named_series("A", 16)
        assert uni_coeffs(series) == [q_motzkin(n) for n in range(17)]

    def test_m_presets_match_recurrences(self):
        assert uni_coeffs(named_series("M", 12)) == [q_motzkin(n) for n in range(13)]
        assert uni_coeffs(named_series("Mtilde", 12)) == [
            q_motzkin_tilde(n) for n in range(13)
        ]

    def test_i_abcd_low_orders(self):
        series = named_series("I-abcd", 2)
        v = ("a", "b", "c", "d")
        assert series.coefficient(0) == MultiPoly.one(v)
        assert series.coefficient(1) == MultiPoly.variable(v, "a")
        assert series.coefficient(2) == (
            MultiPoly.monomial(v, {"a": 2}) + MultiPoly.variable(v, "b")
        )

    def test_i_abcd_matches_path_enumeration(self):
        v = ("a", "b", "c", "d")
        series = named_series("I-abcd", 7)
        for n in range(8):
            counts: dict[tuple[int, ...], int] = {}
            for p in enumerate_paths(n):
                r = path_statistics(p)
                key = (r.hor, r.up, r.sh_u, r.sh_h)
                counts[key] = counts.get(key, 0) + 1
            assert series.coefficient(n) == MultiPoly.from_terms(v, counts), n

    def test_s321_preset_at_y_one(self):
        series = named_series("S321-exc-crs", 8)
        for n in range(9):
            collapsed = series.coefficient(n).substitute({"y": 1}).as_unipoly("q")
            assert collapsed == q_motzkin_tilde(n), n

    def test_joint_presets_at_all_ones_count_involutions(self):
        # Involutions of n are counted by the telephone numbers.
        telephone = [1, 1, 2, 4, 10, 26, 76, 232, 764, 2620]
        for preset in ("I4321-joint", "I3412-joint"):
            series = named_series(preset, 6)
            totals = [
                c.evaluate({"x": 1, "y": 1, "p": 1, "q": 1}) for c in series.coeffs
            ]
            # Pattern-restricted involutions are Motzkin-many, fewer than
            # all involutions from n = 4 on.
            assert totals == [motzkin_number(n) for n in range(7)]
            assert all(t <= tel for t, tel in zip(totals, telephone))

    def test_main12_sides_agree(self):
        lhs = named_series("main12-lhs", 14)
        rhs = named_series("main12-rhs", 14)
        assert lhs == rhs

    def test_main12_rhs_is_mtilde(self):
        rhs = named_series("main12-rhs", 14)
        assert uni_coeffs(rhs) == [q_motzkin_tilde(n) for n in range(15)]

    def test_nested_depth_regression(self):
        # The nested shape of main12-lhs, rebuilt by hand: level 1 is
        # t + t^2, and past that level k carries q^((k-1)/2) t (odd k only)
        # plus q^(k-1) t^2.
        v = ("q",)

        def linear(k: int) -> MultiPoly:
            if k == 1:
                return MultiPoly.one(v)
            if k % 2 == 0:
                return MultiPoly.zero(v)
            return MultiPoly.monomial(v, {"q": (k - 1) // 2})

        def quadratic(k: int) -> MultiPoly:
            if k == 1:
                return MultiPoly.one(v)
            return MultiPoly.monomial(v, {"q": k - 1})

        spec = FractionSpec.nested(v, linear, quadratic)
        base = jfraction_series(spec, 10)
        assert base == named_series("main12-lhs", 10)
        assert jfraction_series(spec, 10, depth=30) == base


class TestMtildeFunctionalEquation:
    def test_holds_to_order_16(self):
        v = ("q",)
        order = 16
        m = named_series("Mtilde", order)
        q = MultiPoly.variable(v, "q")
        m_at_qt = m.scale_argument(q)
        one = PowerSeries.one(v, order)
        bracket = one - m_at_qt.shift(2).scale(q)
        t_poly = one.shift(1) + one.shift(2)
        assert m * bracket == bracket + t_poly * m
