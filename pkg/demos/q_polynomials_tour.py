"""Tour of the q-polynomials, the tableau, and the preset series.

Run:  python3 demos/q_polynomials_tour.py
"""

from crossnest import (
    PermClass,
    StatSpec,
    distribution,
    h_recursion_rhs,
    h_tableau,
    named_series,
    q_motzkin,
    q_motzkin_tilde,
)


def main() -> None:
    # Two q-analogues of the Motzkin numbers, both exact polynomials.
    print("n   M_n(q)              Mtilde_n(q)")
    for n in range(7):
        print(f"{n}   {str(q_motzkin(n)):18}  {q_motzkin_tilde(n)}")
    print()

    # The tableau with level weights q^(i-1); its first column is the
    # tilde polynomial.
    table = h_tableau(4)
    print("tableau rows (levels q^(i-1)):")
    for n, row in enumerate(table):
        print(f"  n={n}: " + " | ".join(str(entry) for entry in row))
    print("first column equals Mtilde:",
          all(table[n][0] == q_motzkin_tilde(n) for n in range(5)))
    print("closed-form recursion at (4, 2):",
          h_recursion_rhs(4, 2, table) == table[4][2])
    print()

    # Enumerated statistic distributions reproduce the polynomials.
    got = distribution(PermClass.I4321, 5, StatSpec.CRS_PLUS_NES)
    print("crs+nes over I_5(4321):", got)
    print("         equals M_5(q):", got.as_unipoly("q") == q_motzkin(5))
    got = distribution(PermClass.S321_B3142, 5, StatSpec.CRS)
    print("crs over S_5(321, barred-3142):", got)
    print("           equals Mtilde_5(q):",
          got.as_unipoly("q") == q_motzkin_tilde(5))
    print()

    # Continued fractions, expanded exactly as power series.
    series = named_series("I-abcd", 4)
    print("I(a,b,c,d;t) coefficients:")
    for n, coeff in enumerate(series.coeffs):
        print(f"  t^{n}: {coeff}")
    lhs = named_series("main12-lhs", 12)
    rhs = named_series("main12-rhs", 12)
    print("nested and J-type fractions agree to t^12:", lhs == rhs)


if __name__ == "__main__":
    main()
