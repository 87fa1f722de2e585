"""Counting chord diagrams by genus with the three-term recursion.

The counts c_g(n) satisfy

    (n + 1) c_g(n) = 2(2n - 1) c_g(n-1) + (2n - 1)(n - 1)(2n - 3) c_{g-1}(n-2)

which lets us tabulate them far beyond what enumeration can reach.  The
script prints the start of the table, checks the row sums against the total
number (2n - 1)!! of matchings, and compares the genus-1 closed form
against the recursion.
"""

from chordgenus import (
    boundary_polynomials,
    diagram_count_closed_form,
    diagram_count_table,
    double_factorial_odd,
)


def main():
    n_max = 10
    table = diagram_count_table(n_max // 2, n_max)

    print(f"c_g(n) for n <= {n_max} (rows n, columns g):")
    for n in range(n_max + 1):
        row = [table.count(g, n) for g in range(n // 2 + 1)]
        print(f"  n={n:2d}: {row}")

    print()
    print("row sums against (2n-1)!!:")
    for n in (4, 7, 10):
        total = sum(table.count(g, n) for g in range(n // 2 + 1))
        print(f"  n={n:2d}: {total} == {double_factorial_odd(n)}")
        assert total == double_factorial_odd(n)

    print()
    print("genus 1 closed form c_1(n) = binom(2n, n-2) n(n-1)(n+1)/12 ...")
    print("divided differently here, but same numbers:")
    for n in range(2, 9):
        closed = diagram_count_closed_form(1, n)
        print(f"  c_1({n}) = {closed}")
        assert closed == table.count(1, n)

    print()
    print("the same counts package into boundary-count polynomials p_n(z):")
    polys = boundary_polynomials(5)
    for n in range(1, 6):
        print(f"  p_{n}(z) = {polys.poly(n)}")
    print("evaluating p_n at z = 1 always gives 1 (total probability):")
    for n in range(1, 6):
        assert polys.evaluate(n, 1) == 1
    print("  checked for n <= 5")


if __name__ == "__main__":
    main()
