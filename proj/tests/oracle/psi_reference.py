#!/usr/bin/env python3
"""High-precision reference values for the frozen constants in the C++ tests.

Evaluates the decimation limit psi and the first family members with mpmath
at 50 digits. Run it to regenerate the table; the unit tests quote these
numbers to 21 digits and compare at 1e-13 relative.
"""

import mpmath as mp

mp.mp.dps = 50


def phi_minus(t):
    return 2 * t / (5 + mp.sqrt(25 - 4 * t))


def phi_plus(t):
    return (5 + mp.sqrt(25 - 4 * t)) / 2


def psi(t):
    # (3/2) * lim 5^k phi_-^k(t); 120 steps leave ~5^-120 relative error,
    # far below 50 digits of working precision... the limit is reached when
    # successive scaled iterates agree.
    x = mp.mpf(t)
    prev = None
    for k in range(1, 400):
        x = phi_minus(x)
        cur = mp.mpf(5) ** k * x
        if prev is not None and mp.fabs(cur - prev) < mp.mpf(10) ** (-48) * cur:
            break
        prev = cur
    return mp.mpf(3) / 2 * cur


def show(name, value):
    print(f"{name:24s} = {mp.nstr(value, 22)}")


def main():
    show("psi(2)", psi(2))
    show("psi(3)", psi(3))
    show("psi(5)", psi(5))
    show("phi_-(5)", phi_minus(5))
    show("phi_+(phi_-(5))", phi_plus(phi_minus(5)))

    show("lam(2,1) = 5 psi(2)", 5 * psi(2))
    show("lam(3,1) = 5 psi(3)", 5 * psi(3))
    show("lam(5,1) = 5 psi(5)", 5 * psi(5))
    show("25 psi(3)", 25 * psi(3))

    # First flanking gap pair: (5 lam(5,1), 25 lam(3,1)) and its partner
    # ending at 5 lam(5,2); lam(5,2) = 25 psi(phi_+(5)).
    show("5 lam(5,1)", 25 * psi(5))
    show("5^2 lam(3,1)", 125 * psi(3))
    show("5 lam(5,2)", 125 * psi(phi_plus(5)))

    show("base gap lo", (5 - mp.sqrt(5)) / 2)
    show("base gap hi", (5 + mp.sqrt(5)) / 2)


if __name__ == "__main__":
    main()
