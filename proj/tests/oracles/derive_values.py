"""Independent reference values for the kernel unit tests.

Kernel integrals are evaluated with mpmath's adaptive tanh-sinh quadrature in
polar coordinates centred at a, splitting the angle at the direction of b and
the radius at the closest approach to b, so both singular points sit on
interval endpoints. Polynomial sums use exact rational arithmetic.
"""
from fractions import Fraction as F
from math import comb

import mpmath as mp

mp.mp.dps = 30


def c1_corrected(a, b, k):
    return sum((-(b ** l) / l) * sum(comb(k - 1, j) * a ** (k - 1 - l - j) * (-b) ** j for j in range(k - l))
               for l in range(1, k))


def c1_uncorrected(a, b, k):
    return sum((-(b ** l) / l) * sum(comb(k - 1, j) * a ** (k - 1 - j) * (-b) ** j for j in range(k - l))
               for l in range(1, k))


class Q:
    """Exact complex rational."""

    def __init__(self, re, im=F(0)):
        self.re, self.im = F(re), F(im)

    def __add__(self, o):
        o = o if isinstance(o, Q) else Q(o)
        return Q(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Q(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-(o if isinstance(o, Q) else Q(o)))

    def __mul__(self, o):
        o = o if isinstance(o, Q) else Q(o)
        return Q(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, n):
        return Q(self.re / n, self.im / n)

    def __pow__(self, n):
        r = Q(1)
        for _ in range(n):
            r = r * self
        return r

    def __repr__(self):
        return f"({float(self.re)!r}, {float(self.im)!r})"


def mixed_integral(a, b, mu, nu, R=1):
    a, b = mp.mpc(a), mp.mpc(b)
    d = b - a
    phi_b = mp.arg(d)

    def rho_max(phi):
        e = mp.expj(phi)
        # |a + rho e|^2 = R^2
        p = mp.re(mp.conj(a) * e)
        return -p + mp.sqrt(p * p - (abs(a) ** 2 - R * R))

    def g(rho, phi):
        e = mp.expj(phi)
        zeta = a + rho * e
        # rho / (zeta - a) = 1 / e
        return (mp.conj(zeta) - mp.conj(a)) ** (mu - 1) * (zeta - b) ** (nu - 1) / (e * (mp.conj(zeta) - mp.conj(b)))

    def inner(phi):
        top = rho_max(phi)
        s = abs(d) * mp.cos(phi - phi_b)
        if 0 < s < top:
            return mp.quad(lambda r: g(r, phi), [0, s, top])
        return mp.quad(lambda r: g(r, phi), [0, top])

    return 2j * mp.quad(inner, [phi_b, phi_b + mp.pi, phi_b + 2 * mp.pi])


if __name__ == "__main__":
    a, b = Q(F(3, 10)), Q(0, F(1, 5))
    print("c1(0.3, 0.2i, 3) corrected", c1_corrected(a, b, 3))
    print("c1(0.3, 0.2i, 3) uncorrected", c1_uncorrected(a, b, 3))
    print("c1(0.3, 0.2i, 4) corrected", c1_corrected(a, b, 4))
    A, B = mp.mpc(0.3, 0.1), mp.mpc(-0.2, 0.4)
    for mu, nu in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2), (2, 3), (3, 3)]:
        v = mixed_integral(A, B, mu, nu) / (2j * mp.pi)
        print(f"c3(0.3+0.1i, -0.2+0.4i, {mu}, {nu}) = ({mp.nstr(v.real, 17)}, {mp.nstr(v.imag, 17)})")
