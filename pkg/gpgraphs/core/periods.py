# -*- encoding: utf-8 -*-
"""Provides Gaussian periods, period polynomials and their closed forms.

For `N | q - 1` the Gaussian periods of F_q are

    η_i = Σ_{x ∈ ω^i <ω^N>} ζ_p^{Tr(x)},    i = 0, ..., N - 1,

indexed by the coset index with respect to the primitive element ω of
`gpgraphs.core.fields.build_field`.

Each period is computed from the histogram of trace values over its coset.
A cyclotomic sum Σ_a c_a ζ_p^a is a rational integer exactly when the
tallies c_1, ..., c_{p-1} coincide, and then it equals c_0 - c_1. Any other
period is evaluated with mpmath and flagged as inexact.

Examples:
    >>> from gpgraphs.core.fields import build_field
    >>> gaussian_periods(build_field(3, 4), 2)
    PeriodVector(N=2, q=81, values=[-5, 4])
    >>> gaussian_periods(build_field(2, 4), 3)
    PeriodVector(N=3, q=16, values=[-3, 1, 1])
    >>> gaussian_periods(build_field(2, 4), 1)
    PeriodVector(N=1, q=16, values=[-1])

"""
from builtins import object, super
from collections import Counter
import logging

import mpmath
from sympy import Poly, Symbol, isprime, perfect_power
from sympy.polys.domains import ZZ

from .fields import check_divisor
from .settings import settings
from .utils import certify

logger = logging.getLogger(__name__)

X = Symbol('X')


class InexactPeriodsError(ArithmeticError):
    """Raised when an exact computation is given inexact periods."""


class PeriodVector(object):
    """The Gaussian periods η_0, ..., η_{N-1} of F_q.

    Attributes:
        N (int): The number of cosets.
        q (int): The field size.
        values (Tuple): The periods, as `int` when exact and as an mpmath
            `mpf` (or `mpc`, when `-1` is not in the subgroup of N-th
            powers) otherwise.
        exact (Tuple[bool]): Exactness flag for each value.

    """
    def __init__(self, N, q, values, exact=None):
        super().__init__()
        self.N = N
        self.q = q
        self.values = tuple(values)
        if exact is None:
            exact = [isinstance(v, int) for v in self.values]
        self.exact = tuple(bool(e) for e in exact)
        assert len(self.values) == N == len(self.exact)

    @property
    def n(self):
        """The size of each coset, (q - 1) / N."""
        return (self.q - 1) // self.N

    @property
    def all_exact(self):
        return all(self.exact)

    def require_exact(self):
        if not self.all_exact:
            raise InexactPeriodsError(
                    "the periods of order {} of F_{} are not all integers"
                    .format(self.N, self.q))

    def multiset(self):
        """Exact periods as sorted `(value, count)` pairs, largest first.

        Examples:
            >>> PeriodVector(3, 16, [-3, 1, 1]).multiset()
            [(1, 2), (-3, 1)]

        """
        self.require_exact()
        return sorted(Counter(self.values).items(), reverse=True)

    def __len__(self):
        return self.N

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __repr__(self):
        return "PeriodVector(N={}, q={}, values=[{}])".format(
                self.N, self.q, ", ".join(_format_value(v) for v in self.values))


def _format_value(value):
    if isinstance(value, int):
        return str(value)
    return mpmath.nstr(value, 6)


def coset_trace_tallies(ctx, N):
    """Histograms of trace values over the cosets of the N-th powers.

    Args:
        ctx (FiniteField): A field with tables.
        N (int): A divisor of q - 1.

    Returns:
        (np.ndarray): An `(N, p)` array whose entry `[i, a]` counts the
        x in ω^i <ω^N> with Tr(x) = a.

    Examples:
        >>> from gpgraphs.core.fields import build_field
        >>> coset_trace_tallies(build_field(3, 4), 2)
        array([[10, 15, 15],
               [16, 12, 12]])

    """
    return ctx.trace_tallies(N)


def _cyclotomic_sum(tallies, p):
    with mpmath.workdps(settings.precision):
        real = mpmath.fsum(c * mpmath.cospi(mpmath.mpf(2 * a) / p)
                           for a, c in enumerate(tallies))
        imag = mpmath.fsum(c * mpmath.sinpi(mpmath.mpf(2 * a) / p)
                           for a, c in enumerate(tallies))
        if abs(imag) < settings.tolerance:
            return +real
        return mpmath.mpc(real, imag)


def gaussian_periods(ctx, N):
    """Computes the Gaussian periods of order `N` of the field `ctx`.

    Args:
        ctx (FiniteField): A field with tables.
        N (int): A divisor of q - 1.

    Returns:
        (PeriodVector): The periods indexed by coset.

    Raises:
        NotADivisorError: If `N` does not divide q - 1.
        FieldTooLargeError: If `ctx` has no tables.

    Examples:
        When N does not divide (q - 1)/(p - 1) the periods may be
        irrational:

        >>> from gpgraphs.core.fields import build_field
        >>> pv = gaussian_periods(build_field(5, 2), 4)
        >>> pv.exact
        (False, False, False, False)
        >>> pv
        PeriodVector(N=4, q=25, values=[-0.381966, 3.23607, -2.61803, -1.23607])
        >>> pv.multiset()
        Traceback (most recent call last):
            ...
        InexactPeriodsError: the periods of order 4 of F_25 are not all integers

        The periods of F_{3^5} of order 2 are not real:

        >>> gaussian_periods(build_field(3, 5), 2)
        PeriodVector(N=2, q=243, values=[(-0.5 + 7.79423j), (-0.5 - 7.79423j)])

    """
    check_divisor(N, ctx.q)
    tallies = coset_trace_tallies(ctx, N)
    p = ctx.p
    values, exact = [], []
    for row in tallies:
        row = [int(c) for c in row]
        if p == 2 or len(set(row[1:])) == 1:
            values.append(row[0] - row[1])
            exact.append(True)
        else:
            values.append(_cyclotomic_sum(row, p))
            exact.append(False)
    total = sum(values)
    certify(abs(total + 1) < settings.tolerance,
            "periods of F_{} sum to {}", ctx.q, total)
    if ((ctx.q - 1) // (p - 1)) % N == 0:
        certify(all(exact) and all((N * v + 1) % p == 0 for v in values),
                "periods of order {} of F_{} fail the integrality certificate",
                N, ctx.q)
    logger.debug("periods of order %d of F_%d computed, %d exact",
                 N, ctx.q, sum(exact))
    return PeriodVector(N, ctx.q, values, exact)


def period_polynomial(pv):
    """The period polynomial Ψ(X) = Π_i (X - η_i).

    Args:
        pv (PeriodVector): Exact periods.

    Returns:
        (sympy.Poly): A monic integer polynomial of degree `pv.N` in `X`.

    Raises:
        InexactPeriodsError: If some period is not exact.

    Examples:
        >>> from gpgraphs.core.fields import build_field
        >>> period_polynomial(gaussian_periods(build_field(3, 4), 2))
        Poly(X**2 + X - 20, X, domain='ZZ')
        >>> period_polynomial(gaussian_periods(build_field(2, 4), 3))
        Poly(X**3 + X**2 - 5*X + 3, X, domain='ZZ')
        >>> period_polynomial(gaussian_periods(build_field(2, 4), 1))
        Poly(X + 1, X, domain='ZZ')

    """
    pv.require_exact()
    result = Poly(1, X, domain=ZZ)
    for value, count in pv.multiset():
        result *= Poly(X - value, X, domain=ZZ) ** count
    return result


def characteristic_polynomial_from_periods(pv):
    """Ψ(X)^n (X - n), the characteristic polynomial of Γ(N, q).

    Every period is an eigenvalue of multiplicity n = (q - 1)/N, which is
    why the period polynomial enters with exponent n.

    Examples:
        >>> from gpgraphs.core.fields import build_field
        >>> pv = gaussian_periods(build_field(3, 2), 2)
        >>> cp = characteristic_polynomial_from_periods(pv)
        >>> cp.degree(), cp.eval(4), cp.eval(1), cp.eval(0)
        (9, 0, 0, -64)

    """
    return period_polynomial(pv) ** pv.n * Poly(X - pv.n, X, domain=ZZ)


def paley_periods(q):
    """The two Gaussian periods of order 2 of F_q, q odd, in closed form.

    η_0 = (-1 + (-1)^{m-1} √(p*)^m)/2 and η_1 = -1 - η_0, where
    p* = (-1)^{(p-1)/2} p. Both are integers when m is even.

    Examples:
        >>> paley_periods(81)
        PeriodVector(N=2, q=81, values=[-5, 4])
        >>> paley_periods(25)
        PeriodVector(N=2, q=25, values=[-3, 2])
        >>> paley_periods(13).exact
        (False, False)
        >>> paley_periods(7)
        PeriodVector(N=2, q=7, values=[(-0.5 + 1.32288j), (-0.5 - 1.32288j)])

    """
    if q % 2 == 0:
        raise ValueError("q = {} is even, so 2 does not divide q - 1".format(q))
    if isprime(q):
        p, m = q, 1
    else:
        power = perfect_power(q)
        if not power or not isprime(power[0]):
            raise ValueError("{} is not a prime power".format(q))
        p, m = power
    if m % 2 == 0:
        root = p ** (m // 2)
        if p % 4 == 3:
            root *= (-1) ** (m // 2)
        eta = (-1 - root) // 2
        return PeriodVector(2, q, [eta, -1 - eta], [True, True])
    with mpmath.workdps(settings.precision):
        root = mpmath.sqrt(q)
        if p % 4 == 1:
            eta = (-1 + root) / 2
        else:
            eta = (-1 + mpmath.mpc(0, 1) ** m * root) / 2
        return PeriodVector(2, q, [eta, -1 - eta], [False, False])


def semiprimitive_periods(k, p, m):
    """Closed-form Gaussian periods of order `k` for a semiprimitive pair.

    The distinguished period λ1 sits at index k/2 when p, (p^t + 1)/k and
    s = m/(2t) are all odd, and at index 0 otherwise; every other period
    equals λ2. No field is built.

    Raises:
        NotSemiprimitiveError: If (k, p^m) is not a semiprimitive pair.

    Examples:
        >>> semiprimitive_periods(3, 2, 4)
        PeriodVector(N=3, q=16, values=[-3, 1, 1])
        >>> semiprimitive_periods(5, 3, 4)
        PeriodVector(N=5, q=81, values=[7, -2, -2, -2, -2])
        >>> semiprimitive_periods(4, 3, 6)
        PeriodVector(N=4, q=729, values=[-7, -7, 20, -7])
        >>> from gpgraphs.core.fields import build_field
        >>> gaussian_periods(build_field(3, 6), 4).values
        (-7, -7, 20, -7)
        >>> semiprimitive_periods(2, 13, 1).exact  # the Paley periods of F_13
        (False, False)

    """
    from ..families import NotSemiprimitiveError, classify_semiprimitive

    info = classify_semiprimitive(k, p, m)
    if info is None:
        raise NotSemiprimitiveError(
                "({}, {}^{}) is not a semiprimitive pair".format(k, p, m))
    if not info.integral:
        return paley_periods(info.q)
    values = [info.lambda2] * k
    values[info.distinguished_index] = info.lambda1
    return PeriodVector(k, info.q, values, [True] * k)
