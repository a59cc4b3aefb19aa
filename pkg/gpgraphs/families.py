# -*- encoding: utf-8 -*-
"""Provides closed-form spectra of generalized Paley graphs.

No field is built here. Every value is an exact Python integer, so the
formulas hold for fields far beyond the reach of `gpgraphs.core.fields`.

.. rubric:: Semiprimitive pairs

(k, q), q = p^m, is a semiprimitive pair when k = 2 and q ≡ 1 (mod 4), or
k > 2 divides p^t + 1 for some t dividing m/2 and k ≠ p^{m/2} + 1. Then

    Spec Γ(k, q) = {[n]^1, [λ1]^n, [λ2]^{(k-1)n}},
    λ1 = (σ(k - 1)p^{m/2} - 1)/k,    λ2 = -(σp^{m/2} + 1)/k,

with σ = (-1)^{s+1}, s = m/(2t) and t least with k | p^t + 1.

>>> s, c = semiprimitive_spectrum(4, 3, 6)
>>> print(s)
{[182]^1, [20]^182, [-7]^546}
>>> print(c)
{[546]^1, [6]^546, [-21]^182}

.. rubric:: The graphs Γ(3, q) and Γ(4, q)

>>> print(spectrum_gamma3(7, 3))
{[114]^1, [9]^114, [2]^114, [-12]^114}
>>> print(spectrum_gamma4(5, 4))
{[156]^1, [16]^156, [1]^156, [-4]^156, [-14]^156}

.. rubric:: Exceptional pairs

Eleven pairs (k, q) outside the semiprimitive case give two-weight codes,
hence strongly regular graphs.

>>> rec = exceptional_records()[1]
>>> spectrum, params, weights = exceptional_spectrum(rec)
>>> print(params)
srg(1953125, 102796, 5379, 5412)

"""
from builtins import object, range
from abc import ABCMeta, abstractmethod
from collections import OrderedDict, namedtuple
import logging
import warnings

from future.utils import with_metaclass
from overrides import overrides
from sympy import divisors, igcd

from .core.fields import check_prime
from .core.spectra import (Spectrum, SrgParams, check_simple,
                           complement_spectrum, is_ramanujan_spectral,
                           paley_spectrum, srg_analysis)
from .core.utils import certify, exact_div, exact_root, isqrt

logger = logging.getLogger(__name__)


class NotSemiprimitiveError(ValueError):
    """Raised when a closed form needs a semiprimitive pair."""

class NoSolutionError(ValueError):
    """Raised when a norm equation has no admissible solution."""

class PreconditionError(ValueError):
    """Raised when the hypotheses of a closed form do not hold."""

class QTooSmallError(PreconditionError):
    """Raised when q < 5."""

class ExcludedQError(PreconditionError):
    """Raised when q = 9, where Γ(4, q) is disconnected."""

class OddMError(ValueError):
    """Raised when m must be even."""

class TableDiscrepancyWarning(UserWarning):
    """Issued when a computed value differs from a printed reference."""


class SemiprimitiveInfo(namedtuple('SemiprimitiveInfo', 'k p m t s sigma')):
    """The data of a semiprimitive pair (k, p^m).

    Attributes:
        t (int): The least positive integer with k | p^t + 1.
        s (int | None): m/(2t), or `None` for a Paley pair with m odd.
        sigma (int | None): (-1)^{s+1}, or `None` when `s` is.

    Examples:
        >>> info = classify_semiprimitive(5, 3, 4)
        >>> info.t, info.s, info.sigma
        (2, 1, 1)
        >>> info.lambda1, info.lambda2, info.n
        (7, -2, 16)
        >>> info.case, info.distinguished_index, info.beyond_paley
        ('b', 0, True)
        >>> classify_semiprimitive(4, 3, 6).case
        'a'

        Paley pairs with m odd have irrational eigenvalues:

        >>> info = classify_semiprimitive(2, 13, 1)
        >>> info.integral, info.case
        (False, None)
        >>> info.lambda1
        Traceback (most recent call last):
            ...
        OddMError: the eigenvalues of Γ(2, 13^1) are irrational

    """
    __slots__ = ()

    @property
    def q(self):
        return self.p**self.m

    @property
    def n(self):
        return (self.q - 1) // self.k

    @property
    def integral(self):
        """Whether the eigenvalues are integers, which fails only for
        Paley pairs with m odd."""
        return self.s is not None

    def require_integral(self):
        if not self.integral:
            raise OddMError("the eigenvalues of Γ({}, {}^{}) are irrational"
                            .format(self.k, self.p, self.m))

    @property
    def sqrt_q(self):
        """p^{m/2}."""
        self.require_integral()
        return self.p**(self.m // 2)

    @property
    def alpha(self):
        """(p^t + 1)/k."""
        return (self.p**self.t + 1) // self.k

    @property
    def case(self):
        """'a' when p, α and s are all odd, 'b' otherwise.

        In case 'a' the period λ1 is η_{k/2}; in case 'b' it is η_0.
        `None` for a Paley pair with m odd.
        """
        if not self.integral:
            return None
        if self.p % 2 and self.alpha % 2 and self.s % 2:
            return 'a'
        return 'b'

    @property
    def distinguished_index(self):
        """The index of the one Gaussian period equal to λ1."""
        self.require_integral()
        return self.k // 2 if self.case == 'a' else 0

    @property
    def lambda1(self):
        self.require_integral()
        return exact_div(self.sigma * (self.k - 1) * self.sqrt_q - 1, self.k,
                         "λ1")

    @property
    def lambda2(self):
        self.require_integral()
        return -exact_div(self.sigma * self.sqrt_q + 1, self.k, "λ2")

    @property
    def beyond_paley(self):
        """Whether k ≠ 2 and k ≠ p^ℓ + 1 for every ℓ dividing m/2."""
        if self.k == 2:
            return False
        half = self.m // 2
        return all(self.k != self.p**l + 1 for l in divisors(half))


def classify_semiprimitive(k, p, m):
    """Decides whether (k, p^m) is a semiprimitive pair.

    Args:
        k (int): The index of the subgroup of k-th powers.
        p (int): A prime.
        m (int): The degree of the field.

    Returns:
        (SemiprimitiveInfo | None): The pair's data, or `None` if it is not
        semiprimitive. Odd m gives `None` except for Paley pairs, which
        get t = 1 and no s or σ.

    Raises:
        NotPrimeError: If `p` is not prime.

    Examples:
        >>> classify_semiprimitive(5, 3, 4)
        SemiprimitiveInfo(k=5, p=3, m=4, t=2, s=1, sigma=1)
        >>> classify_semiprimitive(10, 3, 4) is None  # 10 = 3^2 + 1
        True
        >>> classify_semiprimitive(11, 3, 5) is None
        True
        >>> classify_semiprimitive(2, 5, 2)
        SemiprimitiveInfo(k=2, p=5, m=2, t=1, s=1, sigma=1)
        >>> classify_semiprimitive(2, 13, 1)
        SemiprimitiveInfo(k=2, p=13, m=1, t=1, s=None, sigma=None)
        >>> classify_semiprimitive(2, 7, 1) is None  # 7 ≡ 3 (mod 4)
        True

    """
    check_prime(p)
    q = p**m
    if k < 2 or (q - 1) % k:
        return None
    if k == 2 and q % 4 != 1:
        return None
    if k == 2 and m % 2:
        return SemiprimitiveInfo(k, p, m, 1, None, None)
    if m % 2:
        return None
    half = m // 2
    if k == 2:
        t = 1
    else:
        t = next((j for j in range(1, half + 1) if pow(p, j, k) == k - 1),
                 None)
        if t is None or half % t or k == p**half + 1:
            return None
    s = half // t
    sigma = (-1)**(s + 1)
    certify((p**half + sigma) % k == 0,
            "σ = {} but {} does not divide p^(m/2) + σ", sigma, k)
    return SemiprimitiveInfo(k, p, m, t, s, sigma)


def _require_semiprimitive(k, p, m):
    info = classify_semiprimitive(k, p, m)
    if info is None:
        raise NotSemiprimitiveError(
                "({}, {}^{}) is not a semiprimitive pair".format(k, p, m))
    return info


def enumerate_semiprimitive_pairs(p, m):
    """All k for which (k, p^m) is a semiprimitive pair.

    Every such k other than 2 divides p^t + 1 for some t dividing m/2, so
    only those divisors are tried.

    Returns:
        (List[Tuple[int, SemiprimitiveInfo]]): In increasing order of k.

    Raises:
        OddMError: If `m` is odd.

    Examples:
        >>> [k for k, _ in enumerate_semiprimitive_pairs(3, 4)]
        [2, 4, 5]
        >>> [k for k, _ in enumerate_semiprimitive_pairs(5, 2)]
        [2, 3]
        >>> [k for k, _ in enumerate_semiprimitive_pairs(7, 4)]
        [2, 4, 5, 8, 10, 25]

    """
    check_prime(p)
    if m % 2:
        raise OddMError("m = {} is odd".format(m))
    candidates = {2}
    for t in divisors(m // 2):
        candidates.update(divisors(p**t + 1))
    result = []
    for k in sorted(candidates):
        info = classify_semiprimitive(k, p, m)
        if info is not None:
            result.append((k, info))
    return result


def semiprimitive_spectrum(k, p, m):
    """The spectra of Γ(k, p^m) and its complement for a semiprimitive pair.

    The complement is {[(k-1)n]^1, [(k-1)λ2]^n, [-1-λ2]^{(k-1)n}}. A Paley
    pair with m odd gets the irrational Paley spectrum.

    Returns:
        (Tuple[Spectrum, Spectrum]): Γ(k, q) and its complement.

    Raises:
        NotSemiprimitiveError: If (k, p^m) is not a semiprimitive pair.

    Examples:
        >>> s, c = semiprimitive_spectrum(5, 7, 4)
        >>> print(s)
        {[480]^1, [39]^480, [-10]^1920}
        >>> print(c)
        {[1920]^1, [9]^1920, [-40]^480}
        >>> from gpgraphs.core.fields import build_field
        >>> from gpgraphs.core.spectra import gp_spectrum
        >>> semiprimitive_spectrum(3, 2, 4)[0] == gp_spectrum(
        ...     build_field(2, 4), 3)
        True
        >>> semiprimitive_spectrum(11, 3, 5)
        Traceback (most recent call last):
            ...
        NotSemiprimitiveError: (11, 3^5) is not a semiprimitive pair
        >>> s, c = semiprimitive_spectrum(2, 13, 1)
        >>> print(s)
        {[6]^1, [1.302775638]^6, [-2.302775638]^6}
        >>> c.matches(s)
        True

    """
    info = _require_semiprimitive(k, p, m)
    if not info.integral:
        spectrum = paley_spectrum(info.q)
        return spectrum, complement_spectrum(spectrum)
    n, lam1, lam2 = info.n, info.lambda1, info.lambda2
    spectrum = Spectrum([(n, 1), (lam1, n), (lam2, (k - 1) * n)], info.q, n,
                        k=k, source='closed_form')
    complement = Spectrum([((k - 1) * n, 1), ((k - 1) * lam2, n),
                           (-1 - lam2, (k - 1) * n)], info.q, (k - 1) * n,
                          k=k, complement=True, source='closed_form')
    certify(complement == complement_spectrum(spectrum),
            "complement of {} differs from the closed form", spectrum.name())
    return spectrum, complement


def pl_plus_one_spectrum(p, m, l):
    """The spectrum of Γ(p^ℓ + 1, p^m) for ℓ | m with m/ℓ even, ℓ ≠ m/2.

    λ1 = (σp^{m/2+ℓ} - 1)/(p^ℓ + 1) with multiplicity n and
    λ2 = -(σp^{m/2} + 1)/(p^ℓ + 1) with multiplicity p^ℓ n, where
    σ = (-1)^{m/(2ℓ)+1}.

    Raises:
        PreconditionError: If ℓ does not divide m, m/ℓ is odd, or ℓ = m/2
            (then the graph is disconnected).

    Examples:
        >>> print(pl_plus_one_spectrum(2, 4, 1))
        {[5]^1, [1]^10, [-3]^5}
        >>> print(pl_plus_one_spectrum(3, 8, 2))
        {[656]^1, [8]^5904, [-73]^656}
        >>> pl_plus_one_spectrum(3, 4, 2)
        Traceback (most recent call last):
            ...
        PreconditionError: Γ(3^2 + 1, 3^4) needs ℓ | m, m/ℓ even and ℓ ≠ m/2

    """
    check_prime(p)
    if l < 1 or m % l or (m // l) % 2 or 2 * l == m:
        raise PreconditionError(
                "Γ({0}^{1} + 1, {0}^{2}) needs ℓ | m, m/ℓ even and ℓ ≠ m/2"
                .format(p, l, m))
    k = p**l + 1
    q = p**m
    n = (q - 1) // k
    sigma = (-1)**(m // (2 * l) + 1)
    lam1 = exact_div(sigma * p**(m // 2 + l) - 1, k, "λ1")
    lam2 = -exact_div(sigma * p**(m // 2) + 1, k, "λ2")
    spectrum = Spectrum([(n, 1), (lam1, n), (lam2, p**l * n)], q, n, k=k,
                        source='closed_form')
    certify(spectrum == semiprimitive_spectrum(k, p, m)[0],
            "{} differs from its semiprimitive spectrum", spectrum.name())
    return spectrum


RAMANUJAN_FAMILIES = OrderedDict([
    ('paley', "Γ(2, q), q ≡ 1 (mod 4)"),
    ('a', "Γ(3, 4^t), t ≥ 2"),
    ('b', "Γ(3, p^{2t}), t ≥ 1, p ≡ 2 (mod 3), p ≠ 2"),
    ('c', "Γ(4, 9^t), t ≥ 2"),
    ('d', "Γ(4, p^{2t}), t ≥ 1, p ≡ 3 (mod 4), p ≠ 3"),
    ('e', "Γ(5, 16^t), t ≥ 2"),
    ('f', "Γ(5, p^{4t}), t ≥ 1, p ≡ 2, 3 (mod 5), p ≠ 2"),
    ('g', "Γ(5, p^{2t}), t ≥ 1, p ≡ 4 (mod 5)"),
])


def ramanujan_case(k, p, m):
    """The family of Ramanujan semiprimitive graphs containing Γ(k, p^m).

    Returns:
        (str | None): A key of `RAMANUJAN_FAMILIES`, or `None`.

    Examples:
        >>> ramanujan_case(3, 2, 4), ramanujan_case(5, 3, 4)
        ('a', 'f')
        >>> ramanujan_case(5, 2, 6) is None
        True

    """
    if k == 2:
        return 'paley' if p**m % 4 == 1 else None
    if m % 2:
        return None
    if k == 3:
        if p == 2 and m >= 4:
            return 'a'
        if p != 2 and p % 3 == 2:
            return 'b'
    elif k == 4:
        if p == 3 and m >= 4:
            return 'c'
        if p != 3 and p % 4 == 3:
            return 'd'
    elif k == 5:
        if p == 2 and m >= 8 and m % 4 == 0:
            return 'e'
        if p != 2 and p % 5 in (2, 3) and m % 4 == 0:
            return 'f'
        if p % 5 == 4:
            return 'g'
    return None


def ramanujan_classification(k, p, m):
    """Whether the semiprimitive graph Γ(k, p^m) is Ramanujan.

    Decided by the list of Ramanujan families, never by the eigenvalues.

    Raises:
        NotSemiprimitiveError: If (k, p^m) is not a semiprimitive pair.

    Examples:
        >>> ramanujan_classification(3, 2, 4)
        True
        >>> ramanujan_classification(13, 5, 4)
        False
        >>> ramanujan_classification(2, 5, 1)
        True
        >>> ramanujan_classification(5, 2, 4)
        Traceback (most recent call last):
            ...
        NotSemiprimitiveError: (5, 2^4) is not a semiprimitive pair

    """
    _require_semiprimitive(k, p, m)
    return ramanujan_case(k, p, m) is not None


def complement_always_ramanujan_check(k, p, m):
    """Tests the Ramanujan bound on the complement of a semiprimitive graph.

    Examples:
        >>> complement_always_ramanujan_check(4, 3, 4)
        True
        >>> complement_always_ramanujan_check(25, 7, 4)
        True
        >>> complement_always_ramanujan_check(2, 5, 2)
        True
        >>> complement_always_ramanujan_check(2, 13, 1)
        True

    """
    _, complement = semiprimitive_spectrum(k, p, m)
    return is_ramanujan_spectral(complement)


class DiophantineK3(namedtuple('DiophantineK3', 'a b')):
    """The solution of 4 p^{m/3} = a² + 27b², a ≡ 1 (mod 3), (a, p) = 1."""
    __slots__ = ()

class DiophantineK4(namedtuple('DiophantineK4', 'c d')):
    """The solution of p^{m/2} = c² + 4d², c ≡ 1 (mod 4), (c, p) = 1."""
    __slots__ = ()


def _norm_solutions(target, weight, modulus, p):
    """Solutions (x, y), y > 0, of x² + weight y² = target with x ≡ 1."""
    solutions = []
    for y in range(1, isqrt(target // weight) + 1):
        rest = target - weight * y * y
        x = isqrt(rest)
        if x * x != rest:
            continue
        for candidate in sorted({x, -x}):
            if candidate % modulus == 1 and igcd(candidate, p) == 1:
                solutions.append((candidate, y))
    return solutions


def _unique_solution(solutions, what):
    if not solutions:
        raise NoSolutionError("{} has no solution".format(what))
    certify(len(solutions) == 1, "{} has solutions {}", what, solutions)
    return solutions[0]


def solve_k3_diophantine(p, m):
    """Solves 4 p^{m/3} = a² + 27b² with a ≡ 1 (mod 3), (a, p) = 1, b > 0.

    The whole range of b is scanned and the solution checked unique.

    Raises:
        PreconditionError: If p ≢ 1 (mod 3) or 3 does not divide m.
        NoSolutionError: If no admissible (a, b) exists.

    Examples:
        >>> solve_k3_diophantine(7, 3)
        DiophantineK3(a=1, b=1)
        >>> solve_k3_diophantine(13, 3)
        DiophantineK3(a=-5, b=1)
        >>> solve_k3_diophantine(7, 6)
        DiophantineK3(a=13, b=1)

    """
    check_prime(p)
    if p % 3 != 1 or m % 3:
        raise PreconditionError(
                "4 p^(m/3) = a² + 27b² needs p ≡ 1 (mod 3) and 3 | m, "
                "got p = {}, m = {}".format(p, m))
    target = 4 * p**(m // 3)
    a, b = _unique_solution(_norm_solutions(target, 27, 3, p),
                            "{} = a² + 27b²".format(target))
    return DiophantineK3(a, b)


def solve_k4_diophantine(p, m):
    """Solves p^{m/2} = c² + 4d² with c ≡ 1 (mod 4), (c, p) = 1, d > 0.

    Raises:
        PreconditionError: If p ≢ 1 (mod 4) or 4 does not divide m.
        NoSolutionError: If no admissible (c, d) exists.

    Examples:
        >>> solve_k4_diophantine(5, 4)
        DiophantineK4(c=-3, d=2)
        >>> solve_k4_diophantine(13, 4)
        DiophantineK4(c=5, d=6)
        >>> solve_k4_diophantine(17, 4)
        DiophantineK4(c=-15, d=4)

    """
    check_prime(p)
    if p % 4 != 1 or m % 4:
        raise PreconditionError(
                "p^(m/2) = c² + 4d² needs p ≡ 1 (mod 4) and 4 | m, "
                "got p = {}, m = {}".format(p, m))
    target = p**(m // 2)
    c, d = _unique_solution(_norm_solutions(target, 4, 4, p),
                            "{} = c² + 4d²".format(target))
    return DiophantineK4(c, d)


def _check_small_k(k, p, m):
    check_prime(p)
    q = p**m
    if ((q - 1) // (p - 1)) % k:
        raise PreconditionError(
                "{} does not divide (q - 1)/(p - 1) = {}"
                .format(k, (q - 1) // (p - 1)))
    if q < 5:
        raise QTooSmallError("q = {} is smaller than 5".format(q))
    return q, (q - 1) // k


def _gamma3_entries(a, b, r, n):
    return [(exact_div(a * r - 1, 3), n),
            (exact_div(-((a + 9 * b) // 2) * r - 1, 3), n),
            (exact_div(-((a - 9 * b) // 2) * r - 1, 3), n)]


def _gamma4_entries(c, d, r, n):
    return [(exact_div(r * r + 4 * d * r - 1, 4), n),
            (exact_div(r * r - 4 * d * r - 1, 4), n),
            (exact_div(-r * r + 2 * c * r - 1, 4), n),
            (exact_div(-r * r - 2 * c * r - 1, 4), n)]


def spectrum_gamma3(p, m):
    """The spectrum of Γ(3, p^m) when 3 | (q - 1)/(p - 1) and q ≥ 5.

    For p ≡ 1 (mod 3), m = 3t and, with (a, b) from `solve_k3_diophantine`
    and r = q^{1/3}, the nontrivial eigenvalues are (ar - 1)/3 and
    (-(a ± 9b)r/2 - 1)/3, each with multiplicity n. For p ≡ 2 (mod 3),
    m = 2t and, with r = √q, the spectrum is {[n]^1, [(r-1)/3]^{2n},
    [(-2r-1)/3]^n} when 4 | m and {[n]^1, [(2r-1)/3]^n, [(-r-1)/3]^{2n}}
    otherwise.

    Raises:
        PreconditionError: If 3 does not divide (q - 1)/(p - 1).
        QTooSmallError: If q < 5.

    Examples:
        >>> print(spectrum_gamma3(5, 4))
        {[208]^1, [8]^416, [-17]^208}
        >>> print(spectrum_gamma3(2, 4))
        {[5]^1, [1]^10, [-3]^5}
        >>> print(spectrum_gamma3(7, 3))
        {[114]^1, [9]^114, [2]^114, [-12]^114}

        The spectrum does not depend on the sign of b:

        >>> a, b = solve_k3_diophantine(7, 6)
        >>> r, n = 7**2, (7**6 - 1) // 3
        >>> (sorted(_gamma3_entries(a, -b, r, n))
        ...  == sorted(_gamma3_entries(a, b, r, n)))
        True

        >>> spectrum_gamma3(2, 2)
        Traceback (most recent call last):
            ...
        QTooSmallError: q = 4 is smaller than 5
        >>> spectrum_gamma3(3, 4)
        Traceback (most recent call last):
            ...
        PreconditionError: 3 does not divide (q - 1)/(p - 1) = 40

    """
    q, n = _check_small_k(3, p, m)
    if p % 3 == 1:
        a, b = solve_k3_diophantine(p, m)
        entries = _gamma3_entries(a, b, exact_root(q, 3), n)
    else:
        r = p**(m // 2)
        if m % 4 == 0:
            entries = [(exact_div(r - 1, 3), 2 * n),
                       (exact_div(-2 * r - 1, 3), n)]
        else:
            entries = [(exact_div(2 * r - 1, 3), n),
                       (exact_div(-r - 1, 3), 2 * n)]
    return Spectrum([(n, 1)] + entries, q, n, k=3, source='closed_form')


def spectrum_gamma4(p, m):
    """The spectrum of Γ(4, p^m) when 4 | (q - 1)/(p - 1), q ≥ 5, q ≠ 9.

    For p ≡ 1 (mod 4), m = 4t and, with (c, d) from `solve_k4_diophantine`,
    r = q^{1/4}, the nontrivial eigenvalues are (r² ± 4dr - 1)/4 and
    (-r² ± 2cr - 1)/4, each with multiplicity n. For p ≡ 3 (mod 4), with
    r = √q, the spectrum is {[n]^1, [(r-1)/4]^{3n}, [-(3r+1)/4]^n} when
    4 | m and {[n]^1, [(3r-1)/4]^n, [(-r-1)/4]^{3n}} otherwise.

    Raises:
        PreconditionError: If 4 does not divide (q - 1)/(p - 1).
        QTooSmallError: If q < 5.
        ExcludedQError: If q = 9.

    Examples:
        >>> print(spectrum_gamma4(3, 4))
        {[20]^1, [2]^60, [-7]^20}
        >>> print(spectrum_gamma4(7, 2))
        {[12]^1, [5]^12, [-2]^36}
        >>> print(spectrum_gamma4(5, 4))
        {[156]^1, [16]^156, [1]^156, [-4]^156, [-14]^156}

        The spectrum does not depend on the signs of c and d:

        >>> c, d = solve_k4_diophantine(13, 4)
        >>> r, n = 13, (13**4 - 1) // 4
        >>> all(sorted(_gamma4_entries(s * c, t * d, r, n))
        ...     == sorted(_gamma4_entries(c, d, r, n))
        ...     for s in (1, -1) for t in (1, -1))
        True
        >>> spectrum_gamma4(3, 2)
        Traceback (most recent call last):
            ...
        ExcludedQError: Γ(4, 9) is disconnected

    """
    q, n = _check_small_k(4, p, m)
    if q == 9:
        raise ExcludedQError("Γ(4, 9) is disconnected")
    if p % 4 == 1:
        c, d = solve_k4_diophantine(p, m)
        entries = _gamma4_entries(c, d, exact_root(q, 4), n)
    else:
        r = p**(m // 2)
        if m % 4 == 0:
            entries = [(exact_div(r - 1, 4), 3 * n),
                       (-exact_div(3 * r + 1, 4), n)]
        else:
            entries = [(exact_div(3 * r - 1, 4), n),
                       (exact_div(-r - 1, 4), 3 * n)]
    return Spectrum([(n, 1)] + entries, q, n, k=4, source='closed_form')


class ExceptionalRecord(namedtuple('ExceptionalRecord',
                                   'k p m theta t epsilon')):
    """One of the eleven exceptional pairs (k, p^m) and its parameters.

    The weights of the two-weight code C(k, q) are

        w1 = (p - 1)p^{θ-1}(p^{m-θ} - εt)/k,    w2 = w1 + ε(p - 1)p^{θ-1},

    the eigenvalues are λi = n - p wi/(p - 1), d = n + λ1λ2,
    e = d + λ1 + λ2, and the multiplicity of λ1 is
    (-n - (q - 1)λ2)/(λ1 - λ2). Every division is checked to be exact.

    Examples:
        >>> rec = exceptional_records()[0]
        >>> rec.q, rec.n, rec.w1, rec.w2
        (243, 22, 12, 18)
        >>> rec.lambda1, rec.m1, rec.lambda2, rec.m2
        (4, 132, -5, 110)
        >>> rec.e, rec.d
        (1, 2)

    """
    __slots__ = ()

    @property
    def q(self):
        return self.p**self.m

    @property
    def n(self):
        return exact_div(self.q - 1, self.k, "n")

    @property
    def w1(self):
        p = self.p
        return exact_div((p - 1) * p**(self.theta - 1)
                         * (p**(self.m - self.theta) - self.epsilon * self.t),
                         self.k, "w1")

    @property
    def w2(self):
        return self.w1 + self.epsilon * (self.p - 1) * self.p**(self.theta - 1)

    def _eigenvalue(self, weight):
        return self.n - exact_div(self.p * weight, self.p - 1, "λ")

    @property
    def lambda1(self):
        return self._eigenvalue(self.w1)

    @property
    def lambda2(self):
        return self._eigenvalue(self.w2)

    @property
    def d(self):
        return self.n + self.lambda1 * self.lambda2

    @property
    def e(self):
        return self.d + self.lambda1 + self.lambda2

    @property
    def m1(self):
        lam1, lam2 = self.lambda1, self.lambda2
        return exact_div(-self.n - (self.q - 1) * lam2, lam1 - lam2, "m1")

    @property
    def m2(self):
        return self.q - 1 - self.m1

    def values(self):
        """The derived parameters, keyed as in `EXCEPTIONAL_TABLES`."""
        return OrderedDict([
            ('q', self.q), ('n', self.n), ('e', self.e), ('d', self.d),
            ('lambda1', self.lambda1), ('m1', self.m1),
            ('lambda2', self.lambda2), ('m2', self.m2),
            ('w1', self.w1), ('w2', self.w2),
        ])

    def __str__(self):
        return "({}, {}^{})".format(self.k, self.p, self.m)


_EXCEPTIONAL_ROWS = (
    (11, 3, 5, 2, 5, 1),
    (19, 5, 9, 4, 9, 1),
    (35, 3, 12, 5, 17, 1),
    (37, 7, 9, 4, 9, 1),
    (43, 11, 7, 3, 21, 1),
    (67, 17, 33, 16, 33, 1),
    (107, 3, 53, 25, 53, 1),
    (133, 5, 18, 8, 33, -1),
    (163, 41, 81, 40, 81, 1),
    (323, 3, 144, 70, 161, 1),
    (499, 5, 249, 123, 249, 1),
)


def exceptional_records():
    """The eleven exceptional pairs with their parameters (θ, t, ε).

    Examples:
        >>> records = exceptional_records()
        >>> len(records)
        11
        >>> records[7]
        ExceptionalRecord(k=133, p=5, m=18, theta=8, t=33, epsilon=-1)

    """
    return [ExceptionalRecord(*row) for row in _EXCEPTIONAL_ROWS]


def exceptional_record(k, p, m):
    """Looks up the exceptional pair (k, p^m), or returns `None`."""
    for row in _EXCEPTIONAL_ROWS:
        if row[:3] == (k, p, m):
            return ExceptionalRecord(*row)
    return None


def exceptional_spectrum(rec):
    """The spectrum, srg parameters and weights of an exceptional pair.

    The multiplicities are computed twice, from the trace of the spectrum
    and from the srg parameters as
    ((q - 1) ∓ (2n + (q - 1)(e - d))/(λ1 - λ2))/2, and must agree.

    Returns:
        (Tuple[Spectrum, SrgParams, WeightDistribution]): Γ(k, q), its
        parameters srg(q, n, e, d) and the weights of C(k, q).

    Examples:
        >>> rec = exceptional_record(19, 5, 9)
        >>> spectrum, params, weights = exceptional_spectrum(rec)
        >>> print(spectrum)
        {[102796]^1, [296]^1027960, [-329]^925164}
        >>> print(weights)
        {[0]^1, [82000]^1027960, [82500]^925164}
        >>> spectrum, _, _ = exceptional_spectrum(exceptional_record(67, 17, 33))
        >>> spectrum.entries[1][0]
        23967452714880696416

    """
    from .codes import WeightDistribution

    q, n = rec.q, rec.n
    lam1, lam2, m1, m2 = rec.lambda1, rec.lambda2, rec.m1, rec.m2
    delta = lam1 - lam2
    numerator = 2 * n + (q - 1) * (rec.e - rec.d)
    ratio = exact_div(numerator, delta, "multiplicity")
    certify(2 * m1 == (q - 1) - ratio and 2 * m2 == (q - 1) + ratio,
            "multiplicities of {} disagree with (e - d)", rec)
    spectrum = Spectrum([(n, 1), (lam1, m1), (lam2, m2)], q, n, k=rec.k,
                        source='closed_form')
    params = SrgParams(q, n, rec.e, rec.d)
    certify(params.is_feasible(), "{} is not feasible", params)
    certify(srg_analysis(spectrum)[0] == params,
            "{} does not come from its spectrum", params)
    weights = WeightDistribution([(0, 1), (rec.w1, m1), (rec.w2, m2)],
                                 n=n, q=q, p=rec.p, m=rec.m, k=rec.k,
                                 source='closed_form')
    logger.debug("exceptional pair %s: %s", rec, params)
    return spectrum, params, weights


class ClosedForm(with_metaclass(ABCMeta, object)):
    """A family of graphs Γ(k, p^m) whose spectrum has a closed form."""
    name = None

    @abstractmethod
    def applies(self, k, p, m):
        """Whether Γ(k, p^m) belongs to the family."""
        return NotImplemented

    @abstractmethod
    def spectrum(self, k, p, m):
        """The spectrum of Γ(k, p^m), assuming `applies(k, p, m)`."""
        return NotImplemented


class SemiprimitiveForm(ClosedForm):
    name = 'semiprimitive'

    @overrides
    def applies(self, k, p, m):
        info = classify_semiprimitive(k, p, m)
        return info is not None and info.integral

    @overrides
    def spectrum(self, k, p, m):
        return semiprimitive_spectrum(k, p, m)[0]


class PaleyForm(ClosedForm):
    """Paley graphs of odd degree fields, with irrational eigenvalues."""
    name = 'paley'

    @overrides
    def applies(self, k, p, m):
        return k == 2 and p**m % 4 == 1

    @overrides
    def spectrum(self, k, p, m):
        return paley_spectrum(p**m)


class CubicForm(ClosedForm):
    name = 'cubic'

    @overrides
    def applies(self, k, p, m):
        q = p**m
        return k == 3 and ((q - 1) // (p - 1)) % 3 == 0 and q >= 5

    @overrides
    def spectrum(self, k, p, m):
        return spectrum_gamma3(p, m)


class QuarticForm(ClosedForm):
    name = 'quartic'

    @overrides
    def applies(self, k, p, m):
        q = p**m
        return (k == 4 and ((q - 1) // (p - 1)) % 4 == 0 and q >= 5
                and q != 9)

    @overrides
    def spectrum(self, k, p, m):
        return spectrum_gamma4(p, m)


class ExceptionalForm(ClosedForm):
    name = 'exceptional'

    @overrides
    def applies(self, k, p, m):
        return exceptional_record(k, p, m) is not None

    @overrides
    def spectrum(self, k, p, m):
        return exceptional_spectrum(exceptional_record(k, p, m))[0]


CLOSED_FORMS = (SemiprimitiveForm(), PaleyForm(), CubicForm(), QuarticForm(),
                ExceptionalForm())


def closed_form_spectrum(k, p, m):
    """The spectrum of Γ(k, p^m) from the first closed form that applies.

    Returns:
        (Tuple[Spectrum, str] | None): The spectrum and the family name, or
        `None` if no closed form is known.

    Raises:
        DirectedGraphError: If Γ(k, q) is directed.

    Examples:
        >>> s, family = closed_form_spectrum(3, 7, 3)
        >>> family, s.eigenvalues()
        ('cubic', [114, 9, 2, -12])
        >>> closed_form_spectrum(2, 13, 1)[1]
        'paley'
        >>> closed_form_spectrum(6, 7, 2) is None
        True

    """
    check_prime(p)
    check_simple(k, p**m)
    for form in CLOSED_FORMS:
        if form.applies(k, p, m):
            logger.debug("Γ(%d, %d^%d) has a %s closed form",
                         k, p, m, form.name)
            return form.spectrum(k, p, m), form.name
    return None


def _parse_table_1_row(text):
    return tuple((int(k.rstrip('*')), k.endswith('*')) for k in text.split())

#: Semiprimitive k for small p^m as printed, `(k, beyond_paley)` pairs.
TABLE_1 = OrderedDict(((p, m), _parse_table_1_row(text)) for p, m, text in (
    (2, 2, ""), (2, 4, "3"), (2, 6, "3"), (2, 8, "5"),
    (3, 2, ""), (3, 4, "2 4 5*"), (3, 6, "2 4 7* 14*"),
    (3, 8, "2 4 5* 10* 41*"),
    (5, 2, "2 3*"), (5, 4, "2 3* 6 13*"),
    (5, 6, "2 3* 6 7* 9* 14* 18* 21* 42* 63*"),
    (5, 8, "2 3* 6 13* 26 313*"),
    (7, 2, "2 4*"), (7, 4, "2 4* 5* 8 10* 25*"),
    (7, 6, "2 4* 5* 8 10* 25* 43* 50 86* 172*"),
    (7, 8, "2 4* 5* 8 10* 25* 50 1201*"),
))


class Table2Row(namedtuple('Table2Row',
                           'k p m complement srg entries t s latin')):
    """A printed row of strongly regular semiprimitive graphs."""
    __slots__ = ()

    @property
    def name(self):
        bar = "complement of " if self.complement else ""
        return "{}Γ({}, {}^{})".format(bar, self.k, self.p, self.m)


def _table_2_pair(k, p, m, srg, entries, srg_bar, entries_bar, t, s, latin,
                  latin_bar):
    return (Table2Row(k, p, m, False, srg, entries, t, s, latin),
            Table2Row(k, p, m, True, srg_bar, entries_bar, t, s, latin_bar))

#: The printed strongly regular semiprimitive graphs and complements.
TABLE_2 = sum((
    _table_2_pair(3, 2, 4, (16, 5, 0, 2), ((5, 1), (1, 10), (-3, 5)),
                  (16, 10, 6, 6), ((10, 1), (2, 5), (-2, 10)),
                  1, 2, "no", "no"),
    _table_2_pair(3, 2, 6, (64, 21, 8, 6), ((21, 1), (5, 21), (-3, 42)),
                  (64, 42, 26, 30), ((42, 1), (2, 42), (-6, 21)),
                  1, 3, "L_3(8)", "L_6(8)"),
    _table_2_pair(3, 5, 2, (25, 8, 3, 2), ((8, 1), (3, 8), (-2, 16)),
                  (25, 16, 9, 12), ((16, 1), (1, 16), (-4, 8)),
                  1, 1, "L_2(5)", "L_4(5)"),
    _table_2_pair(3, 5, 4, (625, 208, 63, 72),
                  ((208, 1), (8, 416), (-17, 208)),
                  (625, 416, 279, 272), ((416, 1), (16, 208), (-9, 416)),
                  1, 2, "no", "no"),
    _table_2_pair(4, 3, 4, (81, 20, 1, 6), ((20, 1), (2, 60), (-7, 20)),
                  (81, 60, 45, 42), ((60, 1), (6, 20), (-3, 60)),
                  1, 2, "no", "no"),
    _table_2_pair(4, 3, 6, (729, 182, 55, 42),
                  ((182, 1), (20, 182), (-7, 546)),
                  (729, 546, 405, 420), ((546, 1), (6, 546), (-21, 182)),
                  1, 3, "L_7(27)", "L_21(27)"),
    _table_2_pair(4, 7, 2, (49, 12, 5, 2), ((12, 1), (5, 12), (-2, 36)),
                  (49, 36, 25, 30), ((36, 1), (1, 36), (-6, 12)),
                  1, 1, "L_2(7)", "L_6(7)"),
    _table_2_pair(4, 7, 4, (2401, 600, 131, 156),
                  ((600, 1), (12, 1800), (-37, 600)),
                  (2401, 1800, 1332, 1355),
                  ((1800, 1), (36, 600), (-13, 1800)),
                  1, 2, "no", "no"),
    _table_2_pair(5, 3, 4, (81, 16, 7, 2), ((16, 1), (7, 16), (-2, 64)),
                  (81, 64, 49, 56), ((64, 1), (1, 64), (-8, 16)),
                  2, 1, "L_2(9)", "L_8(9)"),
    _table_2_pair(5, 7, 4, (2401, 480, 119, 90),
                  ((480, 1), (39, 480), (-10, 1920)),
                  (2401, 1920, 1560, 1529),
                  ((1920, 1), (9, 1920), (-40, 480)),
                  2, 1, "L_10(49)", "L_40(49)"),
), ())

#: Printed parameters of the exceptional pairs that have them.
EXCEPTIONAL_TABLES = OrderedDict([
    ((11, 3, 5), OrderedDict([
        ('n', 22), ('e', 1), ('d', 2), ('lambda1', 4), ('m1', 132),
        ('lambda2', -5), ('m2', 110), ('w1', 22), ('w2', 18)])),
    ((19, 5, 9), OrderedDict([
        ('n', 102796), ('e', 5379), ('d', 5412), ('lambda1', 296),
        ('m1', 1027960), ('lambda2', -329), ('m2', 925164),
        ('w1', 82000), ('w2', 82500)])),
    ((35, 3, 12), OrderedDict([
        ('n', 15184), ('e', 427), ('d', 434), ('lambda1', 118),
        ('m1', 273312), ('lambda2', -125), ('m2', 258128),
        ('w1', 10044), ('w2', 10026)])),
    ((37, 7, 9), OrderedDict([
        ('n', 1090638), ('e', 282771), ('d', 29510), ('lambda1', 584),
        ('m1', 30537864), ('lambda2', -1817), ('m2', 9815742),
        ('w1', 934332), ('w2', 936390)])),
    ((43, 11, 7), OrderedDict([
        ('n', 453190), ('e', 10509), ('d', 10540), ('lambda1', 650),
        ('m1', 9970180), ('lambda2', -681), ('m2', 9516990),
        ('w1', 411400), ('w2', 412610)])),
    ((67, 17, 33), OrderedDict([
        ('q', 40254497110927943179349807054456171205137),
        ('n', 600813389715342435512683687379942853808),
        ('e', 8967364025602125902458937044032559119),
        ('d', 8967364025602125903185223489938034768),
        ('lambda1', 23967452714880696416),
        ('m1', 20427655250321642807431245370918057029472),
        ('lambda2', -24693739160786172065),
        ('m2', 19826841860606300371918561683538114175664),
        ('w1', 565471425614439939283497632625940854016),
        ('w2', 565471425614439939329296401450097906704)])),
    ((107, 3, 53), OrderedDict([
        ('q', 19383245667680019896796723),
        ('n', 181151828669906728007446),
        ('e', 360610649595226895872817),
        ('d', 360610649595234814457952),
        ('lambda1', 419685012154),
        ('m1', 9782198748174963312402084),
        ('lambda2', -427603597289),
        ('m2', 9601046919505056584394638),
        ('w1', 120767885779658028663528),
        ('w2', 120767885780222887736490)])),
    ((133, 5, 18), OrderedDict([
        ('q', 3814697265625), ('n', 28681934328), ('e', 215848943),
        ('d', 215652162), ('lambda1', -96922), ('m1', 2868193432800),
        ('lambda2', 293703), ('m2', 946503832824),
        ('w1', 22945625000), ('w2', 22945312500)])),
])


def _report(notes, note):
    warnings.warn(note, TableDiscrepancyWarning, stacklevel=3)
    notes.append(note)


def exceptional_discrepancies(rec):
    """Printed values of an exceptional pair that differ from `rec.values()`.

    Each difference is also issued as a `TableDiscrepancyWarning`.

    Returns:
        (List[str]): One note per differing value; empty when the pair has
        no printed values.

    Examples:
        >>> import warnings
        >>> with warnings.catch_warnings():
        ...     warnings.simplefilter('ignore')
        ...     exceptional_discrepancies(exceptional_record(11, 3, 5))
        ['(11, 3^5): w1 printed as 22, computed 12']
        >>> exceptional_discrepancies(exceptional_record(19, 5, 9))
        []

    """
    printed = EXCEPTIONAL_TABLES.get((rec.k, rec.p, rec.m), {})
    computed = rec.values()
    notes = []
    for key, value in printed.items():
        if computed[key] != value:
            _report(notes, "{}: {} printed as {}, computed {}"
                    .format(rec, key, value, computed[key]))
    return notes


def table1_discrepancies(p_max=None, m_max=None):
    """Entries of `TABLE_1` that differ from `enumerate_semiprimitive_pairs`.

    Each difference is also issued as a `TableDiscrepancyWarning`. Rows
    with p > `p_max` or m > `m_max` are skipped.

    Examples:
        >>> import warnings
        >>> with warnings.catch_warnings():
        ...     warnings.simplefilter('ignore')
        ...     for note in table1_discrepancies():
        ...         print(note)
        p = 2, m = 8: k = 3 missing from the printed row
        p = 3, m = 2: k = 2 missing from the printed row
        p = 3, m = 8: k = 10 printed in bold, but 10 = p^ℓ + 1
        p = 7, m = 6: k = 5 printed, but not semiprimitive
        p = 7, m = 6: k = 10 printed, but not semiprimitive
        p = 7, m = 6: k = 25 printed, but not semiprimitive
        p = 7, m = 6: k = 50 printed, but not semiprimitive

    """
    notes = []
    for (p, m), printed in TABLE_1.items():
        if (p_max is not None and p > p_max) or \
                (m_max is not None and m > m_max):
            continue
        computed = OrderedDict((k, info.beyond_paley)
                               for k, info in enumerate_semiprimitive_pairs(p, m))
        printed = OrderedDict(printed)
        where = "p = {}, m = {}".format(p, m)
        for k in sorted(set(computed) | set(printed)):
            if k not in printed:
                _report(notes, "{}: k = {} missing from the printed row"
                        .format(where, k))
            elif k not in computed:
                _report(notes, "{}: k = {} printed, but not semiprimitive"
                        .format(where, k))
            elif printed[k] and not computed[k]:
                _report(notes, "{}: k = {} printed in bold, but {} = p^ℓ + 1"
                        .format(where, k, k))
            elif computed[k] and not printed[k]:
                _report(notes, "{}: k = {} printed in plain type, but is not "
                        "2 or p^ℓ + 1".format(where, k))
    return notes
