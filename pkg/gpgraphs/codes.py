# -*- encoding: utf-8 -*-
"""Provides the irreducible cyclic codes C(k, q) and their weights.

The code C(k, q) consists of the words

    c_γ = (Tr(γ ω^{ki}))_{i=0}^{n-1},    γ ∈ F_q,

of length n = (q - 1)/N, N = gcd((q - 1)/(p - 1), k). When k divides
(q - 1)/(p - 1), N = k and the weight of c_γ determines an eigenvalue of
Γ(k, q):

    λ_γ = n - p w(c_γ)/(p - 1).

If Γ(k, q) is connected the multiplicities are the frequencies of the
weights, so the weight distribution and the spectrum determine each other.

Examples:
    >>> from gpgraphs.core.fields import build_field
    >>> from gpgraphs.core.spectra import gp_spectrum
    >>> F = build_field(2, 4)
    >>> wd = weight_distribution_enumerate(F, 3)
    >>> print(wd)
    {[0]^1, [2]^10, [4]^5}
    >>> weights_from_spectrum(gp_spectrum(F, 3), 2) == wd
    True
    >>> print(spectrum_from_weights(wd))
    {[5]^1, [1]^10, [-3]^5}

"""
from builtins import object, range, super
from collections import Counter, OrderedDict, namedtuple
import json
import logging

import mpmath
import numpy as np
from sympy import Rational, igcd, n_order

from .core.fields import (FieldTooLargeError, build_field, check_divisor,
                          check_prime, is_primitive_divisor)
from .core.settings import settings
from .core.spectra import (DisconnectedError, Spectrum, gp_spectrum,
                           srg_analysis)
from .core.utils import certify, exact_div, exact_root, format_multiset
from .families import (PreconditionError, pl_plus_one_spectrum,
                       semiprimitive_spectrum, solve_k3_diophantine,
                       spectrum_gamma3, spectrum_gamma4,
                       _require_semiprimitive)

logger = logging.getLogger(__name__)


class BridgeInapplicableError(ValueError):
    """Raised when k does not divide (q - 1)/(p - 1)."""


class WeightDistributionError(AssertionError):
    """Raised when a weight distribution violates A_0 = 1 or Σ A_w = q."""


def _degree(q, p):
    m = 0
    while q > 1:
        q, r = divmod(q, p)
        assert r == 0, "not a power of {}".format(p)
        m += 1
    return m


class CodeSpec(namedtuple('CodeSpec', 'p m k N n dimension')):
    """The parameters of C(k, p^m).

    Attributes:
        N (int): gcd((q - 1)/(p - 1), k).
        n (int): The length, (q - 1)/N.
        dimension (int): The dimension over F_p, the least a with
            (q - 1)/k dividing p^a - 1.

    """
    __slots__ = ()

    @property
    def q(self):
        return self.p**self.m

    @property
    def bridge_applies(self):
        """Whether k divides (q - 1)/(p - 1), i.e. N = k."""
        return self.N == self.k

    def __str__(self):
        return "C({}, {}^{})".format(self.k, self.p, self.m)


def code_params(p, m, k):
    """The parameters of the code C(k, p^m).

    Raises:
        NotADivisorError: If `k` does not divide q - 1.

    Examples:
        >>> code_params(3, 5, 11)
        CodeSpec(p=3, m=5, k=11, N=11, n=22, dimension=5)
        >>> code_params(2, 4, 3)
        CodeSpec(p=2, m=4, k=3, N=3, n=5, dimension=4)
        >>> params = code_params(5, 2, 8)
        >>> params.N, params.n, params.bridge_applies
        (2, 12, False)

    """
    check_prime(p)
    q = p**m
    check_divisor(k, q)
    N = igcd((q - 1) // (p - 1), k)
    order = (q - 1) // k
    dimension = 1 if order == 1 else int(n_order(p, order))
    return CodeSpec(p, m, k, N, (q - 1) // N, dimension)


def _require_bridge(params):
    if not params.bridge_applies:
        raise BridgeInapplicableError(
                "bridge inapplicable: N = gcd((q - 1)/(p - 1), k) = {} for {}"
                .format(params.N, params))


class WeightDistribution(object):
    """The frequencies A_w of the Hamming weights w of a code.

    Entries are merged and sorted by increasing weight.

    Attributes:
        entries (Tuple[Tuple[int, int]]): `(weight, frequency)` pairs.
        n (int): The length of the code.
        q (int): The number of codewords.
        p (int): The size of the alphabet.
        m, k, N (int | None): The parameters of C(k, p^m), if known.
        source (str): 'enumeration', 'bridge' or 'closed_form'.

    Raises:
        WeightDistributionError: If A_0 ≠ 1, the frequencies do not add up
            to q, or a weight lies outside [0, n].

    Examples:
        >>> wd = WeightDistribution([(4, 5), (0, 1), (2, 10)], n=5, q=16, p=2)
        >>> wd.weights(), wd.min_distance, wd.max_weight, wd.is_two_weight
        ([2, 4], 2, 4, True)
        >>> WeightDistribution([(0, 1), (2, 10)], n=5, q=16, p=2)
        Traceback (most recent call last):
            ...
        WeightDistributionError: frequencies add up to 11, not 16

    """
    def __init__(self, entries, n, q, p, m=None, k=None, N=None,
                 source='enumeration', check=True):
        super().__init__()
        merged = Counter()
        for weight, freq in entries:
            if freq:
                merged[int(weight)] += int(freq)
        self.entries = tuple(sorted(merged.items()))
        self.n = n
        self.q = q
        self.p = p
        self.m = m if m is not None else _degree(q, p)
        self.k = k
        self.N = N
        self.source = source
        if check:
            self.check_invariants()

    def check_invariants(self):
        if self.frequency(0) != 1:
            raise WeightDistributionError(
                    "the zero weight has frequency {}, not 1"
                    .format(self.frequency(0)))
        total = sum(freq for _, freq in self.entries)
        if total != self.q:
            raise WeightDistributionError(
                    "frequencies add up to {}, not {}".format(total, self.q))
        for weight, _ in self.entries:
            if not 0 <= weight <= self.n:
                raise WeightDistributionError(
                        "weight {} outside [0, {}]".format(weight, self.n))

    def frequency(self, weight):
        for w, freq in self.entries:
            if w == weight:
                return freq
        return 0

    def weights(self):
        """The distinct nonzero weights, increasing."""
        return [w for w, _ in self.entries if w]

    @property
    def min_distance(self):
        weights = self.weights()
        return weights[0] if weights else None

    @property
    def max_weight(self):
        weights = self.weights()
        return weights[-1] if weights else None

    @property
    def is_two_weight(self):
        return len(self.weights()) == 2

    def is_divisible(self, divisor):
        """Whether every weight is a multiple of `divisor`."""
        return all(w % divisor == 0 for w, _ in self.entries)

    @property
    def total_weight(self):
        return sum(w * freq for w, freq in self.entries)

    @property
    def balanced_total_weight(self):
        """n(q - q/p), the total weight when no coordinate is always zero."""
        return self.n * (self.q - self.q // self.p)

    def as_dict(self):
        """A JSON-ready description, frequencies as decimal strings."""
        return OrderedDict([
            ('p', self.p),
            ('m', self.m),
            ('k', self.k),
            ('N', self.N),
            ('n', self.n),
            ('entries', [[w, str(freq)] for w, freq in self.entries]),
            ('source', self.source),
        ])

    def to_json(self, **kwargs):
        """Serializes `as_dict()`.

        Examples:
            >>> from gpgraphs.core.fields import build_field
            >>> print(weight_distribution_enumerate(build_field(3, 2), 2)
            ...       .to_json())  # doctest: +NORMALIZE_WHITESPACE
            {"p": 3, "m": 2, "k": 2, "N": 2, "n": 4,
             "entries": [[0, "1"], [2, "4"], [4, "4"]],
             "source": "enumeration"}

        """
        return json.dumps(self.as_dict(), **kwargs)

    def __eq__(self, other):
        return (isinstance(other, WeightDistribution)
                and (self.n, self.q, self.p, self.entries)
                == (other.n, other.q, other.p, other.entries))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __str__(self):
        return format_multiset(self.entries)

    def __repr__(self):
        return "WeightDistribution(q={}, n={}, entries={}, source={!r})"\
                .format(self.q, self.n, str(self), self.source)


def code_minimum_distance(wd):
    """The minimum distance d, the least nonzero weight.

    Examples:
        >>> wd = WeightDistribution([(0, 1), (2, 4), (4, 4)], n=4, q=9, p=3)
        >>> code_minimum_distance(wd), code_max_weight(wd)
        (2, 4)

    """
    return wd.min_distance

def code_max_weight(wd):
    return wd.max_weight


def codeword(ctx, gamma, k):
    """The codeword c_γ = (Tr(γ ω^{ki}))_{i=0}^{n-1} of C(k, q).

    Args:
        ctx (FiniteField): A field with tables.
        gamma (FieldElement): An element of `ctx`.
        k (int): A divisor of q - 1.

    Returns:
        (np.ndarray): The `n` coordinates, integers in [0, p - 1].

    Raises:
        FieldTooLargeError: If `ctx` has no tables.

    Examples:
        >>> from gpgraphs.core.fields import build_field
        >>> F = build_field(2, 4)
        >>> codeword(F, F.zero, 3)
        array([0, 0, 0, 0, 0])
        >>> int(np.count_nonzero(codeword(F, F.one, 3))) in (2, 4)
        True
        >>> g = F.element(5)
        >>> np.array_equal(codeword(F, g * F.element(3), 3),
        ...                np.roll(codeword(F, g, 3), -1))
        True

    """
    ctx.require_tables()
    n = code_params(ctx.p, ctx.m, k).n
    if gamma.is_zero:
        return np.zeros(n, dtype=np.int64)
    steps = k * np.arange(n, dtype=np.int64)
    return ctx.trace_table[(gamma.log + steps) % ctx.order]


def _word_weights(ctx, logs, steps):
    """Weights of the words of the γ = ω^j, j in `logs`, in row blocks."""
    weights = np.empty(len(logs), dtype=np.int64)
    block = max(1, 2**22 // max(1, len(steps)))
    for start in range(0, len(logs), block):
        rows = logs[start:start + block, None]
        words = ctx.trace_table[(rows + steps) % ctx.order]
        weights[start:start + block] = np.count_nonzero(words, axis=1)
    return weights


def weight_distribution_enumerate(ctx, k, full=False):
    """The weight distribution of C(k, q) by generating codewords.

    Since c_{γω^k} is a cyclic shift of c_γ, the weight of c_{ω^j} only
    depends on j mod k, and k representatives suffice. With `full=True`
    every codeword is generated instead.

    Args:
        ctx (FiniteField): A field with tables.
        k (int): A divisor of q - 1.
        full (bool): Whether to generate all q codewords.

    Raises:
        FieldTooLargeError: If q exceeds `settings.enumeration_cap` or
            `ctx` has no tables.

    Examples:
        >>> from gpgraphs.core.fields import build_field
        >>> F = build_field(3, 5)
        >>> print(weight_distribution_enumerate(F, 11))
        {[0]^1, [12]^132, [18]^110}
        >>> weight_distribution_enumerate(F, 11, full=True) == \\
        ...     weight_distribution_enumerate(F, 11)
        True
        >>> wd = weight_distribution_enumerate(build_field(5, 2), 8)
        >>> wd.n, wd.N
        (12, 2)

    """
    if ctx.q > settings.enumeration_cap:
        raise FieldTooLargeError(
                "q = {} exceeds the enumeration cap {}"
                .format(ctx.q, settings.enumeration_cap))
    ctx.require_tables()
    params = code_params(ctx.p, ctx.m, k)
    steps = k * np.arange(params.n, dtype=np.int64)
    if full:
        logs = np.arange(ctx.order, dtype=np.int64)
        weights = _word_weights(ctx, logs, steps)
        counts = Counter(int(w) for w in weights)
    else:
        logs = np.arange(k, dtype=np.int64)
        weights = _word_weights(ctx, logs, steps)
        counts = Counter()
        for w in weights:
            counts[int(w)] += ctx.order // k
    counts[0] += 1
    logger.debug("enumerated %s (%s)", params, "full" if full else "by coset")
    return WeightDistribution(counts.items(), params.n, ctx.q, ctx.p, m=ctx.m,
                              k=k, N=params.N, source='enumeration')


def weights_from_spectrum(s, p):
    """The weight distribution of C(k, q) from the spectrum of Γ(k, q).

    Each eigenvalue λ gives the weight (p - 1)(n - λ)/p with frequency
    the multiplicity of λ.

    Raises:
        BridgeInapplicableError: If k does not divide (q - 1)/(p - 1).
        DisconnectedError: If the graph is disconnected.
        InexactDivisionError: If some weight is not an integer.

    Examples:
        >>> from gpgraphs.families import exceptional_record, exceptional_spectrum
        >>> s, _, _ = exceptional_spectrum(exceptional_record(19, 5, 9))
        >>> print(weights_from_spectrum(s, 5))
        {[0]^1, [82000]^1027960, [82500]^925164}
        >>> from gpgraphs.core.fields import build_field
        >>> from gpgraphs.core.spectra import gp_spectrum
        >>> weights_from_spectrum(gp_spectrum(build_field(5, 2), 4), 5)
        Traceback (most recent call last):
            ...
        BridgeInapplicableError: bridge inapplicable: N = gcd((q - 1)/(p - 1), k) = 2 for C(4, 5^2)
        >>> weights_from_spectrum(gp_spectrum(build_field(3, 2), 4), 3)
        Traceback (most recent call last):
            ...
        DisconnectedError: Γ(4, 9) is disconnected

    """
    if s.complement:
        raise BridgeInapplicableError(
                "bridge inapplicable: {} is not Γ(k, q)".format(s.name()))
    m = _degree(s.q, p)
    k = exact_div(s.q - 1, s.n, "k")
    params = code_params(p, m, k)
    _require_bridge(params)
    if not s.is_connected:
        raise DisconnectedError("{} is disconnected".format(s.name()))
    s.require_exact()
    entries = [(exact_div((p - 1) * (s.n - value), p, "weight"), mult)
               for value, mult in s.entries]
    return WeightDistribution(entries, s.n, s.q, p, m=m, k=k, N=k,
                              source='bridge')


def spectrum_from_weights(wd):
    """The spectrum of Γ(k, q) from the weight distribution of C(k, q).

    The inverse of `weights_from_spectrum`.

    Raises:
        BridgeInapplicableError: If k does not divide (q - 1)/(p - 1).
        ValueError: If the code has no nonzero weight.

    Examples:
        >>> wd = WeightDistribution([(0, 1), (12, 132), (18, 110)], n=22,
        ...                         q=243, p=3)
        >>> print(spectrum_from_weights(wd))
        {[22]^1, [4]^132, [-5]^110}
        >>> weights_from_spectrum(spectrum_from_weights(wd), 3) == wd
        True

    """
    if not wd.weights():
        raise ValueError("a code without nonzero weights has no spectrum")
    p, n = wd.p, wd.n
    k = exact_div(wd.q - 1, n, "k")
    _require_bridge(code_params(p, wd.m, k))
    entries = [(n - exact_div(p * w, p - 1, "eigenvalue"), freq)
               for w, freq in wd.entries]
    return Spectrum(entries, wd.q, n, k=k, source='closed_form'
                    if wd.source == 'closed_form' else 'periods')


TwoWeightCheck = namedtuple('TwoWeightCheck', 'strongly_regular two_weight')


def two_weight_srg_check(p, m, k):
    """Tests that Γ(k, q) is strongly regular iff C(k, q) has two weights.

    Both sides are computed independently: strong regularity from the
    spectrum of Γ(k, q), the weights by enumerating C(k, q).

    Raises:
        PreconditionError: If k does not divide (q - 1)/(p - 1) or
            (q - 1)/k is not a primitive divisor of q - 1.

    Examples:
        >>> two_weight_srg_check(3, 4, 5)
        TwoWeightCheck(strongly_regular=True, two_weight=True)
        >>> two_weight_srg_check(7, 3, 3)
        TwoWeightCheck(strongly_regular=False, two_weight=False)
        >>> two_weight_srg_check(3, 5, 11)
        TwoWeightCheck(strongly_regular=True, two_weight=True)

    """
    check_prime(p)
    q = p**m
    if ((q - 1) // (p - 1)) % k or not is_primitive_divisor(p, m, k):
        raise PreconditionError(
                "C({}, {}^{}) needs k | (q - 1)/(p - 1) and (q - 1)/k a "
                "primitive divisor of q - 1".format(k, p, m))
    ctx = build_field(p, m)
    strongly_regular = srg_analysis(gp_spectrum(ctx, k)) is not None
    two_weight = weight_distribution_enumerate(ctx, k).is_two_weight
    certify(strongly_regular == two_weight,
            "Γ({0}, {1}^{2}) and C({0}, {1}^{2}) disagree", k, p, m)
    return TwoWeightCheck(strongly_regular, two_weight)


class MinDistanceBound(namedtuple('MinDistanceBound', 'n p')):
    """The bound d ≥ ((p - 1)/p)(n - 2√(n - 1)) of Ramanujan codes.

    Examples:
        >>> bound = min_distance_bound(5, 2)
        >>> print(bound.value())
        0.5
        >>> bound.satisfied_by(2), bound.hypothesis(2)
        (True, True)
        >>> min_distance_bound(16, 3).satisfied_by(6)
        True
        >>> min_distance_bound(1, 3).satisfied_by(1)
        True

    """
    __slots__ = ()

    def value(self):
        """The bound as an mpmath number."""
        n, p = self.n, self.p
        with mpmath.workdps(settings.precision):
            return +(mpmath.mpf(p - 1) / p * (n - 2 * mpmath.sqrt(n - 1)))

    def satisfied_by(self, d):
        """Exact test of the bound: n - pd/(p - 1) ≤ 2√(n - 1)."""
        gap = self.n - Rational(self.p * d, self.p - 1)
        return bool(gap <= 0 or gap * gap <= 4 * (self.n - 1))

    def hypothesis(self, d):
        """d ≤ ((p - 1)/p) n."""
        return self.p * d <= (self.p - 1) * self.n


def min_distance_bound(n, p):
    return MinDistanceBound(n, p)


RamanujanDistance = namedtuple('RamanujanDistance',
                               'case lambda_value ramanujan hypothesis '
                               'bound_holds')


def ramanujan_distance_cases(wd):
    """Relates the Ramanujan property of Γ(k, q) to the distance of C(k, q).

    With d the minimum distance and d' the maximum weight,
    λ(Γ) = max{n - pd/(p - 1), pd'/(p - 1) - n}. In case 'a' the first
    term attains the maximum and Γ(k, q) is Ramanujan iff the distance
    bound holds; in case 'b' the second one does, and the Ramanujan
    property together with d ≤ (p - 1)n/p implies the bound.

    Returns:
        (RamanujanDistance): The case, λ(Γ), whether Γ(k, q) is Ramanujan,
        whether d ≤ (p - 1)n/p, and whether the distance bound holds.

    Examples:
        >>> wd = WeightDistribution([(0, 1), (2, 10), (4, 5)], n=5, q=16, p=2)
        >>> ramanujan_distance_cases(wd)
        RamanujanDistance(case='b', lambda_value=3, ramanujan=True, hypothesis=True, bound_holds=True)

    """
    n, p = wd.n, wd.p
    d, d_max = wd.min_distance, wd.max_weight
    low = n - exact_div(p * d, p - 1, "eigenvalue")
    high = exact_div(p * d_max, p - 1, "eigenvalue") - n
    case = 'a' if low >= high else 'b'
    value = max(low, high)
    ramanujan = value * value <= 4 * (n - 1)
    bound = min_distance_bound(n, p)
    hypothesis = bound.hypothesis(d)
    bound_holds = bound.satisfied_by(d)
    if case == 'a':
        certify(ramanujan == bound_holds,
                "Ramanujan property and distance bound disagree for {}", wd)
    elif ramanujan and hypothesis:
        certify(bound_holds, "distance bound fails for {}", wd)
    return RamanujanDistance(case, value, ramanujan, hypothesis, bound_holds)


class TwoWeights(namedtuple('TwoWeights', 'w1 a1 w2 a2')):
    """Two nonzero weights with their frequencies; w1 belongs to λ1."""
    __slots__ = ()

    def distribution(self, q, p, k):
        """The full `WeightDistribution`, the zero word included."""
        return WeightDistribution([(0, 1), (self.w1, self.a1),
                                   (self.w2, self.a2)],
                                  (q - 1) // k, q, p, k=k, N=k,
                                  source='closed_form')


def semiprimitive_weights(k, p, m):
    """The weights of C(k, p^m) for a semiprimitive pair.

        w1 = (p - 1)p^{m/2-1}(p^{m/2} - σ(k - 1))/k,    A = n,
        w2 = (p - 1)p^{m/2-1}(p^{m/2} + σ)/k,           A = (k - 1)n.

    Raises:
        NotSemiprimitiveError: If (k, p^m) is not a semiprimitive pair.
        OddMError: For a Paley pair with m odd.

    Examples:
        >>> semiprimitive_weights(3, 2, 4)
        TwoWeights(w1=4, a1=5, w2=2, a2=10)
        >>> semiprimitive_weights(2, 3, 4)
        TwoWeights(w1=30, a1=40, w2=24, a2=40)
        >>> semiprimitive_weights(11, 3, 5)
        Traceback (most recent call last):
            ...
        NotSemiprimitiveError: (11, 3^5) is not a semiprimitive pair
        >>> semiprimitive_weights(2, 5, 1)
        Traceback (most recent call last):
            ...
        OddMError: the eigenvalues of Γ(2, 5^1) are irrational

    """
    info = _require_semiprimitive(k, p, m)
    info.require_integral()
    factor = (p - 1) * p**(m // 2 - 1)
    weights = TwoWeights(
            exact_div(factor * (info.sqrt_q - info.sigma * (k - 1)), k, "w1"),
            info.n,
            exact_div(factor * (info.sqrt_q + info.sigma), k, "w2"),
            (k - 1) * info.n)
    bridged = weights_from_spectrum(semiprimitive_spectrum(k, p, m)[0], p)
    certify(weights.distribution(info.q, p, k) == bridged,
            "weights of C({}, {}^{}) differ from the spectrum", k, p, m)
    return weights


def pl_plus_one_weights(p, m, l):
    """The weights of C(p^ℓ + 1, p^m), ℓ | m, m/ℓ even, ℓ ≠ m/2.

        w1 = (p - 1)(p^{m-1} + εp^{m/2+ℓ-1})/(p^ℓ + 1),   A = n,
        w2 = (p - 1)(p^{m-1} - εp^{m/2-1})/(p^ℓ + 1),     A = np^ℓ,

    with ε = (-1)^{m/(2ℓ)}.

    Examples:
        >>> pl_plus_one_weights(2, 4, 1)
        TwoWeights(w1=4, a1=5, w2=2, a2=10)
        >>> pl_plus_one_weights(3, 8, 2)
        TwoWeights(w1=486, a1=656, w2=432, a2=5904)

    """
    spectrum = pl_plus_one_spectrum(p, m, l)
    k = p**l + 1
    n = spectrum.n
    epsilon = (-1)**(m // (2 * l))
    weights = TwoWeights(
            exact_div((p - 1) * (p**(m - 1) + epsilon * p**(m // 2 + l - 1)),
                      k, "w1"), n,
            exact_div((p - 1) * (p**(m - 1) - epsilon * p**(m // 2 - 1)),
                      k, "w2"), n * p**l)
    certify(weights.distribution(p**m, p, k)
            == weights_from_spectrum(spectrum, p),
            "weights of C({}, {}^{}) differ from the spectrum", k, p, m)
    return weights


def cubic_code_weights(p, m):
    """The weight distribution of C(3, p^m), 3 | (q - 1)/(p - 1), q ≥ 5.

    For p ≡ 1 (mod 3) the weights are (p - 1)(q - ar)/(3p) and
    (p - 1)(q + (a ± 9b)r/2)/(3p), r = q^{1/3}, each with frequency
    (q - 1)/3. For p ≡ 2 (mod 3), r = √q, they are (p - 1)(q - r)/(3p)
    and (p - 1)(q + 2r)/(3p) with frequencies 2(q - 1)/3 and (q - 1)/3
    when 4 | m, and (p - 1)(q - 2r)/(3p) and (p - 1)(q + r)/(3p) with
    frequencies (q - 1)/3 and 2(q - 1)/3 otherwise.

    Raises:
        PreconditionError: If 3 does not divide (q - 1)/(p - 1).
        QTooSmallError: If q < 5.

    Examples:
        >>> print(cubic_code_weights(7, 3))
        {[0]^1, [90]^114, [96]^114, [108]^114}
        >>> print(cubic_code_weights(2, 4))
        {[0]^1, [2]^10, [4]^5}

    """
    spectrum = spectrum_gamma3(p, m)
    q, n = p**m, spectrum.n

    def weight(x):
        return exact_div((p - 1) * x, 3 * p, "weight")

    if p % 3 == 1:
        a, b = solve_k3_diophantine(p, m)
        r = exact_root(q, 3)
        entries = [(weight(q - a * r), n),
                   (weight(q + (a + 9 * b) // 2 * r), n),
                   (weight(q + (a - 9 * b) // 2 * r), n)]
    else:
        r = p**(m // 2)
        if m % 4 == 0:
            entries = [(weight(q - r), 2 * n), (weight(q + 2 * r), n)]
        else:
            entries = [(weight(q - 2 * r), n), (weight(q + r), 2 * n)]
    wd = WeightDistribution([(0, 1)] + entries, n, q, p, m=m, k=3, N=3,
                            source='closed_form')
    certify(wd == weights_from_spectrum(spectrum, p),
            "weights of C(3, {}^{}) differ from the spectrum", p, m)
    return wd


def quartic_code_weights(p, m):
    """The weight distribution of C(4, p^m), 4 | (q - 1)/(p - 1), q ≥ 5,
    q ≠ 9, through the spectrum of Γ(4, q).

    Examples:
        >>> print(quartic_code_weights(5, 4))
        {[0]^1, [112]^156, [124]^156, [128]^156, [136]^156}
        >>> print(quartic_code_weights(3, 4))
        {[0]^1, [12]^60, [18]^20}

    """
    wd = weights_from_spectrum(spectrum_gamma4(p, m), p)
    return WeightDistribution(wd.entries, wd.n, wd.q, p, m=m, k=4, N=4,
                              source='closed_form')


def cyclic_shift_check(ctx, k, samples=100, seed=None):
    """Spot-checks that C(k, q) is closed under the cyclic shift.

    The shift of c_γ must be the codeword c_{γω^k}.

    Args:
        ctx (FiniteField): A field with tables.
        k (int): A divisor of q - 1.
        samples (int): The number of random nonzero γ to try.
        seed (int | None): Seed of the random choice of γ.

    Examples:
        >>> from gpgraphs.core.fields import build_field
        >>> cyclic_shift_check(build_field(3, 4), 5, seed=0)
        True

    """
    rng = np.random.RandomState(seed)
    step = ctx.element(k)
    for log in rng.randint(0, ctx.order, size=samples):
        gamma = ctx.element(int(log))
        shifted = np.roll(codeword(ctx, gamma, k), -1)
        if not np.array_equal(shifted, codeword(ctx, gamma * step, k)):
            return False
    return True
