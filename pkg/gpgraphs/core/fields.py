# -*- encoding: utf-8 -*-
"""Provides explicit finite fields F_q, q = p^m, with discrete-log tables.

Every field is built over the lexicographically smallest monic primitive
polynomial of degree `m` over F_p (coefficients compared from the constant
term upward), so that the primitive element ω, the residue class of `x`,
and hence every coset index and every period ordering, is the same on
every run.

Nonzero elements are represented by their discrete logarithm to the base ω.
When the field is small enough (see `gpgraphs.core.settings`) the
antilog, log, trace and Zech tables are built with NumPy; addition then
goes through the Zech table.

Examples:
    >>> F = build_field(2, 4)
    >>> F.q, F.modulus
    (16, (1, 0, 0, 1, 1))
    >>> w = F.primitive_element
    >>> w ** 15 == F.one
    True
    >>> (w ** 3 + w ** 3).is_zero
    True

"""
from builtins import object, range, super, zip
from itertools import product
import io
import logging
import os
import warnings

import numpy as np
from sympy import factorint, isprime, igcd
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_add, gf_irreducible_p, gf_pow_mod

from .settings import settings
from .utils import LRUCache, cache_method, certify

logger = logging.getLogger(__name__)

CACHE_FILENAME = "moduli.txt"


class NotPrimeError(ValueError):
    """Raised when a field characteristic is not a prime."""

class FieldTooLargeError(ValueError):
    """Raised when a field or an enumeration exceeds its configured cap."""

class NoPrimitivePolynomialError(RuntimeError):
    """Raised when no primitive modulus can be found or verified."""

class ZeroElementError(ValueError):
    """Raised when an operation needs a nonzero field element."""

class NotADivisorError(ValueError):
    """Raised when an argument must divide q - 1 but does not."""


def check_prime(p):
    """Raises `NotPrimeError` unless `p` is prime."""
    if not isprime(p):
        raise NotPrimeError("{} is not prime".format(p))

def check_divisor(N, q):
    """Raises `NotADivisorError` unless `N` is a positive divisor of q - 1."""
    if N < 1 or (q - 1) % N:
        raise NotADivisorError("{} does not divide q - 1 = {}".format(N, q - 1))


def is_primitive_polynomial(coeffs, p, factors=None):
    """Tests whether a monic polynomial over F_p is primitive.

    Args:
        coeffs (Sequence[int]): Coefficients `c_0, ..., c_m`, constant term
            first, with `c_m == 1`.
        p (int): The characteristic.
        factors (Iterable[int]): The prime factors of p^m - 1, if known.

    Returns:
        (bool): True iff the polynomial is irreducible and `x` has order
        exactly p^m - 1 modulo it.

    Examples:
        >>> is_primitive_polynomial((1, 1, 0, 0, 1), 2)  # x^4 + x + 1
        True
        >>> is_primitive_polynomial((1, 1, 1, 1, 1), 2)  # x has order 5
        False
        >>> is_primitive_polynomial((2, 1), 3)  # x = 1 in F_3
        False

    """
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1 or coeffs[0] % p == 0:
        return False
    f = [int(c) % p for c in reversed(coeffs)]
    if m > 1 and not gf_irreducible_p(f, p, ZZ):
        return False
    order = p**m - 1
    if factors is None:
        factors = factorint(order)
    x = [1, 0]
    if gf_pow_mod(x, order, f, p, ZZ) != [1]:
        return False
    return all(gf_pow_mod(x, order // r, f, p, ZZ) != [1] for r in factors)


def _cache_path():
    if not settings.cache_dir:
        return None
    return os.path.join(settings.cache_dir, CACHE_FILENAME)

def _read_cached_modulus(p, m):
    path = _cache_path()
    if path is None or not os.path.exists(path):
        return None
    with io.open(path) as f:
        for line in f:
            fields = line.split()
            if len(fields) != m + 3:
                continue
            try:
                values = [int(v) for v in fields]
            except ValueError:
                continue
            if values[0] == p and values[1] == m:
                return tuple(values[2:])
    return None

def _write_cached_modulus(p, m, coeffs):
    path = _cache_path()
    if path is None:
        return
    try:
        if not os.path.isdir(settings.cache_dir):
            os.makedirs(settings.cache_dir)
        with io.open(path, 'a') as f:
            f.write(u"{} {} {}\n".format(p, m, " ".join(map(str, coeffs))))
    except (IOError, OSError) as e:
        warnings.warn("could not write modulus cache {}: {}".format(path, e))


def primitive_polynomial(p, m):
    """Finds the canonical primitive modulus of F_{p^m}.

    The candidates `x^m + c_{m-1} x^{m-1} + ... + c_0` are scanned with
    `(c_0, c_1, ..., c_{m-1})` in lexicographic order. When a cache
    directory is configured, a cached entry is verified and reused, and
    a freshly found modulus is appended to the cache file.

    Args:
        p (int): A prime.
        m (int): The degree, at least 1.

    Returns:
        (Tuple[int]): The coefficients `c_0, ..., c_m` with `c_m == 1`.

    Raises:
        NotPrimeError: If `p` is not prime.
        NoPrimitivePolynomialError: If the scan finds nothing, which can
            only happen when q - 1 was factored wrongly.

    Examples:
        >>> primitive_polynomial(2, 4)
        (1, 0, 0, 1, 1)
        >>> primitive_polynomial(7, 1)  # x + 2 = x - 5, and 5 generates F_7*
        (2, 1)
        >>> primitive_polynomial(4, 2)
        Traceback (most recent call last):
            ...
        NotPrimeError: 4 is not prime

    """
    check_prime(p)
    if m < 1:
        raise ValueError("the degree must be positive, got {}".format(m))
    cached = _read_cached_modulus(p, m)
    if cached is not None:
        if is_primitive_polynomial(cached, p):
            logger.debug("modulus of F_%d^%d read from cache", p, m)
            return cached
        warnings.warn("ignoring invalid cached modulus {} for F_{}^{}"
                      .format(cached, p, m))
    factors = list(factorint(p**m - 1))
    for tail in product(range(p), repeat=m):
        if tail[0] == 0:
            continue
        coeffs = tail + (1,)
        if is_primitive_polynomial(coeffs, p, factors):
            _write_cached_modulus(p, m, coeffs)
            return coeffs
    raise NoPrimitivePolynomialError(
            "no primitive polynomial of degree {} over F_{}".format(m, p))


def _matrix_power_mod(matrix, exponent, p):
    result = np.eye(matrix.shape[0], dtype=np.int64)
    base = matrix % p
    while exponent:
        if exponent & 1:
            result = result.dot(base) % p
        base = base.dot(base) % p
        exponent >>= 1
    return result


class FieldElement(object):
    """An element of a `FiniteField`: zero, or ω^log.

    Attributes:
        field (FiniteField): The field the element belongs to.
        log (int | None): The discrete logarithm in `[0, q - 2]`, or
            `None` for zero.

    """
    __slots__ = ('field', 'log')

    def __init__(self, field, log=None):
        self.field = field
        self.log = None if log is None else int(log) % field.order

    @property
    def is_zero(self):
        return self.log is None

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.field is not self.field:
            raise TypeError("{!r} is not an element of {}".format(other, self.field))

    def __mul__(self, other):
        self._check(other)
        if self.is_zero or other.is_zero:
            return self.field.zero
        return FieldElement(self.field, self.log + other.log)

    def __truediv__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroElementError("division by zero in {}".format(self.field))
        if self.is_zero:
            return self
        return FieldElement(self.field, self.log - other.log)
    __div__ = __truediv__

    def __pow__(self, exponent):
        if self.is_zero:
            if exponent < 0:
                raise ZeroElementError("zero has no inverse")
            return self.field.one if exponent == 0 else self
        return FieldElement(self.field, self.log * exponent)

    def __neg__(self):
        if self.is_zero or self.field.p == 2:
            return self
        return FieldElement(self.field, self.log + self.field.order // 2)

    def __add__(self, other):
        self._check(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        zech = self.field.zech_table
        if zech is None:
            raise FieldTooLargeError(
                    "addition in {} needs tables".format(self.field))
        z = int(zech[(other.log - self.log) % self.field.order])
        if z < 0:
            return self.field.zero
        return FieldElement(self.field, self.log + z)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (isinstance(other, FieldElement) and other.field is self.field
                and other.log == self.log)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.field.q, self.log))

    def trace(self):
        return self.field.trace(self)

    def vector(self):
        """The coefficients of the element in the basis 1, ω, ..., ω^{m-1}."""
        return self.field.decode(self.field.encode(self))

    def __str__(self):
        return "0" if self.is_zero else "ω^{}".format(self.log)

    def __repr__(self):
        return "FieldElement(q={}, log={})".format(self.field.q, self.log)


class FiniteField(object):
    """The finite field F_{p^m}.

    Treat instances as immutable: they are shared between callers by
    `build_field`.

    Attributes:
        p (int): The characteristic.
        m (int): The extension degree.
        q (int): The number of elements, `p**m`.
        modulus (Tuple[int]): Coefficients `c_0, ..., c_m` of the primitive
            polynomial defining the field.
        antilog_table (np.ndarray | None): `antilog_table[i]` is ω^i encoded
            as the integer `sum(c_j * p**j)` of its coefficient vector.
        log_table (np.ndarray | None): Inverse of `antilog_table`, with
            `log_table[0] == -1`.
        trace_table (np.ndarray | None): `trace_table[i]` is Tr(ω^i).
        zech_table (np.ndarray | None): `zech_table[i]` is the log of
            1 + ω^i, or -1 when that sum is zero.

    Examples:
        >>> F = build_field(3, 5)
        >>> F.q, F.order
        (243, 242)
        >>> F.trace(F.one)
        2
        >>> F = build_field(7, 3)
        >>> F.order
        342

        The tables respect the field axioms:

        >>> import numpy as np
        >>> F = build_field(5, 2)
        >>> a = F.antilog_table
        >>> all(F.multiply_encoded(a[i], a[j]) == a[(i + j) % 24]
        ...     for i in range(24) for j in range(24))
        True
        >>> np.bincount(F.trace_table, minlength=5)  # zero has trace 0 too
        array([4, 5, 5, 5, 5])

    """
    def __init__(self, p, m, modulus, tables=True):
        super().__init__()
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(int(c) for c in modulus)
        self.cache = {}
        self.antilog_table = None
        self.log_table = None
        self.trace_table = None
        self.zech_table = None
        if tables:
            self._build_tables()

    @property
    def order(self):
        """The order of the multiplicative group, q - 1."""
        return self.q - 1

    @property
    def has_tables(self):
        return self.antilog_table is not None

    def require_tables(self):
        """Raises `FieldTooLargeError` if the tables were not built."""
        if not self.has_tables:
            raise FieldTooLargeError(
                    "{} was built without tables (construction cap {})"
                    .format(self, settings.construction_cap))

    def _build_tables(self):
        p, m, n = self.p, self.m, self.order
        logger.debug("building tables of F_%d^%d", p, m)
        # multiplication by ω acting on coefficient columns
        companion = np.zeros((m, m), dtype=np.int64)
        companion[1:, :-1] = np.eye(m - 1, dtype=np.int64)
        companion[:, -1] = [(-c) % p for c in self.modulus[:m]]
        weights = p ** np.arange(m, dtype=np.int64)

        block = min(n, 1024)
        head = np.empty((block, m), dtype=np.int64)
        v = np.zeros(m, dtype=np.int64)
        v[0] = 1
        for i in range(block):
            head[i] = v
            v = companion.dot(v) % p
        antilog = np.empty(n, dtype=np.int64)
        antilog[:block] = head.dot(weights)
        step = _matrix_power_mod(companion, block, p)
        shift = step
        for start in range(block, n, block):
            stop = min(start + block, n)
            antilog[start:stop] = (head[:stop - start].dot(shift.T) % p)\
                    .dot(weights)
            shift = shift.dot(step) % p

        log = np.full(self.q, -1, dtype=np.int64)
        log[antilog] = np.arange(n, dtype=np.int64)
        if log[0] != -1 or (log[1:] < 0).any():
            raise NoPrimitivePolynomialError(
                    "{} is not primitive over F_{}".format(self.modulus, p))

        # Tr(ω^j) for the basis, then Tr is linear in the coefficients
        basis_traces = []
        for j in range(m):
            total = [0] * m
            for r in range(m):
                d = self.decode(antilog[(j * p**r) % n])
                total = [(a + b) % p for a, b in zip(total, d)]
            certify(not any(total[1:]), "trace left F_p")
            basis_traces.append(total[0])
        trace = np.zeros(n, dtype=np.int64)
        rest = antilog.copy()
        for j in range(m):
            rest, digit = np.divmod(rest, p)
            trace += digit * basis_traces[j]
        trace %= p

        low = antilog % p
        zech = log[antilog - low + (low + 1) % p]

        for table in (antilog, log, trace, zech):
            table.flags.writeable = False
        self.antilog_table = antilog
        self.log_table = log
        self.trace_table = trace
        self.zech_table = zech

    @property
    def zero(self):
        return FieldElement(self)

    @property
    def one(self):
        return FieldElement(self, 0)

    @property
    def primitive_element(self):
        """ω, the residue class of x modulo `self.modulus`."""
        return FieldElement(self, 1 % self.order)

    def element(self, log):
        """Returns ω^log."""
        return FieldElement(self, log)

    def elements(self):
        """Iterates over zero followed by ω^0, ω^1, ..., ω^{q-2}."""
        yield self.zero
        for i in range(self.order):
            yield FieldElement(self, i)

    def encode(self, x):
        """Encodes an element as the integer `sum(c_j * p**j)`."""
        if x.is_zero:
            return 0
        if self.has_tables:
            return int(self.antilog_table[x.log])
        f = list(reversed(self.modulus))
        coeffs = gf_pow_mod([1, 0], x.log, f, self.p, ZZ)
        return sum(int(c) * self.p**j for j, c in enumerate(reversed(coeffs)))

    def decode(self, value):
        """Inverse of `encode`, as a list of `m` coefficients."""
        value = int(value)
        digits = []
        for _ in range(self.m):
            value, d = divmod(value, self.p)
            digits.append(d)
        return digits

    def from_encoded(self, value):
        self.require_tables()
        log = int(self.log_table[int(value)])
        return self.zero if log < 0 else FieldElement(self, log)

    def add_encoded(self, a, b):
        """Adds encoded elements coefficientwise; works on NumPy arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor(a, b)
        result = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        place = 1
        for _ in range(self.m):
            result += ((a // place + b // place) % self.p) * place
            place *= self.p
        return result

    def multiply_encoded(self, a, b):
        """Multiplies two encoded elements through the log tables."""
        self.require_tables()
        a, b = int(a), int(b)
        if a == 0 or b == 0:
            return 0
        la, lb = self.log_table[a], self.log_table[b]
        return int(self.antilog_table[(la + lb) % self.order])

    def trace(self, x):
        """Tr_{q/p}(x) = x + x^p + ... + x^{p^{m-1}}, as an integer mod p."""
        if x.is_zero:
            return 0
        if self.has_tables:
            return int(self.trace_table[x.log])
        return self._trace_by_polynomials(x.log)

    def _trace_by_polynomials(self, log):
        p = self.p
        f = list(reversed(self.modulus))
        power = gf_pow_mod([1, 0], log, f, p, ZZ)
        total = []
        for _ in range(self.m):
            total = gf_add(total, power, p, ZZ)
            power = gf_pow_mod(power, p, f, p, ZZ)
        certify(len(total) <= 1, "trace left F_p")
        return int(total[0]) if total else 0

    @cache_method(capacity=32)
    def trace_tallies(self, N):
        """Counts, per coset of <ω^N>, how often each trace value occurs."""
        check_divisor(N, self.q)
        self.require_tables()
        cosets = np.arange(self.order, dtype=np.int64) % N
        counts = np.bincount(cosets * self.p + self.trace_table,
                             minlength=N * self.p).reshape(N, self.p)
        counts.flags.writeable = False
        return counts

    def power_coset_index(self, x, N):
        """The index `i` with x in ω^i <ω^N>."""
        check_divisor(N, self.q)
        if x.is_zero:
            raise ZeroElementError("zero lies in no coset of <ω^{}>".format(N))
        return x.log % N

    def multiplicative_order(self, x):
        """The order of a nonzero element, (q - 1) / gcd(log, q - 1).

        Examples:
            >>> F = build_field(2, 4)
            >>> [F.multiplicative_order(F.element(i)) for i in (0, 1, 3, 5)]
            [1, 15, 5, 3]

        """
        if x.is_zero:
            raise ZeroElementError("zero has no multiplicative order")
        return self.order // igcd(x.log, self.order)

    def __str__(self):
        return "F_{}^{}".format(self.p, self.m)

    def __repr__(self):
        return "FiniteField(p={}, m={}, modulus={})".format(
                self.p, self.m, self.modulus)


_fields = LRUCache(8)

def build_field(p, m, tables=True):
    """Builds (or fetches) the field F_{p^m}.

    Args:
        p (int): A prime.
        m (int): A positive integer.
        tables (bool): Whether to build the log, trace and Zech tables.
            Fields with tables are limited to
            `settings.construction_cap` elements.

    Returns:
        (FiniteField): The field. Repeated calls return the same object.

    Raises:
        NotPrimeError: If `p` is not prime.
        FieldTooLargeError: If tables were requested and p^m exceeds the cap.

    Examples:
        >>> build_field(3, 5).q
        243
        >>> build_field(3, 5) is build_field(3, 5)
        True
        >>> build_field(6, 2)
        Traceback (most recent call last):
            ...
        NotPrimeError: 6 is not prime
        >>> build_field(2, 30)
        Traceback (most recent call last):
            ...
        FieldTooLargeError: q = 1073741824 exceeds the construction cap 16777216
        >>> F = build_field(2, 30, tables=False)
        >>> F.trace(F.one), F.has_tables
        (0, False)

    """
    check_prime(p)
    if m < 1:
        raise ValueError("the degree must be positive, got {}".format(m))
    q = p**m
    if tables and q > settings.construction_cap:
        raise FieldTooLargeError("q = {} exceeds the construction cap {}"
                                 .format(q, settings.construction_cap))
    key = (p, m, bool(tables))
    try:
        return _fields[key]
    except KeyError:
        pass
    field = FiniteField(p, m, primitive_polynomial(p, m), tables=tables)
    _fields[key] = field
    return field


def trace(ctx, x):
    """Tr_{q/p}(x) for `x` in the field `ctx`.

    Examples:
        >>> F = build_field(2, 4)
        >>> trace(F, F.zero)
        0
        >>> sum((-1) ** trace(F, x) for x in F.elements())
        0
        >>> all(trace(F, x ** 2) == trace(F, x) for x in F.elements())
        True
        >>> all(trace(F, x + y) == (trace(F, x) + trace(F, y)) % 2
        ...     for x in F.elements() for y in F.elements())
        True

    """
    return ctx.trace(x)


def power_coset_index(ctx, x, N):
    """The coset index of a nonzero `x` modulo the N-th powers.

    Args:
        ctx (FiniteField): The field.
        x (FieldElement): A nonzero element.
        N (int): A divisor of q - 1.

    Returns:
        (int): `i` in `[0, N - 1]` with x in ω^i <ω^N>.

    Raises:
        ZeroElementError: If `x` is zero.
        NotADivisorError: If `N` does not divide q - 1.

    Examples:
        >>> F = build_field(2, 4)
        >>> power_coset_index(F, F.element(7), 3)
        1
        >>> all(power_coset_index(F, y ** 3, 3) == 0 for y in F.elements()
        ...     if not y.is_zero)
        True
        >>> from collections import Counter
        >>> F = build_field(3, 5)
        >>> sorted(Counter(power_coset_index(F, x, 11)
        ...                for x in F.elements() if not x.is_zero).values())
        [22, 22, 22, 22, 22, 22, 22, 22, 22, 22, 22]
        >>> power_coset_index(F, F.zero, 11)
        Traceback (most recent call last):
            ...
        ZeroElementError: zero lies in no coset of <ω^11>
        >>> power_coset_index(F, F.one, 4)
        Traceback (most recent call last):
            ...
        NotADivisorError: 4 does not divide q - 1 = 242

    """
    return ctx.power_coset_index(x, N)


def is_primitive_divisor(p, m, k):
    """Tests whether n = (p^m - 1)/k is a primitive divisor of p^m - 1.

    That is, whether `n` divides no p^a - 1 with 1 <= a < m. This holds
    exactly when Γ(k, p^m) is connected.

    Examples:
        >>> is_primitive_divisor(3, 5, 11)
        True
        >>> is_primitive_divisor(2, 2, 3)
        False
        >>> is_primitive_divisor(5, 4, 4)
        True
        >>> is_primitive_divisor(3, 4, 7)
        Traceback (most recent call last):
            ...
        NotADivisorError: 7 does not divide q - 1 = 80

    """
    check_divisor(k, p**m)
    n = (p**m - 1) // k
    return all((p**a - 1) % n for a in range(1, m))
