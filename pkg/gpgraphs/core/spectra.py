# -*- encoding: utf-8 -*-
"""Provides spectra of generalized Paley graphs and their structure.

The generalized Paley graph Γ(k, q) has the elements of F_q as vertices,
with u ~ v whenever v - u is a nonzero k-th power. It is an undirected
n-regular graph, n = (q - 1)/k, provided q is even or k divides
(q - 1)/2.

Its eigenvalues are n and the Gaussian periods of order k, each period
with multiplicity n (see `gp_spectrum`). This module turns spectra into
structure (strong regularity, Latin square parameters, energy, walks,
spanning trees, the Ihara zeta function, the Ramanujan property), and
builds the graph itself as a brute-force oracle for small q.

Examples:
    >>> from gpgraphs.core.fields import build_field
    >>> s = gp_spectrum(build_field(2, 4), 3)
    >>> print(s)
    {[5]^1, [1]^10, [-3]^5}
    >>> print(complement_spectrum(s))
    {[10]^1, [2]^5, [-2]^10}
    >>> params, array = srg_analysis(s)
    >>> print(params)
    srg(16, 5, 0, 2)
    >>> is_ramanujan_spectral(s)
    True

"""
from builtins import object, range, super, zip
from collections import Counter, OrderedDict, namedtuple
import json
import logging

import mpmath
import networkx as nx
import numpy as np
import scipy.linalg
from sympy import Mul, Poly, Symbol, prevprime
from sympy.ntheory.modular import crt
from sympy.polys.domains import ZZ

from .fields import FieldTooLargeError, check_divisor, check_prime
from .periods import X, gaussian_periods, paley_periods
from .settings import settings
from .utils import certify, exact_div, format_multiset, isqrt

logger = logging.getLogger(__name__)

SOURCES = ('closed_form', 'periods', 'oracle')


class DirectedGraphError(ValueError):
    """Raised when Γ(k, q) is not an undirected graph."""

class OracleDisagreementError(AssertionError):
    """Raised when two independent eigenvalue computations disagree."""

class DisconnectedError(ValueError):
    """Raised when an analysis needs a connected graph."""

class NotSemiprimitiveSpectrumError(ValueError):
    """Raised when a spectrum lacks the shape of a semiprimitive graph."""

class InexactSpectrumError(ArithmeticError):
    """Raised when an exact computation is given inexact eigenvalues."""

class DegenerateDegreeError(ValueError):
    """Raised when the Ihara zeta function is requested for degree <= 2."""

class SpectrumInvariantError(AssertionError):
    """Raised when a spectrum violates a trace identity."""


def check_simple(k, q):
    """Raises `DirectedGraphError` unless Γ(k, q) is undirected."""
    if q % 2 == 1 and ((q - 1) // 2) % k != 0:
        raise DirectedGraphError(
                "Γ({}, {}) is directed: {} does not divide (q - 1)/2"
                .format(k, q, k))


class GraphSpec(object):
    """The parameters of Γ(k, p^m), validated.

    Examples:
        >>> g = GraphSpec(3, 2, 4)
        >>> g.q, g.n
        (16, 5)
        >>> print(g)
        Γ(3, 2^4)
        >>> GraphSpec(2, 7, 1)
        Traceback (most recent call last):
            ...
        DirectedGraphError: Γ(2, 7) is directed: 2 does not divide (q - 1)/2

    """
    def __init__(self, k, p, m):
        super().__init__()
        check_prime(p)
        self.k = k
        self.p = p
        self.m = m
        self.q = p**m
        check_divisor(k, self.q)
        check_simple(k, self.q)
        self.n = (self.q - 1) // k

    def __str__(self):
        return "Γ({}, {}^{})".format(self.k, self.p, self.m)

    def __repr__(self):
        return "GraphSpec(k={}, p={}, m={})".format(self.k, self.p, self.m)


def _is_exact_value(value):
    return isinstance(value, int)

def _format_eigenvalue(value):
    if _is_exact_value(value):
        return str(value)
    return mpmath.nstr(value, 10)

def _close(a, b, scale=1):
    return abs(a - b) <= settings.tolerance * max(1, scale)


class Spectrum(object):
    """The eigenvalues of an n-regular graph on q vertices.

    Entries with equal eigenvalues are merged and sorted in decreasing
    order. Exact spectra hold Python integers of arbitrary size; inexact
    ones hold floats or mpmath numbers.

    Attributes:
        entries (Tuple[Tuple]): `(eigenvalue, multiplicity)` pairs.
        q (int): The number of vertices.
        n (int): The degree.
        k (int | None): The k of Γ(k, q), if known.
        complement (bool): Whether this is the spectrum of the complement
            of Γ(k, q).
        source (str): One of 'closed_form', 'periods' or 'oracle'.
        exact (bool): Whether every eigenvalue is an exact integer.

    Raises:
        SpectrumInvariantError: If the multiplicities do not add up to q,
            the eigenvalues do not add up to 0, their squares do not add
            up to qn, or the degree is not the largest eigenvalue.

    Examples:
        >>> s = Spectrum([(1, 10), (5, 1), (-3, 5)], q=16, n=5, k=3)
        >>> s.entries
        ((5, 1), (1, 10), (-3, 5))
        >>> s.mu, s.is_connected
        (0, True)
        >>> Spectrum([(5, 1), (1, 10), (-3, 4)], q=16, n=5)
        Traceback (most recent call last):
            ...
        SpectrumInvariantError: multiplicities add up to 15, not 16

    """
    def __init__(self, entries, q, n, k=None, complement=False,
                 source='periods', exact=None, check=True):
        super().__init__()
        if source not in SOURCES:
            raise ValueError("unknown source {!r}".format(source))
        merged = Counter()
        for value, mult in entries:
            if mult:
                merged[value] += mult
        self.entries = tuple(sorted(merged.items(), key=lambda e: e[0],
                                    reverse=True))
        self.q = q
        self.n = n
        self.k = k
        self.complement = complement
        self.source = source
        if exact is None:
            exact = all(_is_exact_value(v) for v, _ in self.entries)
        self.exact = exact
        if check:
            self.check_invariants()

    @property
    def mu(self):
        """The number of periods equal to the degree.

        The degree n has multiplicity 1 + μn. The empty graph is given
        μ = q - 1.
        """
        if self.n == 0:
            return self.q - 1
        return (self.multiplicity(self.n) - 1) // self.n

    @property
    def is_connected(self):
        return self.multiplicity(self.n) == 1

    def multiplicity(self, value):
        """The multiplicity of `value`, matched within tolerance if inexact.

        Examples:
            >>> s = Spectrum([(6.000000000000002, 1), (1.3027756377, 6),
            ...               (-2.3027756377, 6)], q=13, n=6)
            >>> s.multiplicity(6), s.is_connected
            (1, True)

        """
        for v, mult in self.entries:
            if v == value or (not self.exact
                              and _close(v, value, self.n)):
                return mult
        return 0

    def eigenvalues(self):
        """The distinct eigenvalues in decreasing order."""
        return [v for v, _ in self.entries]

    def nontrivial(self):
        """Entries other than the degree, the degree's extra copies included."""
        result = []
        for v, mult in self.entries:
            if v == self.n or (not self.exact
                               and _close(v, self.n, self.n)):
                mult -= 1
            if mult:
                result.append((v, mult))
        return result

    def check_invariants(self):
        q, n = self.q, self.n
        total = sum(mult for _, mult in self.entries)
        if total != q:
            raise SpectrumInvariantError(
                    "multiplicities add up to {}, not {}".format(total, q))
        trace = sum(v * mult for v, mult in self.entries)
        squares = sum(v * v * mult for v, mult in self.entries)
        if self.exact:
            ok = trace == 0 and squares == q * n
        else:
            ok = _close(trace, 0, q * n) and _close(squares, q * n, q * n)
        if not ok:
            raise SpectrumInvariantError(
                    "trace {} and square trace {} (expected 0 and {})"
                    .format(trace, squares, q * n))
        top = self.entries[0][0]
        if top != n and (self.exact or not _close(top, n, n)):
            raise SpectrumInvariantError(
                    "largest eigenvalue {} differs from the degree {}"
                    .format(top, n))
        if n and (self.multiplicity(n) - 1) % n:
            raise SpectrumInvariantError(
                    "the degree {} has multiplicity {}, which is not 1 + μn"
                    .format(n, self.multiplicity(n)))

    def require_exact(self):
        if not self.exact:
            raise InexactSpectrumError("{} has non-integral eigenvalues"
                                       .format(self.name()))

    def name(self):
        if self.k is None:
            return "graph on {} vertices".format(self.q)
        bar = "complement of " if self.complement else ""
        return "{}Γ({}, {})".format(bar, self.k, self.q)

    def matches(self, other):
        """Equality of spectra as multisets, within tolerance if inexact.

        Examples:
            >>> a = Spectrum([(2, 1), (-1, 2)], q=3, n=2, source='oracle')
            >>> b = Spectrum([(2.0000000001, 1), (-1.00000000005, 2)], q=3,
            ...              n=2, check=False)
            >>> a.matches(b)
            True

        """
        if (self.q, self.n) != (other.q, other.n):
            return False
        if len(self.entries) != len(other.entries):
            return False
        if self.exact and other.exact:
            return self.entries == other.entries
        return all(ma == mb and _close(va, vb, self.n)
                   for (va, ma), (vb, mb) in zip(self.entries, other.entries))

    def __eq__(self, other):
        return (isinstance(other, Spectrum) and self.q == other.q
                and self.n == other.n and self.entries == other.entries)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def as_dict(self):
        """A JSON-ready description with eigenvalues as decimal strings."""
        return OrderedDict([
            ('q', self.q),
            ('k', self.k),
            ('n', self.n),
            ('complement', self.complement),
            ('entries', [[_format_eigenvalue(v), mult]
                         for v, mult in self.entries]),
            ('source', self.source),
            ('exact', self.exact),
        ])

    def to_json(self, **kwargs):
        """Serializes `as_dict()`.

        Examples:
            >>> s = Spectrum([(4, 1), (1, 4), (-2, 4)], q=9, n=4, k=2)
            >>> print(s.to_json())  # doctest: +NORMALIZE_WHITESPACE
            {"q": 9, "k": 2, "n": 4, "complement": false,
             "entries": [["4", 1], ["1", 4], ["-2", 4]],
             "source": "periods", "exact": true}

        """
        return json.dumps(self.as_dict(), **kwargs)

    def __str__(self):
        return format_multiset((_format_eigenvalue(v), m)
                               for v, m in self.entries)

    def __repr__(self):
        return "Spectrum(q={}, n={}, entries={}, source={!r})".format(
                self.q, self.n, str(self), self.source)


def group_values(values, scale=1):
    """Groups numbers into `(value, count)` pairs.

    Exact integers are grouped by equality; other numbers are grouped when
    they agree within the tolerance, and represented by their first value.
    """
    groups = []
    for value in sorted(values, key=lambda v: -v):
        if groups:
            last = groups[-1]
            same = (last[0] == value if _is_exact_value(value)
                    and _is_exact_value(last[0]) else _close(last[0], value, scale))
            if same:
                last[1] += 1
                continue
        groups.append([value, 1])
    return [tuple(g) for g in groups]


def spectrum_from_periods(pv, k=None, source='periods'):
    """Assembles the spectrum of Γ(N, q) from its Gaussian periods.

    The degree n gets multiplicity 1 + μn, where μ counts the periods equal
    to n, and every other distinct period η gets multiplicity n times the
    number of periods equal to η.
    """
    n = pv.n
    entries = [(n, 1)]
    for value, count in group_values(pv.values, n):
        entries.append((value, count * n))
    return Spectrum(entries, pv.q, n, k=pv.N if k is None else k,
                    source=source, exact=pv.all_exact)


def gp_spectrum(ctx, k):
    """The spectrum of Γ(k, q) from the Gaussian periods of the field `ctx`.

    Args:
        ctx (FiniteField): The field F_q, built with tables.
        k (int): A divisor of q - 1 such that Γ(k, q) is undirected.

    Returns:
        (Spectrum): Integral whenever k divides (q - 1)/(p - 1).

    Raises:
        DirectedGraphError: If q is odd and k does not divide (q - 1)/2.
        FieldTooLargeError: If `ctx` has no tables.

    Examples:
        >>> from gpgraphs.core.fields import build_field
        >>> print(gp_spectrum(build_field(3, 4), 2))
        {[40]^1, [4]^40, [-5]^40}
        >>> print(gp_spectrum(build_field(2, 4), 1))
        {[15]^1, [-1]^15}
        >>> print(gp_spectrum(build_field(5, 4), 4))
        {[156]^1, [16]^156, [1]^156, [-4]^156, [-14]^156}

        A disconnected graph: Γ(4, 9) is the union of three triangles.

        >>> s = gp_spectrum(build_field(3, 2), 4)
        >>> print(s)
        {[2]^3, [-1]^6}
        >>> s.mu, s.is_connected
        (1, False)

    """
    check_divisor(k, ctx.q)
    check_simple(k, ctx.q)
    return spectrum_from_periods(gaussian_periods(ctx, k), k)


def paley_spectrum(q):
    """The spectrum of the Paley graph P(q) = Γ(2, q), q ≡ 1 (mod 4).

    Examples:
        >>> print(paley_spectrum(81))
        {[40]^1, [4]^40, [-5]^40}
        >>> print(paley_spectrum(13))
        {[6]^1, [1.302775638]^6, [-2.302775638]^6}
        >>> paley_spectrum(7)
        Traceback (most recent call last):
            ...
        DirectedGraphError: Γ(2, 7) is directed: 2 does not divide (q - 1)/2

    """
    check_simple(2, q)
    return spectrum_from_periods(paley_periods(q), source='closed_form')


def complement_spectrum(s):
    """The spectrum of the complement graph.

    The degree becomes q - 1 - n with multiplicity 1. The eigenvalue n
    has 1 + μn copies; the μn copies beyond the first belong to
    eigenvectors orthogonal to the all-ones vector and map to -1 - n,
    like every other eigenvalue λ maps to -1 - λ. The map is an involution.

    Examples:
        >>> s = Spectrum([(5, 1), (1, 10), (-3, 5)], q=16, n=5, k=3)
        >>> print(complement_spectrum(s))
        {[10]^1, [2]^5, [-2]^10}
        >>> complement_spectrum(complement_spectrum(s)) == s
        True
        >>> print(complement_spectrum(Spectrum([(4, 1), (-1, 4)], q=5, n=4)))
        {[0]^5}

        The complement of the three disjoint triangles Γ(4, 9):

        >>> t = Spectrum([(2, 3), (-1, 6)], q=9, n=2, k=4)
        >>> print(complement_spectrum(t))
        {[6]^1, [0]^6, [-3]^2}
        >>> complement_spectrum(complement_spectrum(t)) == t
        True

    """
    n, q = s.n, s.q
    entries = [(q - 1 - n, 1)]
    for value, mult in s.nontrivial():
        entries.append((-1 - value, mult))
    return Spectrum(entries, q, q - 1 - n, k=s.k, complement=not s.complement,
                    source=s.source, exact=s.exact)


def is_connected(s):
    """Whether the graph is connected, i.e. whether μ = 0.

    Examples:
        >>> is_connected(Spectrum([(5, 1), (1, 10), (-3, 5)], q=16, n=5))
        True
        >>> is_connected(Spectrum([(2, 3), (-1, 6)], q=9, n=2))
        False

    """
    return s.is_connected


def characteristic_polynomial(s):
    """Π (X - λ)^mult as an integer polynomial.

    Examples:
        >>> characteristic_polynomial(Spectrum([(2, 1), (-1, 2)], q=3, n=2))
        Poly(X**3 - 3*X - 2, X, domain='ZZ')

    """
    s.require_exact()
    result = Poly(1, X, domain=ZZ)
    for value, mult in s.entries:
        result *= Poly(X - value, X, domain=ZZ) ** mult
    return result


class AdjacencyGraph(object):
    """The Cayley graph Γ(k, q) built explicitly.

    Vertices are the integers `0, ..., q - 1` encoding field elements
    through their coefficient vectors (see `FiniteField.encode`).

    Attributes:
        field (FiniteField): The field F_q.
        k (int): The index of the connection set.
        connection_set (np.ndarray): The encoded k-th powers R_k, sorted.
        neighbours (np.ndarray): A `(q, n)` array; row u lists the
            neighbours u + R_k.

    """
    def __init__(self, field, k, connection_set, neighbours):
        super().__init__()
        self.field = field
        self.k = k
        self.connection_set = connection_set
        self.neighbours = neighbours
        self.cache = {}

    @property
    def q(self):
        return self.field.q

    @property
    def n(self):
        return self.neighbours.shape[1]

    def vertex(self, label):
        """The field element a vertex label stands for."""
        return self.field.from_encoded(label)

    def adjacency_matrix(self, dtype=np.float64):
        A = np.zeros((self.q, self.q), dtype=dtype)
        rows = np.repeat(np.arange(self.q), self.n)
        A[rows, self.neighbours.ravel()] = 1
        return A

    def laplacian(self):
        """The Laplacian nI - A as an integer matrix."""
        L = -self.adjacency_matrix(dtype=np.int64)
        L[np.diag_indices(self.q)] += self.n
        return L

    def common_neighbour_counts(self):
        """Common neighbour counts over adjacent and non-adjacent pairs.

        Returns:
            (Tuple[Set[int], Set[int]]): The distinct numbers of common
            neighbours of adjacent pairs and of distinct non-adjacent pairs.
            A strongly regular graph srg(q, n, e, d) gives `({e}, {d})`.

        Examples:
            >>> from gpgraphs.core.fields import build_field
            >>> build_adjacency(build_field(2, 4), 3).common_neighbour_counts()
            ({0}, {2})

        """
        A = self.adjacency_matrix(dtype=np.float32)
        counts = np.rint(A.dot(A)).astype(np.int64)
        adjacent = A.astype(bool)
        distant = ~adjacent
        np.fill_diagonal(distant, False)
        return (set(int(c) for c in np.unique(counts[adjacent])),
                set(int(c) for c in np.unique(counts[distant])))

    def to_networkx(self):
        """The graph as a `networkx.Graph` on the vertex labels.

        Examples:
            >>> import networkx as nx
            >>> from gpgraphs.core.fields import build_field
            >>> g = build_adjacency(build_field(3, 2), 2).to_networkx()
            >>> g.number_of_nodes(), g.number_of_edges(), nx.is_connected(g)
            (9, 18, True)

        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.q))
        for u, row in enumerate(self.neighbours):
            graph.add_edges_from((u, int(v)) for v in row if u < v)
        return graph

    def __repr__(self):
        return "AdjacencyGraph(k={}, q={})".format(self.k, self.q)


def build_adjacency(ctx, k):
    """Builds Γ(k, q) as an explicit graph.

    Args:
        ctx (FiniteField): The field F_q, built with tables.
        k (int): A divisor of q - 1 such that Γ(k, q) is undirected.

    Returns:
        (AdjacencyGraph): The Cayley graph with connection set R_k.

    Raises:
        DirectedGraphError: If q is odd and k does not divide (q - 1)/2.
        FieldTooLargeError: If q exceeds `settings.oracle_cap`.

    Examples:
        >>> from gpgraphs.core.fields import build_field
        >>> g = build_adjacency(build_field(3, 2), 2)
        >>> g.q, g.n
        (9, 4)
        >>> build_adjacency(build_field(2, 4), 3).n
        5
        >>> int(build_adjacency(build_field(5, 1), 1).adjacency_matrix().sum())
        20

    """
    check_divisor(k, ctx.q)
    check_simple(k, ctx.q)
    if ctx.q > settings.oracle_cap:
        raise FieldTooLargeError("q = {} exceeds the oracle cap {}"
                                 .format(ctx.q, settings.oracle_cap))
    ctx.require_tables()
    connection = np.sort(ctx.antilog_table[::k])
    vertices = np.arange(ctx.q, dtype=np.int64)
    neighbours = ctx.add_encoded(vertices[:, None], connection[None, :])
    return AdjacencyGraph(ctx, k, connection, neighbours)


def _character_sums(g):
    """λ_γ = Σ_{y ∈ R_k} ζ_p^{Tr(γy)} for every γ, as floats."""
    field = g.field
    order, k, n = field.order, g.k, g.n
    angles = np.cos(2 * np.pi * np.arange(field.p) / field.p)
    steps = k * np.arange(n, dtype=np.int64)
    sums = [float(n)]
    for start in range(0, order, 256):
        logs = np.arange(start, min(start + 256, order), dtype=np.int64)
        traces = field.trace_table[(logs[:, None] + steps[None, :]) % order]
        sums.extend(angles[traces].sum(axis=1))
    return np.array(sums)


def _round_eigenvalues(values, n):
    rounded = np.rint(values)
    if np.all(np.abs(values - rounded) <= settings.tolerance):
        return [int(v) for v in rounded], True
    # the degree stays an integer so its multiplicity is counted exactly
    return [n if _close(v, n, n) else float(v) for v in values], False


def oracle_spectrum(g):
    """The spectrum of an explicit graph, computed two independent ways.

    The eigenvalues are computed as the character sums over the connection
    set and with a dense symmetric eigensolver; the sorted lists must agree
    within `settings.tolerance` before rounding.

    Raises:
        OracleDisagreementError: If the two computations disagree.

    Examples:
        >>> from gpgraphs.core.fields import build_field
        >>> print(oracle_spectrum(build_adjacency(build_field(3, 2), 2)))
        {[4]^1, [1]^4, [-2]^4}
        >>> print(oracle_spectrum(build_adjacency(build_field(2, 4), 3)))
        {[5]^1, [1]^10, [-3]^5}
        >>> print(oracle_spectrum(build_adjacency(build_field(5, 1), 1)))
        {[4]^1, [-1]^4}

        Paley graphs of prime order have irrational eigenvalues:

        >>> s = oracle_spectrum(build_adjacency(build_field(13, 1), 2))
        >>> print(s)
        {[6]^1, [1.302775638]^6, [-2.302775638]^6}
        >>> s.exact, s.is_connected, s.matches(paley_spectrum(13))
        (False, True, True)

    """
    if g.q > settings.oracle_cap:
        raise FieldTooLargeError("q = {} exceeds the oracle cap {}"
                                 .format(g.q, settings.oracle_cap))
    by_characters = np.sort(_character_sums(g))
    by_matrix = np.sort(scipy.linalg.eigvalsh(g.adjacency_matrix()))
    gap = np.max(np.abs(by_characters - by_matrix))
    if gap > settings.tolerance:
        raise OracleDisagreementError(
                "character sums and eigensolver differ by {:.3g} for Γ({}, {})"
                .format(gap, g.k, g.q))
    values, exact = _round_eigenvalues(by_matrix, g.n)
    logger.debug("oracle spectrum of Γ(%d, %d): gap %.3g", g.k, g.q, gap)
    return Spectrum(group_values(values, g.n), g.q, g.n, k=g.k,
                    source='oracle', exact=exact)


class IntersectionArray(namedtuple('IntersectionArray', 'b0 b1 c1 c2')):
    """The intersection array {b0, b1; c1, c2} of a distance-regular graph."""
    __slots__ = ()

    def __str__(self):
        return "{{{}, {}; {}, {}}}".format(*self)


class SrgParams(namedtuple('SrgParams', 'v n e d')):
    """Parameters srg(v, n, e, d) of a strongly regular graph.

    Adjacent vertices have `e` common neighbours and distinct non-adjacent
    ones have `d`.

    Examples:
        >>> params = SrgParams(64, 21, 8, 6)
        >>> params.is_feasible()
        True
        >>> print(params.complement())
        srg(64, 42, 26, 30)
        >>> print(params.intersection_array())
        {21, 12; 1, 6}

    """
    __slots__ = ()

    def is_feasible(self):
        """The counting identity n(n - e - 1) = (v - n - 1)d."""
        v, n, e, d = self
        return n * (n - e - 1) == (v - n - 1) * d

    def complement(self):
        v, n, e, d = self
        return SrgParams(v, v - n - 1, v - 2 - 2 * n + d, v - 2 * n + e)

    def intersection_array(self):
        v, n, e, d = self
        return IntersectionArray(n, n - e - 1, 1, d)

    def __str__(self):
        return "srg({}, {}, {}, {})".format(*self)


def _two_nontrivial(s):
    values = [v for v, _ in s.nontrivial()]
    if len(values) != 2:
        return None
    return max(values), min(values)


def srg_analysis(s):
    """Strongly regular parameters of a connected graph with 3 eigenvalues.

    Args:
        s (Spectrum): The spectrum of a connected regular graph.

    Returns:
        (Tuple[SrgParams, IntersectionArray] | None): The parameters, with
        d = n + λ1 λ2 and e = d + λ1 + λ2, or `None` if the graph does not
        have exactly three distinct eigenvalues.

    Raises:
        DisconnectedError: If the graph is disconnected.

    Examples:
        >>> s = Spectrum([(21, 1), (5, 21), (-3, 42)], q=64, n=21, k=3)
        >>> params, array = srg_analysis(s)
        >>> print(params, array)
        srg(64, 21, 8, 6) {21, 12; 1, 6}
        >>> print(srg_analysis(Spectrum([(22, 1), (4, 132), (-5, 110)],
        ...                             q=243, n=22))[0])
        srg(243, 22, 1, 2)
        >>> srg_analysis(Spectrum([(114, 1), (9, 114), (2, 114), (-12, 114)],
        ...                       q=343, n=114)) is None
        True
        >>> srg_analysis(Spectrum([(2, 3), (-1, 6)], q=9, n=2))
        Traceback (most recent call last):
            ...
        DisconnectedError: graph on 9 vertices is disconnected

    """
    if not s.is_connected:
        raise DisconnectedError("{} is disconnected".format(s.name()))
    pair = _two_nontrivial(s)
    if pair is None:
        return None
    f, g = pair
    d = s.n + f * g
    e = d + f + g
    if not s.exact:
        d, e = mpmath.nint(d), mpmath.nint(e)
        if not (_close(s.n + f * g, d) and _close(d + f + g, e)):
            return None
        d, e = int(d), int(e)
    params = SrgParams(s.q, s.n, e, d)
    certify(params.is_feasible(), "{} is not feasible", params)
    return params, params.intersection_array()


class LatinSquareParams(namedtuple('LatinSquareParams',
                                   'kind w delta h claw_bound_exceeded')):
    """Latin square structure of a strongly regular spectrum.

    Attributes:
        kind (str): 'latin' (L_δ(w)), 'pseudo-latin' (the parameters of
            L_δ(w) without a known semiprimitive origin),
            'negative-latin-shape' (srg(w², h(w+1), h² + 3h - w, h(h+1)))
            or 'none'.
        w (int): f - g, where f > 0 > g are the nontrivial eigenvalues.
        delta (int): -g.
        h (int): f, which is min(|f|, |g|) for Γ(k, q) itself.
        claw_bound_exceeded (bool): Whether 2(f + 1) > g(g + 1)(d + 1), in
            which case the claw bound forces d to be g² or g(g + 1).

    """
    __slots__ = ()

    @property
    def label(self):
        """'L_δ(w)' for Latin square graphs, 'no' otherwise."""
        if self.kind == 'latin':
            return "L_{}({})".format(self.delta, self.w)
        return "no"


def latin_square_params(delta, w):
    """srg(w², δ(w - 1), δ² - 3δ + w, δ(δ - 1)), the parameters of L_δ(w)."""
    return SrgParams(w * w, delta * (w - 1), delta * delta - 3 * delta + w,
                     delta * (delta - 1))

def negative_latin_params(h, w):
    """srg(w², h(w + 1), h² + 3h - w, h(h + 1))."""
    return SrgParams(w * w, h * (w + 1), h * h + 3 * h - w, h * (h + 1))


def latin_square_analysis(s, semi=None):
    """Classifies a semiprimitive spectrum as a Latin square graph or not.

    Args:
        s (Spectrum): The spectrum of Γ(k, q) or its complement.
        semi (SemiprimitiveInfo | None): The semiprimitive data of (k, q).
            With it, odd s gives kind 'latin' and even s gives kind
            'negative-latin-shape'. Without it, the parameters alone decide
            between 'pseudo-latin', 'negative-latin-shape' and 'none'.

    Returns:
        (LatinSquareParams): The classification.

    Raises:
        NotSemiprimitiveSpectrumError: If the spectrum is not that of a
            connected graph with nontrivial eigenvalues f > 0 > g.

    Examples:
        >>> s = Spectrum([(21, 1), (5, 21), (-3, 42)], q=64, n=21, k=3)
        >>> latin_square_analysis(s).kind
        'pseudo-latin'
        >>> from gpgraphs.families import classify_semiprimitive
        >>> latin_square_analysis(s, classify_semiprimitive(3, 2, 6)).label
        'L_3(8)'
        >>> t = Spectrum([(5, 1), (1, 10), (-3, 5)], q=16, n=5, k=3)
        >>> ls = latin_square_analysis(t, classify_semiprimitive(3, 2, 4))
        >>> ls.kind, ls.h, ls.label
        ('negative-latin-shape', 1, 'no')

    """
    s.require_exact()
    if not s.is_connected:
        raise NotSemiprimitiveSpectrumError(
                "{} is disconnected".format(s.name()))
    pair = _two_nontrivial(s)
    if pair is None or not pair[0] > 0 > pair[1]:
        raise NotSemiprimitiveSpectrumError(
                "{} does not have two nontrivial eigenvalues f > 0 > g"
                .format(s.name()))
    f, g = pair
    params, _ = srg_analysis(s)
    w, delta, h = f - g, -g, f
    claw = 2 * (f + 1) > g * (g + 1) * (params.d + 1)
    latin = params == latin_square_params(delta, w)
    negative = params == negative_latin_params(h, w)
    if semi is None:
        kind = 'pseudo-latin' if latin else \
               'negative-latin-shape' if negative else 'none'
    elif semi.s % 2 == 1:
        if not latin:
            raise NotSemiprimitiveSpectrumError(
                    "{} does not have the parameters of L_{}({})"
                    .format(params, delta, w))
        kind = 'latin'
    else:
        if not negative:
            raise NotSemiprimitiveSpectrumError(
                    "{} does not have the negative Latin square shape"
                    .format(params))
        kind = 'negative-latin-shape'
    if kind == 'latin' and claw:
        certify(params.d in (g * g, g * (g + 1)),
                "{} violates the claw bound", params)
    return LatinSquareParams(kind, w, delta, h, claw)


class GraphInvariants(namedtuple('GraphInvariants',
                                 'energy walks spanning_trees')):
    """Energy, closed walk counts and number of spanning trees.

    `walks[r - 1]` is the number of closed walks of length r.
    """
    __slots__ = ()


def graph_invariants(s, r_max, semi=None):
    """Spectral invariants computed with exact integers.

    Args:
        s (Spectrum): An exact spectrum.
        r_max (int): The longest closed walk length to count.
        semi (SemiprimitiveInfo | None): If given, and `s` is the spectrum
            of Γ(k, q) for that pair, the closed forms
            E = n{2(p^{m/2} + σλ2) + 1 + σ},
            w_r = n(n^{r-1} + σ^r{(p^{m/2} + σλ2)^r + (k - 1)(σλ2)^r}) and
            t = (-σ)^{q-1} p^{(m/2)(q-3)} (λ2 + 1)^n λ2^{(k-1)n}
            are asserted too.

    Returns:
        (GraphInvariants): Energy Σ|λ|, walks Σλ^r and spanning trees
        (1/q) Π_{λ ≠ n} (n - λ).

    Raises:
        InexactSpectrumError: If `s` is not exact.

    Examples:
        >>> s = Spectrum([(5, 1), (1, 10), (-3, 5)], q=16, n=5, k=3)
        >>> inv = graph_invariants(s, 3)
        >>> inv.energy, inv.walks, inv.spanning_trees == 2**31
        (30, (0, 80, 0), True)
        >>> from gpgraphs.families import classify_semiprimitive
        >>> graph_invariants(s, 4, classify_semiprimitive(3, 2, 4)).walks
        (0, 80, 0, 1040)
        >>> graph_invariants(Spectrum([(2, 1), (-1, 2)], q=3, n=2), 2)
        GraphInvariants(energy=4, walks=(0, 6), spanning_trees=3)

    """
    s.require_exact()
    n, q = s.n, s.q
    energy = sum(abs(v) * mult for v, mult in s.entries)
    walks = tuple(sum(v**r * mult for v, mult in s.entries)
                  for r in range(1, r_max + 1))
    product = 1
    for value, mult in s.nontrivial():
        product *= (n - value) ** mult
    trees = exact_div(product, q, "spanning trees")
    if semi is not None and not s.complement and (semi.q, semi.n) == (q, n):
        sigma, lam2, root, k = semi.sigma, semi.lambda2, semi.sqrt_q, semi.k
        half = semi.m // 2
        certify(energy == n * (2 * (root + sigma * lam2) + 1 + sigma),
                "energy {} of {} differs from the closed form", energy,
                s.name())
        for r, w in enumerate(walks, 1):
            shifted = (root + sigma * lam2)**r + (k - 1) * (sigma * lam2)**r
            certify(w == n * (n**(r - 1) + sigma**r * shifted),
                    "closed walks of length {} differ from the closed form", r)
        certify(trees == ((-sigma)**(q - 1) * semi.p**(half * (q - 3))
                          * (lam2 + 1)**n * lam2**((k - 1) * n)),
                "spanning trees of {} differ from the closed form", s.name())
    return GraphInvariants(energy, walks, trees)


def _det_mod(matrix, prime):
    a = np.array(matrix % prime, dtype=np.int64)
    size = a.shape[0]
    det = 1
    for col in range(size):
        nonzero = np.nonzero(a[col:, col])[0]
        if len(nonzero) == 0:
            return 0
        row = col + nonzero[0]
        if row != col:
            a[[col, row]] = a[[row, col]]
            det = -det
        pivot = int(a[col, col])
        det = det * pivot % prime
        inverse = pow(pivot, prime - 2, prime)
        factors = a[col + 1:, col] * inverse % prime
        a[col + 1:, col:] = (a[col + 1:, col:]
                             - np.outer(factors, a[col, col:]) % prime) % prime
    return det % prime


def laplacian_cofactor(g):
    """A cofactor of the Laplacian, which counts spanning trees.

    The determinant is computed modulo primes below 2^31 and recombined by
    the Chinese remainder theorem until the product of the primes exceeds
    twice the Hadamard bound.

    Examples:
        >>> from gpgraphs.core.fields import build_field
        >>> laplacian_cofactor(build_adjacency(build_field(2, 4), 3)) == 2**31
        True
        >>> laplacian_cofactor(build_adjacency(build_field(3, 2), 4))
        0

    """
    minor = g.laplacian()[1:, 1:]
    bound_sq = 1
    for row in minor:
        bound_sq *= int(np.dot(row, row))
    limit = 2 * (isqrt(bound_sq) + 1)
    primes, residues = [], []
    modulus, prime = 1, 2**31
    while modulus <= limit:
        prime = prevprime(prime)
        primes.append(prime)
        residues.append(_det_mod(minor, prime))
        modulus *= prime
    value, modulus = crt(primes, residues)
    value = int(value)
    if value > modulus // 2:
        value -= int(modulus)
    return value


class IharaZeta(object):
    """The Ihara zeta function of a regular graph in factored form.

        ζ(u) = (1 - u²)^exponent / Π (1 - λu - (n - 1)u²)^mult

    Attributes:
        exponent (int): q - nq/2.
        n (int): The degree.
        factors (Tuple[Tuple[int, int]]): `(λ, mult)` for each denominator
            factor.

    """
    def __init__(self, exponent, n, factors):
        super().__init__()
        self.exponent = exponent
        self.n = n
        self.factors = tuple(factors)

    def as_expr(self, u=None):
        """The zeta function as a sympy expression in `u`.

        Examples:
            >>> from sympy import Symbol
            >>> u = Symbol('u')
            >>> z = ihara_zeta(Spectrum([(3, 1), (-1, 3)], q=4, n=3))
            >>> z.as_expr(u) * (1 - u**2)**2 * (1 - 3*u - 2*u**2) * (1 + u - 2*u**2)**3
            1

        """
        if u is None:
            u = Symbol('u')
        denominator = Mul(*[(1 - value * u - (self.n - 1) * u**2)**mult
                            for value, mult in self.factors])
        return (1 - u**2)**self.exponent / denominator

    @staticmethod
    def _factor_str(value, n, mult):
        text = "(1"
        if value == 1:
            text += "-u"
        elif value == -1:
            text += "+u"
        elif value:
            text += "{:+d}u".format(-value)
        text += "-{}u^2)".format(n - 1)
        if mult != 1:
            text += "^{}".format(mult)
        return text

    def __str__(self):
        return "(1-u^2)^{} / [{}]".format(self.exponent, "".join(
            self._factor_str(v, self.n, m) for v, m in self.factors))

    def __repr__(self):
        return "IharaZeta({})".format(self)


def ihara_zeta(s):
    """The Ihara zeta function of a regular graph from its spectrum.

    Raises:
        InexactSpectrumError: If `s` is not exact.
        DegenerateDegreeError: If the degree is at most 2.

    Examples:
        >>> print(ihara_zeta(Spectrum([(5, 1), (1, 10), (-3, 5)], q=16, n=5)))
        (1-u^2)^-24 / [(1-5u-4u^2)(1-u-4u^2)^10(1+3u-4u^2)^5]
        >>> print(ihara_zeta(Spectrum([(3, 1), (-1, 3)], q=4, n=3)))
        (1-u^2)^-2 / [(1-3u-2u^2)(1+u-2u^2)^3]
        >>> print(ihara_zeta(Spectrum([(4, 1), (1, 4), (-2, 4)], q=9, n=4)))
        (1-u^2)^-9 / [(1-4u-3u^2)(1-u-3u^2)^4(1+2u-3u^2)^4]
        >>> ihara_zeta(Spectrum([(2, 1), (-1, 2)], q=3, n=2))
        Traceback (most recent call last):
            ...
        DegenerateDegreeError: the Ihara zeta function needs degree at least 3, got 2

    """
    s.require_exact()
    if s.n <= 2:
        raise DegenerateDegreeError(
                "the Ihara zeta function needs degree at least 3, got {}"
                .format(s.n))
    exponent = s.q - exact_div(s.n * s.q, 2, "edge count")
    return IharaZeta(exponent, s.n, s.entries)


def ramanujan_bound_value(s):
    """λ(Γ), the largest |λ| among eigenvalues with |λ| ≠ n, or None."""
    candidates = [abs(v) for v, _ in s.entries if abs(v) != s.n
                  and (s.exact or not _close(abs(v), s.n, s.n))]
    return max(candidates) if candidates else None


def is_ramanujan_spectral(s):
    """Whether λ(Γ) <= 2 √(n - 1), compared as λ(Γ)² <= 4(n - 1).

    Raises:
        DisconnectedError: If the graph is disconnected.

    Examples:
        >>> is_ramanujan_spectral(Spectrum([(5, 1), (1, 10), (-3, 5)],
        ...                                q=16, n=5))
        True
        >>> is_ramanujan_spectral(Spectrum([(22, 1), (4, 132), (-5, 110)],
        ...                                q=243, n=22))
        True
        >>> is_ramanujan_spectral(Spectrum([(6, 1), (-1, 6)], q=7, n=6))
        True
        >>> is_ramanujan_spectral(Spectrum([(48, 1), (23, 48), (-2, 576)],
        ...                                q=625, n=48))
        False

    """
    if not s.is_connected:
        raise DisconnectedError("{} is disconnected".format(s.name()))
    value = ramanujan_bound_value(s)
    if value is None:
        return True
    return value * value <= 4 * (s.n - 1)
