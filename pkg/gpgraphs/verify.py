# -*- encoding: utf-8 -*-
"""Provides run reports and the verification suites.

Every suite fills a `RunReport` with one check per case. Closed forms are
compared with the printed reference tables and with independent oracles:
codeword enumeration, the adjacency matrix and combinatorial counting.
Printed values that are provably misprinted are recorded as notes and
issued as `TableDiscrepancyWarning`s instead of failing.

.. rubric:: Example

>>> import warnings
>>> report = RunReport("verify exceptional")
>>> with warnings.catch_warnings():
...     warnings.simplefilter('ignore')
...     run_suite('exceptional', report)
>>> report.passed, len(report.checks)
(True, 13)
>>> print(report.notes[0])
(11, 3^5): w1 printed as 22, computed 12

"""
from builtins import map, object, range, super
from collections import OrderedDict, namedtuple
import json
import logging
import time
import warnings

from sympy import divisors, primerange

from .codes import (ramanujan_distance_cases, semiprimitive_weights,
                    spectrum_from_weights, weight_distribution_enumerate,
                    weights_from_spectrum)
from .core.fields import build_field, is_primitive_divisor
from .core.periods import characteristic_polynomial_from_periods, \
        gaussian_periods
from .core.settings import settings
from .core.spectra import (SrgParams, build_adjacency, characteristic_polynomial,
                           gp_spectrum, graph_invariants,
                           is_ramanujan_spectral, laplacian_cofactor,
                           latin_square_analysis, oracle_spectrum,
                           srg_analysis)
from .core.utils import construct_table
from .families import (EXCEPTIONAL_TABLES, TABLE_1, TABLE_2,
                       TableDiscrepancyWarning, classify_semiprimitive,
                       closed_form_spectrum, complement_always_ramanujan_check,
                       enumerate_semiprimitive_pairs, exceptional_discrepancies,
                       exceptional_records, exceptional_spectrum,
                       ramanujan_case, ramanujan_classification,
                       semiprimitive_spectrum, table1_discrepancies)

logger = logging.getLogger(__name__)

_JSON_SAFE = 2**53


class Check(namedtuple('Check', 'name passed detail')):
    """The outcome of a single check."""
    __slots__ = ()

    @property
    def status(self):
        return "PASS" if self.passed else "FAIL"


def _jsonable(value):
    """Converts results to JSON types, big integers as decimal strings."""
    if hasattr(value, 'as_dict'):
        return _jsonable(value.as_dict())
    if hasattr(value, '_asdict'):
        return _jsonable(value._asdict())
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if abs(value) < _JSON_SAFE else str(value)
    if isinstance(value, dict):
        return OrderedDict((str(k), _jsonable(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (float, str)):
        return value
    return str(value)


class RunReport(object):
    """The results, checks and notes of one command.

    Attributes:
        command (str): The command being run, echoed in the output.
        results (OrderedDict): Named result payloads.
        rows (List[OrderedDict]): Tabular results, one mapping per row.
        checks (List[Check]): The checks made so far.
        notes (List[str]): Remarks that do not affect the status.
        elapsed (float | None): Seconds taken, set by `finish`.

    Examples:
        >>> report = RunReport("demo")
        >>> report.check("one", True)
        True
        >>> report.passed, report.exit_status
        (True, 0)
        >>> report.check("two", False, "off by one")
        False
        >>> report.passed, report.exit_status, report.summary()
        (False, 1, '1/2 checks passed')
        >>> report.add_result('big', 2**64)
        >>> report.as_dict()['results']['big']
        '18446744073709551616'

    """
    def __init__(self, command):
        super().__init__()
        self.command = command
        self.results = OrderedDict()
        self.rows = []
        self.checks = []
        self.notes = []
        self.elapsed = None
        self._started = time.time()

    def check(self, name, passed, detail=""):
        passed = bool(passed)
        self.checks.append(Check(name, passed, str(detail)))
        logger.debug("%s: %s", name, "PASS" if passed else "FAIL")
        return passed

    def note(self, text):
        self.notes.append(text)

    def add_result(self, name, value):
        self.results[name] = value

    def extend(self, outcomes):
        """Adds `(name, passed, detail, notes)` tuples from `map_cases`."""
        for name, passed, detail, notes in outcomes:
            self.check(name, passed, detail)
            for note in notes:
                self.note(note)

    def finish(self):
        self.elapsed = time.time() - self._started
        return self

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def exit_status(self):
        return 0 if self.passed else 1

    def summary(self):
        return "{}/{} checks passed".format(
                sum(c.passed for c in self.checks), len(self.checks))

    def as_dict(self):
        return OrderedDict([
            ('command', self.command),
            ('results', _jsonable(self.results)),
            ('rows', _jsonable(self.rows)),
            ('checks', [OrderedDict([('name', c.name), ('status', c.status),
                                     ('detail', c.detail)])
                        for c in self.checks]),
            ('notes', list(self.notes)),
            ('passed', self.passed),
            ('elapsed', None if self.elapsed is None
                        else round(self.elapsed, 3)),
        ])

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False)

    def render(self, fmt='fancy'):
        """The report as aligned tables, `fmt` as in `construct_table`."""
        parts = ["$ gpgraphs {}".format(self.command)]
        for name, value in self.results.items():
            parts.append("{}: {}".format(name, value))
        if self.rows:
            headings = list(self.rows[0])
            cols = [[_cell(row[h]) for row in self.rows] for h in headings]
            parts.append(construct_table(cols, headings, fmt))
        if self.checks:
            cols = [[c.name for c in self.checks],
                    [c.status for c in self.checks],
                    [c.detail for c in self.checks]]
            parts.append(construct_table(cols, ['check', 'status', 'detail'],
                                         fmt))
        for note in self.notes:
            parts.append("note: {}".format(note))
        summary = self.summary()
        if self.elapsed is not None:
            summary += " in {:.2f}s".format(self.elapsed)
        parts.append(summary)
        return "\n".join(parts)


def _cell(value):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    return str(value)


def map_cases(function, cases, jobs=1):
    """Applies `function` to each case, in a process pool when `jobs > 1`.

    Results come back in the order of `cases`.
    """
    cases = list(cases)
    if jobs > 1 and len(cases) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(function, cases))
    return list(map(function, cases))


def prime_powers(max_q):
    """The pairs (p, m) with p^m <= `max_q`, ordered by p then m.

    Examples:
        >>> prime_powers(9)
        [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)]

    """
    result = []
    for p in primerange(2, max_q + 1):
        m, q = 1, p
        while q <= max_q:
            result.append((int(p), m))
            m, q = m + 1, q * p
    return result


def bridge_cases(max_q):
    """(p, m, k) with q <= `max_q`, k | (q - 1)/(p - 1) and Γ(k, q) connected.

    Examples:
        >>> bridge_cases(9)
        [(2, 1, 1), (2, 2, 1), (2, 3, 1), (3, 1, 1), (3, 2, 1), (3, 2, 2), (5, 1, 1), (7, 1, 1)]

    """
    return [(p, m, k) for p, m in prime_powers(max_q)
            for k in divisors((p**m - 1) // (p - 1))
            if is_primitive_divisor(p, m, k)]


def simple_cases(max_q):
    """(p, m, k) with q <= `max_q`, k | q - 1 and Γ(k, q) undirected.

    Examples:
        >>> simple_cases(5)
        [(2, 1, 1), (2, 2, 1), (2, 2, 3), (3, 1, 1), (5, 1, 1), (5, 1, 2)]

    """
    result = []
    for p, m in prime_powers(max_q):
        q = p**m
        for k in divisors(q - 1):
            if q % 2 == 0 or ((q - 1) // 2) % k == 0:
                result.append((p, m, int(k)))
    return result


def _case_name(prefix, k, p, m):
    return "{} ({}, {}^{})".format(prefix, k, p, m)


def table2_suite(report, **bounds):
    """Compares the printed strongly regular semiprimitive rows.

    Spectrum, srg parameters, t, s and the Latin square label must match.
    A printed complement whose e and d are swapped is accepted with a note
    when the printed parameters are infeasible.
    """
    for row in TABLE_2:
        info = classify_semiprimitive(row.k, row.p, row.m)
        spectrum, complement = semiprimitive_spectrum(row.k, row.p, row.m)
        s = complement if row.complement else spectrum
        computed = srg_analysis(s)[0]
        printed = SrgParams(*row.srg)
        srg_ok = computed == printed
        if not srg_ok and not printed.is_feasible() \
                and printed._replace(e=printed.d, d=printed.e) == computed:
            note = "{}: printed as srg{}, computed srg{}; the printed " \
                   "parameters are infeasible".format(row.name,
                                                      tuple(printed),
                                                      tuple(computed))
            warnings.warn(note, TableDiscrepancyWarning)
            report.note(note)
            srg_ok = True
        label = latin_square_analysis(s, semi=info).label
        mismatches = [what for what, ok in (
            ('spectrum', s.entries == tuple(row.entries)),
            ('srg', srg_ok),
            ('t, s', (info.t, info.s) == (row.t, row.s)),
            ('latin', label == row.latin)) if not ok]
        detail = "srg{} {}".format(tuple(computed), label) if not mismatches \
            else "mismatch: " + ", ".join(mismatches)
        report.check(row.name, not mismatches, detail)


def table1_suite(report, **bounds):
    """Records the differences between the printed semiprimitive table and
    the computed one; the rows themselves are checked against the sweep."""
    for note in table1_discrepancies():
        report.note(note)
    for (p, m), printed in TABLE_1.items():
        computed = enumerate_semiprimitive_pairs(p, m)
        consistent = all(semiprimitive_spectrum(k, p, m)[0].exact
                         for k, _ in computed)
        report.check("semiprimitive row p = {}, m = {}".format(p, m),
                     consistent, " ".join(
                         "{}{}".format(k, "*" if info.beyond_paley else "")
                         for k, info in computed))


def exceptional_suite(report, **bounds):
    """Checks the exceptional pairs against their printed values and, when
    q is small enough, against codeword enumeration."""
    for rec in exceptional_records():
        name = _case_name("exceptional", rec.k, rec.p, rec.m)
        try:
            spectrum, params, weights = exceptional_spectrum(rec)
        except AssertionError as e:
            report.check(name, False, "inconsistent: {}".format(e))
            continue
        key = (rec.k, rec.p, rec.m)
        notes = exceptional_discrepancies(rec)
        for note in notes:
            report.note(note)
        detail = "srg{}".format(tuple(params))
        if key in EXCEPTIONAL_TABLES:
            detail += ", {} printed value(s) differ".format(len(notes)) \
                if notes else ", matches the printed values"
        report.check(name, True, detail)
        if rec.q <= min(settings.enumeration_cap, settings.construction_cap):
            enumerated = weight_distribution_enumerate(
                    build_field(rec.p, rec.m), rec.k, full=rec.q <= 4096)
            report.check(_case_name("enumerated", rec.k, rec.p, rec.m),
                         enumerated == weights, str(enumerated))


def _bridge_case(case):
    p, m, k = case
    ctx = build_field(p, m)
    spectrum = gp_spectrum(ctx, k)
    enumerated = weight_distribution_enumerate(ctx, k, full=ctx.q <= 256)
    bridged = weights_from_spectrum(spectrum, p)
    failures = [what for what, ok in (
        ('bridge', bridged == enumerated),
        ('inverse', spectrum_from_weights(enumerated) == spectrum),
        ('divisibility', enumerated.is_divisible(p - 1)),
        ('total weight',
         enumerated.total_weight == enumerated.balanced_total_weight))
        if not ok]
    detail = str(enumerated) if not failures else ", ".join(failures)
    return _case_name("bridge", k, p, m), not failures, detail, []


def bridge_suite(report, max_q=8192, jobs=1, **bounds):
    """Enumerated weights against the weights from the spectrum.

    Examples:
        >>> report = RunReport("verify bridge --max-q 64")
        >>> bridge_suite(report, max_q=64)
        >>> report.passed, len(report.checks)
        (True, 35)

    """
    report.extend(map_cases(_bridge_case, bridge_cases(max_q), jobs))


def _oracle_case(case):
    p, m, k = case
    ctx = build_field(p, m)
    pv = gaussian_periods(ctx, k)
    spectrum = gp_spectrum(ctx, k)
    oracle = oracle_spectrum(build_adjacency(ctx, k))
    failures = []
    if not spectrum.matches(oracle):
        failures.append('spectrum')
    if spectrum.exact and oracle.exact and \
            characteristic_polynomial_from_periods(pv) \
            != characteristic_polynomial(oracle):
        failures.append('characteristic polynomial')
    closed = closed_form_spectrum(k, p, m)
    if closed is not None and not closed[0].matches(oracle):
        failures.append(closed[1])
    detail = str(spectrum) if not failures else ", ".join(failures)
    return _case_name("oracle", k, p, m), not failures, detail, []


def oracle_suite(report, max_q=1024, jobs=1, **bounds):
    """Spectra from periods and closed forms against the adjacency matrix.

    Examples:
        >>> report = RunReport("verify oracle --max-q 16")
        >>> oracle_suite(report, max_q=16)
        >>> report.passed, len(report.checks)
        (True, 23)

    """
    max_q = min(max_q, settings.oracle_cap)
    report.extend(map_cases(_oracle_case, simple_cases(max_q), jobs))


def _ramanujan_case(case):
    p, m = case
    outcomes = []
    for k, info in enumerate_semiprimitive_pairs(p, m):
        spectrum = semiprimitive_spectrum(k, p, m)[0]
        spectral = is_ramanujan_spectral(spectrum)
        listed = ramanujan_classification(k, p, m)
        distance = ramanujan_distance_cases(
                semiprimitive_weights(k, p, m).distribution(info.q, p, k))
        complement = complement_always_ramanujan_check(k, p, m)
        ok = listed == spectral == distance.ramanujan and complement
        detail = "case {}".format(ramanujan_case(k, p, m)) if spectral \
            else "not Ramanujan"
        outcomes.append((_case_name("ramanujan", k, p, m), ok, detail, []))
    return outcomes


def ramanujan_suite(report, p_max=50, m_max=12, jobs=1, **bounds):
    """The Ramanujan case list against the spectral test.

    Every semiprimitive pair with p < `p_max` and m <= `m_max` is tested;
    the complement must always be Ramanujan.

    Examples:
        >>> report = RunReport("verify ramanujan")
        >>> ramanujan_suite(report, p_max=6, m_max=4)
        >>> report.passed, len(report.checks)
        (True, 11)

    """
    cases = [(int(p), m) for p in primerange(2, p_max)
             for m in range(2, m_max + 1, 2)]
    for outcomes in map_cases(_ramanujan_case, cases, jobs):
        report.extend(outcomes)


def _invariants_case(case):
    p, m, k = case
    ctx = build_field(p, m)
    spectrum = gp_spectrum(ctx, k)
    graph = build_adjacency(ctx, k)
    failures = []
    adjacent, distant = graph.common_neighbour_counts()
    if spectrum.is_connected:
        analysis = srg_analysis(spectrum)
        regular = len(adjacent) == 1 and len(distant) == 1
        if (analysis is not None) != regular:
            failures.append('srg')
        elif regular and (analysis[0].e, analysis[0].d) != \
                (adjacent.pop(), distant.pop()):
            failures.append('srg parameters')
    if ctx.q <= 256:
        semi = classify_semiprimitive(k, p, m)
        trees = graph_invariants(spectrum, 4, semi).spanning_trees
        if trees != laplacian_cofactor(graph):
            failures.append('spanning trees')
    detail = "connected" if spectrum.is_connected else "disconnected"
    if failures:
        detail = ", ".join(failures)
    return _case_name("invariants", k, p, m), not failures, detail, []


def invariants_suite(report, max_q=1024, jobs=1, **bounds):
    """Strong regularity by counting common neighbours, and spanning trees
    by a Laplacian cofactor for q <= 256.

    Examples:
        >>> report = RunReport("verify invariants --max-q 32")
        >>> invariants_suite(report, max_q=32)
        >>> report.passed
        True

    """
    max_q = min(max_q, settings.oracle_cap)
    cases = [(p, m, k) for p, m, k in simple_cases(max_q)
             if ((p**m - 1) // (p - 1)) % k == 0]
    report.extend(map_cases(_invariants_case, cases, jobs))


#: The named suites of `gpgraphs verify`.
SUITES = OrderedDict([
    ('table1', table1_suite),
    ('table2', table2_suite),
    ('exceptional', exceptional_suite),
    ('bridge', bridge_suite),
    ('ramanujan', ramanujan_suite),
    ('oracle', oracle_suite),
    ('invariants', invariants_suite),
])


def run_suite(name, report, **bounds):
    """Runs the suite `name` into `report`.

    Args:
        name (str): A key of `SUITES`.
        report (RunReport): The report to fill.
        **bounds: `max_q`, `p_max`, `m_max` or `jobs`; `None` values take
            the suite's default.

    Raises:
        KeyError: If there is no such suite.

    """
    suite = SUITES[name]
    suite(report, **{k: v for k, v in bounds.items() if v is not None})
    logger.debug("suite %s: %s", name, report.summary())


def _sweep_case(case):
    p, m = case
    rows = []
    for k, info in enumerate_semiprimitive_pairs(p, m):
        spectrum, complement = semiprimitive_spectrum(k, p, m)
        analysis = srg_analysis(spectrum)
        rows.append(OrderedDict([
            ('p', p), ('m', m), ('k', k), ('t', info.t), ('s', info.s),
            ('beyond_paley', info.beyond_paley),
            ('ramanujan', is_ramanujan_spectral(spectrum)),
            ('case', ramanujan_case(k, p, m)),
            ('srg', tuple(analysis[0]) if analysis else None),
            ('latin', latin_square_analysis(spectrum, semi=info).label),
            ('latin_complement',
             latin_square_analysis(complement, semi=info).label),
        ]))
    return rows


def sweep(report, p_max, m_max, semiprimitive=False, ramanujan=False,
          latin=False, jobs=1):
    """Semiprimitive pairs with p <= `p_max` and even m <= `m_max`.

    With `ramanujan`, the case list is checked against the spectral test
    and only Ramanujan graphs are listed; with `latin`, only Latin square
    graphs or complements. With `semiprimitive`, the differences with the
    printed table of semiprimitive pairs are added as notes.

    Examples:
        >>> report = RunReport("sweep --p-max 3 --m-max 2")
        >>> sweep(report, 3, 2)
        >>> [(row['p'], row['m'], row['k']) for row in report.rows]
        [(3, 2, 2)]

    """
    cases = [(int(p), m) for p in primerange(2, p_max + 1)
             for m in range(2, m_max + 1, 2)]
    for rows in map_cases(_sweep_case, cases, jobs):
        for row in rows:
            if ramanujan:
                listed = ramanujan_classification(row['k'], row['p'], row['m'])
                report.check(_case_name("ramanujan", row['k'], row['p'],
                                        row['m']),
                             listed == row['ramanujan'],
                             "case {}".format(row['case']))
                if not row['ramanujan']:
                    continue
            if latin and row['latin'] == 'no' \
                    and row['latin_complement'] == 'no':
                continue
            report.rows.append(row)
    if semiprimitive:
        for note in table1_discrepancies(p_max, m_max):
            report.note(note)
    report.add_result('pairs', len(report.rows))
