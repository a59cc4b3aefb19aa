# -*- encoding: utf-8 -*-
"""Provides the `gpgraphs` command line.

Commands::

    gpgraphs spectrum -p P -m M -k K [--oracle] [--complement]
                      [--invariants] [--zeta]
    gpgraphs code -p P -m M -k K [--enumerate] [--bridge]
    gpgraphs verify SUITE [--max-q Q] [--p-max P] [--m-max M]
    gpgraphs sweep --p-max P --m-max M [--semiprimitive] [--ramanujan]
                   [--latin]
    gpgraphs exceptional [--dump]

The exit status is 0 when every check passes, 1 when a check fails and 2
for invalid input.

"""
from __future__ import print_function
from collections import OrderedDict
import argparse
import logging
import sys
import warnings

from . import __version__
from .codes import (code_params, cyclic_shift_check, min_distance_bound,
                    ramanujan_distance_cases, semiprimitive_weights,
                    weight_distribution_enumerate, weights_from_spectrum)
from .core.fields import build_field, check_divisor, check_prime
from .core.settings import settings
from .core.spectra import (DisconnectedError, build_adjacency, check_simple,
                           complement_spectrum, gp_spectrum, graph_invariants,
                           ihara_zeta, is_ramanujan_spectral,
                           latin_square_analysis, oracle_spectrum,
                           srg_analysis)
from .families import (TableDiscrepancyWarning, classify_semiprimitive,
                       closed_form_spectrum, exceptional_discrepancies,
                       exceptional_record, exceptional_records,
                       ramanujan_case)
from .verify import SUITES, RunReport, run_suite, sweep

logger = logging.getLogger(__name__)

#: Exit status for a failed check.
EXIT_FAILED = 1
#: Exit status for input the library refuses.
EXIT_USAGE = 2


def _spectrum(p, m, k):
    """The spectrum of Γ(k, p^m), by closed form when one applies."""
    check_prime(p)
    check_divisor(k, p**m)
    check_simple(k, p**m)
    closed = closed_form_spectrum(k, p, m)
    if closed is not None:
        return closed
    return gp_spectrum(build_field(p, m), k), 'periods'


def cmd_spectrum(args, report):
    p, m, k = args.p, args.m, args.k
    spectrum, path = _spectrum(p, m, k)
    report.add_result('spectrum', spectrum)
    report.add_result('path', path)
    semi = classify_semiprimitive(k, p, m)
    if semi is not None and semi.integral:
        report.add_result('semiprimitive', "t = {}, s = {}, case {}".format(
                semi.t, semi.s, semi.case))
    elif semi is not None:
        report.add_result('semiprimitive', "Paley, m odd")
    if not spectrum.is_connected:
        raise DisconnectedError(
                "Γ({}, {}^{}) is disconnected: (q - 1)/k is not a primitive "
                "divisor of q - 1".format(k, p, m))
    if spectrum.exact:
        analysis = srg_analysis(spectrum)
        if analysis is not None:
            report.add_result('srg', "srg{} {}".format(tuple(analysis[0]),
                                                        analysis[1]))
            report.add_result('latin',
                              latin_square_analysis(spectrum, semi).label)
        report.add_result('ramanujan', is_ramanujan_spectral(spectrum))
        case = ramanujan_case(k, p, m)
        if case is not None:
            report.add_result('ramanujan family', case)
    if args.complement:
        report.add_result('complement', complement_spectrum(spectrum))
    if args.invariants:
        inv = graph_invariants(spectrum, 4, semi)
        report.add_result('energy', inv.energy)
        report.add_result('closed walks', inv.walks)
        report.add_result('spanning trees', inv.spanning_trees)
    if args.zeta:
        report.add_result('zeta', ihara_zeta(spectrum))
    if args.oracle:
        oracle = oracle_spectrum(build_adjacency(build_field(p, m), k))
        report.check("oracle agreement", spectrum.matches(oracle), oracle)


def cmd_code(args, report):
    p, m, k = args.p, args.m, args.k
    params = code_params(p, m, k)
    report.add_result('code', "{}: n = {}, N = {}, dimension = {}".format(
            params, params.n, params.N, params.dimension))
    bridge = args.bridge or not args.enumerate
    bridged = enumerated = None
    if bridge and not params.bridge_applies:
        report.note("bridge inapplicable: N = gcd((q - 1)/(p - 1), k) = {}"
                    .format(params.N))
    elif bridge:
        spectrum, path = _spectrum(p, m, k)
        if spectrum.is_connected:
            bridged = weights_from_spectrum(spectrum, p)
            report.add_result('weights', bridged)
            report.add_result('path', path)
        else:
            report.note("Γ({}, {}^{}) is disconnected, so its spectrum does "
                        "not give the weights".format(k, p, m))
    if args.enumerate or (bridge and bridged is None):
        ctx = build_field(p, m)
        enumerated = weight_distribution_enumerate(ctx, k)
        report.add_result('enumerated', enumerated)
        report.check("cyclic shift", cyclic_shift_check(ctx, k, seed=0))
    if bridged is not None and enumerated is not None:
        report.check("bridge = enumeration", bridged == enumerated)
    weights = bridged if bridged is not None else enumerated
    if weights is not None and params.bridge_applies and weights.weights() \
            and params.n > 1:
        cases = ramanujan_distance_cases(weights)
        report.add_result('ramanujan', "{} (case {}, λ = {})".format(
                cases.ramanujan, cases.case, cases.lambda_value))
        bound = min_distance_bound(params.n, p)
        report.add_result('distance bound', "d = {} >= {}: {}".format(
                weights.min_distance, bound.value(),
                bound.satisfied_by(weights.min_distance)))
    semi = classify_semiprimitive(k, p, m)
    if weights is not None and semi is not None and semi.integral:
        closed = semiprimitive_weights(k, p, m).distribution(p**m, p, k)
        report.check("semiprimitive weights", closed == weights)
        report.note("the printed semiprimitive w1 has denominator m; "
                    "k is used, as for w2")
    rec = exceptional_record(k, p, m)
    if rec is not None:
        for note in exceptional_discrepancies(rec):
            report.note(note)


def cmd_verify(args, report):
    run_suite(args.suite, report, max_q=args.max_q, p_max=args.p_max,
              m_max=args.m_max, jobs=args.jobs)


def cmd_sweep(args, report):
    sweep(report, args.p_max, args.m_max, semiprimitive=args.semiprimitive,
          ramanujan=args.ramanujan, latin=args.latin, jobs=args.jobs)


def cmd_exceptional(args, report):
    for rec in exceptional_records():
        row = OrderedDict([('k', rec.k), ('p', rec.p), ('m', rec.m)])
        if args.dump:
            row.update(rec.values())
        else:
            row.update([('theta', rec.theta), ('t', rec.t),
                        ('epsilon', rec.epsilon)])
        report.rows.append(row)
    report.add_result('pairs', len(report.rows))


def _add_instance(parser):
    parser.add_argument('-p', type=int, required=True, help="the prime p")
    parser.add_argument('-m', type=int, required=True, help="the degree m")
    parser.add_argument('-k', type=int, required=True,
                        help="a divisor k of q - 1")


def build_parser():
    parser = argparse.ArgumentParser(
            prog='gpgraphs',
            description="Spectra of generalized Paley graphs and weights of "
                        "irreducible cyclic codes.")
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('--format', choices=('table', 'json'), default='table')
    parser.add_argument('--verbose', '-v', action='store_true',
                        help="log at DEBUG level")
    parser.add_argument('--cache-dir', help="directory of the modulus cache")
    parser.add_argument('--max-q-oracle', type=int,
                        help="largest q for the adjacency oracle")
    parser.add_argument('--max-q-enum', type=int,
                        help="largest q for codeword enumeration")
    parser.add_argument('--jobs', '-j', type=int, default=1,
                        help="worker processes for suites and sweeps")
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    spectrum = commands.add_parser('spectrum', help="the spectrum of Γ(k, q)")
    _add_instance(spectrum)
    spectrum.add_argument('--oracle', action='store_true',
                          help="compare with the adjacency matrix")
    spectrum.add_argument('--complement', action='store_true')
    spectrum.add_argument('--invariants', action='store_true',
                          help="energy, closed walks and spanning trees")
    spectrum.add_argument('--zeta', action='store_true',
                          help="the Ihara zeta function")
    spectrum.set_defaults(run=cmd_spectrum)

    code = commands.add_parser('code', help="the weights of C(k, q)")
    _add_instance(code)
    code.add_argument('--enumerate', action='store_true',
                      help="generate the codewords")
    code.add_argument('--bridge', action='store_true',
                      help="derive the weights from the spectrum")
    code.set_defaults(run=cmd_code)

    verify = commands.add_parser('verify', help="run a verification suite")
    verify.add_argument('suite', choices=list(SUITES))
    verify.add_argument('--max-q', type=int)
    verify.add_argument('--p-max', type=int)
    verify.add_argument('--m-max', type=int)
    verify.set_defaults(run=cmd_verify)

    sweep_ = commands.add_parser('sweep', help="semiprimitive pairs in range")
    sweep_.add_argument('--p-max', type=int, default=7)
    sweep_.add_argument('--m-max', type=int, default=8)
    sweep_.add_argument('--semiprimitive', action='store_true',
                        help="note differences with the printed table")
    sweep_.add_argument('--ramanujan', action='store_true',
                        help="only Ramanujan graphs, checked spectrally")
    sweep_.add_argument('--latin', action='store_true',
                        help="only Latin square graphs or complements")
    sweep_.set_defaults(run=cmd_sweep)

    exceptional = commands.add_parser('exceptional',
                                      help="the exceptional pairs")
    exceptional.add_argument('--dump', action='store_true',
                             help="print every derived parameter")
    exceptional.set_defaults(run=cmd_exceptional)
    return parser


def main(argv=None):
    """Runs the command line and returns the exit status.

    Examples:
        >>> main(['--format', 'json', 'spectrum', '-p', '2', '-m', '4',
        ...       '-k', '3', '--oracle'])  # doctest: +ELLIPSIS
        {
          "command": "--format json spectrum -p 2 -m 4 -k 3 --oracle",
          "results": {
            "spectrum": {
        ...
        0
        >>> main(['code', '-p', '5', '-m', '2', '-k', '8',
        ...       '--enumerate', '--bridge'])  # doctest: +ELLIPSIS
        $ gpgraphs code -p 5 -m 2 -k 8 --enumerate --bridge
        code: C(8, 5^2): n = 12, N = 2, dimension = 2
        enumerated: {[0]^1, ...}
        ...
        note: bridge inapplicable: N = gcd((q - 1)/(p - 1), k) = 2
        1/1 checks passed...
        0
        >>> main(['spectrum', '-p', '3', '-m', '4', '-k', '7'])  # doctest: +ELLIPSIS
        $ gpgraphs spectrum -p 3 -m 4 -k 7
        ...FAIL...NotADivisorError: 7 does not divide q - 1 = 80...
        2
        >>> main(['spectrum', '-p', '2', '-m', '2', '-k', '3'])  # doctest: +ELLIPSIS
        $ gpgraphs spectrum -p 2 -m 2 -k 3
        spectrum: {[1]^2, [-1]^2}
        ...FAIL...DisconnectedError: Γ(3, 2^2) is disconnected...
        2

    """
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(argv)
    logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format="%(levelname)s %(name)s: %(message)s")
    report = RunReport(" ".join(argv))
    status = 0
    with settings.override(cache_dir=args.cache_dir,
                           oracle_cap=args.max_q_oracle,
                           enumeration_cap=args.max_q_enum), \
            warnings.catch_warnings():
        warnings.simplefilter('ignore', TableDiscrepancyWarning)
        try:
            args.run(args, report)
        except (ValueError, ArithmeticError, RuntimeError) as e:
            report.check("input", False, "{}: {}".format(type(e).__name__, e))
            status = EXIT_USAGE
        except AssertionError as e:
            logger.debug("check failed", exc_info=True)
            report.check("consistency", False,
                         "{}: {}".format(type(e).__name__, e))
    report.finish()
    if args.format == 'json':
        print(report.to_json())
    else:
        print(report.render('fancy'))
    return status or (0 if report.passed else EXIT_FAILED)


if __name__ == '__main__':
    sys.exit(main())
