"""Command-line front end of np-region.

Every subcommand produces a table (CSV by default, JSON with
``--format json``) or a document: ``realize --vertices`` writes a pair and
``boundary --format json`` writes ``{"vertices": [[alpha, beta], ...]}``,
which ``load_boundary`` reads back. Table numbers are printed with 12
significant digits, so identical inputs give identical bytes.

Usage:
    np-region boundary --pair R.json
    np-region lower --kind hellinger --rho 0.99 --n 40 --grid 201
    np-region figure 4

Exit codes: 0 on success, 2 on usage errors, 1 on domain errors.
"""

import argparse
import csv
import io
import json
import logging
import math
import sys
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence

import numpy as np

from np_region.base import (
    BoundaryMismatchError,
    ConfigError,
    KindMismatchError,
    NPRegionError,
    ValueOutOfRangeError,
)
from np_region.boundary import (
    boundaries_match,
    brute_force_boundary,
    eval_boundary,
    exact_boundary,
    load_boundary,
    load_vertices,
)
from np_region.config import RunConfig, resolve_config
from np_region.curves import (
    generic_curve,
    ignorance_curve,
    lower_curve,
    reversed_curve,
    upper_curve,
)
from np_region.decision import (
    bayes_error,
    bayes_error_pair,
    ber_bounds,
    rates_to_target,
    roc_mixing_weight,
    roc_points,
)
from np_region.distributions import discretize_analytic, frozen_distribution, load_pair, swap_pair
from np_region.divergences import chernoff_coefficient, divergence_table, f_divergence
from np_region.lower_bounds import NAMED_KINDS, hockey_stick_line, indicator_parameters
from np_region.models.decision import PriorPair
from np_region.models.distributions import AnalyticFamily, CategoricalPair, GridSpec
from np_region.models.divergences import FGenerator
from np_region.realization import realize_categorical, realize_unit_interval
from np_region.upper_bounds import (
    achievability_sample_size,
    convex_refine,
    min_sample_size,
)

logger = logging.getLogger(__name__)

LOWER_KINDS = NAMED_KINDS + ('generic', 'reversed')

FIGURES = {
    '1': 'divergence-levels',
    '2': 'tensorized',
    '3': 'supporting-lines',
    '4': 'refined-upper',
    '5': 'gaussians',
}

# Half-width of the default discretization window in standard deviations
WINDOW_SIGMAS = 10.0


class Table(NamedTuple):
    """Column names and rows of a tabular result."""
    columns: List[str]
    rows: List[List[Any]]


class Document(NamedTuple):
    """A JSON document result (always written as JSON)."""
    data: Dict[str, Any]


class UsageError(Exception):
    """Input problem reported like an argparse error (exit code 2)."""
    pass


# Argument types

def _real(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if math.isnan(value):
        raise argparse.ArgumentTypeError("NaN is not allowed")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _figure_name(text: str) -> str:
    name = FIGURES.get(text, text)
    if name not in FIGURES.values():
        choices = ', '.join(list(FIGURES) + list(FIGURES.values()))
        raise argparse.ArgumentTypeError(f"unknown figure {text!r} (choose from {choices})")
    return name


# Parser

def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['csv', 'json'], default=None,
                        help='Output format (default: csv)')
    common.add_argument('--output', default=None, help='Output file (default: stdout)')
    common.add_argument('--grid', type=_positive_int, default=None,
                        help='Number of alpha samples (default: 201, env NP_REGION_GRID)')
    common.add_argument('--hull-grid', dest='hull_grid', type=_positive_int, default=None,
                        help='Sampling grid of the convex refinement (default: 4097)')
    common.add_argument('--nodes', type=_positive_int, default=None,
                        help='Cells when discretizing analytic families (default: 4096)')
    common.add_argument('--config', default=None, help='YAML configuration file')
    common.add_argument('-v', '--verbose', action='store_true', default=None,
                        help='Log at DEBUG level')

    parser = argparse.ArgumentParser(
        prog='np-region',
        description='Neyman-Pearson regions of finite-support distribution pairs',
    )
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('divergence', parents=[common], help='f-divergences of a pair')
    _add_pair_arguments(p, required=True)
    p.add_argument('--gen', action='append', default=None, metavar='SPEC',
                   help='Generator spec (tvd, kl, rkl, h2, chi2, alpha:q, hs:gamma, ind:l,u); repeatable')

    p = sub.add_parser('boundary', parents=[common], help='Exact Neyman-Pearson boundary')
    _add_pair_arguments(p, required=True)
    p.add_argument('--brute-force', action='store_true',
                   help='Cross-check against subset enumeration (supports <= 16 items)')

    p = sub.add_parser('lower', parents=[common], help='Divergence lower-bound curve')
    p.add_argument('--kind', required=True, choices=LOWER_KINDS, help='Bound kind')
    p.add_argument('--value', '--rho', dest='value', type=_real, default=None,
                   help='Divergence value (Hellinger affinity or Chernoff coefficient for those kinds)')
    p.add_argument('--bounds', nargs=2, type=_real, metavar=('LOWER', 'UPPER'),
                   help='Ratio bounds of the indicator kind')
    p.add_argument('--n', type=_positive_int, default=1, help='Number of i.i.d. samples')
    p.add_argument('--q', type=_real, default=None, help='Exponent of the alpha kind')
    p.add_argument('--gen', default=None, metavar='SPEC', help='Generator of the generic and reversed kinds')
    _add_pair_arguments(p, required=False)

    p = sub.add_parser('upper', parents=[common], help='Chernoff upper-bound curves')
    p.add_argument('--q', type=_real, default=0.5, help='Chernoff exponent (default: 0.5)')
    p.add_argument('--rho', type=_real, default=None, help='Chernoff coefficient')
    p.add_argument('--n', type=_positive_int, default=1, help='Number of i.i.d. samples')
    _add_pair_arguments(p, required=False)

    p = sub.add_parser('realize', parents=[common], help='Realize a prescribed boundary')
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('--vertices', metavar='FILE', help='Vertex JSON; writes a pair document')
    source.add_argument('--boundary', metavar='FILE', help='Boundary JSON; writes the CDF table x,F')
    source.add_argument('--power', type=_real, metavar='K', help='Boundary (1 - alpha)^K; writes x,F')
    p.add_argument('--knots', type=_positive_int, default=1001, help='CDF knots (default: 1001)')

    p = sub.add_parser('ber', parents=[common], help='Bayes error rate or interval')
    p.add_argument('--prior', type=_real, required=True, help='Prior pi_p of the alpha error')
    p.add_argument('--rho', type=_real, default=None, help='Chernoff coefficient for the interval')
    p.add_argument('--q', type=_real, default=0.5, help='Chernoff exponent (default: 0.5)')
    p.add_argument('--n', type=_positive_int, default=1, help='Number of i.i.d. samples')
    _add_pair_arguments(p, required=False)

    p = sub.add_parser('samplesize', parents=[common], help='Sample sizes for a target (alpha, beta)')
    p.add_argument('--q', type=_real, default=0.5, help='Chernoff exponent (default: 0.5)')
    p.add_argument('--rho', type=_real, required=True, help='Chernoff coefficient of one sample')
    p.add_argument('--alpha', type=_real, required=True, help='Target type-I error')
    p.add_argument('--beta', type=_real, required=True, help='Target type-II error')

    p = sub.add_parser('roc', parents=[common], help='ROC points and mixing plans')
    _add_pair_arguments(p, required=True)
    p.add_argument('--fpr', type=_real, default=None, help='Target false positive rate')
    p.add_argument('--tpr', type=_real, default=None, help='Target true positive rate')

    p = sub.add_parser('figure', parents=[common], help='Curve bundle of a figure')
    p.add_argument('which', type=_figure_name, help='1-5 or ' + ', '.join(FIGURES.values()))
    p.add_argument('--values', nargs='+', type=_real, default=None,
                   help='Divergence levels of the divergence-levels bundle (default: 0.2 0.5 0.8)')
    p.add_argument('--families', nargs=2, metavar=('P', 'Q'), default=None,
                   help='Families of the gaussians bundle (default: gaussian:0,1 gaussian:0,2)')

    return parser


def _add_pair_arguments(p: argparse.ArgumentParser, required: bool) -> None:
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument('--pair', metavar='FILE', help='Pair JSON file')
    group.add_argument('--families', nargs=2, metavar=('P', 'Q'),
                       help='Analytic families, e.g. gaussian:0,1 beta:1,0.5')
    p.add_argument('--window', nargs=2, type=_real, metavar=('LOWER', 'UPPER'), default=None,
                   help='Discretization window for --families')


# Inputs

def _read_pair(args: argparse.Namespace, config: RunConfig) -> Optional[CategoricalPair]:
    if getattr(args, 'pair', None):
        try:
            return load_pair(args.pair)
        except OSError as e:
            raise UsageError(f"argument --pair: cannot read {args.pair}: {e.strerror}")
    if getattr(args, 'families', None):
        pf, qf = (AnalyticFamily.parse(spec) for spec in args.families)
        return _discretize(pf, qf, config.nodes, args.window)
    return None


def _discretize(
    pf: AnalyticFamily,
    qf: AnalyticFamily,
    nodes: int,
    window: Optional[Sequence[float]] = None,
) -> CategoricalPair:
    if window is None:
        window = _default_window(pf, qf)
    lower, upper = window
    return discretize_analytic(pf, qf, GridSpec(lower=lower, upper=upper, nodes=nodes))


def _default_window(*families: AnalyticFamily) -> List[float]:
    """Mean +- 10 standard deviations, cut to the support, widest over the families."""
    lows, highs = [], []
    for family in families:
        dist = frozen_distribution(family)
        lo, hi = dist.support()
        spread = WINDOW_SIGMAS * float(dist.std())
        lows.append(max(float(lo), float(dist.mean()) - spread))
        highs.append(min(float(hi), float(dist.mean()) + spread))
    return [min(lows), max(highs)]


def _read_file(loader: Callable[[str], Any], path: str, flag: str) -> Any:
    try:
        return loader(path)
    except OSError as e:
        raise UsageError(f"argument {flag}: cannot read {path}: {e.strerror}")


# Subcommands

def _cmd_divergence(args: argparse.Namespace, config: RunConfig) -> Table:
    pair = _read_pair(args, config)
    if not config.specs:
        rows = [[name, value] for name, value in divergence_table(pair).items()]
    else:
        rows = []
        for spec in config.specs:
            gen = FGenerator.parse(spec)
            rows.append([gen.spec, f_divergence(pair, gen).value])
    return Table(['generator', 'value'], rows)


def _cmd_boundary(args: argparse.Namespace, config: RunConfig):
    pair = _read_pair(args, config)
    boundary = exact_boundary(pair)
    if args.brute_force:
        oracle = brute_force_boundary(pair)
        if not boundaries_match(boundary, oracle):
            logger.warning("boundary cross-check failed: %s vs %s", boundary, oracle)
            raise BoundaryMismatchError(
                f"exact boundary {boundary.vertices} differs from enumeration {oracle.vertices}"
            )
        logger.debug("boundary cross-check passed on %d items", pair.size)
    if config.format == 'json':
        return Document(boundary.to_dict())
    return Table(['alpha', 'beta'], [[a, b] for a, b in boundary.vertices])


def _pair_statistic(kind: str, pair: CategoricalPair, q: Optional[float], gen: Optional[FGenerator]):
    if kind == 'tvd':
        return f_divergence(pair, FGenerator(kind='tvd')).value
    if kind == 'hellinger':
        return chernoff_coefficient(pair, 0.5)
    if kind == 'alpha':
        return chernoff_coefficient(pair, 0.5 if q is None else q)
    if kind in ('kl', 'pinsker'):
        return f_divergence(pair, FGenerator(kind='kl')).value
    if kind == 'chi2_fwd':
        return f_divergence(pair, FGenerator(kind='chi2')).value
    if kind == 'chi2_rev':
        return f_divergence(swap_pair(pair), FGenerator(kind='chi2')).value
    if kind == 'indicator':
        return indicator_parameters(pair)
    if kind == 'generic':
        return f_divergence(pair, gen).value
    return f_divergence(swap_pair(pair), gen).value


def _cmd_lower(args: argparse.Namespace, config: RunConfig) -> Table:
    pair = _read_pair(args, config)
    kind = args.kind
    gen = FGenerator.parse(args.gen) if args.gen else None
    if kind in ('generic', 'reversed') and gen is None:
        raise KindMismatchError(f"kind {kind!r} needs --gen")

    if pair is not None and args.value is None and args.bounds is None:
        value = _pair_statistic(kind, pair, args.q, gen)
    elif kind == 'indicator':
        if args.bounds is None:
            raise ValueOutOfRangeError("indicator kind needs --bounds or a pair")
        value = tuple(args.bounds)
    elif args.value is None:
        raise ValueOutOfRangeError(f"kind {kind!r} needs --value or a pair")
    else:
        value = args.value

    if kind == 'generic':
        curve = generic_curve(gen, value)
    elif kind == 'reversed':
        curve = reversed_curve(gen, value)
    else:
        q = args.q if args.q is not None or kind != 'alpha' else 0.5
        curve = lower_curve(kind, value, n=args.n, q=q)

    alphas, values = curve.sample(config.grid)
    columns = ['alpha', 'lower']
    data = [alphas, values]
    if pair is not None:
        columns.append('exact')
        data.append(eval_boundary(exact_boundary(pair), alphas))
    return Table(columns, _rows(*data))


def _chernoff_input(args: argparse.Namespace, config: RunConfig) -> float:
    pair = _read_pair(args, config)
    if args.rho is not None:
        return args.rho
    if pair is None:
        raise ValueOutOfRangeError("needs --rho or a pair")
    return chernoff_coefficient(pair, args.q)


def _cmd_upper(args: argparse.Namespace, config: RunConfig) -> Table:
    rho = _chernoff_input(args, config)
    raw = upper_curve('chernoff', args.q, rho, args.n)
    refined = upper_curve('refined_chernoff', args.q, rho, args.n)
    hull = convex_refine(raw, config.hull_grid)

    alphas, raw_values = raw.sample(config.grid)
    _, refined_values = refined.sample(config.grid)
    hull_values = eval_boundary(hull, alphas)
    return Table(['alpha', 'raw', 'refined', 'hull'], _rows(alphas, raw_values, refined_values, hull_values))


def _cmd_realize(args: argparse.Namespace, config: RunConfig):
    if args.vertices:
        vertices = _read_file(load_vertices, args.vertices, '--vertices')
        return Document(realize_categorical(vertices).to_dict())
    if args.boundary:
        target = _read_file(load_boundary, args.boundary, '--boundary')
    else:
        power = args.power
        if not power >= 1.0:
            raise ValueOutOfRangeError(f"--power must be at least 1 for a convex boundary, got {power}")

        def target(a: float) -> float:
            return (1.0 - a) ** power

    table = realize_unit_interval(target, knots=args.knots)
    return Table(['x', 'F'], _rows(table.x, table.f))


def _cmd_ber(args: argparse.Namespace, config: RunConfig) -> Table:
    prior = _prior(args.prior)
    pair = _read_pair(args, config)
    rows: List[List[Any]] = []
    if pair is not None:
        ber, (a, b) = bayes_error(exact_boundary(pair), prior)
        rows.extend([['exact', ber], ['alpha_star', a], ['beta_star', b],
                     ['itemwise', bayes_error_pair(pair, prior)]])
    if args.rho is not None or pair is not None:
        rho = args.rho if args.rho is not None else chernoff_coefficient(pair, args.q)
        lower = lower_curve('alpha', rho, n=args.n, q=args.q)
        upper = upper_curve('refined_chernoff', args.q, rho, args.n)
        lb, ub = ber_bounds(lower, upper, prior, config.grid)
        rows.extend([['lower', lb], ['upper', ub]])
    if not rows:
        raise ValueOutOfRangeError("ber needs a pair or --rho")
    return Table(['quantity', 'value'], rows)


def _prior(pi_p: float) -> PriorPair:
    if not 0.0 < pi_p < 1.0:
        raise ValueOutOfRangeError(f"--prior must lie in (0, 1), got {pi_p}")
    return PriorPair(pi_p=pi_p)


def _cmd_samplesize(args: argparse.Namespace, config: RunConfig) -> Table:
    exclusion = min_sample_size(args.q, args.rho, args.alpha, args.beta)
    achievability = achievability_sample_size(args.q, args.rho, args.alpha, args.beta)
    return Table(['quantity', 'value'], [['exclusion_n', exclusion], ['achievability_n', achievability]])


def _cmd_roc(args: argparse.Namespace, config: RunConfig) -> Table:
    boundary = exact_boundary(_read_pair(args, config))
    if args.fpr is None and args.tpr is None:
        return Table(['fpr', 'tpr'], [[f, t] for f, t in roc_points(boundary)])
    if args.fpr is None or args.tpr is None:
        raise UsageError("arguments --fpr and --tpr must be given together")

    t, g = rates_to_target(args.fpr, args.tpr)
    plan = roc_mixing_weight(boundary, t, g)
    target = plan.target
    return Table(['quantity', 'value'], [
        ['t', plan.t],
        ['weight', plan.weight],
        ['boundary_beta', plan.boundary_point[1]],
        ['ignorance_beta', plan.ignorance_point[1]],
        ['target_alpha', target[0]],
        ['target_beta', target[1]],
    ])


def _cmd_figure(args: argparse.Namespace, config: RunConfig) -> Table:
    return FIGURE_BUILDERS[args.which](args, config)


# Figure bundles

def figure_divergence_levels(values: Sequence[float], grid: int) -> Table:
    """TVD, Hellinger and KL lower bounds at each divergence level.

    The Hellinger level is the squared Hellinger distance 1 - rho.
    """
    columns, data = ['alpha'], []
    alphas = np.linspace(0.0, 1.0, grid)
    for v in values:
        for label, curve in (
            (f'tvd={v:g}', lower_curve('tvd', v)),
            (f'hellinger2={v:g}', lower_curve('hellinger', 1.0 - v)),
            (f'kl={v:g}', lower_curve('kl', v)),
        ):
            columns.append(label)
            data.append(curve(alphas))
    return Table(columns, _rows(alphas, *data))


def figure_tensorized(grid: int, rho: float = 0.99, sizes: Sequence[int] = (1, 40, 160)) -> Table:
    """Hellinger lower bounds for n i.i.d. samples at a fixed affinity."""
    alphas = np.linspace(0.0, 1.0, grid)
    curves = [lower_curve('hellinger', rho, n=n)(alphas) for n in sizes]
    return Table(['alpha'] + [f'n={n}' for n in sizes], _rows(alphas, *curves))


def figure_supporting_lines(
    grid: int,
    nodes: int,
    gammas: Sequence[float] = (0.25, 0.5, 1.0, 2.0, 4.0),
) -> Table:
    """Hockey-stick supporting lines of the uniform / Beta(1, 1/2) boundary."""
    pair = discretize_analytic(
        AnalyticFamily.parse('uniform:0,1'),
        AnalyticFamily.parse('beta:1,0.5'),
        GridSpec(lower=0.0, upper=1.0, nodes=nodes),
    )
    alphas = np.linspace(0.0, 1.0, grid)
    columns, data = ['alpha', 'exact'], [eval_boundary(exact_boundary(pair), alphas)]
    for gamma in gammas:
        d = f_divergence(pair, FGenerator(kind='hockey_stick', gamma=gamma)).value
        line = hockey_stick_line(gamma, d)
        columns.append(f'gamma={gamma:g}')
        data.append(np.maximum(line.c - line.a * alphas, 0.0))
    return Table(columns, _rows(alphas, *data))


def figure_refined_upper(grid: int, rho: float = 0.8, q: float = 0.5) -> Table:
    """Raw and refined Chernoff upper bounds against the line of ignorance."""
    alphas = np.linspace(0.0, 1.0, grid)
    raw = upper_curve('chernoff', q, rho)(alphas)
    refined = upper_curve('refined_chernoff', q, rho)(alphas)
    ignorance = ignorance_curve()(alphas)
    return Table(['alpha', 'raw', 'refined', 'ignorance'], _rows(alphas, raw, refined, ignorance))


def figure_gaussians(pf: AnalyticFamily, qf: AnalyticFamily, grid: int, nodes: int) -> Table:
    """Exact boundary of two discretized Gaussians and the lower bounds of their divergences."""
    pair = _discretize(pf, qf, nodes)
    alphas = np.linspace(0.0, 1.0, grid)
    columns, data = ['alpha', 'exact'], [eval_boundary(exact_boundary(pair), alphas)]
    for kind in ('tvd', 'hellinger', 'kl', 'pinsker', 'chi2_fwd', 'chi2_rev'):
        columns.append(kind)
        data.append(lower_curve(kind, _pair_statistic(kind, pair, None, None))(alphas))
    return Table(columns, _rows(alphas, *data))


FIGURE_BUILDERS: Dict[str, Callable[[argparse.Namespace, RunConfig], Table]] = {
    'divergence-levels': lambda args, config: figure_divergence_levels(
        args.values or [0.2, 0.5, 0.8], config.grid),
    'tensorized': lambda args, config: figure_tensorized(config.grid),
    'supporting-lines': lambda args, config: figure_supporting_lines(config.grid, config.nodes),
    'refined-upper': lambda args, config: figure_refined_upper(config.grid),
    'gaussians': lambda args, config: figure_gaussians(
        *(AnalyticFamily.parse(s) for s in (args.families or ['gaussian:0,1', 'gaussian:0,2'])),
        grid=config.grid, nodes=config.nodes),
}

COMMANDS = {
    'divergence': _cmd_divergence,
    'boundary': _cmd_boundary,
    'lower': _cmd_lower,
    'upper': _cmd_upper,
    'realize': _cmd_realize,
    'ber': _cmd_ber,
    'samplesize': _cmd_samplesize,
    'roc': _cmd_roc,
    'figure': _cmd_figure,
}


# Output

def _rows(*columns) -> List[List[float]]:
    return [list(row) for row in zip(*(np.asarray(c, dtype=float).tolist() for c in columns))]


def format_number(x: Any) -> str:
    """12 significant digits for floats, plain text otherwise."""
    if isinstance(x, bool) or not isinstance(x, (float, int, np.floating, np.integer)):
        return str(x)
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x) + 0.0, '.12g')


def _json_value(x: Any) -> Any:
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return float(format(x + 0.0, '.12g')) if math.isfinite(x) else format_number(x)
    if isinstance(x, np.integer):
        return int(x)
    return x


def render(result, fmt: str) -> str:
    """Serialize a Table or Document."""
    if isinstance(result, Document):
        return json.dumps(result.data, indent=2) + '\n'
    if fmt == 'json':
        rows = [[_json_value(x) for x in row] for row in result.rows]
        return json.dumps({'columns': result.columns, 'rows': rows}, indent=2) + '\n'
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(result.columns)
    for row in result.rows:
        writer.writerow([format_number(x) for x in row])
    return buffer.getvalue()


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)
    logging.getLogger('np_region').setLevel(level)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return the exit code.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        0 on success, 1 on domain errors, 2 on usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    flags = {
        'grid': args.grid,
        'hull_grid': args.hull_grid,
        'nodes': args.nodes,
        'format': args.format,
        'output': args.output,
        'verbose': args.verbose,
        'specs': tuple(args.gen) if getattr(args, 'gen', None) and isinstance(args.gen, list) else None,
    }
    try:
        config = resolve_config(args.command, flags, config_path=args.config)
    except ConfigError as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2

    _configure_logging(config.verbose)
    try:
        text = render(COMMANDS[args.command](args, config), config.format)
        if config.output:
            with open(config.output, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
        else:
            sys.stdout.write(text)
    except UsageError as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"{parser.prog}: error: cannot write {config.output}: {e.strerror}", file=sys.stderr)
        return 2
    except NPRegionError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    return 0


def main() -> int:
    """Console entry point."""
    return run(sys.argv[1:])


if __name__ == '__main__':
    sys.exit(main())
