# CLI Commands - every report exposed as text or JSON
import functools
import logging
from typing import List

import click

from relgap.config import Config
from relgap.errors import RelgapError
from relgap.services.arithmetic_service import c, q, search_admissible
from relgap.services.complex_service import complex_report, d2_report
from relgap.services.homology_service import chain_condition, deficiency_bounds, h1, relation_matrix
from relgap.services.normal_form_service import element_order_bounded, gamma_canonical
from relgap.services.presentation_service import gamma_presentation, hnn_chain, rho, verify_chain
from relgap.services.verify_service import (
    check_certificate, cn_target, derive_cn_certificate, relation_gens_report, verify_cn
)
from relgap.services.word_service import parse_word
from relgap.utils.serializers import format_certificate, to_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2

# Active configuration (set by init_commands)
app_config = Config


def init_commands(config_class):
    # Initialize commands with the configuration chosen by create_app
    global app_config
    app_config = config_class


def _wants_json(ctx: click.Context, local: bool) -> bool:
    return local or bool(ctx.find_root().params.get('as_json'))


def _respond(ctx: click.Context, as_json: bool, document: dict, lines: List[str], verdict: bool = True):
    if _wants_json(ctx, as_json):
        click.echo(to_json(document, indent=app_config.JSON_INDENT))
    else:
        for line in lines:
            click.echo(line)
    ctx.exit(EXIT_OK if verdict else EXIT_FALSE)


def handle_errors(command):
    # Map RelgapError to exit code 2 with a {'success': False} document
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except RelgapError as e:
            logger.warning(f"{ctx.command.name} failed: {e}")
            if _wants_json(ctx, kwargs.get('as_json', False)):
                click.echo(to_json({'success': False, 'error': str(e)}, indent=app_config.JSON_INDENT))
            else:
                click.echo(f"Error: {e}", err=True)
            ctx.exit(EXIT_ERROR)
    return wrapper


json_option = click.option('--json', 'as_json', is_flag=True, help='Emit a JSON document.')


def _parse_ms(text: str) -> List[int]:
    try:
        ms = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}")
    if not ms:
        raise click.BadParameter("expected at least one factor")
    return ms


@click.group()
@click.option('--json', 'as_json', is_flag=True, help='Emit JSON for every command.')
@click.pass_context
def cli(ctx, as_json):
    """Verify the relation-module and deficiency computations for Q_n and Gamma."""
    ctx.ensure_object(dict)


@cli.command('verify-cn')
@click.argument('n', type=int)
@json_option
@click.pass_context
@handle_errors
def verify_cn_command(ctx, n, as_json):
    """Check [(txt^-1)^n, x^n] = x^{c_n} with the affine representation."""
    holds = verify_cn(n)
    document = {
        'success': True,
        'n': n,
        'q_n': str(q(n)),
        'c_n': str(c(n)),
        'holds': holds,
        'derived': n != 2,
    }
    lines = [f"n = {n}", f"c_n = {c(n)}", f"[(txt^-1)^{n}, x^{n}] = x^c_n: {'holds' if holds else 'FAILS'}"]
    _respond(ctx, as_json, document, lines, holds)


@cli.command('certificate')
@click.argument('n', type=int)
@click.option('--limit', type=int, default=None, help='Size cap in letters (default from config).')
@json_option
@click.pass_context
@handle_errors
def certificate_command(ctx, n, limit, as_json):
    """Derive and check a product-of-conjugates certificate for the c_n identity."""
    limit = app_config.CERTIFICATE_LIMIT if limit is None else limit
    cert = derive_cn_certificate(n, limit)
    target = cn_target(n)
    holds = check_certificate(rho(n), cert, target)
    affine = verify_cn(n)
    document = {
        'success': True,
        'n': n,
        'relator': str(rho(n)),
        'target': str(target),
        'factor_count': len(cert),
        'holds': holds,
        'affine_holds': affine,
        'agree': holds == affine,
        'certificate': cert.to_dict(),
        'derived': True,
    }
    lines = [format_certificate(cert).rstrip('\n'),
             f"# {len(cert)} factors; free-reduction check: {holds}; affine check: {affine}"]
    _respond(ctx, as_json, document, lines, holds and affine)


@cli.command('report')
@click.argument('ms', nargs=-1, type=int, required=True)
@json_option
@click.pass_context
@handle_errors
def report_command(ctx, ms, as_json):
    """Relation-module generator report for Gamma = Q_m1 * ... * Q_mr."""
    report = relation_gens_report(list(ms))
    document = {'success': True, 'admissible': report.admissibility.admissible, **report.to_dict()}
    lines = [f"ms = {list(ms)}", f"admissible: {report.admissibility.admissible}"]
    lines.extend(f"  gcd(q_{p.m_i}, q_{p.m_j}) = {p.gcd}" for p in report.admissibility.pairwise_gcds)
    lines.extend(
        f"  m={f.m}: c_m identity {f.cn_holds}, c_m/m = q_m {f.c_over_m_is_q}, "
        f"x^m trivial {f.x_power_trivial}, (txt^-1)^m trivial {f.conjugate_power_trivial}"
        for f in report.factor_checks
    )
    lines.extend(f"  Bezout {b.m},{b.n}: u={b.u} v={b.v} ({b.holds})" for b in report.bezout)
    lines.append(f"generators ({report.generator_count}): {', '.join(report.generators)}")
    lines.append(report.conclusion or "no generator reduction claimed")
    _respond(ctx, as_json, document, lines, report.holds)


@cli.command('search')
@click.option('--max', 'max_n', type=int, default=None, help='Largest entry (default from config).')
@click.option('--r', 'r', type=int, default=2, show_default=True, help='Tuple size.')
@json_option
@click.pass_context
@handle_errors
def search_command(ctx, max_n, r, as_json):
    """List admissible tuples with entries in 2..max."""
    max_n = app_config.SEARCH_MAX if max_n is None else max_n
    found = [list(t) for t in search_admissible(max_n, r)]
    document = {'success': True, 'max': max_n, 'r': r, 'pairs': found, 'count': len(found), 'derived': True}
    lines = [' '.join(str(m) for m in t) for t in found] or ['no admissible tuples']
    _respond(ctx, as_json, document, lines)


@cli.command('homology')
@click.argument('ms', nargs=-1, type=int, required=True)
@click.option('--relmod-gens', type=int, default=None, help='Known relation-module generator count.')
@json_option
@click.pass_context
@handle_errors
def homology_command(ctx, ms, relmod_gens, as_json):
    """H_1, deficiency bounds and the d1 o d2 = 0 check for Gamma."""
    p = gamma_presentation(ms)
    group = h1(p)
    bounds = deficiency_bounds(p, relmod_gens)
    chain = chain_condition(p, ms)
    document = {
        'success': True,
        'ms': list(ms),
        'presentation': p.to_dict(),
        'relation_matrix': relation_matrix(p).to_dict(),
        'h1': group.to_dict(),
        'deficiency': bounds.to_dict(),
        'chain_condition': chain,
        'derived': True,
    }
    lines = [str(p), f"H_1 = {group}", f"d1 o d2 = 0: {chain}"] + bounds.inequalities
    _respond(ctx, as_json, document, lines, chain)


@cli.command('complex')
@click.argument('ms', nargs=-1, type=int, required=True)
@json_option
@click.pass_context
@handle_errors
def complex_command(ctx, ms, as_json):
    """Cell counts and Euler characteristic of the 3-complex M."""
    report = d2_report(ms) if len(ms) == 2 else complex_report(ms)
    document = {'success': True, **report.to_dict()}
    lines = [
        f"cells = {report.cells} (total {report.total_cells})",
        f"chi(M) - 1 = {report.chi_minus_1}, def(Gamma presentation) = {report.def_pres}",
        f"conditional counterexample: {report.conditional_counterexample}",
    ] + [f"assumes: {a}" for a in report.assumptions]
    _respond(ctx, as_json, document, lines, report.conditional_counterexample)


@cli.command('word')
@click.argument('ms_text', metavar='MS')
@click.argument('word_text', metavar='WORD')
@click.option('--order', is_flag=True, help='Also search for the element order.')
@click.option('--bound', type=int, default=None, help='Largest power tried (default from config).')
@json_option
@click.pass_context
@handle_errors
def word_command(ctx, ms_text, word_text, order, bound, as_json):
    """Normal form of a word in Gamma, e.g. `word 2,3 x1.t2.x1^-1`."""
    ms = _parse_ms(ms_text)
    alphabet = [f"{letter}{i}" for i in range(1, len(ms) + 1) for letter in ('x', 't')]
    w = parse_word(word_text, alphabet)
    form = gamma_canonical(ms, w)
    document = {
        'success': True,
        'ms': ms,
        'word': str(w),
        'normal_form': form.to_dict(),
        'trivial': form.is_identity(),
        'derived': True,
    }
    lines = [f"word: {w}", f"normal form: {form}", f"trivial: {form.is_identity()}"]
    if order:
        result = element_order_bounded(ms, w, app_config.ORDER_BOUND if bound is None else bound)
        document['order'] = result.to_dict()
        lines.append(f"order: {result.kind}" + (f" {result.order}" if result.order else '') + f" ({result.reason})")
    _respond(ctx, as_json, document, lines)


@cli.command('tietze')
@click.argument('n', type=int)
@click.option('--prelude/--no-prelude', default=True, show_default=True,
              help='Start from <x,t | rho_n, x^n> instead of the commutator form.')
@json_option
@click.pass_context
@handle_errors
def tietze_command(ctx, n, prelude, as_json):
    """Replay the certified Tietze chain from Q_n to its HNN presentation."""
    steps = hnn_chain(n, include_prelude=prelude)
    verified = verify_chain(steps)
    groups = [h1(p) for p, _ in steps]
    invariant = all(g == groups[0] for g in groups)
    document = {
        'success': True,
        'n': n,
        'steps': [
            {'presentation': p.to_dict(), 'move': move.to_dict() if move else None, 'h1': g.to_dict()}
            for (p, move), g in zip(steps, groups)
        ],
        'verified': verified,
        'h1_invariant': invariant,
        'derived': False,
    }
    lines = []
    for (p, move), g in zip(steps, groups):
        if move is not None:
            lines.append(f"  -- {move.describe()}")
        lines.append(f"{p}    H_1 = {g}")
    lines.append(f"verified: {verified}; H_1 invariant: {invariant}")
    _respond(ctx, as_json, document, lines, verified and invariant)
