"""
Verification command for hopfwords
"""
import json
import traceback

import click

import config
from logging_manager import add_log
from registry import UnknownNameError
from report_storage import save_reports
from suites import SUITES, SuiteOptions, all_passed, run_suite


def _cap(ctx, param, value):
    if value is None:
        return None
    try:
        return config.parse_cap(value)
    except ValueError as e:
        raise click.BadParameter(str(e))


@click.command('check')
@click.argument('suite', type=click.Choice(list(SUITES)))
@click.option('--algebra', help="Restrict bialgebra/antipode suites to one algebra")
@click.option('--bound', type=click.IntRange(min=0), help="Degree or weight bound (default per algebra)")
@click.option('--cap', callback=_cap, help="dWHA enumeration caps TOP,BOTTOM")
@click.option('--n', 'n', type=click.IntRange(min=0), help=f"Size for descent-theorem (default {config.DESCENT_N})")
@click.option('--map', 'map_name', help="Run the morphism suite on one named map")
@click.option('--halves', type=click.Choice(['both', 'algebra', 'coalgebra']), help="Morphism halves to check")
@click.option('--pair', 'pairing', help="Run the dual-pair suite on one named pairing")
@click.option('--side', type=click.Choice(['left', 'right']), help="Distributivity side")
@click.option('--json', 'as_json', is_flag=True, help="Print reports as JSON")
@click.option('--save', is_flag=True, help=f"Also write the reports to {config.RESULTS_FOLDER}")
def check_cmd(suite, algebra, bound, cap, n, map_name, halves, pairing, side, as_json, save):
    """Run verification SUITE; exit 1 on the first counterexample"""
    options = SuiteOptions(algebra=algebra, bound=bound, cap=cap, n=n, map=map_name, halves=halves,
                           pairing=pairing, side=side)
    try:
        reports = run_suite(suite, options)
    except UnknownNameError as e:
        raise click.UsageError(str(e))
    except ValueError as e:
        add_log(f"Suite {suite} refused its options: {traceback.format_exc()}", "error")
        raise click.UsageError(str(e))

    if as_json:
        click.echo(json.dumps([report.to_dict() for report in reports], indent=2, ensure_ascii=False))
    else:
        for report in reports:
            click.echo(report.render())
    if save:
        path = save_reports(suite, reports)
        click.echo(f"Saved to {path}", err=True)

    if not all_passed(reports):
        raise SystemExit(1)
