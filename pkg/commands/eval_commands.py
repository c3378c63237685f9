"""
Evaluation command for hopfwords
"""
import json
import traceback
from dataclasses import dataclass
from typing import Optional

import click

from freemod import CoefficientOverflowError, Elem
from literals import parse_elem, render
from logging_manager import add_log
from registry import ALGEBRAS, UnknownNameError, get_algebra, get_operation


@dataclass(frozen=True)
class EvalOptions:
    basis: Optional[str] = None
    to: Optional[str] = None


def list_operations():
    """One line per algebra with its operations"""
    lines = []
    for algebra in ALGEBRAS.values():
        bases = f" [bases {', '.join(algebra.bases)}]" if algebra.bases else ""
        lines.append(f"{algebra.name}: {algebra.help}{bases}")
        for op in algebra.operations.values():
            lines.append(f"  {op.name} ({op.arity}): {op.help}")
    return "\n".join(lines)


def evaluate(algebra_name, operation_name, operands, basis=None, to=None):
    """Parse the operand literals and run one registered operation"""
    algebra = get_algebra(algebra_name)
    operation = get_operation(algebra, operation_name)
    if len(operands) != operation.arity:
        raise click.UsageError(
            f"{algebra.name} {operation.name} takes {operation.arity} operand(s), got {len(operands)}")
    if algebra.bases:
        for value in (basis, to):
            if value is not None and value not in algebra.bases:
                raise click.BadParameter(f"{value!r} is not a basis of {algebra.name}", param_hint="--basis/--to")
    elements = []
    for text in operands:
        element = parse_elem(text)
        try:
            elements.append(algebra.validate(element))
        except ValueError as e:
            raise click.UsageError(f"{text} is not a {algebra.name} operand: {e}")
    add_log(f"Evaluating {algebra.name} {operation.name} on {', '.join(operands)}")
    return operation.run(*elements, EvalOptions(basis=basis, to=to))


def format_result(value, as_json=False):
    if isinstance(value, Elem):
        return json.dumps(value.to_dict(), ensure_ascii=False) if as_json else render(value)
    return json.dumps({"value": value}) if as_json else str(value)


@click.command('eval')
@click.argument('algebra', required=False)
@click.argument('operation', required=False)
@click.argument('operands', nargs=-1)
@click.option('--basis', help="Basis of the operands (nsymm: Z, S, R; qsymm: M, F)")
@click.option('--to', 'to', help="Target basis of convert")
@click.option('--json', 'as_json', is_flag=True, help="Print {terms: [{coeff, key}]}")
@click.option('--list', 'list_ops', is_flag=True, help="List algebras and their operations")
def eval_cmd(algebra, operation, operands, basis, to, as_json, list_ops):
    """Evaluate OPERATION of ALGEBRA on literal OPERANDS"""
    if list_ops:
        click.echo(list_operations())
        return
    if not algebra or not operation:
        raise click.UsageError("ALGEBRA and OPERATION are required (see eval --list)")
    try:
        value = evaluate(algebra, operation, operands, basis, to)
    except click.ClickException:
        raise
    except UnknownNameError as e:
        raise click.UsageError(str(e))
    except (ValueError, ArithmeticError) as e:
        add_log(f"Evaluation failed: {traceback.format_exc()}", "error")
        if isinstance(e, CoefficientOverflowError):
            raise click.ClickException(str(e))
        raise click.UsageError(str(e))
    click.echo(format_result(value, as_json))
