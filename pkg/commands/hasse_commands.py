"""
Hasse graph export for hopfwords
"""
import click

from descent import descent_class_subgraph, hasse, hasse_to_gml
from literals import parse_descent_set
from logging_manager import add_log


@click.command('hasse')
@click.argument('n', type=click.IntRange(min=0))
@click.option('--highlight', help='Descent set whose class is marked, e.g. "{2,3}"')
@click.option('--output', type=click.Path(dir_okay=False, writable=True), help="Write GML here instead of stdout")
def hasse_cmd(n, highlight, output):
    """Left weak order on S_N as GML"""
    try:
        D = parse_descent_set(highlight, n) if highlight else None
        graph = hasse(n, D)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="N/--highlight")
    text = hasse_to_gml(graph)
    if output:
        with open(output, 'w', encoding='utf-8') as f:
            f.write(text + "\n")
        add_log(f"Wrote Hasse graph of S_{n} to {output}")
    else:
        click.echo(text)
    summary = f"{graph.number_of_nodes()} nodes, {graph.number_of_edges()} edges"
    if D is not None:
        summary += f", {descent_class_subgraph(graph, D).number_of_nodes()} highlighted"
    click.echo(summary, err=True)
