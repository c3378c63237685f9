"""
hopfwords - word Hopf algebras from the command line

Evaluates products, coproducts, antipodes and maps in the registered
algebras, runs the verification suites and exports weak order graphs.
"""
import click
from dotenv import load_dotenv

# Load configuration and utilities
import config
from logging_manager import FunctionLoggingDisabled, add_log, set_log_level

# Import command groups
from commands import check_cmd, eval_cmd, hasse_cmd


def create_app():
    """Create the click group and register the commands"""
    load_dotenv()

    @click.group()
    @click.option('--verbose', is_flag=True, help="Log every check as it runs")
    @click.option('--quiet', is_flag=True, help="Silence the hopfwords logger")
    @click.pass_context
    def app(ctx, verbose, quiet):
        """Word Hopf algebras: evaluate, verify, export"""
        if verbose:
            set_log_level("INFO")
        if quiet:
            ctx.with_resource(FunctionLoggingDisabled())
        add_log(f"Results folder: {config.RESULTS_FOLDER}", "debug")

    app.add_command(eval_cmd)
    app.add_command(check_cmd)
    app.add_command(hasse_cmd)
    return app


if __name__ == '__main__':
    create_app()()
