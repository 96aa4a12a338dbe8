"""CY4Vertex command line

    cy4vertex vertex --kind pt0 --lambda 12:1 --lambda 34:1
    cy4vertex verify --case dtpt0-1
    cy4vertex global --geometry local-p2:a=2 --kind pt1 --d 1
    cy4vertex serve

Exit codes: 0 success, 2 scope violation, 3 mathematical failure,
4 internal assertion.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


import click

from cy4vertex import settings
from cy4vertex.cli.commands import run_command
from cy4vertex.errors import Cy4VertexError, SearchBudgetExhausted


#####################################################################
# Internal helper

def _abort_return(message: str, err: Cy4VertexError) -> int:
    click.echo(f"ERROR! {message}", err=True)
    for key, value in err.details.items():
        click.echo(f"    {key}: {value}", err=True)
    return err.exit_code


def _run(command: str, config_path: str, golden: bool, flags: dict) -> int:
    if golden and not flags.get("golden_dir"):
        flags["golden_dir"] = settings.CY4VERTEX_GOLDEN_DIR
    try:
        _, result = run_command(command, flags, config_path)
    except SearchBudgetExhausted as e:  # SearchBudgetExhausted(MathematicalFailure)
        return _abort_return(f"Sign search budget exhausted: {e.message}", e)
    except Cy4VertexError as e:  # Cy4VertexError(Exception)
        return _abort_return(e.message, e)
    click.echo(result.table, nl=False)
    return result.exit_code


def _common(func):
    """Options shared by the computing commands."""
    options = [
        click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
                     help="YAML run configuration"),
        click.option("--signs", help="formula0, formula2, search, support, or a sign file"),
        click.option("--jobs", type=int, help="Parallelism degree"),
        click.option("--golden-dir", help="Write <name>.series.txt and <name>.index.json here"),
        click.option("--golden", is_flag=True, help="Write golden files to CY4VERTEX_GOLDEN_DIR"),
        click.option("--name", help="Golden file stem"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


#####################################################################
# Commands

@click.group()
def cli():
    """Vertex formalism computations for toric Calabi-Yau 4-folds."""


@cli.command()
@click.option("--kind", type=click.Choice(["dt", "pt0"], case_sensitive=False))
@click.option("--lambda", "lambdas", multiple=True, help="lambda token, e.g. 12:1+t4")
@click.option("--mu", "mus", multiple=True, help="mu token, e.g. mu1=1/(1-t2)+t3, or empty")
@click.option("--spec", help="Whole partition spec text")
@click.option("--order", type=int, help="Added boxes beyond the leading term")
@_common
@click.pass_context
def vertex(ctx, kind, lambdas, mus, spec, order, config_path, signs, jobs, golden_dir, golden, name):
    """DT or PT0 vertex series."""
    tokens = list(lambdas) + list(mus)
    flags = {"kind": kind, "spec": spec or (" ".join(tokens) if tokens else None), "order": order,
             "signs": signs, "jobs": jobs, "golden_dir": golden_dir, "name": name}
    ctx.exit(_run("vertex", config_path, golden, flags))


@cli.command()
@click.option("--case", help="Registered correspondence case, e.g. dtpt0-1")
@click.option("--spec", help="Partition spec text instead of a case")
@click.option("--order", type=int, help="N: check modulo q^N")
@click.option("--search-budget", type=int, help="Largest number of free sign assignments per order")
@click.option("--confirm", type=click.Choice(["exact", "modular"]))
@click.option("--seed", type=int)
@_common
@click.pass_context
def verify(ctx, case, spec, order, search_budget, confirm, seed, config_path, signs, jobs, golden_dir, golden, name):
    """DT/PT0 vertex correspondence with a sign search."""
    flags = {"case": case, "spec": spec, "order": order, "search_budget": search_budget, "confirm": confirm,
             "seed": seed, "signs": signs, "jobs": jobs, "golden_dir": golden_dir, "name": name}
    ctx.exit(_run("verify", config_path, golden, flags))


@cli.command("global")
@click.option("--geometry", help="Builtin name (c4, local-p2:a=2, ...) or geometry file")
@click.option("--kind", type=click.Choice(["dt", "pt0", "pt1"], case_sensitive=False))
@click.option("--d", "degree", type=int, help="Surface degree")
@click.option("--m-min", help="Smallest curve degree m")
@click.option("--m-max", help="Largest curve degree m, default 3d/2 + 1")
@click.option("--n-min", type=int)
@click.option("--n-max", type=int)
@click.option("--bundle", help="Line bundle measuring curve degrees")
@click.option("--cocharacter", help="Comma separated, summing to 0")
@click.option("--no-specialize", "no_specialize", is_flag=True, help="Keep the t dependence")
@click.option("--search-budget", type=int)
@click.option("--seed", type=int)
@_common
@click.pass_context
def global_(ctx, geometry, kind, degree, m_min, m_max, n_min, n_max, bundle, cocharacter, no_specialize,
            search_budget, seed, config_path, signs, jobs, golden_dir, golden, name):
    """Global series of a toric geometry."""
    flags = {"spec": geometry, "kind": kind, "degree": degree, "m_min": m_min, "m_max": m_max, "n_min": n_min,
             "n_max": n_max, "bundle": bundle, "cocharacter": cocharacter,
             "specialize": False if no_specialize else None, "search_budget": search_budget, "seed": seed,
             "signs": signs, "jobs": jobs, "golden_dir": golden_dir, "name": name}
    ctx.exit(_run("global", config_path, golden, flags))


@cli.command()
@click.option("--port", type=int, default=8000)
def serve(port):
    """Flask app for local debug runs."""
    from app import app
    app.run(debug=True, use_reloader=True, port=port)


def main():
    cli(prog_name="cy4vertex")
