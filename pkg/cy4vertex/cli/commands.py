"""CY4Vertex command handlers

Each handler takes a RunConfig and returns a CommandResult holding the
exit code, the printed table and a JSON-ready report. The click commands
and the Flask routes both go through these.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from typing import NamedTuple
import json
import os

from cy4vertex import settings
from cy4vertex.cli.config import RunConfig, load_signs
from cy4vertex.errors import EXIT_MATH, EXIT_OK, InputError
from cy4vertex.toric_global import GlobalClasses, build_geometry, global_series, palindromy_report
from cy4vertex.vertex_series import case_spec, check_correspondence, verify_correspondence, vertex_series


#####################################################################
# Constants

_VERTEX_SIGNS = {"formula0": "formula_0dim", "formula2": "formula_2dim"}

_VERIFY_SIGNS = {"search": "search", "formula2": "formula_2dim"}

PT1_ASSUMPTION = "PT1 fixed loci are checked to be 0-dimensional and assumed reduced"


#####################################################################
# CommandResult

class CommandResult(NamedTuple):
    exit_code: int
    table: str
    report: dict


def write_golden(directory: str, name: str, result: CommandResult) -> tuple:
    """Write <name>.series.txt and <name>.index.json; returns both paths."""
    os.makedirs(directory, exist_ok=True)
    series_path = os.path.join(directory, f"{name}.series.txt")
    index_path = os.path.join(directory, f"{name}.index.json")
    with open(series_path, "w") as fp:
        fp.write(result.table)
    with open(index_path, "w") as fp:
        json.dump(result.report, fp, indent=2, sort_keys=True)
        fp.write("\n")
    settings.log(f"golden files written: {series_path}, {index_path}")
    return series_path, index_path


#####################################################################
# Handlers

def cmd_vertex(config: RunConfig) -> CommandResult:
    """DT or PT0 vertex series with per-order fixed point provenance.

    Raises:
        InputError: a sign mode that only applies to verify or global.
    """
    if config.explicit_signs:
        signs = load_signs(config.signs)
    elif config.signs is None:
        signs = None
    elif config.signs in _VERTEX_SIGNS:
        signs = _VERTEX_SIGNS[config.signs]
    else:
        raise InputError(f"Sign mode '{config.signs}' does not apply to vertex; use formula0, formula2 or a sign file")
    result = vertex_series(config.kind, config.spec or "empty", config.order or 0, signs, config.jobs)
    report = {
        "command": "vertex",
        "config": config.record(),
        "series": result.series.records(),
        "provenance": result.provenance(),
        "signs": result.signs.records(),
    }
    return CommandResult(EXIT_OK, result.series.format_table(), report)


def cmd_verify(config: RunConfig) -> CommandResult:
    """DT/PT0 correspondence modulo q^N; a failed check exits with the mathematical failure code.

    Raises:
        SearchBudgetExhausted: the sign search ran out of budget.
    """
    spec, order = config.spec, config.order
    if config.case:
        spec, case_order = case_spec(config.case)
        order = case_order if order is None else order
    order = order or 0
    if config.explicit_signs:
        result = check_correspondence(spec, order, load_signs(config.signs), config.confirm, config.jobs, config.seed)
    else:
        mode = _VERIFY_SIGNS.get(config.signs or "search")
        if mode is None:
            raise InputError(f"Sign mode '{config.signs}' does not apply to verify; use search, formula2 or a sign file")
        result = verify_correspondence(spec, order, config.search_budget, mode, config.confirm, config.jobs,
                                       config.seed)
    report = {"command": "verify", "case": config.case, "spec": spec, "config": config.record()}
    report.update(result.as_record())
    lines = ["Verified" if result.verified else f"Failed at q^{result.order}: {result.residual}"]
    for order_key, count in sorted(result.counts.items()):
        lines.append(f"q^{order_key}  {count} fixed points")
    return CommandResult(EXIT_OK if result.verified else EXIT_MATH, "\n".join(lines) + "\n", report)


def cmd_global(config: RunConfig) -> CommandResult:
    """Global series table with a fixed point count per coefficient."""
    if not config.spec:
        raise InputError("Global series need a geometry")
    g = build_geometry(config.spec)
    if config.explicit_signs:
        signs = load_signs(config.signs)
    elif config.signs is None:
        signs = "support" if g.fibre is not None else "search"
    elif config.signs in ("support", "search"):
        signs = config.signs
    else:
        raise InputError(f"Sign mode '{config.signs}' does not apply to global; use support, search or a sign file")
    classes = GlobalClasses.of(config.degree, (config.m_min, config.m_max), (config.n_min, config.n_max))
    result = global_series(g, config.kind, classes, signs, config.bundle, config.cocharacter, config.specialize,
                           config.jobs, config.search_budget, config.seed)
    report = {
        "command": "global",
        "geometry": g.describe(),
        "config": config.record(),
        "index": result.index(),
        "assumptions": [PT1_ASSUMPTION] if result.kind == "PT1" else [],
    }
    if result.specialized:
        report["palindromy"] = palindromy_report(result)
    return CommandResult(EXIT_OK, result.format_table(), report)


HANDLERS = {"vertex": cmd_vertex, "verify": cmd_verify, "global": cmd_global}


def run_command(command: str, flags: dict = None, path: str = None) -> tuple:
    """(RunConfig, CommandResult) of a command, golden files written when configured."""
    config = RunConfig.resolve(command, flags, path)
    result = HANDLERS[command](config)
    if config.golden_dir:
        write_golden(config.golden_dir, config.output_name(), result)
    return config, result
