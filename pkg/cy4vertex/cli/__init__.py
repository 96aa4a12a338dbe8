# Simplify importing package
from .commands import HANDLERS, CommandResult, cmd_global, cmd_verify, cmd_vertex, run_command, write_golden  # noqa: F401
from .config import COMMANDS, SIGN_MODES, RunConfig, load_signs  # noqa: F401
from .main import cli, main  # noqa: F401

__all__ = (
    'COMMANDS',
    'HANDLERS',
    'SIGN_MODES',
    'CommandResult',
    'RunConfig',
    'cli',
    'cmd_global',
    'cmd_verify',
    'cmd_vertex',
    'load_signs',
    'main',
    'run_command',
    'write_golden',
)
