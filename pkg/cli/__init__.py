"""
CLI - command-line front end: argument parsing, run configuration and one
function per subcommand.
"""

from .run_config import Command, RunConfig, parse_type
from .commands import (
    EXIT_OK, EXIT_FAILED, EXIT_INPUT, emit, run,
    cmd_classify, cmd_local_model, cmd_verify_estimates, cmd_count_points, cmd_report,
)
from .main import build_parser, main

__all__ = [
    'Command', 'RunConfig', 'parse_type',
    'EXIT_OK', 'EXIT_FAILED', 'EXIT_INPUT', 'emit', 'run',
    'cmd_classify', 'cmd_local_model', 'cmd_verify_estimates', 'cmd_count_points', 'cmd_report',
    'build_parser', 'main',
]
