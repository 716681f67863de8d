"""Init file for cli."""

from .commands import (
    EXIT_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    RunConfig,
    cmd_bound,
    cmd_construct,
    cmd_periodize,
    cmd_report,
    cmd_search,
    cmd_verify,
)
from .main import build_parser, config_from_args, main

__all__ = [
    "EXIT_FAILED",
    "EXIT_OK",
    "EXIT_USAGE",
    "RunConfig",
    "build_parser",
    "cmd_bound",
    "cmd_construct",
    "cmd_periodize",
    "cmd_report",
    "cmd_search",
    "cmd_verify",
    "config_from_args",
    "main",
]
