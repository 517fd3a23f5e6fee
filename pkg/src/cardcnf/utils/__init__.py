"""Utility modules for cardcnf."""

from cardcnf.utils.config import Config, get_config, load_config, reset_config
from cardcnf.utils.intmath import ceil_div, ceil_log, ceil_root, ceil_sqrt, floor_root
from cardcnf.utils.output import error_response, format_pairs, success_response
from cardcnf.utils.timing import Stopwatch

__all__ = [
    "Config",
    "get_config",
    "load_config",
    "reset_config",
    "ceil_div",
    "ceil_log",
    "ceil_root",
    "ceil_sqrt",
    "floor_root",
    "success_response",
    "error_response",
    "format_pairs",
    "Stopwatch",
]
