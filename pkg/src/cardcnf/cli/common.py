"""Output mode and helpers shared by the CLI commands."""

import json
from typing import Any, NoReturn

import typer

from cardcnf.encoders.registry import get_registry
from cardcnf.errors import EncodingError
from cardcnf.utils.output import error_response, success_response

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Global state for JSON output mode
_json_output = False


def set_json_output(value: bool) -> None:
    """Set global JSON output mode."""
    global _json_output
    _json_output = value


def is_json_output() -> bool:
    """Check if JSON output mode is enabled."""
    return _json_output


def output_json(data: dict[str, Any]) -> None:
    """Print data as JSON if in JSON mode, otherwise do nothing."""
    if _json_output:
        typer.echo(json.dumps(data, indent=2))


def report(action: str, result: dict[str, Any], lines: list[str]) -> None:
    """Print a command result as JSON or as text lines."""
    if _json_output:
        output_json(success_response(action, result))
    else:
        for line in lines:
            typer.echo(line)


def fail(
    error_type: str,
    message: str,
    exit_code: int = EXIT_USAGE,
    suggestion: str | None = None,
    lines: list[str] | None = None,
    result: dict[str, Any] | None = None,
) -> NoReturn:
    """Print an error and exit with exit_code.

    Text mode prints `lines` after the message; JSON mode attaches `result`.
    """
    if _json_output:
        response = error_response(error_type, message, exit_code, suggestion)
        if result is not None:
            response["result"] = result
        output_json(response)
    else:
        typer.echo(f"Error: {message}")
        for line in lines or []:
            typer.echo(line)
        if suggestion:
            typer.echo(f"Hint: {suggestion}")
    raise typer.Exit(exit_code)


def parse_params_option(text: str) -> dict[str, str]:
    """Parse `key=value,key=value` into a dict of raw strings.

    Raises:
        EncodingError: On an item without '='.
    """
    params: dict[str, str] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise EncodingError(f"param '{item}' is not key=value")
        params[key] = value
    return params


def parse_int_list(text: str) -> list[int]:
    """Parse a comma-separated list of integers; `_` separators are allowed."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise typer.BadParameter(f"'{text}' is not a comma-separated list of integers") from e


def encoder_suggestion() -> str:
    return f"available encoders: {', '.join(get_registry().list_names())}"
