import csv
import io
from typing import Any, Iterable, Sequence

import click

from disent.service.commands import load_config
from disent.service.parsers import RUN_FILE_KEYS
from disent.service.schemas import RunConfig

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_ENTANGLED = 2
EXIT_USAGE = 64

_RUN_OPTIONS = [
    click.option("--a11", type=float, help="Coefficient of x1^2 and x2^2."),
    click.option("--a12", type=float, help="Cross coefficient of x1 x2."),
    click.option("--temp", type=float, help="Temperature T of the drift."),
    click.option("--time", type=float, help="Evolution time t."),
    click.option("--mass", type=float, help="Particle mass m."),
    click.option("--hbar", type=float, help="Reduced Planck constant."),
    click.option("--kb", type=float, help="Boltzmann constant k."),
    click.option(
        "--length-scale",
        type=str,
        help="Length L making the variance matrix dimensionless, or 'auto' "
        "for 1/sqrt(a11).",
    ),
    click.option("--seed", type=int, help="Monte Carlo master seed."),
    click.option("--samples", type=int, help="Monte Carlo sample count."),
    click.option("--tolerance", type=float, help="Decision tolerance."),
    click.option(
        "--config",
        "config_path",
        type=str,
        help="key=value run file; flags override its values.",
    ),
]


def run_options(f):
    for option in reversed(_RUN_OPTIONS):
        f = option(f)
    return f


def run_config_from(options: dict[str, Any]) -> RunConfig:
    overrides = {}
    for key, (field, convert) in RUN_FILE_KEYS.items():
        value = options.get(key.replace("-", "_"))
        if value is None:
            continue
        try:
            overrides[field] = convert(value)
        except ValueError:
            raise click.BadParameter(
                f"invalid value {value!r}", param_hint=f"'--{key}'"
            ) from None
    return load_config(options.get("config_path"), overrides)


def format_value(value) -> str:
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_csv(columns: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(value) for value in row])
    return buffer.getvalue()
