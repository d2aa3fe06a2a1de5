import click

from disent.cli.common import render_csv, run_config_from, run_options
from disent.service import commands
from disent.service.schemas import SWEEP_AXES, SWEEP_COLUMNS, SweepSpec


@click.command()
@run_options
@click.option("--axis", type=click.Choice(SWEEP_AXES), required=True)
@click.option("--start", type=float, required=True)
@click.option("--stop", type=float, required=True)
@click.option("--steps", type=int, default=11, show_default=True)
def sweep(axis: str, start: float, stop: float, steps: int, **options):
    """CSV of the separability quantities along one axis."""
    cfg = run_config_from(options)
    spec = SweepSpec(axis=axis, start=start, stop=stop, steps=steps)
    rows = [
        [row[column] for column in SWEEP_COLUMNS]
        for row in commands.sweep_rows(cfg, spec)
    ]
    click.echo(render_csv(SWEEP_COLUMNS, rows), nl=False)
