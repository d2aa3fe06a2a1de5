from typing import Iterable

import click

from disent.cli.common import (
    EXIT_VERIFICATION_FAILED,
    run_config_from,
    run_options,
)
from disent.service import commands
from disent.service import events
from disent.service import events as service_events


def dispatch_events(events: Iterable[events.Event]):
    for event_ in events:
        if isinstance(event_, service_events.CheckPassed):
            click.secho(
                f"PASS  {event_.name}: {event_.deviation:.3e} "
                f"<= {event_.bound:.3e}",
                fg="green",
            )
        elif isinstance(event_, service_events.CheckFailed):
            click.secho(
                f"FAIL  {event_.name}: {event_.deviation:.3e} "
                f"> {event_.bound:.3e}",
                fg="red",
            )


@click.command()
@run_options
@click.pass_context
def verify(ctx: click.Context, **options):
    """Cross-check closed forms against Monte Carlo and quadrature."""
    cfg = run_config_from(options)
    events_ = commands.verify(cfg)
    dispatch_events(events_)
    failed = [
        event_.name
        for event_ in events_
        if isinstance(event_, service_events.CheckFailed)
    ]
    if failed:
        click.secho(
            f"{len(failed)} of {len(events_)} checks failed: "
            + ", ".join(failed),
            fg="red",
        )
        ctx.exit(EXIT_VERIFICATION_FAILED)
    click.secho(f"all {len(events_)} checks passed", fg="green")
