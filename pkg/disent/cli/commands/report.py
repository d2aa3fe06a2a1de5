import click

from disent.cli.common import (
    EXIT_ENTANGLED,
    render_csv,
    run_config_from,
    run_options,
)
from disent.service import commands
from disent.service.schemas import REPORT_COLUMNS, RunConfig
from disent.service.separability import Assessment


def _line(label: str, value) -> str:
    if isinstance(value, float):
        value = f"{value:.6g}"
    return f"  {label:<26}{value}"


def render_report(cfg: RunConfig, assessment: Assessment) -> str:
    moments = assessment.moments
    invariants = assessment.invariants
    sf = assessment.standard_form
    report = assessment.report
    verdict = click.style(
        "SEPARABLE" if report.separable else "ENTANGLED",
        fg="green" if report.separable else "red",
    )
    lines = [
        "two free particles, symmetric gaussian state, thermal drift",
        f"  a11 = {cfg.a11:.6g}  a12 = {cfg.a12:.6g}  "
        f"T = {cfg.temperature:.6g}  t = {cfg.time:.6g}",
        f"  m = {cfg.mass:.6g}  hbar = {cfg.hbar:.6g}  "
        f"k = {cfg.boltzmann:.6g}  L = {cfg.L:.6g}",
        "",
        "moments at t",
        _line("<x1^2> = <x2^2>", moments.xx),
        _line("<x1 x2>", moments.x1x2),
        _line("<p1^2> = <p2^2>", moments.pp),
        _line("<p1 p2>", moments.p1p2),
        _line("<x1 p1 + p1 x1>/2", moments.xp_sym),
        _line("<x2 p1> = <x1 p2>", moments.x_cross_p),
        "",
        "determinant invariants",
        _line("det G", invariants.det_g),
        _line("det C", invariants.det_c),
        _line("det M", invariants.det_m),
        "",
        "standard form",
        _line("g", sf.g),
        _line("c", sf.c),
        _line("c'", sf.c_prime),
        "",
        "duan criterion",
        _line("(g - |c|)(g - |c'|)", report.duan_value),
        _line("margin", report.margin),
        _line("verdict", verdict),
        "",
        "threshold (independent of t)",
        _line("T*", report.critical_temperature),
        _line("critical |a12| at T", report.critical_a12),
        "",
        "# machine-readable",
    ]
    row = (
        cfg.a11,
        cfg.a12,
        cfg.temperature,
        cfg.time,
        cfg.L,
        *moments.as_tuple(),
        invariants.det_g,
        invariants.det_c,
        invariants.det_m,
        sf.g,
        sf.c,
        sf.c_prime,
        report.duan_value,
        report.margin,
        report.separable,
        report.critical_temperature,
        report.critical_a12,
    )
    return "\n".join(lines) + "\n" + render_csv(REPORT_COLUMNS, [row])


@click.command()
@run_options
@click.option(
    "--status-exit",
    is_flag=True,
    help="Exit 0 when separable and 2 when entangled.",
)
@click.pass_context
def report(ctx: click.Context, status_exit: bool, **options):
    """Separability of a single (a11, a12, T, t) point."""
    cfg = run_config_from(options)
    assessment = commands.report_point(cfg)
    click.echo(render_report(cfg, assessment), nl=False)
    if status_exit and not assessment.report.separable:
        ctx.exit(EXIT_ENTANGLED)
