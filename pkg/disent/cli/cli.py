import logging
import sys

import click

from disent.cli.commands.report import report
from disent.cli.commands.sweep import sweep
from disent.cli.commands.verify import verify
from disent.cli.common import EXIT_USAGE
from disent.service.exceptions import DisentError


class DisentGroup(click.Group):
    """Maps usage and domain errors to exit code 64."""

    def main(self, args=None, prog_name=None, standalone_mode=True, **extra):
        try:
            rv = super().main(
                args=args,
                prog_name=prog_name,
                standalone_mode=False,
                **extra,
            )
        except click.UsageError as e:
            e.show()
            code = EXIT_USAGE
        except DisentError as e:
            click.echo(f"Error: {e}", err=True)
            code = EXIT_USAGE
        except click.ClickException as e:
            e.show()
            code = e.exit_code
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = 1
        else:
            code = rv if isinstance(rv, int) else 0
        if standalone_mode:
            sys.exit(code)
        return code


@click.group(cls=DisentGroup)
@click.option("-v", "--verbose", count=True, help="-v info, -vv debug.")
def cli(verbose):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


cli.add_command(report)
cli.add_command(sweep)
cli.add_command(verify)


def main():
    cli(prog_name="disent")


if __name__ == "__main__":
    main()
