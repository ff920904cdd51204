import logging
import typing

import click

from iondirac import __version__
from iondirac.errors import IonDiracError
from iondirac.scenario.cli import eigen, evolve, fig, sweep_command

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class IonDiracGroup(click.Group):
    """Maps library errors onto the documented exit codes."""

    def invoke(self, ctx: click.Context) -> typing.Any:
        try:
            return super().invoke(ctx)
        except IonDiracError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(e.exit_code)


@click.group(cls=IonDiracGroup)
@click.option("-v", "--verbose", is_flag=True, help="Log debug messages")
@click.option("-q", "--quiet", is_flag=True, help="Log warnings and errors only")
@click.version_option(__version__, prog_name="iondirac")
def cli(verbose: bool, quiet: bool) -> None:
    """Iondirac - Disentanglement dynamics of a Dirac-mapped trapped ion under collective dephasing."""
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT)


cli.add_command(eigen)
cli.add_command(evolve)
cli.add_command(fig)
cli.add_command(sweep_command)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
