"""Entry point for the braidcalc command line."""

from src.ui.cli import cli


def main() -> None:
    """Run the command group."""
    cli(prog_name="braidcalc")


if __name__ == "__main__":
    main()
