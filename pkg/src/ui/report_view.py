"""Human-readable command summaries rendered with rich on stderr."""

from typing import Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ..services.command_runner import CommandResult, CommandStatus

STATUS_STYLES = {
    CommandStatus.OK: "bold green",
    CommandStatus.PROPERTY_VIOLATED: "bold red",
    CommandStatus.INPUT_ERROR: "bold yellow",
}


class ReportView:
    """Renders CommandResult summaries to the terminal."""

    def __init__(self, console: Optional[Console] = None) -> None:
        """Initialize the view.

        Args:
            console: Target console; a stderr console when omitted
        """
        self.console = console or Console(stderr=True)

    def _create_summary_table(self, result: CommandResult) -> Table:
        table = Table(show_header=False, box=None)
        table.add_column("item", style="cyan")
        table.add_column("value")
        for name, value in result.summary:
            table.add_row(name, value)
        return table

    def render(self, result: CommandResult) -> None:
        """Print a panel titled with the command and its status."""
        style = STATUS_STYLES[result.status]
        title = f"{result.command}: [{style}]{result.status.label}[/]"
        self.console.print(Panel(self._create_summary_table(result), title=title, expand=False))
