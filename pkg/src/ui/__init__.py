"""Terminal interface: the click command group and rich summaries."""

from .cli import cli
from .report_view import ReportView

__all__ = ['cli', 'ReportView']
