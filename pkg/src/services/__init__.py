"""Service layer: settings, data loading, serialization and command execution."""

from .command_runner import CommandResult, CommandRunner, CommandStatus
from .data_factory import DataFactory
from .settings import Settings, configure_logging

__all__ = ['CommandResult', 'CommandRunner', 'CommandStatus', 'DataFactory', 'Settings', 'configure_logging']
