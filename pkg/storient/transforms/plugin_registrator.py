"""
Helper that registers operations on demand.

Usage:
    OperationRegistry.register(name="delete_edge", logger=my_logger)
    operation = OperationRegistry.get("delete_edge")
"""

import logging
from typing import Optional

from storient.transforms.operation_interface import OperationInterface
from storient.transforms.registry import (
    MAIN_OPERATIONS_REGISTRY,
    OPERATIONS_REGISTRY_SESSION,
)


class OperationRegistry:
    """Central registry for orientation-preserving operations."""

    @staticmethod
    def register(name: str, logger: Optional[logging.Logger] = None) -> None:
        """
        Register an operation for the current session.

        Args:
            name: Identifier of the operation (must exist in
                  ``MAIN_OPERATIONS_REGISTRY``).
            logger: Optional logger that will be passed to the operation's
                    constructor.  Registering a name again with a different
                    logger replaces the cached instance.
        """
        if name not in MAIN_OPERATIONS_REGISTRY:
            raise KeyError(
                f"Operation '{name}' not found in registry: "
                f"{list(MAIN_OPERATIONS_REGISTRY)}"
            )

        current = OPERATIONS_REGISTRY_SESSION.get(name)
        if current is not None and current.logger is logger:
            return

        _op = MAIN_OPERATIONS_REGISTRY[name](logger=logger)
        OPERATIONS_REGISTRY_SESSION[name] = _op

        if logger:
            logger.info(f"[transforms] Registering operation '{name}' as {_op}")

    @staticmethod
    def get(name: str) -> OperationInterface:
        """
        Retrieve a registered operation instance by name.

        Raises:
            KeyError: If the operation has not been registered yet.
        """
        try:
            return OPERATIONS_REGISTRY_SESSION[name]
        except KeyError as exc:
            raise KeyError(
                f"Operation '{name}' not found in registry. "
                f"Available operations: {list(OPERATIONS_REGISTRY_SESSION.keys())}"
            ) from exc

    @staticmethod
    def list_plugins() -> list[str]:
        """Return the names of operations registered in the session."""
        return list(OPERATIONS_REGISTRY_SESSION.keys())
