"""
Central registry for orientation-preserving operations.

* ``MAIN_OPERATIONS_REGISTRY`` - static mapping from operation names to
  their classes.
* ``OPERATIONS_REGISTRY_SESSION`` - mutable mapping that holds instantiated
  operation objects for the current runtime session.
"""

from typing import Dict

from storient.transforms.addition import AdditionOperation
from storient.transforms.deletion import DeletionOperation
from storient.transforms.lifting import LiftingOperation
from storient.transforms.operation_interface import OperationInterface

MAIN_OPERATIONS_REGISTRY = {
    DeletionOperation.name: DeletionOperation,
    AdditionOperation.name: AdditionOperation,
    LiftingOperation.name: LiftingOperation,
}

# Runtime session cache - filled by the registrator.
OPERATIONS_REGISTRY_SESSION: Dict[str, OperationInterface] = {}
