"""Plane partitions, the descent-level-set bijection to N-matrices,
dual Grothendieck polynomials, and an exact identity-verification
harness.
"""

from .core import Cell, NMatrix, Partition, PlanePartition, Word
from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "NMatrix",
    "Partition",
    "PlanePartition",
    "Word",
    "KERNEL_BACKEND",
    "__version__",
]
