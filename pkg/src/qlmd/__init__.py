"""Langevin molecular dynamics driven by sampled quantum expectation values.

Subpackages and modules:
  operators   Pauli-string algebra, dense matrices, exact diagonalization
  ansatz      occupation-conserving ansatz circuit and Pauli sampling
  chem        STO-3G integrals, restricted Hartree-Fock, qubit Hamiltonians
  estimators  shot-based energy/force estimators with resource accounting
  dynamics    coupled Langevin integrators and the per-step-optimized baseline
  analysis    trajectory statistics and covariance-based frequency analysis
  cli         run orchestration (run / analyze / scan / force-histogram)
"""

from . import backend

__version__ = "0.1.0"
__all__ = ["backend", "__version__"]
