"""Exact computation of rank-3 gauge-theory invariants.

The package bundles an exact cyclotomic scalar type, truncated formal power
series, intersection-lattice models of elliptic surfaces and their blowups,
evaluators for the rank-3 Donaldson series and its structural relations, the
universal blowup series with their defining PDEs, flat-connection invariants
(Chern-Simons, rho, Floer degree) on Brieskorn spheres, and the eigenvalue
catalog used for fiber-sum gluing coefficients.
"""

from gauge3.exactnum import CycloNum, FieldDescriptor, cyclo_field, zeta

__all__ = ["CycloNum", "FieldDescriptor", "cyclo_field", "zeta"]
