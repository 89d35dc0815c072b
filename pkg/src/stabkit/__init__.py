"""stabkit: stabilizer, entanglement-assisted and operator quantum codes
from classical binary/quaternary codes, quasi-cyclic LDPC construction,
and sum-product syndrome decoding over the depolarizing channel."""

from . import codes, f2, gf4, pauli, qc_ldpc, sgs, sim, spa

__all__ = ["codes", "f2", "gf4", "pauli", "qc_ldpc", "sgs", "sim", "spa"]
__version__ = "0.1.0"
