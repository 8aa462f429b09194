"""critlab: sampling of random matrices from the compact classical groups,
critical points of (characteristic) polynomials, and statistical verification
of their convergence to the unit circle."""

__version__ = "0.1.0"

from .rng import RngStream
from .ensembles import GroupKind

__all__ = ["RngStream", "GroupKind", "__version__"]
