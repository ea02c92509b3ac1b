"""qorth - exact symbolic verification for the quantum orthogonal group SO_q(3)."""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("qorth")
except PackageNotFoundError:
    try:
        from qorth._version import __version__  # type: ignore[no-redef,unused-ignore]
    except ImportError:
        __version__ = "0.0.0-dev"

# Public API
from qorth.config import QorthConfig, load_config, save_config
from qorth.errors import QorthError
from qorth.freealg import Alphabet, NcPoly
from qorth.scalar import Regime, Scalar

__all__ = [
    "Alphabet",
    "NcPoly",
    "QorthConfig",
    "QorthError",
    "Regime",
    "Scalar",
    "__version__",
    "load_config",
    "save_config",
]
