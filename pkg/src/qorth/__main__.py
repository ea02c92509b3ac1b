"""Allow running as `python -m qorth`."""

from __future__ import annotations

from qorth.cli import main

main()
