"""Rich-based terminal UI for qorth.

Renders suite reports as tables, structured errors as panels, and falls
back to plain text when NO_COLOR is set or --no-color is given.
"""

from __future__ import annotations

import os
from collections.abc import Sequence

from qorth.errors import QorthError, format_error
from qorth.report import Status, SuiteReport

_STATUS_STYLE = {
    Status.PASS: "green",
    Status.FAIL: "bold red",
    Status.INCONCLUSIVE: "yellow",
}

# residuals longer than this are cut in the table
_RESIDUAL_WIDTH = 120


def _no_color() -> bool:
    """Check if color output should be disabled."""
    return bool(os.environ.get("NO_COLOR"))


def _clip(text: str) -> str:
    if len(text) <= _RESIDUAL_WIDTH:
        return text
    return text[: _RESIDUAL_WIDTH - 3] + "..."


class UI:
    """Wraps all terminal output via Rich, with no-color fallback."""

    def __init__(self, *, no_color: bool = False, timings: bool = False) -> None:
        self._no_color = no_color or _no_color()
        self._timings = timings
        if not self._no_color:
            from rich.console import Console

            self._console = Console()
        else:
            self._console = None  # type: ignore[assignment]

    def show_error(self, error: QorthError) -> None:
        """Display structured error with Rich Panel (red border)."""
        if self._no_color:
            print(f"[ERROR] {format_error(error)}")
            return

        from rich.panel import Panel
        from rich.text import Text

        content = Text()
        content.append(f"Error: {error.message}\n", style="bold red")
        if error.log_details:
            content.append(f"Reason: {error.log_details}\n", style="yellow")
        if error.suggestions:
            content.append("Try:\n", style="bold")
            for i, suggestion in enumerate(error.suggestions, 1):
                content.append(f"  {i}. {suggestion}\n")

        panel = Panel(
            content,
            border_style="red",
            title=f"[{error.code}]",
            expand=False,
        )
        self._console.print(panel)

    def show_warning(self, message: str) -> None:
        """Display a warning message in yellow."""
        if self._no_color:
            print(f"[WARN] !! {message}")
            return

        from rich.panel import Panel

        panel = Panel(
            f"!! {message}",
            border_style="yellow",
            title="Warning",
            expand=False,
        )
        self._console.print(panel)

    def show_report(self, report: SuiteReport) -> None:
        """One table per suite; failing rows carry their residual."""
        if self._no_color:
            for c in report.checks:
                line = f"{report.suite:<16} {c.check_id:<32} {c.status.value}"
                if self._timings:
                    line += f" {c.ms}ms"
                print(line)
                if c.status is not Status.PASS:
                    print(f"    {_clip(c.residual or c.detail)}")
            return

        from rich.table import Table

        table = Table(title=report.suite, title_justify="left", expand=False)
        table.add_column("check")
        table.add_column("status")
        if self._timings:
            table.add_column("ms", justify="right")
        table.add_column("residual")
        for c in report.checks:
            cells = [c.check_id, f"[{_STATUS_STYLE[c.status]}]{c.status.value}[/]"]
            if self._timings:
                cells.append(str(c.ms))
            shown = "" if c.status is Status.PASS else _clip(c.residual or c.detail)
            cells.append(shown)
            table.add_row(*cells)
        self._console.print(table)

    def show_summary(self, reports: Sequence[SuiteReport]) -> None:
        """Display the totals line."""
        totals = {s: 0 for s in Status}
        for r in reports:
            for c in r.checks:
                totals[c.status] += 1
        summary = (
            f"{len(reports)} suites: {totals[Status.PASS]} passed, "
            f"{totals[Status.FAIL]} failed, {totals[Status.INCONCLUSIVE]} inconclusive"
        )
        if self._no_color:
            print(f"[DONE] {summary}")
            return

        from rich.text import Text

        ok = not totals[Status.FAIL] and not totals[Status.INCONCLUSIVE]
        text = Text("Done: ", style="bold green" if ok else "bold red")
        text.append(summary)
        self._console.print(text)

    def print(self, message: str) -> None:
        """Print a plain message."""
        if self._no_color:
            print(message)
        else:
            self._console.print(message, markup=False, highlight=False)
