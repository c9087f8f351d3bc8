"""Exceptions raised by the solvers."""

from __future__ import annotations


class SolverAbort(RuntimeError):
    """A run stopped because the state became non-finite or inadmissible.

    ``step`` is the time-step index (when known) and ``where`` a free-form
    location such as a cell index.
    """

    def __init__(self, message: str, step: int | None = None, where: str | None = None):
        self.message = message
        self.step = step
        self.where = where
        details = []
        if step is not None:
            details.append(f"step {step}")
        if where:
            details.append(where)
        suffix = f" ({', '.join(details)})" if details else ""
        super().__init__(message + suffix)
