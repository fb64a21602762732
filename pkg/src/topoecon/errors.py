"""Exception hierarchy shared by all topoecon modules.

Two families, matching the CLI's exit-code contract:

* ``InvariantError`` (a ``ValueError``) — a domain type was constructed with
  values that violate its invariants.  The CLI reports these as validation
  failures (exit 3).
* ``OperationError`` — a well-formed input hit an operation-level error
  condition (unknown region, infeasible genus, ...).  The CLI reports these
  as runtime failures (exit 4) together with the module and operation name.
"""

from __future__ import annotations


class InvariantError(ValueError):
    """A domain type's invariants were violated at construction time."""


class OperationError(Exception):
    """An operation failed on otherwise well-formed inputs."""
