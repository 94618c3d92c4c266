"""Shared exception types and the state-explosion guard."""

import os

DEFAULT_MAX_STATES = 1_000_000
MAX_STATES_ENV = "DUALMIN_MAX_STATES"


class DimensionError(ValueError):
    """Matrix/vector dimensions do not line up."""


class SemiringError(ValueError):
    """Operation not supported over the given semiring, or operands mix semirings."""


class StateGuardError(RuntimeError):
    """A construction would materialise more states than the configured bound."""


class NonCongruenceError(ValueError):
    """A partition handed to a quotient is not a congruence; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class FormatError(ValueError):
    """Malformed automaton file; `path` locates the offending field."""

    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


def resolve_max_states(value=None):
    """Effective state bound: explicit argument, else DUALMIN_MAX_STATES, else default."""
    if value is not None:
        return value
    env = os.environ.get(MAX_STATES_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_MAX_STATES
