"""Exception types shared by the library and the command line."""


class ValidationError(ValueError):
    """Bad input: wrong arguments, unsupported shapes, size limits."""


class ConsistencyError(RuntimeError):
    """An identity that must hold failed; always a bug or a counterexample."""
