"""Exception hierarchy shared across the package.

Two broad classes matter to callers: InputError (bad files, bad syntax,
bad resource content; mapped to HTTP 400 / CLI exit 2) and
EvaluationError (inputs are well-formed but an evaluation run cannot
proceed; mapped to HTTP 422 / CLI exit 1).
"""


class TreesentError(Exception):
    """Base class for all package errors."""


class InputError(TreesentError):
    """Malformed or invalid input data."""


class ConlluParseError(InputError):
    """A CoNLL-U word line could not be parsed."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class ConlluStructureError(InputError):
    """Token lines parsed but do not form a valid dependency tree."""


class LexiconError(InputError):
    """A lexicon file failed validation."""


class CorpusError(InputError):
    """The corpus record file is unreadable or globally malformed."""


class ConfigError(InputError):
    """A configuration file contains invalid keys or values."""


class FocusSyntaxError(InputError):
    """An expression or model file could not be parsed."""


class FocusTypeError(InputError):
    """An expression is structurally invalid against the model."""


class FocusConstraintError(TreesentError):
    """A squiggle context is incompatible with the computed focus set."""


class EvaluationError(TreesentError):
    """An evaluation run cannot proceed on the given inputs."""


class AlignmentError(EvaluationError):
    """Corpus records and parse blocks do not align by review id."""
