"""Exception types shared across the toolkit.

Everything raised for bad data derives from :class:`CorefKitError` so the
command line layer can map it to a single exit code.
"""


class CorefKitError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(CorefKitError):
    """A document or corpus violates a structural invariant."""

    def __init__(self, message, issues=()):
        super().__init__(message)
        self.issues = list(issues)


class EmptyCorpusError(CorefKitError):
    """An operation needs at least one document and got none."""

    def __init__(self, message, diagnostics=()):
        super().__init__(message)
        self.diagnostics = list(diagnostics)


class LexiconFormatError(CorefKitError):
    """A noun lexicon file could not be parsed."""


class ConfigFormatError(CorefKitError):
    """A classifier configuration file could not be parsed."""


class UnknownParadigmError(CorefKitError, KeyError):
    """A pronoun paradigm name is not in the registry."""


class AlignmentError(CorefKitError):
    """Gold and predicted corpora do not line up."""
