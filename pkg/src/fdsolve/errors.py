"""Exception hierarchy.

Constraint failure is *not* an exception: kernel operations return ``False``
(or ``None`` for range constructors) when a domain would become empty.  The
classes below signal misuse of an API or input that cannot be processed.
"""


class FdError(Exception):
    """Base class for every error raised by the package."""


class ContractError(FdError):
    """An operation was called outside its precondition (a caller bug)."""


class IndeterminateBound(ContractError):
    """Extended-integer arithmetic with no defined result, e.g. ``0 * inf``."""


class FdSyntaxError(FdError):
    """Positioned syntax error shared by the indexical and model-file parsers."""

    def __init__(self, message, line=None, column=None, source=None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = ""
        if line is not None:
            where = f"{source + ':' if source else ''}{line}:{column}: "
        super().__init__(where + message)


class UnknownParameter(FdSyntaxError):
    pass


class UnsupportedConstraint(FdError):
    """The model compiler cannot express a relation (e.g. ``X*Y``)."""


class ClpfdTypeError(FdError, TypeError):
    """A model variable was unified with something that is not an integer."""


class SearchLimitExceeded(FdError):
    pass
