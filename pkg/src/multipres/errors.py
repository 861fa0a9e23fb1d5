"""Exception hierarchy shared across the package."""


class MultipresError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(MultipresError, ValueError):
    """Grade vectors of mismatched length, or a parameter count out of range."""


class NoElementBelowError(MultipresError, ValueError):
    """lex_min_below was called with a bound that dominates no element.

    When this surfaces while building an induced face matrix it means the
    face condition is violated: a simplex is born before one of its facets.
    """


class EmptyIdealError(MultipresError, ValueError):
    """An empty antichain does not generate a monomial ideal."""


class NotAMultifiltrationError(MultipresError, ValueError):
    """Tabulated data is not monotone: a label disappears going up."""

    def __init__(self, label, present_at, absent_at):
        self.label = label
        self.present_at = tuple(present_at)
        self.absent_at = tuple(absent_at)
        super().__init__(
            "element %r occurs at grade %s but not at %s above it"
            % (label, self.present_at, self.absent_at)
        )


class IncompleteInputError(MultipresError, ValueError):
    """A simplex that needs an explicit birth antichain does not have one."""


class HomogeneityError(MultipresError, ValueError):
    """A graded matrix has a nonzero entry whose column grade does not
    dominate its row grade."""


class InternalInconsistencyError(MultipresError, RuntimeError):
    """An identity the construction guarantees failed to hold; a bug."""


class ParseError(MultipresError, ValueError):
    """Input is not syntactically valid JSON."""


class SchemaError(MultipresError, ValueError):
    """JSON input does not have the expected document shape."""


class ValidationFailedError(MultipresError, ValueError):
    """A multifiltered complex failed subcomplex validation.

    Carries the full report in ``self.report``.
    """

    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else None
        msg = "complex is not a multifiltration"
        if first is not None:
            msg += ": simplex %s born at %s before its facet %s (+%d more)" % (
                first.simplex,
                first.grade,
                first.facet,
                len(report.violations) - 1,
            )
        super().__init__(msg)


class UnsupportedDialectError(MultipresError, ValueError):
    """Requested export dialect is not available."""
