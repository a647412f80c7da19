"""Exception types shared across the package."""


class NearoctError(Exception):
    """Base class for all package errors."""


# --- permutation / generator parsing ---------------------------------------


class Malformed(NearoctError):
    pass


class RepeatedPoint(Malformed):
    pass


class OutOfRange(Malformed):
    pass


class DegreeMismatch(NearoctError):
    pass


# --- group searches ---------------------------------------------------------


class BudgetExhausted(NearoctError):
    pass


class NotCommuting(NearoctError):
    pass


class ClassSizeMismatch(NearoctError):
    pass


# --- geometry construction ---------------------------------------------------


class NotNearPolygon(NearoctError):
    pass


class Disconnected(NearoctError):
    pass


class SpreadViolation(NearoctError):
    pass


class LineCountMismatch(NearoctError):
    pass


class UnexpectedOrbitalCount(NearoctError):
    pass


class NonQuadClosure(NearoctError):
    pass


class AxiomFailure(NearoctError):
    pass


class ClosureNotHJ(NearoctError):
    pass


class CountMismatch(NearoctError):
    pass


class IntegrityFailure(NearoctError):
    """A structural fact the constructions guarantee failed to hold."""


class NoneFound(NearoctError):
    pass


class ValidationFailure(NearoctError):
    pass


class UnexpectedIntersection(NearoctError):
    pass


class ClassificationFailure(NearoctError):
    pass


class FamilySizeMismatch(NearoctError):
    pass


# --- valuations --------------------------------------------------------------


class IndexMismatch(NearoctError):
    pass


class NotAValuation(NearoctError):
    pass


class NotNeighboring(NearoctError):
    pass


class TableMismatch(NearoctError):
    pass


# --- workbench ---------------------------------------------------------------


class MissingCache(NearoctError):
    pass
