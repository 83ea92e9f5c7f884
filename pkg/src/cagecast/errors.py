"""Exception types shared across the package."""


class CagecastError(Exception):
    """Base class for every package-specific error."""


class LayoutMismatch(CagecastError):
    """A feature vector's layout does not match what the model expects."""


class MissingProfileField(CagecastError):
    """A fighter profile lacks age or height needed for winner features."""


class SingularInformation(CagecastError):
    """Information matrix is numerically singular even after ridge damping."""


class DegenerateLabels(CagecastError):
    """Targets do not contain enough distinct values to fit or score."""


class LengthMismatch(CagecastError):
    """Paired input sequences have different lengths."""


class SchemaError(CagecastError):
    """A data file does not match the documented column schema."""


class AmbiguousKey(CagecastError):
    """A scorecard join key matches more than one fight."""


class FightMismatch(CagecastError):
    """A snapshot was routed to a session for a different fight."""


class BoundaryMissing(CagecastError):
    """A per-round delta was requested before its boundary was frozen."""


class FixtureParseError(CagecastError):
    """A snapshot-log fixture line could not be parsed."""


class MappingError(CagecastError):
    """Feed field mapping is incomplete or a mapped path is absent."""


class FeedUnavailable(CagecastError):
    """Live feed stayed unreachable after the retry budget was spent."""


class InvalidOdds(CagecastError):
    """Decimal odds must be strictly greater than 1.0."""


class EmptyLedger(CagecastError):
    """Ledger statistics were requested for an empty ledger."""


class UnknownFight(CagecastError):
    """No live session exists for the requested fight id."""


class NoWinnerPredictionYet(CagecastError):
    """Odds were submitted before a winner probability was emitted."""


class ModelLoadError(CagecastError):
    """A model file is missing, malformed, or of an unknown kind."""


class BindError(CagecastError):
    """The service could not bind its listen address."""
