"""Exception hierarchy shared by all qpartition modules."""


class QPartitionError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QPartitionError, ValueError):
    """An argument is outside the domain an operation is defined on."""


class ResourceLimitError(QPartitionError):
    """A computation would exceed a configured resource bound."""


class SingularMatrixError(QPartitionError):
    """An exact linear solve hit a singular matrix."""

    def __init__(self, rank: int, size: int):
        self.rank = rank
        self.size = size
        super().__init__(f"singular matrix: rank {rank} < size {size}")


class IntegrityError(QPartitionError):
    """A proven-exact identity failed; indicates a corrupt formula or a bug."""


class PrecisionError(QPartitionError):
    """Working precision is too small for the requested evaluation."""


class CertificationError(QPartitionError):
    """The certified evaluator could not validate a result within its retry cap."""


class DatabaseError(QPartitionError):
    """Base class for formula-database storage errors."""


class DatabaseParseError(DatabaseError):
    """The database file is unreadable, truncated or structurally invalid."""


class DatabaseVersionError(DatabaseError):
    """The database file declares an unsupported format version."""


class DatabaseChecksumError(DatabaseError):
    """The database content does not match its recorded checksum."""


class RecordNotFoundError(DatabaseError):
    """No stored formula matches the requested kind and parameters."""
