"""Exception types shared across modules."""


class IngletonError(ValueError):
    pass


class FieldError(IngletonError):
    pass


class FieldMismatchError(FieldError):
    pass


class GroupError(IngletonError):
    pass


class CapExceededError(IngletonError):
    """A computation would exceed a configured size cap."""


class FamilyError(IngletonError):
    """A construction was asked for outside its valid parameter range.

    ``kind`` is one of ``"collapsed"``, ``"rejected"``, ``"invalid"``.
    """

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


class NetworkError(IngletonError):
    pass


class CodeRequirementError(NetworkError):
    """A group network code fails one of its structural requirements."""


class SourceSymbolError(NetworkError):
    """A tuple of source symbols is not admissible for the code."""
