"""Exception hierarchy. Every error carries a short machine-readable ``code``."""


class TwistedError(Exception):
    code = "TwistedError"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


class LoopError(TwistedError, ValueError):
    code = "Loop"


class VertexRangeError(TwistedError, ValueError):
    code = "VertexOutOfRange"


class NotPlaneError(TwistedError, ValueError):
    code = "NotPlane"


class NotMaximalError(TwistedError, ValueError):
    code = "NotMaximal"


class LimitExceededError(TwistedError, ValueError):
    code = "LimitExceeded"


class OddVertexCountError(TwistedError, ValueError):
    code = "OddVertexCount"


class MismatchedAmbientError(TwistedError, ValueError):
    code = "MismatchedAmbient"


class NotAMatchingError(TwistedError, ValueError):
    code = "NotAMatching"


class UnknownNodeError(TwistedError, KeyError):
    code = "UnknownNode"

    def __str__(self):
        return Exception.__str__(self)


class EmptyGraphError(TwistedError, ValueError):
    code = "EmptyGraph"


class NoPathError(TwistedError):
    code = "NoPath"


class FixedSetViolation(TwistedError, ValueError):
    code = "FixedSetViolation"


class NoPerfectMatchingError(TwistedError, ValueError):
    code = "NoPerfectMatching"


class ClaimViolation(TwistedError):
    """A constructed exchange step failed validation.

    ``step`` is the index of the failing step along the segment being built,
    ``edges`` the offending edge list and ``reason`` a short tag.
    """

    code = "ClaimViolation"

    def __init__(self, reason, *, step=None, pivot=None, edges=None, removed=None, added=None):
        self.reason = reason
        self.step = step
        self.pivot = pivot
        self.edges = edges
        self.removed = removed
        self.added = added
        super().__init__(
            f"{reason} (pivot={pivot}, step={step}, removed={removed}, "
            f"added={added}, edges={edges})"
        )

    def to_dict(self):
        d = super().to_dict()
        d.update(
            reason=self.reason,
            step=self.step,
            pivot=self.pivot,
            edges=[list(e) for e in self.edges] if self.edges is not None else None,
            removed=list(self.removed) if self.removed is not None else None,
            added=list(self.added) if self.added is not None else None,
        )
        return d


class InvalidPathError(TwistedError, ValueError):
    code = "InvalidPath"
