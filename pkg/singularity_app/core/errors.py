class GermError(Exception):
    """Base error for everything the library raises on bad input."""

    code = "germ-error"

    def __init__(self, message: str, location: str | None = None) -> None:
        self.message = message
        self.location = location
        super().__init__(self.describe())

    def describe(self) -> str:
        if self.location:
            return f"{self.location}: {self.message}"
        return self.message


class InvalidGraph(GermError):
    code = "invalid-graph"


class NotNegativeDefinite(GermError):
    code = "not-negative-definite"


class NotMinimalResolution(GermError):
    code = "not-minimal-resolution"


class SingularMatrix(GermError):
    code = "singular-matrix"


class InvalidM(GermError):
    code = "invalid-m"


class InvalidBoundary(GermError):
    code = "invalid-boundary"


class EmptyDy(GermError):
    code = "empty-dy"


class GermParseError(GermError):
    code = "parse-error"


class MissingDData(GermError):
    code = "missing-d-data"


class MuUndefined(GermError):
    code = "mu-undefined"
