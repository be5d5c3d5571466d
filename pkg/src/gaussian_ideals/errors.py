from __future__ import annotations


class GaussianIdealsError(Exception):
    pass


class FieldError(GaussianIdealsError, ZeroDivisionError):
    pass


class RingMismatchError(GaussianIdealsError, ValueError):
    pass


class BudgetExceededError(GaussianIdealsError, RuntimeError):
    def __init__(self, resource: str, limit: float) -> None:
        super().__init__(f"budget exceeded: {resource} (limit {limit})")
        self.resource = resource
        self.limit = limit

    def __reduce__(self):
        return (self.__class__, (self.resource, self.limit))


class UnitIdealError(GaussianIdealsError, ValueError):
    pass


class NotHomogeneousError(GaussianIdealsError, ValueError):
    pass


class NotAReductionError(GaussianIdealsError, ValueError):
    pass


class NotArtinianError(GaussianIdealsError, RuntimeError):
    pass


class ParseError(GaussianIdealsError, ValueError):
    pass
