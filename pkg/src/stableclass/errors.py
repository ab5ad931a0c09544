"""Exception hierarchy. Every error carries a stable machine-readable ``code``."""

from __future__ import annotations


class StableClassError(Exception):
    code = "error"

    def to_dict(self) -> dict:
        return {"code": self.code, "message": str(self)}


class InvalidArgument(StableClassError, ValueError):
    code = "invalid-argument"


class FactorizationIncomplete(StableClassError):
    code = "factorization-incomplete"

    def __init__(self, n: int, cofactor: int):
        super().__init__(f"could not split composite cofactor {cofactor} of {n} within the effort bound")
        self.n = n
        self.cofactor = cofactor


class BoundaryNotStandardSphere(StableClassError):
    code = "boundary-not-standard-sphere"


class HypothesisViolation(StableClassError):
    code = "hypothesis-violation"


class NotCharacteristic(StableClassError, ValueError):
    code = "not-characteristic"


class NotCharacteristicSquare(StableClassError):
    code = "not-characteristic-square"
