class DomainError(ValueError):
    """n lies outside the supported domain (cube-free, prime to 3, two primes)."""

    hint = ""


class TooSmall(DomainError):
    hint = "n must be an integer greater than 1"


class DivisibleByThree(DomainError):
    hint = "remove the factor 3; only n prime to 3 is covered"


class NotCubeFree(DomainError):
    hint = "divide out cubes first: n and n/m^3 have the same cube-sum status"


class WrongFactorCount(DomainError):
    hint = "n must have exactly two distinct prime factors"


class InternalInconsistency(RuntimeError):
    """Two computations that must agree did not."""


class UnreachableCase(InternalInconsistency):
    pass
