# Copyright (c) 2025, Robert Begg
# Licensed under the MIT License. See LICENSE for more details.
"""
Exception hierarchy for siegel-traces.

Every error raised on purpose by the package derives from SiegelTracesError, so
the command line layer can tell an operational failure (exit code 2) from a
mathematical mismatch (exit code 1, which is a report outcome, not an error).
"""


class SiegelTracesError(Exception):
    """Base class for all errors raised by siegel-traces."""


# --- Finite fields and polynomials ---

class FieldError(SiegelTracesError):
    pass


class EvenCharacteristic(FieldError):
    def __init__(self, p: int):
        super().__init__(f"Characteristic {p} is even; only odd characteristic is supported.")
        self.p = p


class NotPrime(FieldError):
    def __init__(self, p: int):
        super().__init__(f"{p} is not a prime.")
        self.p = p


class InvalidDegree(FieldError):
    def __init__(self, n: int, max_degree: int):
        super().__init__(f"Extension degree {n} is outside 1..{max_degree}.")
        self.n = n


class CapExceeded(FieldError):
    def __init__(self, q: int, cap: int, what: str = "field size"):
        super().__init__(f"{what} {q} exceeds the configured cap {cap}.")
        self.q = q
        self.cap = cap


class NotSquarefree(SiegelTracesError):
    def __init__(self, coeffs):
        super().__init__(f"Polynomial with coefficients {list(coeffs)} is not squarefree.")
        self.coeffs = tuple(coeffs)


# --- Census tallies ---

class TallyError(SiegelTracesError):
    pass


class MissingEntry(TallyError):
    def __init__(self, key, weight_cap: int):
        super().__init__(f"Tally has no entry {key}; its weight cap is {weight_cap}.")
        self.key = key


class CorruptFile(TallyError):
    pass


class VariantMismatch(TallyError):
    pass


class StratumMismatch(TallyError):
    def __init__(self, expected: str, found: str):
        super().__init__(f"Expected a {expected} tally, found {found}.")
        self.expected = expected
        self.found = found


class TallyMergeError(TallyError):
    pass


class MissingTally(TallyError):
    pass


class MissingCache(TallyError):
    pass


# --- Representations ---

class OddWeight(SiegelTracesError):
    def __init__(self, *weight):
        super().__init__(f"Weight {weight} has odd total; the cohomology vanishes.")
        self.weight = weight


# --- Modular forms ---

class ModularFormError(SiegelTracesError):
    pass


class NonIntegralOffset(ModularFormError):
    pass


class SpanDeficient(ModularFormError):
    def __init__(self, level: int, weight: int, rank: int, expected: int):
        super().__init__(
            f"Basis for S_{weight}(Gamma0({level})) has rank {rank}, expected {expected}."
        )


class IrrationalEigenvalue(ModularFormError):
    pass


class MissingEigenData(ModularFormError):
    pass


# --- Traces, checks and calibration ---

class NonIntegralTrace(SiegelTracesError):
    pass


class NoVariantFits(SiegelTracesError):
    pass


class MissingData(SiegelTracesError):
    pass


class UsageError(SiegelTracesError):
    pass


class WeilBoundViolation(SiegelTracesError):
    """A counted curve broke the Weil bound or the a2 parity; the census is wrong."""
