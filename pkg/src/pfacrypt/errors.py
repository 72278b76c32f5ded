"""Exception types raised across the package."""


class PfaError(Exception):
    """Base class for all domain errors."""


class InvalidAutomaton(PfaError, ValueError):
    pass


class BudgetExceeded(PfaError):
    """A bounded search ran out of budget before reaching a verdict."""

    def __init__(self, message, visited=0):
        super().__init__(message)
        self.visited = visited


class InvalidPublicKey(PfaError):
    pass


class RetriesExhausted(PfaError):
    def __init__(self, attempts):
        super().__init__(f"no valid key pair after {attempts} attempts")
        self.attempts = attempts


class NotDecryptingWord(PfaError):
    """The word is undefined somewhere on the ciphertext."""


class MalformedCiphertext(PfaError):
    pass


class StructureUnresolved(PfaError):
    pass

