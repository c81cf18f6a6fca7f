"""Exception types shared across the package."""


class RandGaloisError(Exception):
    """Base class for every error raised by this package."""

    code = "error"

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class ZeroPolynomial(RandGaloisError, ValueError):
    code = "zero_polynomial"


class DegreeTooLow(RandGaloisError, ValueError):
    code = "degree_too_low"


class NotMonic(RandGaloisError, ValueError):
    code = "not_monic"


class NotSquarefree(RandGaloisError, ValueError):
    code = "not_squarefree"


class BadK(RandGaloisError, ValueError):
    code = "bad_k"


class NotAGroup(RandGaloisError, ValueError):
    code = "not_a_group"


class PrecisionExhausted(RandGaloisError, ArithmeticError):
    code = "precision_exhausted"


class BadPrime(RandGaloisError, ValueError):
    code = "bad_prime"


class FactorBudgetExceeded(RandGaloisError, ArithmeticError):
    code = "factor_budget_exceeded"


class InsufficientData(RandGaloisError, ValueError):
    code = "insufficient_data"


class ConfigError(RandGaloisError, ValueError):
    code = "config_rejected"
