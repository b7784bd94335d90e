"""Exception types shared across the package.

Plain value errors (bad hypotheses, malformed input) use ValueError /
ZeroDivisionError; the classes here carry extra payload that callers
want to inspect or print.
"""


class BudgetExceeded(RuntimeError):
    """An enumeration would scan more monic polynomials than allowed."""

    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumeration needs {required} candidates, budget is {budget}"
        )


class ReduciblePolynomial(ValueError):
    """A polynomial required to be irreducible is not; carries a factor."""

    def __init__(self, poly, factor):
        self.poly = poly
        self.factor = factor
        super().__init__(f"{poly} is not irreducible: divisible by {factor}")


class RamifiedPrime(ValueError):
    """Split/inert question asked at a prime dividing the element."""


class PoleAtPrime(ValueError):
    """Hasse symbol requested at a prime where the function has a pole."""


class NonGeometricExtension(RuntimeError):
    """The extension gains constants, so relative density is not guaranteed.

    `witness` holds the offending exponent tuple and the constant (or
    constant trace) it produces.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ParseError(ValueError):
    """Text input rejected; `pos` is the 0-based offset in the input."""

    def __init__(self, message, pos, text=None):
        self.pos = pos
        self.text = text
        super().__init__(f"at position {pos}: {message}")
