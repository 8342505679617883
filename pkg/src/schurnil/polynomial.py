"""Sparse polynomials with exact rational coefficients.

Only two variable sets occur in this package: the univariate set ``("t",)``
for content polynomials and the bivariate set ``("alpha1", "alpha2")`` for
two-projector trace polynomials.  Coefficients are `fractions.Fraction`
throughout, so every operation is exact; no zero coefficient is ever
stored, and the zero polynomial has the sentinel degree ``None``.

Values are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

T_VARS = ("t",)
ALPHA_VARS = ("alpha1", "alpha2")

Scalar = Fraction | int


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact scalar, got {type(value).__name__}")


class Polynomial:
    """A polynomial stored as a map from exponent vectors to coefficients."""

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple[int, ...], Scalar] | None = None):
        self.variables = tuple(variables)
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exp, coeff in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != len(self.variables):
                    raise ValueError(
                        f"exponent vector {exp} does not match variables {self.variables}"
                    )
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                coeff = _as_fraction(coeff)
                if coeff:
                    clean[exp] = clean.get(exp, Fraction(0)) + coeff
                    if not clean[exp]:
                        del clean[exp]
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "Polynomial":
        return cls(variables)

    @classmethod
    def constant(cls, value: Scalar, variables: Iterable[str]) -> "Polynomial":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): _as_fraction(value)})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str]) -> "Polynomial":
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"{name!r} is not among {variables}")
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exp: Fraction(1)})

    # -- ring operations ------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise ValueError(
                    f"cannot mix variable sets {self.variables} and {other.variables}"
                )
            return other
        return Polynomial.constant(_as_fraction(other), self.variables)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + coeff
        return Polynomial(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, Fraction(0)) + c1 * c2
        return Polynomial(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = Polynomial.constant(1, self.variables)
        for _ in range(exponent):
            result = result * self
        return result

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        """Total degree; ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(exp) for exp in self.terms)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact evaluation at a point assigning every variable."""
        for name in point:
            if name not in self.variables:
                raise ValueError(f"unknown variable {name!r}, expected {self.variables}")
        values = []
        for name in self.variables:
            if name not in point:
                raise ValueError(f"missing assignment for variable {name!r}")
            values.append(_as_fraction(point[name]))
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exp):
                term *= v**e
            total += term
        return total

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    # -- presentation -----------------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exp, coeff in self._sorted_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, exp)
                if e
            )
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    # -- JSON wire format ---------------------------------------------------

    def to_json_dict(self) -> dict:
        """Serialize as ``{"vars": [...], "terms": [...]}`` with decimal-string
        numerators/denominators, leading term first."""
        return {
            "vars": list(self.variables),
            "terms": [
                {"exp": list(exp), "num": str(c.numerator), "den": str(c.denominator)}
                for exp, c in self._sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Polynomial":
        variables = tuple(data["vars"])
        terms: dict[tuple[int, ...], Fraction] = {}
        for item in data["terms"]:
            exp = tuple(int(e) for e in item["exp"])
            coeff = Fraction(int(item["num"]), int(item["den"]))
            terms[exp] = terms.get(exp, Fraction(0)) + coeff
        return cls(variables, terms)
