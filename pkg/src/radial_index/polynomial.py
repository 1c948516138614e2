"""Sparse polynomials with exact rational coefficients.

Input syntax is a sum of terms ``c*x^a*y^b``; rationals are written ``p/q``
and variables are declared by first use, which fixes their order.
"""

from __future__ import annotations

import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from radial_index.errors import DomainError

Exponent = tuple[int, ...]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    for number, name, other in _TOKEN.findall(text):
        if number:
            out.append(("num", number))
        elif name:
            out.append(("var", name))
        elif other.strip():
            out.append(("op", other))
    return out


@dataclass(frozen=True)
class PolynomialGerm:
    """Polynomial germ at the origin: no constant term, no zero coefficients."""

    variables: tuple[str, ...]
    terms: Mapping[Exponent, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        terms = {tuple(e): Fraction(c) for e, c in self.terms.items() if c != 0}
        for e in terms:
            if len(e) != len(self.variables):
                raise DomainError(f"exponent {e} does not match {len(self.variables)} variables")
            if any(a < 0 for a in e):
                raise DomainError(f"negative exponent in {e}")
        if terms.get((0,) * len(self.variables), 0) != 0:
            raise DomainError("a germ at the origin has no constant term")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def parse(cls, text: str) -> PolynomialGerm:
        tokens = _tokens(text)
        if not tokens:
            raise DomainError("empty polynomial")
        variables: list[str] = []
        terms: dict[tuple[int, ...], Fraction] = {}
        pos = 0

        def peek():
            return tokens[pos] if pos < len(tokens) else ("end", "")

        def take(kind: str | None = None, value: str | None = None):
            nonlocal pos
            tok = peek()
            if (kind and tok[0] != kind) or (value and tok[1] != value):
                got = tok[1] or "end of input"
                raise DomainError(f"unexpected {got!r} in polynomial {text!r}")
            pos += 1
            return tok

        raw: list[tuple[Fraction, dict[str, int]]] = []
        sign = 1
        if peek() in (("op", "+"), ("op", "-")):
            sign = -1 if take()[1] == "-" else 1
        while True:
            coeff = Fraction(sign)
            powers: dict[str, int] = {}
            while True:
                kind, value = peek()
                if kind == "num":
                    take()
                    num = Fraction(int(value))
                    if peek() == ("op", "/"):
                        take()
                        den = int(take("num")[1])
                        if den == 0:
                            raise DomainError("zero denominator")
                        num /= den
                    coeff *= num
                elif kind == "var":
                    take()
                    if value not in variables:
                        variables.append(value)
                    exp = 1
                    if peek() == ("op", "^"):
                        take()
                        exp = int(take("num")[1])
                    powers[value] = powers.get(value, 0) + exp
                else:
                    raise DomainError(f"unexpected {value or 'end of input'!r} in polynomial {text!r}")
                if peek() == ("op", "*"):
                    take()
                    continue
                break
            raw.append((coeff, powers))
            kind, value = peek()
            if kind == "end":
                break
            if (kind, value) not in (("op", "+"), ("op", "-")):
                raise DomainError(f"unexpected {value!r} in polynomial {text!r}")
            take()
            sign = -1 if value == "-" else 1

        for coeff, powers in raw:
            e = tuple(powers.get(v, 0) for v in variables)
            terms[e] = terms.get(e, Fraction(0)) + coeff
        return cls(tuple(variables), terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def partial(self, index: int) -> dict[Exponent, Fraction]:
        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            if e[index]:
                d = list(e)
                d[index] -= 1
                out[tuple(d)] = c * e[index]
        return out

    def permuted(self, order: Sequence[int]) -> PolynomialGerm:
        """Reorder variables so that new variable ``k`` is old variable ``order[k]``."""
        return PolynomialGerm(
            tuple(self.variables[i] for i in order),
            {tuple(e[i] for i in order): c for e, c in self.terms.items()},
        )

    def scaled(self, factor: Fraction | int) -> PolynomialGerm:
        if factor == 0:
            raise DomainError("scaling factor must be nonzero")
        return PolynomialGerm(self.variables, {e: c * factor for e, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), tuple(-a for a in e))):
            c = self.terms[e]
            mono = "*".join(
                v if a == 1 else f"{v}^{a}" for v, a in zip(self.variables, e) if a
            )
            mag = abs(c)
            text = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out
