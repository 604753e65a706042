"""Exact sparse multivariate polynomials over QQ or GF(p).

A polynomial is a map from exponent tuples (one entry per declared variable)
to nonzero field coefficients.  The variable list is fixed at construction
and shared by everything downstream; mixing polynomials over different rings
raises instead of coercing.

Text grammar (parse/render round-trip exactly):

    expr   := ['+'|'-'] term { ('+'|'-') term }
    term   := power { ('*'|'/') power }      # '/' only by a nonzero constant
    power  := atom { '^' INT }
    atom   := INT | NAME | '(' expr ')' | '-' atom

Rendering lists variables in declared order inside each term and orders terms
by descending graded reverse lexicographic rank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ExponentOverflowError,
    ParseError,
    UnknownVariableError,
    VariableMismatchError,
)
from .fields import QQ, GF, PrimeField, RationalField

# Exponents are capped well inside a machine word; the examples this library
# targets are low-degree, so hitting the cap signals a runaway computation.
MAX_EXPONENT = 2**30


@dataclass(frozen=True)
class Ring:
    """A polynomial ring: ordered variable names over an exact field."""

    variables: tuple[str, ...]
    field: RationalField | PrimeField = QQ

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise VariableMismatchError(f"duplicate variables in {self.variables}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        value = self.field.from_int(c) if isinstance(c, int) else c
        if self.field.is_zero(value):
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: value})

    def variable(self, name: str) -> "Polynomial":
        try:
            i = self.variables.index(name)
        except ValueError:
            raise VariableMismatchError(f"unknown variable {name!r}") from None
        exp = [0] * self.nvars
        exp[i] = 1
        return Polynomial(self, {tuple(exp): self.field.one})

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise VariableMismatchError(f"unknown variable {name!r}") from None


def _grevlex_key(exp: tuple[int, ...]):
    return (sum(exp), tuple(-e for e in reversed(exp)))


class Polynomial:
    """Immutable sparse polynomial; all arithmetic is exact."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if not ring.field.is_zero(c)}

    # -- basics --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def _check_ring(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise VariableMismatchError(
                f"mixed rings: {self.ring.variables} vs {other.ring.variables}"
            )

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        field = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = field.add(out.get(e, field.zero), c)
        return Polynomial(self.ring, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        field = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = field.sub(out.get(e, field.zero), c)
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        field = self.ring.field
        return Polynomial(self.ring, {e: field.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        field = self.ring.field
        out: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                if any(x > MAX_EXPONENT for x in e):
                    raise ExponentOverflowError(f"exponent above {MAX_EXPONENT}")
                out[e] = field.add(out.get(e, field.zero), field.mul(ca, cb))
        return Polynomial(self.ring, out)

    def scale(self, c) -> "Polynomial":
        field = self.ring.field
        if field.is_zero(c):
            return self.ring.zero()
        return Polynomial(self.ring, {e: field.mul(v, c) for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative exponent")
        if n > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent above {MAX_EXPONENT}")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def mul_term(self, exp: tuple[int, ...], coeff) -> "Polynomial":
        """Multiply by a single term (used heavily by the basis algorithms)."""
        field = self.ring.field
        out = {}
        for e, c in self.terms.items():
            ne = tuple(x + y for x, y in zip(e, exp))
            if any(x > MAX_EXPONENT for x in ne):
                raise ExponentOverflowError(f"exponent above {MAX_EXPONENT}")
            out[ne] = field.mul(c, coeff)
        return Polynomial(self.ring, out)

    # -- calculus and substitution ---------------------------------------

    def partial(self, var: str) -> "Polynomial":
        """Formal partial derivative with respect to a declared variable."""
        i = self.ring.index(var)
        field = self.ring.field
        out: dict = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
            coeff = field.mul(c, field.from_int(e[i]))
            if not field.is_zero(coeff):
                out[ne] = field.add(out.get(ne, field.zero), coeff)
        return Polynomial(self.ring, out)

    def substitute(self, var: str, value: "Polynomial") -> "Polynomial":
        return self.compose({var: value})

    def compose(self, mapping: dict[str, "Polynomial"]) -> "Polynomial":
        """Simultaneously substitute polynomials for variables."""
        ring = self.ring
        images = []
        for name in ring.variables:
            img = mapping.get(name)
            if img is None:
                images.append(ring.variable(name))
            else:
                self._check_ring(img)
                images.append(img)
        result = ring.zero()
        for e, c in self.terms.items():
            term = ring.constant(1).scale(c)
            for img, k in zip(images, e):
                if k:
                    term = term * img**k
            result = result + term
        return result

    def evaluate(self, point: dict[str, int]):
        """Evaluate at a point with integer coordinates; returns a field value."""
        field = self.ring.field
        total = field.zero
        for e, c in self.terms.items():
            value = c
            for name, k in zip(self.ring.variables, e):
                if k:
                    base = field.from_int(point.get(name, 0))
                    for _ in range(k):
                        value = field.mul(value, base)
            total = field.add(total, value)
        return total

    # -- content and normal forms ----------------------------------------

    def monomial_content(self) -> tuple[int, ...]:
        """Componentwise minimum exponent over the support (zero poly: all 0)."""
        if not self.terms:
            return (0,) * self.ring.nvars
        exps = list(self.terms)
        return tuple(min(e[i] for e in exps) for i in range(self.ring.nvars))

    def strip_monomial_content(self) -> "Polynomial":
        content = self.monomial_content()
        if not any(content):
            return self
        out = {tuple(x - y for x, y in zip(e, content)): c for e, c in self.terms.items()}
        return Polynomial(self.ring, out)

    def sorted_terms(self, key=_grevlex_key) -> list:
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def primitive(self) -> "Polynomial":
        """Scalar-normalize: integer coprime coefficients over QQ with positive
        leading (grevlex) coefficient; monic over GF(p).  Used to present ideal
        generators; the ideal generated is unchanged."""
        if not self.terms:
            return self
        field = self.ring.field
        if isinstance(field, PrimeField):
            lead = self.sorted_terms()[0][1]
            return self.scale(field.inv(lead))
        from math import gcd

        denom_lcm = 1
        for c in self.terms.values():
            denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
        num_gcd = 0
        for c in self.terms.values():
            num_gcd = gcd(num_gcd, abs(c.numerator * (denom_lcm // c.denominator)))
        scalar = QQ.from_int(denom_lcm) / num_gcd
        out = self.scale(scalar)
        if out.sorted_terms()[0][1] < 0:
            out = -out
        return out

    # -- rendering -------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        field = self.ring.field
        pieces: list[str] = []
        for e, c in self.sorted_terms():
            factors = [
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(self.ring.variables, e)
                if k
            ]
            if isinstance(field, RationalField):
                negative = c < 0
                magnitude = -c if negative else c
                coeff_str = str(magnitude)
            else:
                negative = False
                coeff_str = field.to_str(c)
            if factors and coeff_str == "1":
                body = "*".join(factors)
            elif factors:
                body = "*".join([coeff_str] + factors)
            else:
                body = coeff_str
            sign = "-" if negative else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += sign + body
        return text

    def __repr__(self) -> str:  # pragma: no cover
        return f"Polynomial({self.render()!r})"


# -- parsing -------------------------------------------------------------


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        self._scan()
        self.index = 0

    def _scan(self) -> None:
        text = self.text
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.tokens.append(("INT", text[i:j], i))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.tokens.append(("NAME", text[i:j], i))
                i = j
                continue
            if ch == "−":  # unicode minus
                ch = "-"
            if ch in "+-*/^()":
                self.tokens.append((ch, ch, i))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r}", i)

    def peek(self) -> tuple[str, str, int]:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return ("EOF", "", len(self.text))

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        self.index += 1
        return tok


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.toks = _Tokenizer(text)
        self.ring = ring

    def parse(self) -> Polynomial:
        result = self.expr()
        kind, value, pos = self.toks.peek()
        if kind != "EOF":
            raise ParseError(f"unexpected token {value!r}", pos)
        return result

    def expr(self) -> Polynomial:
        kind, _, _ = self.toks.peek()
        negate = False
        if kind in ("+", "-"):
            self.toks.next()
            negate = kind == "-"
        result = self.term()
        if negate:
            result = -result
        while True:
            kind, _, _ = self.toks.peek()
            if kind == "+":
                self.toks.next()
                result = result + self.term()
            elif kind == "-":
                self.toks.next()
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.power()
        while True:
            kind, _, pos = self.toks.peek()
            if kind == "*":
                self.toks.next()
                result = result * self.power()
            elif kind == "/":
                self.toks.next()
                divisor = self.power()
                if not divisor.is_constant() or divisor.is_zero():
                    raise ParseError("division only by a nonzero constant", pos)
                result = result.scale(self.ring.field.inv(divisor.constant_term()))
            else:
                return result

    def power(self) -> Polynomial:
        base = self.atom()
        while self.toks.peek()[0] == "^":
            self.toks.next()
            kind, value, pos = self.toks.next()
            if kind != "INT":
                raise ParseError("exponent must be a nonnegative integer", pos)
            n = int(value)
            if n > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent above {MAX_EXPONENT}")
            base = base**n
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.toks.next()
        if kind == "INT":
            return self.ring.constant(int(value))
        if kind == "NAME":
            if value not in self.ring.variables:
                raise UnknownVariableError(f"unknown variable {value!r}", pos)
            return self.ring.variable(value)
        if kind == "(":
            inner = self.expr()
            kind2, _, pos2 = self.toks.next()
            if kind2 != ")":
                raise ParseError("expected ')'", pos2)
            return inner
        if kind == "-":
            return -self.atom()
        raise ParseError(f"unexpected token {value!r}", pos)


def parse(text: str, variables, field=QQ) -> Polynomial:
    """Parse an expression over the given ordered variables."""
    ring = variables if isinstance(variables, Ring) else Ring(tuple(variables), field)
    return _Parser(text, ring).parse()
