"""Sparse multivariate polynomials over exact rationals (at most 3 variables).

Terms are stored as a map from exponent tuples to nonzero Fraction
coefficients.  The text grammar accepted by :func:`parse_poly` covers the
input syntax used throughout this package:

    poly    := term (('+' | '-') term)*       (optional leading sign)
    term    := factor ('*' factor)*
    factor  := base ('^' natural)?
    base    := integer | variable | '(' poly ')'

Variables are x, y, z (the first ``nvars`` of them).  Whitespace is ignored.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PolySyntaxError, TooManyVariables

VAR_NAMES = ("x", "y", "z")
MAX_VARS = 3


@dataclass(frozen=True)
class Poly:
    terms: dict[tuple[int, ...], Fraction] = field(default_factory=dict)
    nvars: int = 2

    def __post_init__(self):
        if self.nvars > MAX_VARS:
            raise TooManyVariables(f"at most {MAX_VARS} variables supported")

    @staticmethod
    def zero(nvars: int) -> "Poly":
        return Poly({}, nvars)

    @staticmethod
    def constant(c, nvars: int) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly.zero(nvars)
        return Poly({(0,) * nvars: c}, nvars)

    @staticmethod
    def monomial(exps: tuple[int, ...], coeff=1) -> "Poly":
        coeff = Fraction(coeff)
        if coeff == 0:
            return Poly.zero(len(exps))
        return Poly({tuple(exps): coeff}, len(exps))

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(out, self.nvars)

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(out, self.nvars)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return Poly.zero(self.nvars)
        return Poly({e: c * t for e, t in self.terms.items()}, self.nvars)

    def derivative(self, var: int) -> "Poly":
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            if e[var] == 0:
                continue
            de = list(e)
            de[var] -= 1
            out[tuple(de)] = c * e[var]
        return Poly(out, self.nvars)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True):
            c = self.terms[e]
            factors = []
            for v, p in enumerate(e):
                if p == 1:
                    factors.append(VAR_NAMES[v])
                elif p > 1:
                    factors.append(f"{VAR_NAMES[v]}^{p}")
            if not factors:
                body = str(abs(c))
            else:
                mono = "*".join(factors)
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        head = parts[0]
        head = "-" + head[2:] if head.startswith("- ") else head[2:]
        return " ".join([head] + parts[1:])


def jacobian(f: Poly) -> list[Poly]:
    """All first partial derivatives of f, one per variable."""
    return [f.derivative(v) for v in range(f.nvars)]


class _Parser:
    def __init__(self, text: str, nvars: int):
        if nvars < 1 or nvars > MAX_VARS:
            raise TooManyVariables(f"nvars must be in [1, {MAX_VARS}]")
        self.text = text
        self.pos = 0
        self.nvars = nvars

    def error(self, message):
        raise PolySyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def parse(self) -> Poly:
        p = self.parse_sum()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return p

    def parse_sum(self) -> Poly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        p = self.parse_term().scale(sign)
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.parse_term()
            p = p - t if op == "-" else p + t
        return p

    def parse_term(self) -> Poly:
        p = self.parse_factor()
        while self.peek() == "*":
            self.take()
            p = p * self.parse_factor()
        return p

    def parse_factor(self) -> Poly:
        base = self.parse_base()
        if self.peek() == "^":
            self.take()
            exp = self.parse_natural()
            return base ** exp
        return base

    def parse_base(self) -> Poly:
        ch = self.peek()
        if ch == "(":
            self.take()
            p = self.parse_sum()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return p
        if ch.isdigit():
            return Poly.constant(self.parse_natural(), self.nvars)
        if ch in VAR_NAMES:
            idx = VAR_NAMES.index(ch)
            if idx >= self.nvars:
                self.error(f"variable {ch!r} not available with nvars={self.nvars}")
            self.take()
            exps = [0] * self.nvars
            exps[idx] = 1
            return Poly.monomial(tuple(exps))
        self.error("expected a number, variable, or '('")

    def parse_natural(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a natural number")
        return int(self.text[start:self.pos])


def parse_poly(text: str, nvars: int = 2) -> Poly:
    """Parse and fully expand a polynomial expression."""
    return _Parser(text, nvars).parse()
