"""Spectrum generators for the four explicit singularity families.

Each generator returns a :class:`TjurinaInstance`: the complete spectrum,
the Tjurina index subset (when it is known combinatorially), the Tjurina
number, and the defining polynomial so that every instance can be
cross-checked by the local-algebra engine.

Index convention: within a group of equal spectral values the Tjurina
members are placed first, so the Tjurina subset is an initial run of each
level; this is the normal form the downstream index-based operations rely
on, and it does not change any value multiset.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from . import localg
from .errors import (Condition81Violated, DegenerateExponent, GcdViolation,
                     InternalConsistencyError, InvalidFamilyParameters)
from .poly import Poly, parse_poly
from .spectra import Spectrum, make_spectrum


@dataclass(frozen=True)
class TjurinaInstance:
    spectrum: Spectrum
    tjurina_indices: Optional[frozenset[int]]  # 1-based; None when unknown
    tau: int
    defining_poly: Optional[Poly]
    family_tag: str

    @property
    def mu(self) -> int:
        return self.spectrum.mu

    def tjurina_values(self) -> list[Fraction]:
        if self.tjurina_indices is None:
            raise InternalConsistencyError("Tjurina subset unset")
        return [self.spectrum.value_at(i) for i in sorted(self.tjurina_indices)]


@dataclass(frozen=True)
class SwhParams:
    """Deformation x^a + y^b + x^(a-1-c) y^(b-1-d) of a Brieskorn point."""
    a: int
    b: int
    c: int
    d: int

    def validate(self):
        if min(self.a, self.b) < 2:
            raise DegenerateExponent(f"need a, b >= 2, got ({self.a}, {self.b})")
        if self.c < 1 or self.d < 1:
            raise InvalidFamilyParameters("c and d must be positive")
        if not (2 * self.c < self.a and 2 * self.d < self.b):
            raise InvalidFamilyParameters(
                f"need c < a/2 and d < b/2, got (a,b,c,d)=({self.a},{self.b},{self.c},{self.d})")
        a, b, c, d = self.a, self.b, self.c, self.d
        if Fraction(a - 1 - c, a) + Fraction(b - 1 - d, b) <= 1:
            raise InvalidFamilyParameters(
                "the perturbing monomial is not above the weighted degree: "
                f"(a-1-c)/a + (b-1-d)/b <= 1 for (a,b,c,d)=({a},{b},{c},{d})")


@dataclass(frozen=True)
class ThreeMonomialParams:
    """Newton non-degenerate f = x^a y^b + x^c + y^d."""
    a: int
    b: int
    c: int
    d: int

    def validate(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        if not (2 <= a < b):
            raise InvalidFamilyParameters(f"need 2 <= a < b, got ({a}, {b})")
        if a * d + b * c >= c * d:  # a/c + b/d < 1
            raise InvalidFamilyParameters(
                f"need a/c + b/d < 1, got (a,b,c,d)=({a},{b},{c},{d})")


@dataclass(frozen=True)
class PuiseuxParams:
    """Irreducible plane curve branch with Puiseux pairs (a, b), (c, d)."""
    a: int
    b: int
    d: int
    q: int
    r: int

    @property
    def c(self) -> int:
        return self.b * self.q + self.a * self.r

    @property
    def e(self) -> int:
        return self.a * self.b * self.d + self.c

    def validate(self):
        if not (self.a > self.b > self.r > 0):
            raise InvalidFamilyParameters(f"need a > b > r > 0, got ({self.a}, {self.b}, {self.r})")
        if self.d < 1:
            raise InvalidFamilyParameters("d must be positive")
        if self.a * self.d + self.q <= 0:
            raise InvalidFamilyParameters(f"need a*d + q > 0, got {self.a * self.d + self.q}")
        if self.c <= 0:
            raise InvalidFamilyParameters(f"need c = b*q + a*r > 0, got {self.c}")
        if gcd(self.a, self.b) != 1:
            raise GcdViolation(f"gcd(a, b) = {gcd(self.a, self.b)} != 1")
        if gcd(self.c, self.d) != 1:
            raise GcdViolation(f"gcd(c, d) = {gcd(self.c, self.d)} != 1")


def _sorted_with_initial_tjurina(pairs):
    """Sort (value, is_tjurina) pairs; ties put Tjurina members first.

    Returns the sorted value tuple and the 1-based Tjurina index set.
    """
    ordered = sorted(pairs, key=lambda p: (p[0], not p[1]))
    values = tuple(v for v, _ in ordered)
    indices = frozenset(i + 1 for i, (_, tj) in enumerate(ordered) if tj)
    return values, indices


def brieskorn_two_var(a: int, b: int) -> Spectrum:
    """Complete spectrum {i/a + j/b} of x^a + y^b."""
    if a < 2 or b < 2:
        raise DegenerateExponent(f"need a, b >= 2, got ({a}, {b})")
    values = [Fraction(i, a) + Fraction(j, b)
              for i in range(1, a) for j in range(1, b)]
    return make_spectrum(values, n=2, complete=True)


def swh_instance(params: SwhParams, cross_check: bool = False) -> TjurinaInstance:
    """Semi-weighted-homogeneous instance x^a + y^b + x^(a-1-c) y^(b-1-d).

    The spectrum is that of x^a + y^b (invariance of the spectrum under
    mu-constant deformation); a pair (i, j) contributes a Tjurina index
    exactly when i < a - c or j < b - d.
    """
    params.validate()
    a, b, c, d = params.a, params.b, params.c, params.d
    pairs = [(Fraction(i, a) + Fraction(j, b), i < a - c or j < b - d)
             for i in range(1, a) for j in range(1, b)]
    values, t_indices = _sorted_with_initial_tjurina(pairs)
    spectrum = make_spectrum(values, n=2, complete=True)

    tau = (a - 1) * (b - 1) - c * d
    if len(t_indices) != tau:
        raise InternalConsistencyError("Tjurina count disagrees with (a-1)(b-1) - cd")
    # closed-form check on the Tjurina value sum
    expected_sum = ((a - 1) * (b - 1)
                    - (Fraction(2 * a - 1 - c, a) + Fraction(2 * b - 1 - d, b)) * c * d / 2)
    actual_sum = sum((spectrum.value_at(i) for i in t_indices), Fraction(0))
    if actual_sum != expected_sum:
        raise InternalConsistencyError("Tjurina value sum disagrees with the closed form")

    f = (parse_poly(f"x^{a}+y^{b}")
         + Poly.monomial((a - 1 - c, b - 1 - d)))
    if cross_check:
        if localg.milnor(f) != spectrum.mu or localg.tjurina(f) != tau:
            raise InternalConsistencyError(
                f"local-algebra engine disagrees with (mu, tau) = ({spectrum.mu}, {tau})")
    return TjurinaInstance(spectrum, t_indices, tau, f, f"swh({a},{b},{c},{d})")


def _three_monomial_lattice(params: ThreeMonomialParams):
    """Yield (spectral value, is_tjurina) over the lattice set Lambda.

    Lambda_0 sits on the diagonal i/a = j/b, Lambda_1 under it (value
    i/c + j(c-a)/(bc)), Lambda_2 over it (value j/d + i(d-b)/(ad)); the
    Tjurina part drops the points with nu_1 > a, nu_1 > c, nu_2 > d
    respectively, plus the extra wall {nu_1 = c, nu_2 >= d-b+1} when
    2b > d + 1.
    """
    a, b, c, d = params.a, params.b, params.c, params.d
    g = gcd(a, b)
    for k in range(1, 2 * g):
        yield Fraction(k, g), k <= g  # point (k*a/g, k*b/g)
    for j in range(1, b):
        # a*j/b < i < a*j/b + c
        for i in range(a * j // b + 1, -((-a * j - b * c) // b)):
            tj = i < c or (i == c and (2 * b <= d + 1 or j <= d - b))
            yield Fraction(i, c) + Fraction(j * (c - a), b * c), tj
    for i in range(1, a):
        # b*i/a < j < b*i/a + d
        for j in range(b * i // a + 1, -((-b * i - a * d) // a)):
            yield Fraction(j, d) + Fraction(i * (d - b), a * d), j <= d


def three_monomial_instance(params: ThreeMonomialParams,
                            cross_check: bool = False) -> TjurinaInstance:
    """Instance for f = x^a y^b + x^c + y^d via Newton-polygon lattice sets.

    With cross_check the local-algebra engine recomputes mu and tau:
    a mu mismatch is an internal error, while a tau mismatch raises
    Condition81Violated (the filtered-basis condition fails).
    """
    params.validate()
    a, b, c, d = params.a, params.b, params.c, params.d
    pairs = list(_three_monomial_lattice(params))
    values, t_indices = _sorted_with_initial_tjurina(pairs)
    spectrum = make_spectrum(values, n=2, complete=True)
    tau = len(t_indices)
    if spectrum.mu - tau != (a - 1) * (b - 1) + max(2 * b - d - 1, 0):
        raise InternalConsistencyError("lattice exclusion count disagrees with the closed form")

    f = parse_poly(f"x^{a}*y^{b}+x^{c}+y^{d}")
    if cross_check:
        if localg.milnor(f) != spectrum.mu:
            raise InternalConsistencyError(
                f"|Lambda| = {spectrum.mu} but the Milnor number differs")
        tau_engine = localg.tjurina(f)
        if tau_engine != tau:
            raise Condition81Violated(
                f"lattice tau = {tau} but the engine computes {tau_engine} "
                f"for (a,b,c,d)=({a},{b},{c},{d})")
    return TjurinaInstance(spectrum, t_indices, tau, f, f"three_monomial({a},{b},{c},{d})")


def puiseux_spectrum(params: PuiseuxParams) -> Spectrum:
    """Spectrum from the Puiseux pairs (a, b), (c, d): lattice generation
    of the values below 1, then reflection alpha -> 2 - alpha."""
    params.validate()
    a, b, d, e = params.a, params.b, params.d, params.e
    lower: list[Fraction] = []
    for i in range(1, e):
        for j in range(1, d):
            x = Fraction(i, e) + Fraction(j, d)
            if x < 1:
                lower.append(x)
    for i in range(1, a):
        for j in range(1, b):
            y = Fraction(i, a) + Fraction(j, b)
            if y < 1:
                lower.extend((y + k) / d for k in range(d))
    lower.sort()
    upper = [2 - v for v in reversed(lower)]
    return make_spectrum(lower + upper, n=2, complete=True)


def puiseux_instance(params: PuiseuxParams,
                     consecutive: bool = False,
                     verify_milnor: bool = False) -> TjurinaInstance:
    """Instance for f = (y^b - x^a)^d - x^(ad+q) y^r.

    tau always comes from the local-algebra engine (there is no closed
    form here).  The Tjurina index set is filled as [1..tau] only when the
    caller asserts the missing spectral numbers are consecutive at the
    top; otherwise it is left unset and only tau is recorded.
    """
    spectrum = puiseux_spectrum(params)
    a, b, d, q, r = params.a, params.b, params.d, params.q, params.r
    f = (parse_poly(f"y^{b}-x^{a}") ** d) - Poly.monomial((a * d + q, r))
    if verify_milnor and localg.milnor(f) != spectrum.mu:
        raise InternalConsistencyError(
            f"lattice count {spectrum.mu} disagrees with the Milnor number")
    tau = localg.tjurina(f)
    t_indices = frozenset(range(1, tau + 1)) if consecutive else None
    return TjurinaInstance(spectrum, t_indices, tau, f,
                           f"puiseux({a},{b},{d},q={q},r={r})")
