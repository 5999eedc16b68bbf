"""Local computer algebra at the origin: standard bases, Milnor and Tjurina numbers.

The monomial order is the local degree order: smaller total degree is
*larger*, ties broken by reverse lexicographic with x > y > z.  Standard
bases are computed with Mora's tangent-cone algorithm (ecart-controlled
weak normal form), which terminates for polynomial input.  Colengths are
counted from the lead ideal; an independent truncated linear-algebra
oracle (:func:`colength_oracle`) double-checks them.

Coefficient arithmetic is exact.  Internally polynomials are handled with
integer coefficients, with the content divided out after every reduction
to bound coefficient growth.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterable, Optional, Sequence, Union

from .errors import NonIsolatedSingularity, NonzeroConstantTerm
from .poly import Poly, jacobian

Exponent = tuple[int, ...]
IntPoly = dict[Exponent, int]

INFINITE = "infinite"


def order_key(e: Exponent):
    """Sort key: larger key = larger monomial in the local degree order."""
    return (-sum(e), tuple(-c for c in reversed(e)))


# --- integer-coefficient plumbing ---

def _to_int_poly(p: Poly) -> IntPoly:
    denom = 1
    for c in p.terms.values():
        denom = denom * c.denominator // gcd(denom, c.denominator)
    out = {e: int(c * denom) for e, c in p.terms.items()}
    return _strip_content(out)


def _strip_content(p: IntPoly) -> IntPoly:
    if not p:
        return p
    g = 0
    for c in p.values():
        g = gcd(g, c)
    if g > 1:
        p = {e: c // g for e, c in p.items()}
    return p


def _lead(p: IntPoly) -> Exponent:
    return max(p, key=order_key)


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _ecart(p: IntPoly, lm: Exponent) -> int:
    return max(sum(e) for e in p) - sum(lm)


def _mul_monomial(p: IntPoly, delta: Exponent, coeff: int) -> IntPoly:
    return {tuple(a + b for a, b in zip(e, delta)): coeff * c for e, c in p.items()}


def _add(p: IntPoly, q: IntPoly) -> IntPoly:
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _reduce_once(h: IntPoly, lm_h: Exponent, g: IntPoly, lm_g: Exponent) -> IntPoly:
    """Cancel the lead term of h against g; result has content removed."""
    ch, cg = h[lm_h], g[lm_g]
    d = gcd(ch, cg)
    a, b = cg // d, ch // d
    delta = tuple(x - y for x, y in zip(lm_h, lm_g))
    out = _add({e: a * c for e, c in h.items()}, _mul_monomial(g, delta, -b))
    return _strip_content(out)


def _spoly(f: IntPoly, g: IntPoly) -> IntPoly:
    lm_f, lm_g = _lead(f), _lead(g)
    lcm = tuple(max(a, b) for a, b in zip(lm_f, lm_g))
    cf, cg = f[lm_f], g[lm_g]
    d = gcd(cf, cg)
    a, b = cg // d, cf // d
    df = tuple(x - y for x, y in zip(lcm, lm_f))
    dg = tuple(x - y for x, y in zip(lcm, lm_g))
    return _strip_content(_add(_mul_monomial(f, df, a), _mul_monomial(g, dg, -b)))


def _mora_nf(f: IntPoly, basis: Sequence[IntPoly]) -> IntPoly:
    """Mora's weak normal form of f with respect to basis.

    Reducers are chosen with minimal ecart, earliest-generated first;
    intermediate remainders with larger ecart join the reducer pool, which
    is what makes the loop terminate for local orders.
    """
    pool = [(g, _lead(g), _ecart(g, _lead(g))) for g in basis]
    h = f
    while h:
        lm_h = _lead(h)
        best = None
        for g, lm_g, ec in pool:
            if _divides(lm_g, lm_h) and (best is None or ec < best[2]):
                best = (g, lm_g, ec)
        if best is None:
            return h
        ec_h = _ecart(h, lm_h)
        if best[2] > ec_h:
            pool.append((h, lm_h, ec_h))
        h = _reduce_once(h, lm_h, best[0], best[1])
    return h


def _std_int(gens: Iterable[IntPoly]) -> list[IntPoly]:
    """Standard basis of the ideal generated by gens (Buchberger + Mora NF)."""
    basis = [g for g in (dict(g) for g in gens) if g]
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]

    def lcm_deg(i, j):
        return sum(max(a, b) for a, b in zip(_lead(basis[i]), _lead(basis[j])))

    while pairs:
        pairs.sort(key=lambda ij: lcm_deg(*ij), reverse=True)
        i, j = pairs.pop()
        lm_i, lm_j = _lead(basis[i]), _lead(basis[j])
        # product criterion: coprime lead monomials reduce to zero
        if all(a == 0 or b == 0 for a, b in zip(lm_i, lm_j)):
            continue
        h = _mora_nf(_spoly(basis[i], basis[j]), basis)
        if h:
            basis.append(h)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    return basis


def _minimal_leads(leads: Iterable[Exponent]) -> list[Exponent]:
    leads = sorted(set(leads), key=sum)
    out: list[Exponent] = []
    for e in leads:
        if not any(_divides(m, e) for m in out):
            out.append(e)
    return out


def _colength_of_leads(leads: Sequence[Exponent], nvars: int) -> Union[int, str]:
    leads = _minimal_leads(leads)
    bounds = []
    for v in range(nvars):
        pure = [e[v] for e in leads if all(e[w] == 0 for w in range(nvars) if w != v)]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    count = 0
    for e in product(*(range(b) for b in bounds)):
        if not any(_divides(m, e) for m in leads):
            count += 1
    return count


# --- public surface ---

@dataclass(frozen=True)
class StdBasisResult:
    generators: tuple[Poly, ...]
    lead_exponents: tuple[Exponent, ...]
    colength: Union[int, str]  # int or INFINITE


def _to_poly(p: IntPoly, nvars: int) -> Poly:
    return Poly({e: Fraction(c) for e, c in p.items()}, nvars)


def local_std_basis(gens: Sequence[Poly]) -> StdBasisResult:
    """Standard basis under the local degree order, with its colength.

    Output is deterministic for fixed input: generators appear in the order
    they were produced, normalized to integer content-free form.
    """
    nvars = gens[0].nvars
    basis = _std_int(_to_int_poly(g) for g in gens)
    leads = tuple(_lead(g) for g in basis)
    return StdBasisResult(
        generators=tuple(_to_poly(g, nvars) for g in basis),
        lead_exponents=leads,
        colength=_colength_of_leads(leads, nvars),
    )


def milnor(f: Poly) -> int:
    """Milnor number: colength of the Jacobian ideal."""
    gens = [g for g in jacobian(f) if not g.is_zero()]
    if not gens:
        raise NonIsolatedSingularity("all partial derivatives vanish identically")
    result = local_std_basis(gens)
    if result.colength == INFINITE:
        raise NonIsolatedSingularity(f"Jacobian ideal of {f} has infinite colength")
    return result.colength


def tjurina(f: Poly) -> int:
    """Tjurina number: colength of the ideal (df, f)."""
    if f.constant_term() != 0:
        raise NonzeroConstantTerm("tjurina number requires f(0) = 0")
    gens = [g for g in jacobian(f) if not g.is_zero()]
    if not f.is_zero():
        gens.append(f)
    if not gens:
        raise NonIsolatedSingularity("zero polynomial")
    result = local_std_basis(gens)
    if result.colength == INFINITE:
        raise NonIsolatedSingularity(f"ideal (df, f) of {f} has infinite colength")
    return result.colength


# --- independent brute-force oracle ---

def _monomials_up_to(nvars: int, cap: int) -> list[Exponent]:
    return [e for e in product(range(cap + 1), repeat=nvars) if sum(e) <= cap]


def _span_pivots(gens: Sequence[Poly], cap: int) -> dict[Exponent, dict[Exponent, Fraction]]:
    """Row-reduce all monomial multiples of gens, truncated at total degree cap.

    Returns the pivot rows keyed by their lead monomial (local degree order).
    """
    pivots: dict[Exponent, dict[Exponent, Fraction]] = {}
    nvars = gens[0].nvars
    for g in gens:
        if g.is_zero():
            continue
        min_deg = min(sum(e) for e in g.terms)
        for m in _monomials_up_to(nvars, cap - min_deg):
            row = {}
            for e, c in g.terms.items():
                ee = tuple(a + b for a, b in zip(e, m))
                if sum(ee) <= cap:
                    row[ee] = row.get(ee, Fraction(0)) + c
            row = {e: c for e, c in row.items() if c}
            while row:
                lead = max(row, key=order_key)
                piv = pivots.get(lead)
                if piv is None:
                    lc = row[lead]
                    pivots[lead] = {e: c / lc for e, c in row.items()}
                    break
                factor = row[lead]
                for e, c in piv.items():
                    s = row.get(e, Fraction(0)) - factor * c
                    if s:
                        row[e] = s
                    else:
                        row.pop(e, None)
    return pivots


def _oracle_dim(gens: Sequence[Poly], cap: int) -> tuple[int, set[Exponent]]:
    pivots = _span_pivots(gens, cap)
    nmono = len(_monomials_up_to(gens[0].nvars, cap))
    return nmono - len(pivots), set(pivots)


def colength_oracle(gens: Sequence[Poly], degree_cap: int) -> Optional[int]:
    """Truncated linear-algebra colength; None when not stabilized.

    Accepts the dimension only when caps N and N+1 agree and the reduced
    span contains a pure power of every variable, which guards against
    false convergence on non-isolated input.
    """
    nvars = gens[0].nvars
    dim_n, leads = _oracle_dim(gens, degree_cap)
    dim_n1, _ = _oracle_dim(gens, degree_cap + 1)
    if dim_n != dim_n1:
        return None
    for v in range(nvars):
        if not any(e[v] > 0 and all(e[w] == 0 for w in range(nvars) if w != v)
                   for e in leads):
            return None
    return dim_n
