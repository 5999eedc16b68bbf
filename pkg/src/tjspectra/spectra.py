"""Spectra of isolated hypersurface singularities and their variance statistics.

A spectrum is a weakly increasing multiset of exact rationals in (0, n).
A *complete* spectrum additionally satisfies the symmetry
alpha_i + alpha_{mu+1-i} = n.  All statistics here are exact; the defect
``delta = Var - width/12`` is the quantity whose sign the (generalized)
Hertling conjecture constrains.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import EmptySpectrum, EmptySubset, SymmetryViolation, ValueOutOfRange


@dataclass(frozen=True)
class Spectrum:
    values: tuple[Fraction, ...]  # weakly increasing
    n: int                        # number of variables
    complete: bool                # symmetry verified at construction

    @property
    def mu(self) -> int:
        return len(self.values)

    def value_at(self, i: int) -> Fraction:
        """1-based access, matching the alpha_i indexing convention."""
        return self.values[i - 1]


@dataclass(frozen=True)
class SubsetStats:
    tau: int
    av: Fraction
    var: Fraction
    alpha_min: Fraction
    alpha_max: Fraction
    delta: Fraction


def make_spectrum(values: Iterable[Fraction], n: int, complete: bool = False) -> Spectrum:
    vals = tuple(sorted(Fraction(v) for v in values))
    if not vals:
        raise EmptySpectrum("a spectrum must contain at least one value")
    if vals[0] <= 0 or vals[-1] >= n:
        bad = vals[0] if vals[0] <= 0 else vals[-1]
        raise ValueOutOfRange(f"spectral value {bad} outside (0, {n})")
    if complete:
        mu = len(vals)
        for i in range(mu):
            if vals[i] + vals[mu - 1 - i] != n:
                raise SymmetryViolation(
                    f"alpha_{i + 1} + alpha_{mu - i} = {vals[i] + vals[mu - 1 - i]} != {n}")
    return Spectrum(vals, n, complete)


def stats_of_values(values: Sequence[Fraction]) -> SubsetStats:
    """Exact statistics of a plain value multiset.

    Uses the sum-of-squares identity
    sum (a_i - av)^2 = sum a_i^2 - tau * av^2, which is cheaper than
    recentring; the two sides are cross-checked by the property tests.
    """
    tau = len(values)
    if tau == 0:
        raise EmptySubset("statistics of an empty subset are undefined")
    s1 = sum(values, Fraction(0))
    s2 = sum((v * v for v in values), Fraction(0))
    av = s1 / tau
    var = s2 / tau - av * av
    lo, hi = min(values), max(values)
    return SubsetStats(tau=tau, av=av, var=var, alpha_min=lo, alpha_max=hi,
                       delta=var - (hi - lo) / 12)


def subset_stats(s: Spectrum, indices: Iterable[int]) -> SubsetStats:
    """Statistics of the sub-multiset selected by 1-based indices."""
    idx = sorted(set(indices))
    if not idx:
        raise EmptySubset("statistics of an empty subset are undefined")
    if idx[0] < 1 or idx[-1] > s.mu:
        raise ValueOutOfRange(f"subset index outside [1, {s.mu}]")
    return stats_of_values([s.values[i - 1] for i in idx])


def average(s: Spectrum) -> Fraction:
    return stats_of_values(s.values).av


def variance(s: Spectrum) -> Fraction:
    return stats_of_values(s.values).var


def width(s: Spectrum) -> Fraction:
    return s.values[-1] - s.values[0]


def hertling_defect(s: Spectrum) -> Fraction:
    """Var - width/12; non-positive iff the Hertling inequality holds."""
    return stats_of_values(s.values).delta
