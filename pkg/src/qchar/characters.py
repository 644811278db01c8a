"""Level-N characters as probability measures on signatures.

A character of the rank-N algebra decomposes uniquely as a convex
combination of the indecomposable ones, so it is stored losslessly as a
finitely supported probability measure.  This module provides the
cotransition kernel, restriction, coherence checking, the tensor product
(fusion weighted by quantum-dimension ratios) and generating-function
evaluation, exact and on the torus.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .combinatorics import Signature, enumerate_down, interlaces
from .schur import (
    _bialternant,
    check_q,
    lr_coefficients,
    principal_specialization,
    qdim,
    schur_eval,
)


@dataclass(frozen=True)
class LevelCharacter:
    """A level plus a finitely supported probability measure on signatures.

    Weights are strictly positive rationals summing to exactly 1.  The
    unique level-0 character is the point mass at the empty signature.
    """

    level: int
    q: Fraction
    weights: Mapping[Signature, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "q", check_q(self.q))
        weights = {}
        for sig, w in self.weights.items():
            if sig.level != self.level:
                raise ValueError(f"{sig} is not a level-{self.level} signature")
            w = Fraction(w)
            if w <= 0:
                raise ValueError(f"weights must be positive: {sig} -> {w}")
            weights[sig] = w
        if sum(weights.values()) != 1:
            raise ValueError("weights must sum to exactly 1")
        object.__setattr__(self, "weights", weights)

    def support(self) -> list[Signature]:
        return sorted(self.weights, key=lambda s: s.parts)


@dataclass(frozen=True)
class CoherentFamily:
    """Characters at levels 1..M sharing q; coherence is checked separately."""

    q: Fraction
    measures: tuple[LevelCharacter, ...]

    def __post_init__(self):
        object.__setattr__(self, "q", check_q(self.q))
        object.__setattr__(self, "measures", tuple(self.measures))
        for i, chi in enumerate(self.measures):
            if chi.level != i + 1:
                raise ValueError(f"measure {i} has level {chi.level}, expected {i + 1}")
            if chi.q != self.q:
                raise ValueError("all levels must share the same q")


@dataclass(frozen=True)
class CoherenceReport:
    ok: bool
    level: int | None = None
    sig: Signature | None = None


def indecomposable(lam: Signature, q: Fraction) -> LevelCharacter:
    """The point mass at lam."""
    return LevelCharacter(lam.level, q, {lam: Fraction(1)})


def wq(lam: Signature, nu: Signature, q: Fraction) -> Fraction:
    """q^((N+1)|lam| - N|nu|) for an interlacing pair lam (level N) below nu."""
    if not interlaces(lam, nu):
        raise ValueError(f"{lam} does not interlace below {nu}")
    n = lam.level
    return check_q(q) ** ((n + 1) * lam.size - n * nu.size)


def cotransition(nu: Signature, q: Fraction) -> dict[Signature, Fraction]:
    """Stochastic row Lambda(nu, .): wq(lam, nu) * qdim(lam) / qdim(nu).

    Entries are positive and sum to exactly 1; keys ascend lexicographically.
    """
    d = qdim(nu, q)
    return {lam: wq(lam, nu, q) * qdim(lam, q) / d for lam in enumerate_down(nu)}


def restrict(chi: LevelCharacter) -> LevelCharacter:
    """Push the measure one level down along the cotransition kernel."""
    if chi.level < 1:
        raise ValueError("cannot restrict below level 0")
    out: dict[Signature, Fraction] = {}
    for nu, p in chi.weights.items():
        for lam, c in cotransition(nu, chi.q).items():
            out[lam] = out.get(lam, Fraction(0)) + p * c
    return LevelCharacter(chi.level - 1, chi.q, out)


def first_discrepancy(a: LevelCharacter, b: LevelCharacter) -> Signature | None:
    """Lexicographically first signature where the two measures disagree."""
    keys = sorted(set(a.weights) | set(b.weights), key=lambda s: s.parts)
    for sig in keys:
        if a.weights.get(sig, 0) != b.weights.get(sig, 0):
            return sig
    return None


def total_variation(a: LevelCharacter, b: LevelCharacter) -> Fraction:
    """Half the l1 distance between the two weight maps; exact."""
    keys = set(a.weights) | set(b.weights)
    gap = sum(
        abs(a.weights.get(sig, Fraction(0)) - b.weights.get(sig, Fraction(0)))
        for sig in keys
    )
    return Fraction(gap) / 2


def is_coherent(family: CoherentFamily) -> CoherenceReport:
    """Whether restricting each level reproduces the level below it, exactly.

    A single-level family is vacuously coherent.  On failure the report
    carries the lower level N and the first signature whose mass differs.
    """
    for n in range(len(family.measures) - 1, 0, -1):
        lower, upper = family.measures[n - 1], family.measures[n]
        pushed = restrict(upper)
        sig = first_discrepancy(pushed, lower)
        if sig is not None:
            return CoherenceReport(False, lower.level, sig)
    return CoherenceReport(True)


def tensor(chi1: LevelCharacter, chi2: LevelCharacter) -> LevelCharacter:
    """Fusion of characters; commutative and associative.

    On point masses the output weight of nu is
    c^nu_{lam,mu} * qdim(nu) / (qdim(lam) * qdim(mu)), extended bilinearly;
    the weights again sum to exactly 1.
    """
    if chi1.level != chi2.level:
        raise ValueError(f"levels must agree: {chi1.level} != {chi2.level}")
    if chi1.q != chi2.q:
        raise ValueError("q must agree")
    q = chi1.q
    out: dict[Signature, Fraction] = {}
    for lam, p1 in chi1.weights.items():
        d1 = qdim(lam, q)
        for mu, p2 in chi2.weights.items():
            scale = p1 * p2 / (d1 * qdim(mu, q))
            for nu, c in lr_coefficients(lam, mu).items():
                out[nu] = out.get(nu, Fraction(0)) + scale * c * qdim(nu, q)
    return LevelCharacter(chi1.level, q, out)


def sgf_eval(chi: LevelCharacter, points: Sequence[Fraction]) -> Fraction:
    """Exact generating function: sum of P(lam) s_lam(x) / s_lam(1, q^-2, ...).

    At the normalization point (1, q^-2, ..., q^(-2(N-1))) the value is 1
    for every character.
    """
    if len(points) != chi.level:
        raise ValueError(f"need {chi.level} points, got {len(points)}")
    pts = tuple(Fraction(x) for x in points)
    total = Fraction(0)
    for lam, p in chi.weights.items():
        total += p * schur_eval(lam, pts) / principal_specialization(lam, chi.q)
    return total


def sgf_eval_torus(
    chi: LevelCharacter, z: Sequence[complex], precision: float = 1e-12
) -> complex:
    """Generating function paired with the torus, in floating point.

    The unit-modulus inputs z are substituted as (z_1, q^-2 z_2, ...,
    q^(-2(N-1)) z_N), the scaled torus on which the series converges; the
    result has modulus at most 1 up to rounding.
    """
    if len(z) != chi.level:
        raise ValueError(f"need {chi.level} torus points, got {len(z)}")
    zs = [complex(v) for v in z]
    if any(abs(abs(v) - 1.0) > precision for v in zs):
        raise ValueError("torus points must have unit modulus")
    qf = float(chi.q)
    points = [qf ** (-2 * i) * v for i, v in enumerate(zs)]
    total = 0j
    for lam, p in chi.weights.items():
        norm = float(principal_specialization(lam, chi.q))
        total += float(p) * _bialternant(lam, points) / norm
    return total


def check_product(
    chi: LevelCharacter,
    chi1: LevelCharacter,
    chi2: LevelCharacter,
    trials: int = 20,
    seed: int = 0,
) -> bool:
    """Certify chi = chi1 (x) chi2 by exact evaluation at seeded rational points.

    The generating functions are finite sums of linearly independent Schur
    polynomials, so agreement at enough distinct exact points pins the
    measures; the deterministic route is comparing against `tensor` output
    weight by weight.
    """
    if not (chi.level == chi1.level == chi2.level):
        raise ValueError("levels must agree")
    if not (chi.q == chi1.q == chi2.q):
        raise ValueError("q must agree")
    rng = random.Random(seed)
    for _ in range(trials):
        pts = tuple(
            Fraction(rng.randint(1, 9) * rng.choice((1, -1)), rng.randint(1, 9))
            for _ in range(chi.level)
        )
        if sgf_eval(chi, pts) != sgf_eval(chi1, pts) * sgf_eval(chi2, pts):
            return False
    return True
