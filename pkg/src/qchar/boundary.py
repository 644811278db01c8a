"""Finite-level approximants of extreme characters and the shift action.

An extreme character is parametrized by a nondecreasing integer sequence.
Its level-N marginal is approximated by pushing the point mass at the
reversed length-L prefix down from level L, exactly; for the constant
sequence the approximant is already exact at every truncation (it is the
point mass at a rectangle), and tensoring with that rectangle realizes the
shift of the parameter sequence.
"""

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import BoundaryParam, Signature, shift
from .characters import (
    LevelCharacter,
    first_discrepancy,
    indecomposable,
    restrict,
    tensor,
    total_variation,
)


@dataclass(frozen=True)
class ExtremeApproximant:
    theta: BoundaryParam
    level: int
    truncation: int
    measure: LevelCharacter


@dataclass(frozen=True)
class CorollaryReport:
    """Outcome of the determinant-absorption check at one truncation."""

    ok: bool
    tensored: LevelCharacter
    shifted: LevelCharacter
    gap: Fraction
    discrepancy: Signature | None = None


def extreme_character(
    theta: BoundaryParam, level: int, truncation: int, q: Fraction
) -> ExtremeApproximant:
    """Exact level-`level` pushdown of the point mass at the reversed prefix.

    The point mass sits at the signature (theta_L, ..., theta_1) at level
    L = `truncation` and is restricted down one level at a time; all
    arithmetic is exact.
    """
    if level < 1:
        raise ValueError("level must be at least 1")
    if truncation < level:
        raise ValueError(f"truncation {truncation} must be >= level {level}")
    chi = indecomposable(theta.signature_at(truncation), q)
    for _ in range(truncation - level):
        chi = restrict(chi)
    return ExtremeApproximant(theta, level, truncation, chi)


def cauchy_gap(
    theta: BoundaryParam, level: int, truncation: int, q: Fraction
) -> Fraction:
    """Total-variation distance between the truncation-L and L+1 approximants.

    A convergence monitor only; no rate is claimed.
    """
    a = extreme_character(theta, level, truncation, q).measure
    b = extreme_character(theta, level, truncation + 1, q).measure
    return total_variation(a, b)


def ak_on_theta(theta: BoundaryParam, k: int) -> BoundaryParam:
    """Shift every entry of the parameter sequence by k."""
    return BoundaryParam(tuple(h + k for h in theta.head), theta.tail + k)


def ak_on_measure(chi: LevelCharacter, k: int) -> LevelCharacter:
    """Pushforward under shifting all signature parts by k; mass preserved."""
    return LevelCharacter(
        chi.level, chi.q, {shift(sig, k): w for sig, w in chi.weights.items()}
    )


def verify_corollary(
    theta: BoundaryParam, k: int, level: int, truncation: int, q: Fraction
) -> CorollaryReport:
    """Check determinant absorption exactly at one truncation.

    Tensoring the approximant of theta with the rectangle point mass
    (k, ..., k) must equal both the k-shift pushforward of that approximant
    and the approximant of the shifted parameter sequence.  The cotransition
    kernel commutes with the shift, so equality is exact at every L.
    """
    base = extreme_character(theta, level, truncation, q).measure
    rect = indecomposable(Signature((k,) * level), q)
    tensored = tensor(base, rect)
    pushed = ak_on_measure(base, k)
    direct = extreme_character(ak_on_theta(theta, k), level, truncation, q).measure
    ok = tensored.weights == pushed.weights == direct.weights
    bad = first_discrepancy(tensored, direct)
    if bad is None:
        bad = first_discrepancy(tensored, pushed)
    return CorollaryReport(
        ok=ok,
        tensored=tensored,
        shifted=direct,
        gap=total_variation(tensored, direct),
        discrepancy=bad,
    )
