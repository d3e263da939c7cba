"""Which intersection arrays give sets meeting a flat bound with equality.

A bipartite distance-regular graph of diameter four with parameters
(k, c2, c3) yields n = vertex_count(k, c2, c3) flat vectors in dimension k.
Setting n equal to the real or complex flat bound for m = k and clearing
denominators gives a quadratic in k for each (c2, c3).  k = 1 is always a
root, so the interesting root is the product of the two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from flatsets.bounds import flat_bounds
from flatsets.spectra import vertex_count_fraction

FIELDS = ("real", "complex")

# Arrays with a known graph attaining the bound, and the graph's name.
REALIZED = {
    "real": {(4, 2, 3): "4-cube", (8, 2, 3): "folded-8-cube", (24, 2, 3): "golay"},
    "complex": {(2, 1, 1): "8-cycle"},
}
# Known classification: (c2, c3) = (2, 3) forces k in {4, 8, 24}.  Trusted, not recomputed.
CLASSIFIED_PAIRS = {(2, 3): (4, 8, 24)}


def real_coefficients(c2: int, c3: int) -> tuple[int, int, int]:
    """(A, B, C) with A k^2 + B k + C = 0 iff n meets the real flat bound."""
    p = c2 * c3
    return 6 - p, -(6 * c2 + 6 - 3 * p), 6 * c2 - 2 * p


def complex_coefficients(c2: int, c3: int) -> tuple[int, int, int]:
    """(A, B, C) with A k^2 + B k + C = 0 iff n meets the complex flat bound."""
    p = c2 * c3
    return 2 - p, -(2 * c2 + 2 - p), 2 * c2


def _in_domain(k: int, c2: int, c3: int) -> bool:
    return 1 <= c2 <= c3 <= k and k >= 2


def _evaluate(coeffs: tuple[int, int, int], k: int) -> int:
    a, b, c = coeffs
    return (a * k + b) * k + c


def real_tight(k: int, c2: int, c3: int) -> bool:
    if not _in_domain(k, c2, c3):
        return False
    return _evaluate(real_coefficients(c2, c3), k) == 0


def complex_tight(k: int, c2: int, c3: int) -> bool:
    if not _in_domain(k, c2, c3):
        return False
    return _evaluate(complex_coefficients(c2, c3), k) == 0


def real_closed_form(c2: int, c3: int) -> Fraction | None:
    """The root other than k = 1 of the real equation, when c2 c3 != 6."""
    a, _, c = real_coefficients(c2, c3)
    return None if a == 0 else Fraction(c, a)


def complex_closed_form(c2: int, c3: int) -> Fraction | None:
    a, _, c = complex_coefficients(c2, c3)
    return None if a == 0 else Fraction(c, a)


def feasible(k: int, c2: int, c3: int) -> tuple[bool, list[str]]:
    """Necessary conditions on (k, c2, c3); returns (ok, reasons for failure)."""
    reasons: list[str] = []
    if not 1 <= c2 <= c3 <= k:
        reasons.append("need 1 <= c2 <= c3 <= k")
        return False, reasons
    shells = {
        "k2": Fraction(k * (k - 1), c2),
        "k3": Fraction(k * (k - 1) * (k - c2), c2 * c3),
        "k4": Fraction((k - 1) * (k - c2) * (k - c3), c2 * c3),
        "n": vertex_count_fraction(k, c2, c3),
    }
    reasons += [f"{name} = {value} is not an integer"
                for name, value in shells.items() if value.denominator != 1]
    reasons += [f"{name} = 0, so the diameter is below 4"
                for name, value in shells.items() if value == 0]
    if c2 > 1 and 2 * c3 < 3 * c2:
        reasons.append("c3 >= 3 c2 / 2 fails")
    return not reasons, reasons


def flat_angle_compatible_real(k: int, alpha: Fraction) -> bool:
    """Can two +-1/sqrt(k) vectors meet at angle alpha?

    Their inner product is t/k with t an integer of the same parity as k.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie strictly between 0 and 1")
    square = alpha * k * k
    if square.denominator != 1:
        return False
    t = math.isqrt(square.numerator)
    return t * t == square.numerator and t % 2 == k % 2


@dataclass(frozen=True)
class TightnessReport:
    triple: tuple[int, int, int]
    n: Fraction
    feasible: bool
    reasons: tuple[str, ...]
    real_tight: bool
    complex_tight: bool
    alpha: Fraction | None
    flat_angle_compatible: bool | None
    verdict: str
    realized_by: str | None = None
    notes: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict:
        def rat(x: Fraction | None) -> str | None:
            return None if x is None else f"{x.numerator}/{x.denominator}"

        return {
            "triple": list(self.triple),
            "n": rat(self.n),
            "feasible": self.feasible,
            "reasons": list(self.reasons),
            "real_tight": self.real_tight,
            "complex_tight": self.complex_tight,
            "alpha": rat(self.alpha),
            "flat_angle_compatible": self.flat_angle_compatible,
            "verdict": self.verdict,
            "realized_by": self.realized_by,
            "notes": list(self.notes),
        }


def analyse(k: int, c2: int, c3: int, field_: str = "real") -> TightnessReport:
    """Bound and classification status of one triple against one field."""
    if field_ not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}")
    ok, reasons = feasible(k, c2, c3)
    rt, ct = real_tight(k, c2, c3), complex_tight(k, c2, c3)
    theta2 = k + c2 * (k - c3 - 1)
    alpha = Fraction(theta2, k * k) if ok and 0 < theta2 < k * k else None
    compatible = None
    if field_ == "real" and alpha is not None:
        compatible = flat_angle_compatible_real(k, alpha)
    tight = rt if field_ == "real" else ct
    realized = REALIZED[field_].get((k, c2, c3))
    notes: list[str] = []
    if not ok:
        verdict = "infeasible"
    elif not tight:
        verdict = "not-tight"
    elif realized is not None:
        verdict = "realized"
    elif compatible is False:
        verdict = "angle-incompatible"
    elif (c2, c3) in CLASSIFIED_PAIRS and k not in CLASSIFIED_PAIRS[(c2, c3)]:
        verdict = "no-graph"
        notes.append("excluded by the cited classification of (c2, c3) = (2, 3)")
    else:
        verdict = "open"
    if compatible is False and verdict != "angle-incompatible":
        notes.append("angle is not t^2/k^2 with t = k mod 2")
    return TightnessReport((k, c2, c3), vertex_count_fraction(k, c2, c3), ok, tuple(reasons),
                           rt, ct, alpha, compatible, verdict, realized, tuple(notes))


def _integer_roots(coeffs: tuple[int, int, int], lo: int, hi: int) -> list[int] | None:
    """Integer roots in [lo, hi] of A k^2 + B k + C, or None if it vanishes identically."""
    a, b, c = coeffs
    if a == 0 and b == 0:
        return None if c == 0 else []
    if a == 0:
        cands = [-c // b] if c % b == 0 else []
    else:
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        r = math.isqrt(disc)
        if r * r != disc:
            return []
        cands = [(-b + s * r) // (2 * a) for s in (1, -1) if (-b + s * r) % (2 * a) == 0]
    return sorted({x for x in cands if lo <= x <= hi and _evaluate(coeffs, x) == 0})


def tight_triples(max_k: int, field_: str = "real") -> list[tuple[int, int, int]]:
    """All 1 <= c2 <= c3 < k <= max_k whose vertex count meets the flat bound."""
    if max_k < 2:
        raise ValueError("max_k must be at least 2")
    coeff_fn = real_coefficients if field_ == "real" else complex_coefficients
    found = []
    for c2 in range(1, max_k):
        for c3 in range(c2, max_k):
            roots = _integer_roots(coeff_fn(c2, c3), c3 + 1, max_k)
            ks = range(c3 + 1, max_k + 1) if roots is None else roots
            found += [(k, c2, c3) for k in ks]
    return sorted(found)


def search_tight(max_k: int, field_: str = "real") -> list[TightnessReport]:
    """Reports for every feasible tight triple with k <= max_k, sorted by triple."""
    reports = (analyse(*t, field_=field_) for t in tight_triples(max_k, field_))
    return [r for r in reports if r.feasible]


def meets_flat_bound(k: int, c2: int, c3: int, field_: str = "real") -> bool:
    """n equals the flat bound for m = k, by direct comparison."""
    complex_bound, real_bound = flat_bounds(k)
    bound = real_bound if field_ == "real" else complex_bound
    return vertex_count_fraction(k, c2, c3) == bound
