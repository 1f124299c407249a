"""Cover classes, branch-data pairs and the enumeration formulas.

A p-cyclic cover corresponds to an orbit of function-field classes under the
automorphism group of the deck transformations, identified with (Z/p)^*
scaling both coordinates.  Orbits are stored by their canonical member: the
lexicographically least scaling under the fixed ordering of point labels
followed by the Jacobian coordinates.

All counts are exact integers; the brute-force counters here are the oracles
the closed forms are checked against and deliberately share no arithmetic
with them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .arith import is_prime
from .divisors import Divisor, DivModP
from .harrison import AdeleClass, CurveCtx, SigmaClass, check_budget


def _class_key(s: SigmaClass) -> tuple:
    return (tuple(s.vv.items()), s.jac)


@dataclass(frozen=True)
class CoverClass:
    """A p-cyclic cover, held as the canonical member of its scaling orbit."""

    rep: SigmaClass

    def orbit(self) -> tuple[SigmaClass, ...]:
        p = self.rep.ctx.p
        seen = []
        for b in range(1, p):
            c = self.rep.scale(b)
            if c not in seen:
                seen.append(c)
        return tuple(seen)

    def is_trivial(self) -> bool:
        return self.rep.is_trivial()

    def ramification_locus(self) -> frozenset[str]:
        return self.rep.vv.support()

    def to_json(self) -> dict:
        return self.rep.to_json()


def cover_from_sigma(s: SigmaClass) -> CoverClass:
    """The cover determined by a function-field class (its scaling orbit)."""
    rep = min((s.scale(b) for b in range(1, s.ctx.p)), key=_class_key)
    return CoverClass(rep)


@dataclass(frozen=True)
class CornalbaPair:
    """Branch data of a cover: an effective divisor D with coefficients in
    [0, p) and deg(D) divisible by p, plus the mod-p shadow of a p-th root
    line bundle of O(D): its degree deg(D)/p and Jacobian coordinate.
    """

    p: int
    divisor: Divisor
    deg_line_bundle: int
    jac_line_bundle: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        for x, c in self.divisor.items():
            if not 0 <= c < self.p:
                raise ValueError(f"coefficient {c} at {x!r} is outside [0, {self.p})")
        if self.divisor.degree() != self.p * self.deg_line_bundle:
            raise ValueError(
                f"deg(D) = {self.divisor.degree()} is not p times "
                f"{self.deg_line_bundle}"
            )
        object.__setattr__(
            self, "jac_line_bundle", tuple(c % self.p for c in self.jac_line_bundle)
        )

    def to_json(self) -> dict:
        return {
            "divisor": self.divisor.to_json(),
            "degL": self.deg_line_bundle,
            "jacL": list(self.jac_line_bundle),
        }


def cornalba_pair_of(c: CoverClass) -> CornalbaPair:
    """Branch data of a cover: coefficients of the canonical valuation vector
    lifted into [0, p), with the Jacobian coordinate as the bundle shadow."""
    rep = c.rep
    D = Divisor(dict(rep.vv.items()))
    assert D.degree() % rep.ctx.p == 0  # zero-sum law of the class
    return CornalbaPair(rep.ctx.p, D, D.degree() // rep.ctx.p, rep.jac)


def cornalba_equivalent(P1: CornalbaPair, P2: CornalbaPair) -> bool:
    """Whether two branch-data pairs present the same cover.

    True when some unit b scales every divisor coefficient of the first onto
    the second mod p and does the same to the bundle coordinates.
    """
    if P1.p != P2.p:
        raise ValueError("cannot compare pairs with different p")
    if len(P1.jac_line_bundle) != len(P2.jac_line_bundle):
        raise ValueError("cannot compare pairs over different genera")
    p = P1.p
    labels = P1.divisor.support() | P2.divisor.support()
    for b in range(1, p):
        divisors_match = all(
            b * P1.divisor.coeff(x) % p == P2.divisor.coeff(x) % p for x in labels
        )
        bundles_match = all(
            b * c1 % p == c2 % p
            for c1, c2 in zip(P1.jac_line_bundle, P2.jac_line_bundle)
        )
        if divisors_match and bundles_match:
            return True
    return False


def quotient_by_jacobian(
    ctx: CurveCtx, R, budget: int | None = None
) -> Iterator[AdeleClass]:
    """Covers with ramification in R, up to the Jacobian p-torsion.

    These are exactly the scaling orbits of zero-sum vectors supported in R;
    one canonical adelic representative is yielded per orbit.
    """
    points = tuple(sorted(frozenset(R)))
    p, r = ctx.p, len(points)
    check_budget(p ** max(r - 1, 0), budget)

    def orbits() -> Iterator[AdeleClass]:
        if r == 0:
            yield AdeleClass.trivial(ctx)
            return
        for head in itertools.product(range(p), repeat=r - 1):
            vv = head + (-sum(head) % p,)
            canonical = min(
                tuple(b * c % p for c in vv) for b in range(1, p)
            )
            if vv == canonical:
                yield AdeleClass(ctx, DivModP(p, zip(points, vv)))

    return orbits()


def _check_pgr(p: int, g: int, r: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    if r < 0:
        raise ValueError(f"number of branch points must be nonnegative, got {r}")


def count_unramified_nontrivial(p: int, g: int) -> int:
    """Number of nontrivial unramified p-cyclic covers: (p^2g - 1)/(p - 1)."""
    _check_pgr(p, g, 0)
    return (p ** (2 * g) - 1) // (p - 1)


def count_ram_contained(p: int, g: int, r: int) -> int:
    """Nontrivial covers with ramification inside a fixed r-point set."""
    _check_pgr(p, g, r)
    if r == 0:
        return count_unramified_nontrivial(p, g)
    return (p ** (2 * g + r - 1) - 1) // (p - 1)


def count_ram_exact(p: int, g: int, r: int) -> int:
    """Covers ramified at every point of a fixed r-point set and nowhere else."""
    _check_pgr(p, g, r)
    if r == 0:
        return count_unramified_nontrivial(p, g)
    num = p ** (2 * g) * ((p - 1) ** (r - 1) + (-1) ** r)
    assert num % p == 0  # (p-1)^(r-1) = (-1)^(r-1) mod p
    return num // p


def existence_check(p: int, g: int, r: int) -> bool:
    """Whether a p-cyclic cover with exactly r branch points exists.

    False only for (g = 0, r = 0) and for r = 1.  For p = 2 the exact count
    also vanishes whenever r is odd (the zero-sum law cannot hold); consult
    count_ram_exact for the count itself.
    """
    _check_pgr(p, g, r)
    return not ((g == 0 and r == 0) or r == 1)


def bruteforce_cover_count(
    p: int, g: int, r: int, exact: bool = False, budget: int | None = None
) -> int:
    """Count covers by exhaustive orbit enumeration; the oracle for the
    closed forms.

    Enumerates every (valuation vector, Jacobian coordinate) pair supported
    in an r-point set, canonicalizes each under unit scaling and counts
    distinct nontrivial orbits.  With exact=True only vectors with full
    support are admitted.
    """
    _check_pgr(p, g, r)
    check_budget(p ** (2 * g + r - 1) if r >= 1 else p ** (2 * g), budget)
    width = 2 * g
    units = range(1, p)
    canon: set[tuple[int, ...]] = set()

    def canonical(t: tuple[int, ...]) -> tuple[int, ...]:
        if p == 2:
            return t
        return min(tuple(b * c % p for c in t) for b in units)

    if r == 0:
        for jac in itertools.product(range(p), repeat=width):
            canon.add(canonical(jac))
        return len(canon) - 1  # the all-zero class is the trivial cover

    head_pool = units if exact else range(p)
    for head in itertools.product(head_pool, repeat=r - 1):
        last = -sum(head) % p
        if exact and last == 0:
            continue
        vv = head + (last,)
        for jac in itertools.product(range(p), repeat=width):
            canon.add(canonical(vv + jac))
    n = len(canon)
    if not exact:
        n -= 1  # drop the trivial cover, counted once
    return n
