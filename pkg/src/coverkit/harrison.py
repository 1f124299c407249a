"""Classes of p-cyclic extensions of a curve's function field and adele ring.

A function-field class is a pair (valuation vector, Jacobian coordinate):
the valuation vector is a finitely supported mod-p vector over the points of
the curve whose entries sum to 0 mod p, and the Jacobian p-torsion is modeled
abstractly as F_p^{2g}.  An adelic class is a bare valuation vector with no
zero-sum constraint.  Dropping the Jacobian coordinate realizes the extension
of the former by the latter; the kernel has exactly p^{2g} elements.

The direct-sum representation of a function-field class fixes one splitting
of that extension; nothing downstream may depend on which splitting was
chosen, only on the two components.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterable, Iterator

from .arith import is_prime
from .divisors import DivModP

DEFAULT_BUDGET = 10**7


class BudgetExceededError(RuntimeError):
    """An enumeration would visit more classes than the configured budget."""


def budget_limit() -> int:
    raw = os.environ.get("COVERKIT_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        limit = int(raw)
    except ValueError:
        raise ValueError(f"COVERKIT_BUDGET must be an integer, got {raw!r}") from None
    if limit < 1:
        raise ValueError("COVERKIT_BUDGET must be positive")
    return limit


def check_budget(size: int, budget: int | None = None) -> None:
    limit = budget_limit() if budget is None else budget
    if size > limit:
        raise BudgetExceededError(
            f"enumeration of {size} classes exceeds the budget of {limit}"
        )


@dataclass(frozen=True)
class CurveCtx:
    """A curve at the granularity the theory needs: degree p and genus g.

    The optional point set names the labels a P^1 instance works over; when
    present, every class built in this context must be supported on it.
    """

    p: int
    g: int
    points: tuple[str, ...] | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if not isinstance(self.g, int) or self.g < 0:
            raise ValueError(f"genus must be a nonnegative integer, got {self.g!r}")
        if self.points is not None:
            pts = tuple(self.points)
            if len(set(pts)) != len(pts):
                raise ValueError("named points must be distinct")
            object.__setattr__(self, "points", pts)

    def _check_support(self, vv: DivModP) -> None:
        if vv.p != self.p:
            raise ValueError(f"vector is mod {vv.p}, context has p = {self.p}")
        if self.points is not None and not vv.support() <= set(self.points):
            stray = sorted(vv.support() - set(self.points))
            raise ValueError(f"points {stray} are not named in this context")


class SigmaClass:
    """A p-cyclic extension class of the function field: (vv, jac).

    vv must satisfy the zero-sum law (its entries sum to 0 mod p) and jac is
    a vector of 2g residues mod p.
    """

    __slots__ = ("ctx", "vv", "jac")

    def __init__(self, ctx: CurveCtx, vv: DivModP, jac: Iterable[int] = ()):
        ctx._check_support(vv)
        if vv.sum_mod_p() != 0:
            raise ValueError(
                f"valuation vector {vv!r} violates the zero-sum law mod {ctx.p}"
            )
        jac = tuple(int(c) % ctx.p for c in jac)
        if len(jac) != 2 * ctx.g:
            raise ValueError(
                f"jacobian coordinate has length {len(jac)}, expected {2 * ctx.g}"
            )
        self.ctx = ctx
        self.vv = vv
        self.jac = jac

    @classmethod
    def trivial(cls, ctx: CurveCtx) -> "SigmaClass":
        return cls(ctx, DivModP.zero(ctx.p), (0,) * (2 * ctx.g))

    def is_trivial(self) -> bool:
        return self.vv.is_zero() and not any(self.jac)

    def scale(self, b: int) -> "SigmaClass":
        """Image under the automorphism action of b in (Z/p)^*."""
        if b % self.ctx.p == 0:
            raise ValueError(f"{b} is not a unit mod {self.ctx.p}")
        return SigmaClass(self.ctx, self.vv.scale(b), (b * c for c in self.jac))

    def __add__(self, other: "SigmaClass") -> "SigmaClass":
        return sigma_group_law(self, other)

    def __neg__(self) -> "SigmaClass":
        return SigmaClass(self.ctx, -self.vv, (-c for c in self.jac))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SigmaClass)
            and self.ctx == other.ctx
            and self.vv == other.vv
            and self.jac == other.jac
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.vv, self.jac))

    def __repr__(self) -> str:
        return f"SigmaClass({self.vv!r}, jac={self.jac})"

    def to_json(self) -> dict:
        return {"vv": self.vv.to_json(), "jac": list(self.jac)}

    @classmethod
    def from_json(cls, ctx: CurveCtx, payload: dict) -> "SigmaClass":
        if not isinstance(payload, dict) or "vv" not in payload:
            raise ValueError('class payload must contain "vv"')
        vv = DivModP.from_json(ctx.p, payload["vv"])
        jac = payload.get("jac", [])
        if not isinstance(jac, list) or not all(isinstance(c, int) for c in jac):
            raise ValueError('"jac" must be a list of integers')
        return cls(ctx, vv, jac)


class AdeleClass:
    """A p-cyclic extension class of the adele ring: a bare valuation vector."""

    __slots__ = ("ctx", "vv")

    def __init__(self, ctx: CurveCtx, vv: DivModP):
        ctx._check_support(vv)
        self.ctx = ctx
        self.vv = vv

    @classmethod
    def trivial(cls, ctx: CurveCtx) -> "AdeleClass":
        return cls(ctx, DivModP.zero(ctx.p))

    def is_trivial(self) -> bool:
        return self.vv.is_zero()

    def scale(self, b: int) -> "AdeleClass":
        if b % self.ctx.p == 0:
            raise ValueError(f"{b} is not a unit mod {self.ctx.p}")
        return AdeleClass(self.ctx, self.vv.scale(b))

    def __add__(self, other: "AdeleClass") -> "AdeleClass":
        if self.ctx != other.ctx:
            raise ValueError("cannot add classes from different contexts")
        return AdeleClass(self.ctx, self.vv + other.vv)

    def __neg__(self) -> "AdeleClass":
        return AdeleClass(self.ctx, -self.vv)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AdeleClass)
            and self.ctx == other.ctx
            and self.vv == other.vv
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.vv))

    def __repr__(self) -> str:
        return f"AdeleClass({self.vv!r})"

    def to_json(self) -> dict:
        return {"vv": self.vv.to_json()}

    @classmethod
    def from_json(cls, ctx: CurveCtx, payload: dict) -> "AdeleClass":
        if not isinstance(payload, dict) or "vv" not in payload:
            raise ValueError('class payload must contain "vv"')
        return cls(ctx, DivModP.from_json(ctx.p, payload["vv"]))


def sigma_group_law(a: SigmaClass, b: SigmaClass) -> SigmaClass:
    """Componentwise sum of function-field classes (the Harrison product)."""
    if a.ctx != b.ctx:
        raise ValueError("cannot combine classes from different contexts")
    jac = tuple(x + y for x, y in zip(a.jac, b.jac))
    return SigmaClass(a.ctx, a.vv + b.vv, jac)


def tensor_to_adeles(s: SigmaClass) -> AdeleClass:
    """Base change to the adele ring: keep the valuation vector, forget jac."""
    return AdeleClass(s.ctx, s.vv)


def exists_rational(a: AdeleClass) -> bool:
    """Whether an adelic class comes from a function-field extension.

    True exactly when the valuation vector sums to 0 mod p.
    """
    return a.vv.sum_mod_p() == 0


def rational_witness(a: AdeleClass) -> SigmaClass | None:
    """A function-field preimage (vv, jac=0) when one exists, else None."""
    if not exists_rational(a):
        return None
    return SigmaClass(a.ctx, a.vv, (0,) * (2 * a.ctx.g))


def adelically_equivalent(s1: SigmaClass, s2: SigmaClass) -> bool:
    """Whether two function-field classes have the same adelic image.

    Equivalent to their difference lying in the Jacobian p-torsion, i.e. to
    equality of valuation vectors.
    """
    if s1.ctx != s2.ctx:
        raise ValueError("cannot compare classes from different contexts")
    return s1.vv == s2.vv


def ramification(a: AdeleClass) -> tuple[frozenset[str], dict[str, int]]:
    """Ramification locus and profile of an adelic class.

    The locus is the support of the valuation vector; the index at x is
    p / gcd(p, v_x), which is p itself at every support point for prime p.
    """
    p = a.ctx.p
    profile = {x: p // math.gcd(p, v) for x, v in a.vv.items()}
    return frozenset(profile), profile


def algebras_isomorphic(a1: AdeleClass, a2: AdeleClass) -> bool:
    """Isomorphism as plain adele algebras, forgetting the group action.

    Classified by the ramification profile alone, so this is coarser than
    equality of classes.
    """
    if a1.ctx.p != a2.ctx.p:
        raise ValueError("cannot compare classes with different p")
    return ramification(a1)[1] == ramification(a2)[1]


def in_filtration(a: AdeleClass | SigmaClass, R: Iterable[str]) -> bool:
    """Whether the class is ramified only inside R (support of vv within R)."""
    return a.vv.support() <= frozenset(R)


def filtration_size(R: Iterable[str], p: int) -> int:
    """Number of adelic classes with ramification contained in R: p^#R."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    return p ** len(frozenset(R))


def stratum_size(R: Iterable[str], p: int) -> int:
    """Number of adelic classes ramified exactly at R: (p-1)^#R."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    return (p - 1) ** len(frozenset(R))


def _sorted_points(R: Iterable[str]) -> tuple[str, ...]:
    pts = sorted(frozenset(R))
    return tuple(pts)


def sigma_classes_with_ram_in(
    R: Iterable[str], ctx: CurveCtx, budget: int | None = None
) -> Iterator[SigmaClass]:
    """All function-field classes with ramification contained in R.

    Yields p^(2g + #R - 1) classes for nonempty R and the p^(2g) purely
    Jacobian classes for R empty, in a deterministic order.  Raises
    BudgetExceededError before yielding anything if the total is over budget.
    """
    points = _sorted_points(R)
    p, g, r = ctx.p, ctx.g, len(points)
    total = p ** (2 * g + r - 1) if r >= 1 else p ** (2 * g)
    check_budget(total, budget)

    def classes() -> Iterator[SigmaClass]:
        jac_space = itertools.product(range(p), repeat=2 * g)
        if r == 0:
            for jac in jac_space:
                yield SigmaClass(ctx, DivModP.zero(p), jac)
            return
        for head in itertools.product(range(p), repeat=r - 1):
            last = -sum(head) % p
            vv = DivModP(p, zip(points, head + (last,)))
            for jac in itertools.product(range(p), repeat=2 * g):
                yield SigmaClass(ctx, vv, jac)

    return classes()


def adele_classes_with_ram_in(
    R: Iterable[str], ctx: CurveCtx, budget: int | None = None
) -> Iterator[AdeleClass]:
    """All p^#R adelic classes with ramification contained in R."""
    points = _sorted_points(R)
    p = ctx.p
    check_budget(p ** len(points), budget)

    def classes() -> Iterator[AdeleClass]:
        for coeffs in itertools.product(range(p), repeat=len(points)):
            yield AdeleClass(ctx, DivModP(p, zip(points, coeffs)))

    return classes()
