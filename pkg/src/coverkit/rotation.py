"""Local symbols at branch points and rotation data of superelliptic covers.

Over an algebraically closed residue field the local multiplicative group
modulo p-th powers is Z/(p) through the valuation, so the local pairing of a
Galois element sigma^s against a class of valuation v is simply s*v mod p
(tame evaluation).  Rotation numbers come out of that pairing; that they
invert the branch exponents mod p is a consequence the tests confirm against
an unrelated inverse computation, never an input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .arith import is_prime
from .divisors import DivModP, INF, _check_label
from .harrison import CurveCtx, SigmaClass


@dataclass(frozen=True)
class LocalClass:
    """A class in K_x^*/K_x^{*p}, identified with its valuation v mod p."""

    p: int
    v: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        object.__setattr__(self, "v", self.v % self.p)


@dataclass(frozen=True)
class LocalGaloisElt:
    """sigma^s, where sigma is the generator moving z^(1/p) to zeta*z^(1/p)."""

    p: int
    s: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        object.__setattr__(self, "s", self.s % self.p)


def kummer_symbol(g: LocalGaloisElt, lam: LocalClass) -> int:
    """Exponent of zeta in the local pairing <sigma^s, lambda>: s*v mod p."""
    if g.p != lam.p:
        raise ValueError("pairing arguments live over different p")
    return g.s * lam.v % g.p


@dataclass(frozen=True)
class SuperellipticData:
    """Branch data of y^p = prod (x - x_i)^{v_i} over P^1.

    Branch points are distinct finite labels, exponents satisfy 0 < v_i < p,
    and the exponents sum to 0 mod p (the cover is unramified at infinity).
    """

    p: int
    branch: tuple[str, ...]
    exps: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        branch = tuple(self.branch)
        exps = tuple(self.exps)
        object.__setattr__(self, "branch", branch)
        object.__setattr__(self, "exps", exps)
        if len(branch) < 1:
            raise ValueError("at least one branch point is required")
        if len(branch) != len(exps):
            raise ValueError("branch points and exponents must match in length")
        if len(set(branch)) != len(branch):
            raise ValueError("branch points must be pairwise distinct")
        for x in branch:
            _check_label(x)
            if x == INF:
                raise ValueError("branch points must be finite (not inf)")
        for v in exps:
            if not isinstance(v, int) or not 0 < v < self.p:
                raise ValueError(f"exponent {v!r} is outside (0, {self.p})")
        if sum(exps) % self.p != 0:
            raise ValueError(
                "exponents must sum to 0 mod p (the cover must be unramified "
                "at infinity)"
            )

    def is_irreducible(self) -> bool:
        """Irreducibility of the cover: some exponent nonzero mod p (Capelli)."""
        return any(v % self.p != 0 for v in self.exps)

    def to_json(self) -> dict:
        return {"p": self.p, "branch": list(self.branch), "exps": list(self.exps)}

    @classmethod
    def from_json(cls, payload: dict, p: int | None = None) -> "SuperellipticData":
        if not isinstance(payload, dict):
            raise ValueError("superelliptic payload must be an object")
        if "branch" not in payload or "exps" not in payload:
            raise ValueError('superelliptic payload needs "branch" and "exps"')
        payload_p = payload.get("p", p)
        if payload_p is None:
            raise ValueError("no p given in payload or context")
        if p is not None and payload_p != p:
            raise ValueError(f"payload p = {payload_p} contradicts context p = {p}")
        branch, exps = payload["branch"], payload["exps"]
        if not isinstance(branch, list) or not isinstance(exps, list):
            raise ValueError('"branch" and "exps" must be lists')
        return cls(payload_p, tuple(branch), tuple(exps))


def local_galois_generator_power(p: int, v: int) -> LocalGaloisElt:
    """The local Galois element induced at a branch point of local exponent v.

    The deck generator tau scales y by zeta; locally y is a unit times
    z^(v/p), and sigma^a moves it by zeta^(a*v), so tau restricts to sigma^a
    for the a in [1, p) with a*v = 1 mod p.  The exponent is found by direct
    search over the group, not by a modular-inverse formula.
    """
    if v % p == 0:
        raise ValueError("the local exponent must be nonzero mod p")
    for a in range(1, p):
        if a * v % p == 1:
            return LocalGaloisElt(p, a)
    raise AssertionError("unreachable: v is a unit mod p")


def rotation_data(S: SuperellipticData) -> dict[str, int]:
    """Rotation number at each branch point.

    At x_i the induced local Galois element is paired against the class of
    the local uniformizer; the resulting exponents are the classical rotation
    numbers.
    """
    uniformizer = LocalClass(S.p, 1)
    out = {}
    for x, v in zip(S.branch, S.exps):
        tau_x = local_galois_generator_power(S.p, v)
        out[x] = kummer_symbol(tau_x, uniformizer)
    return out


def rotation_equivalent(
    r1: Mapping[str, int], r2: Mapping[str, int], p: int
) -> bool:
    """Whether two rotation maps agree up to one common unit multiple."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if set(r1) != set(r2):
        raise ValueError("rotation maps are supported on different point sets")
    if not r1:
        return True
    for c in range(1, p):
        if all(c * r1[x] % p == r2[x] % p for x in r1):
            return True
    return False


def superelliptic_to_sigma(S: SuperellipticData, ctx: CurveCtx | None = None) -> SigmaClass:
    """The function-field class of the cover: vv from the branch exponents.

    The coefficient at infinity is 0 by the zero-sum hypothesis, and the
    Jacobian coordinate is empty since the base is P^1.
    """
    if ctx is None:
        ctx = CurveCtx(S.p, 0)
    if ctx.p != S.p or ctx.g != 0:
        raise ValueError("superelliptic covers here live over P^1 with the same p")
    vv = DivModP(S.p, zip(S.branch, S.exps))
    return SigmaClass(ctx, vv, ())


def cover_genus(S: SuperellipticData) -> int:
    """Genus of the covering curve: (p-1)(r-2)/2 for r branch points.

    Totally ramified covers of P^1 unramified at infinity need r >= 2;
    anything smaller is rejected.
    """
    r = len(S.branch)
    doubled = (S.p - 1) * (r - 2)
    if doubled < 0:
        raise ValueError(
            f"no irreducible cover of P^1 with {r} < 2 branch points exists"
        )
    assert doubled % 2 == 0  # zero-sum forces r even when p = 2
    return doubled // 2
