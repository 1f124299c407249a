"""Points, divisors and factored rational functions on the projective line.

Points are opaque string labels compared and ordered lexicographically; no
field arithmetic is ever performed on them.  The label "inf" is reserved for
the point at infinity on P^1.  A factored function stands for a class of
prod (x - x_i)^{e_i} modulo nonzero constants, which is enough because every
constant over an algebraically closed base is a p-th power.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

INF = "inf"

Label = str


def _check_label(label: str) -> str:
    if not isinstance(label, str) or not label:
        raise ValueError(f"point label must be a nonempty string, got {label!r}")
    return label


class Divisor:
    """Finitely supported integer combination of points."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        d: dict[str, int] = {}
        for label, c in items:
            _check_label(label)
            if label in d:
                raise ValueError(f"duplicate point {label!r} in divisor")
            if not isinstance(c, int):
                raise ValueError(f"coefficient of {label!r} must be an int")
            if c != 0:
                d[label] = c
        self._coeffs = d

    @classmethod
    def zero(cls) -> "Divisor":
        return cls()

    def coeff(self, label: str) -> int:
        return self._coeffs.get(label, 0)

    def support(self) -> frozenset[str]:
        return frozenset(self._coeffs)

    def items(self) -> Iterator[tuple[str, int]]:
        return iter(sorted(self._coeffs.items()))

    def degree(self) -> int:
        return sum(self._coeffs.values())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "Divisor") -> "Divisor":
        labels = set(self._coeffs) | set(other._coeffs)
        return Divisor({x: self.coeff(x) + other.coeff(x) for x in labels})

    def __neg__(self) -> "Divisor":
        return Divisor({x: -c for x, c in self._coeffs.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __rmul__(self, n: int) -> "Divisor":
        return Divisor({x: n * c for x, c in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Divisor) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "Divisor(0)"
        body = " + ".join(f"{c}({x})" for x, c in self.items())
        return f"Divisor({body})"

    def mod_p(self, p: int) -> "DivModP":
        return DivModP(p, self._coeffs)

    def to_json(self) -> dict:
        return {"coeffs": [{"point": x, "c": c} for x, c in self.items()]}

    @classmethod
    def from_json(cls, payload: dict) -> "Divisor":
        if not isinstance(payload, dict) or "coeffs" not in payload:
            raise ValueError('divisor payload must be {"coeffs": [...]}')
        entries = payload["coeffs"]
        if not isinstance(entries, list):
            raise ValueError('"coeffs" must be a list')
        pairs = []
        for e in entries:
            if not isinstance(e, dict) or set(e) != {"point", "c"}:
                raise ValueError(f'divisor entry must be {{"point", "c"}}, got {e!r}')
            pairs.append((e["point"], e["c"]))
        return cls(pairs)


class DivModP:
    """Finitely supported vector of residues mod p indexed by points."""

    __slots__ = ("p", "_coeffs")

    def __init__(self, p: int, coeffs: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        if not isinstance(p, int) or p < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {p!r}")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        d: dict[str, int] = {}
        for label, c in items:
            _check_label(label)
            if label in d:
                raise ValueError(f"duplicate point {label!r}")
            c = c % p
            if c:
                d[label] = c
        self.p = p
        self._coeffs = d

    @classmethod
    def zero(cls, p: int) -> "DivModP":
        return cls(p)

    def coeff(self, label: str) -> int:
        return self._coeffs.get(label, 0)

    def support(self) -> frozenset[str]:
        return frozenset(self._coeffs)

    def items(self) -> Iterator[tuple[str, int]]:
        return iter(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def sum_mod_p(self) -> int:
        return sum(self._coeffs.values()) % self.p

    def _require_same_p(self, other: "DivModP") -> None:
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other: "DivModP") -> "DivModP":
        self._require_same_p(other)
        labels = set(self._coeffs) | set(other._coeffs)
        return DivModP(self.p, {x: self.coeff(x) + other.coeff(x) for x in labels})

    def __neg__(self) -> "DivModP":
        return DivModP(self.p, {x: -c for x, c in self._coeffs.items()})

    def __sub__(self, other: "DivModP") -> "DivModP":
        return self + (-other)

    def scale(self, b: int) -> "DivModP":
        return DivModP(self.p, {x: b * c for x, c in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DivModP)
            and self.p == other.p
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, tuple(self.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}({x})" for x, c in self.items()) or "0"
        return f"DivModP[{self.p}]({body})"

    def to_json(self) -> dict:
        return {"coeffs": [{"point": x, "c": c} for x, c in self.items()]}

    @classmethod
    def from_json(cls, p: int, payload: dict) -> "DivModP":
        return Divisor.from_json(payload).mod_p(p)


class FactoredFunction:
    """A rational function on P^1 as prod (x - root)^e, modulo constants.

    Roots are finite points (the reserved label "inf" is rejected) and
    exponents are nonzero integers.  The empty product is the class of a
    nonzero constant.
    """

    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = factors.items() if isinstance(factors, Mapping) else factors
        d: dict[str, int] = {}
        for label, e in items:
            _check_label(label)
            if label == INF:
                raise ValueError('"inf" cannot be a root of a factored function')
            if label in d:
                raise ValueError(f"duplicate root {label!r} in factor list")
            if not isinstance(e, int):
                raise ValueError(f"exponent of {label!r} must be an int")
            if e != 0:
                d[label] = e
        self._factors = d

    @classmethod
    def constant(cls) -> "FactoredFunction":
        return cls()

    def exponent(self, label: str) -> int:
        return self._factors.get(label, 0)

    def roots(self) -> frozenset[str]:
        return frozenset(self._factors)

    def items(self) -> Iterator[tuple[str, int]]:
        return iter(sorted(self._factors.items()))

    def __mul__(self, other: "FactoredFunction") -> "FactoredFunction":
        labels = set(self._factors) | set(other._factors)
        return FactoredFunction(
            {x: self.exponent(x) + other.exponent(x) for x in labels}
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, FactoredFunction) and self._factors == other._factors

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __repr__(self) -> str:
        body = "".join(f"(x-{x})^{e}" for x, e in self.items()) or "1"
        return f"FactoredFunction({body})"

    def to_json(self) -> dict:
        return {"factors": [{"root": x, "e": e} for x, e in self.items()]}

    @classmethod
    def from_json(cls, payload: dict) -> "FactoredFunction":
        if not isinstance(payload, dict) or "factors" not in payload:
            raise ValueError('function payload must be {"factors": [...]}')
        entries = payload["factors"]
        if not isinstance(entries, list):
            raise ValueError('"factors" must be a list')
        pairs = []
        for e in entries:
            if not isinstance(e, dict) or set(e) != {"root", "e"}:
                raise ValueError(f'factor entry must be {{"root", "e"}}, got {e!r}')
            pairs.append((e["root"], e["e"]))
        return cls(pairs)


def divisor_of(f: FactoredFunction) -> Divisor:
    """Divisor of zeros and poles on P^1; always has total degree 0."""
    coeffs = dict(f.items())
    deg_finite = sum(coeffs.values())
    if deg_finite != 0:
        coeffs[INF] = -deg_finite
    return Divisor(coeffs)


def valuation_vector(f: FactoredFunction, p: int) -> DivModP:
    """The divisor of f reduced mod p; its coefficients sum to 0 mod p."""
    return divisor_of(f).mod_p(p)


def is_pth_power(f: FactoredFunction, p: int) -> bool:
    """On P^1 a function class is a p-th power iff every exponent is 0 mod p."""
    return all(e % p == 0 for _, e in f.items())


def divisor_to_function_mod_p(D: Divisor, p: int) -> FactoredFunction:
    """A function f on P^1 with divisor congruent to D mod p at every point.

    Requires deg(D) = 0 (mod p); the finite coefficients of D reduced into
    [0, p) become the exponents, and the coefficient at infinity then matches
    automatically by the degree condition.
    """
    if D.degree() % p != 0:
        raise ValueError(
            f"degree {D.degree()} of the divisor is not divisible by {p}; "
            "no function has a divisor congruent to it"
        )
    return FactoredFunction(
        {x: c % p for x, c in D.items() if x != INF and c % p != 0}
    )
