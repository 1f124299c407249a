"""Desk-scale Galois ring extensions of F_q with a cyclic group action.

Algebras are given by structure constants over F_q (q = 1 mod p so that the
p-th roots of unity live in the base and p is invertible); the generator of
the cyclic group acts through an invertible matrix.  Everything reduces to
exact linear algebra: eigenspaces are images of the projector idempotents,
and the Galois property is decided by the rank of the map sending s tensor t
to the tuple (s * g(t))_g.

The base here is a finite field rather than an algebraically closed one, so
this module exercises the ring theory itself, not curve-level statements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arith import GF, PrimeCtx

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


# -- linear algebra over GF(q) -------------------------------------------


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_vec(gf: GF, M: Matrix, v: Sequence[int]) -> Vector:
    out = []
    for row in M:
        acc = 0
        for a, x in zip(row, v):
            if a and x:
                acc = gf.add(acc, gf.mul(a, x))
        out.append(acc)
    return tuple(out)


def mat_mul(gf: GF, A: Matrix, B: Matrix) -> Matrix:
    cols = list(zip(*B))
    return tuple(
        tuple(
            _dot(gf, row, col) for col in cols
        )
        for row in A
    )


def _dot(gf: GF, u: Sequence[int], v: Sequence[int]) -> int:
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = gf.add(acc, gf.mul(a, b))
    return acc


def mat_pow(gf: GF, M: Matrix, e: int) -> Matrix:
    if e < 0:
        raise ValueError("negative matrix powers are not needed here")
    result = identity_matrix(len(M))
    base = M
    while e:
        if e & 1:
            result = mat_mul(gf, result, base)
        base = mat_mul(gf, base, base)
        e >>= 1
    return result


def mat_sub(gf: GF, A: Matrix, B: Matrix) -> Matrix:
    return tuple(
        tuple(gf.sub(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def rref(gf: GF, rows: Iterable[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots: list[int] = []
    rank_ = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(rank_, len(M)) if M[i][col] != 0), None)
        if pivot_row is None:
            continue
        M[rank_], M[pivot_row] = M[pivot_row], M[rank_]
        inv = gf.inv(M[rank_][col])
        M[rank_] = [gf.mul(inv, a) for a in M[rank_]]
        for i in range(len(M)):
            if i != rank_ and M[i][col] != 0:
                c = M[i][col]
                M[i] = [gf.sub(a, gf.mul(c, b)) for a, b in zip(M[i], M[rank_])]
        pivots.append(col)
        rank_ += 1
        if rank_ == len(M):
            break
    return M, pivots


def rank(gf: GF, rows: Iterable[Sequence[int]]) -> int:
    return len(rref(gf, rows)[1])


def solve_linear(gf: GF, A: Sequence[Sequence[int]], b: Sequence[int]) -> Vector | None:
    """One solution x of A x = b, with free variables set to 0, or None."""
    m = len(A)
    if m == 0:
        return ()
    n = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(gf, aug)
    if n in pivots:  # pivot in the constants column: inconsistent
        return None
    x = [0] * n
    for i, col in enumerate(pivots):
        x[col] = R[i][n]
    return tuple(x)


def matrix_inverse(gf: GF, M: Matrix) -> Matrix | None:
    n = len(M)
    aug = [list(row) + list(identity_matrix(n)[i]) for i, row in enumerate(M)]
    R, pivots = rref(gf, aug)
    if pivots[:n] != list(range(n)):
        return None
    return tuple(tuple(R[i][n:]) for i in range(n))


def column_space_basis(gf: GF, M: Matrix) -> list[Vector]:
    """A basis of the column space: the columns of M at the pivot positions."""
    _, pivots = rref(gf, M)
    cols = list(zip(*M))
    return [tuple(cols[j]) for j in pivots]


# -- algebras and actions --------------------------------------------------


class FqAlgebra:
    """A commutative unital algebra over F_q given by structure constants.

    mul[i][j] is the coordinate vector of e_i * e_j; the unit is stored as a
    coordinate vector.  Commutativity, associativity and unitality are
    verified on basis elements at construction.
    """

    __slots__ = ("gf", "dim", "mul", "one")

    def __init__(self, gf: GF, dim: int, mul, one, check: bool = True):
        if dim < 1:
            raise ValueError("algebra dimension must be at least 1")
        self.gf = gf
        self.dim = dim
        self.mul = tuple(tuple(tuple(v) for v in row) for row in mul)
        self.one = tuple(one)
        if len(self.mul) != dim or any(
            len(row) != dim or any(len(v) != dim for v in row) for row in self.mul
        ):
            raise ValueError("structure constant table must be dim x dim x dim")
        if len(self.one) != dim:
            raise ValueError("unit vector has the wrong length")
        for row in self.mul:
            for v in row:
                for c in v:
                    gf.check(c)
        if check:
            self._validate()

    def _validate(self) -> None:
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                if self.mul[i][j] != self.mul[j][i]:
                    raise ValueError(f"multiplication not commutative at ({i},{j})")
        for i in range(n):
            if self.multiply(self.one, self.basis_vector(i)) != self.basis_vector(i):
                raise ValueError(f"unit fails on basis element {i}")
        for i in range(n):
            for j in range(n):
                ij = self.mul[i][j]
                for k in range(n):
                    left = self.multiply(ij, self.basis_vector(k))
                    right = self.multiply(
                        self.basis_vector(i), self.mul[j][k]
                    )
                    if left != right:
                        raise ValueError(
                            f"multiplication not associative at ({i},{j},{k})"
                        )

    def basis_vector(self, i: int) -> Vector:
        return tuple(1 if j == i else 0 for j in range(self.dim))

    def multiply(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        gf = self.gf
        out = [0] * self.dim
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                c = gf.mul(ai, bj)
                for k, m in enumerate(self.mul[i][j]):
                    if m:
                        out[k] = gf.add(out[k], gf.mul(c, m))
        return tuple(out)

    def power(self, a: Sequence[int], e: int) -> Vector:
        if e < 0:
            raise ValueError("negative powers are not defined for non-units")
        result = self.one
        for _ in range(e):
            result = self.multiply(result, a)
        return result

    def scale(self, c: int, a: Sequence[int]) -> Vector:
        return tuple(self.gf.mul(c, x) for x in a)

    def add(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        return tuple(self.gf.add(x, y) for x, y in zip(a, b))

    def mult_matrix(self, a: Sequence[int]) -> Matrix:
        cols = [self.multiply(a, self.basis_vector(j)) for j in range(self.dim)]
        return tuple(tuple(col[i] for col in cols) for i in range(self.dim))

    def is_unit(self, a: Sequence[int]) -> bool:
        return matrix_inverse(self.gf, self.mult_matrix(a)) is not None

    def is_coordinatewise(self) -> bool:
        """Whether the basis multiplies coordinatewise (split form F_q^n)."""
        n = self.dim
        return self.one == (1,) * n and all(
            self.mul[i][j] == (self.basis_vector(i) if i == j else (0,) * n)
            for i in range(n)
            for j in range(n)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqAlgebra)
            and self.gf == other.gf
            and self.mul == other.mul
            and self.one == other.one
        )

    def __hash__(self) -> int:
        return hash((self.gf, self.mul, self.one))

    def __repr__(self) -> str:
        return f"FqAlgebra(GF({self.gf.q}), dim={self.dim})"


class GAction:
    """Action of a p-cyclic group on an algebra through its generator matrix.

    The matrix must have order dividing p, be an algebra automorphism on
    basis pairs and fix the unit.  The identity matrix is a legal (trivial)
    action; operations that need faithfulness reject it themselves.
    """

    __slots__ = ("algebra", "p", "gen", "_powers")

    def __init__(self, algebra: FqAlgebra, p: int, gen, check: bool = True):
        self.algebra = algebra
        self.p = p
        self.gen = tuple(tuple(row) for row in gen)
        self._powers: list[Matrix] | None = None
        if len(self.gen) != algebra.dim or any(
            len(row) != algebra.dim for row in self.gen
        ):
            raise ValueError("generator matrix must be dim x dim")
        for row in self.gen:
            for c in row:
                algebra.gf.check(c)
        if check:
            self._validate()

    def _validate(self) -> None:
        gf, S = self.algebra.gf, self.algebra
        n = S.dim
        if mat_pow(gf, self.gen, self.p) != identity_matrix(n):
            raise ValueError("generator matrix does not have order dividing p")
        if mat_vec(gf, self.gen, S.one) != S.one:
            raise ValueError("generator does not fix the unit")
        for i in range(n):
            gi = mat_vec(gf, self.gen, S.basis_vector(i))
            for j in range(i, n):
                gj = mat_vec(gf, self.gen, S.basis_vector(j))
                if mat_vec(gf, self.gen, S.mul[i][j]) != S.multiply(gi, gj):
                    raise ValueError(
                        f"generator is not an algebra automorphism at ({i},{j})"
                    )

    def is_identity(self) -> bool:
        return self.gen == identity_matrix(self.algebra.dim)

    def matrix_power(self, a: int) -> Matrix:
        if self._powers is None:
            powers = [identity_matrix(self.algebra.dim)]
            for _ in range(self.p - 1):
                powers.append(mat_mul(self.algebra.gf, powers[-1], self.gen))
            self._powers = powers
        return self._powers[a % self.p]

    def apply(self, v: Sequence[int], a: int = 1) -> Vector:
        return mat_vec(self.algebra.gf, self.matrix_power(a), v)


@dataclass(frozen=True)
class Character:
    """A character of the p-cyclic group: the generator maps to zeta**exponent."""

    p: int
    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % self.p)

    def is_trivial(self) -> bool:
        return self.exponent == 0


def _zeta(ctx: PrimeCtx) -> int:
    return ctx.zeta


def kummer_extension(
    ctx: PrimeCtx, u: int, chi: Character | None = None
) -> tuple[FqAlgebra, GAction]:
    """The rank-p extension F_q[T]/(T^p - u) with the generator scaling T by
    chi(generator); requires u invertible and chi nontrivial."""
    gf, p = ctx.gf, ctx.p
    gf.check(u)
    if u == 0:
        raise ValueError("the defining constant of a Kummer extension must be a unit")
    if chi is None:
        chi = Character(p, 1)
    if chi.p != p:
        raise ValueError("character has the wrong order")
    if chi.is_trivial():
        raise ValueError("a Kummer extension needs a nontrivial character")
    mul = [[None] * p for _ in range(p)]
    for i in range(p):
        for j in range(p):
            k = i + j
            coeff = 1 if k < p else u
            vec = [0] * p
            vec[k % p] = coeff
            mul[i][j] = tuple(vec)
    one = tuple(1 if i == 0 else 0 for i in range(p))
    S = FqAlgebra(gf, p, mul, one)
    zeta_chi = gf.pow(_zeta(ctx), chi.exponent)
    gen = tuple(
        tuple(gf.pow(zeta_chi, i) if i == j else 0 for j in range(p))
        for i in range(p)
    )
    return S, GAction(S, p, gen)


def trivial_extension(ctx: PrimeCtx) -> tuple[FqAlgebra, GAction]:
    """F_q^p with coordinatewise product and the cyclic coordinate shift."""
    gf, p = ctx.gf, ctx.p
    mul = [
        [
            tuple(1 if (i == j and k == i) else 0 for k in range(p))
            for j in range(p)
        ]
        for i in range(p)
    ]
    one = (1,) * p
    S = FqAlgebra(gf, p, mul, one)
    gen = tuple(
        tuple(1 if j == (i + 1) % p else 0 for j in range(p)) for i in range(p)
    )
    return S, GAction(S, p, gen)


def nilpotent_extension(
    ctx: PrimeCtx, chi: Character | None = None
) -> tuple[FqAlgebra, GAction]:
    """F_q[T]/(T^p) with the same diagonal action as a Kummer extension.

    The element T is nilpotent, so this is never a Galois extension; it is
    the standard counterexample family.
    """
    gf, p = ctx.gf, ctx.p
    if chi is None:
        chi = Character(p, 1)
    if chi.is_trivial():
        raise ValueError("use a nontrivial character")
    mul = [[None] * p for _ in range(p)]
    for i in range(p):
        for j in range(p):
            vec = [0] * p
            if i + j < p:
                vec[i + j] = 1
            mul[i][j] = tuple(vec)
    one = tuple(1 if i == 0 else 0 for i in range(p))
    S = FqAlgebra(gf, p, mul, one)
    zeta_chi = gf.pow(_zeta(ctx), chi.exponent)
    gen = tuple(
        tuple(gf.pow(zeta_chi, i) if i == j else 0 for j in range(p))
        for i in range(p)
    )
    return S, GAction(S, p, gen)


def idempotent_matrix(ctx: PrimeCtx, act: GAction, chi: Character) -> Matrix:
    """The projector onto the chi-eigenspace: (1/p) sum_a chi(g^-a) g^a."""
    gf, p = ctx.gf, ctx.p
    if chi.p != p or act.p != p:
        raise ValueError("character, action and context must share the same p")
    n = act.algebra.dim
    zeta = _zeta(ctx)
    inv_p = gf.inv(gf.scalar(p))
    rows = [[0] * n for _ in range(n)]
    for a in range(p):
        weight = gf.pow(zeta, (-chi.exponent * a) % p)
        G = act.matrix_power(a)
        for i in range(n):
            for j in range(n):
                if G[i][j]:
                    rows[i][j] = gf.add(rows[i][j], gf.mul(weight, G[i][j]))
    return tuple(tuple(gf.mul(inv_p, c) for c in row) for row in rows)


def eigenspace(ctx: PrimeCtx, act: GAction, chi: Character) -> list[Vector]:
    """A basis of the subspace where the generator acts by chi(generator)."""
    return column_space_basis(ctx.gf, idempotent_matrix(ctx, act, chi))


def is_galois(S: FqAlgebra, act: GAction) -> bool:
    """Chase-Harrison-Rosenberg criterion for S/F_q with the given action.

    Requires a faithful action (identity generators are rejected).  True
    exactly when the fixed subspace is the scalars and the map
    s tensor t -> (s * g(t))_g from S tensor S to Maps(G, S) is bijective,
    which forces dim S = p.
    """
    if act.algebra is not S and act.algebra != S:
        raise ValueError("action does not belong to this algebra")
    if act.is_identity():
        raise ValueError("the action is not faithful (generator acts as identity)")
    gf, p, n = S.gf, act.p, S.dim
    fixed_dim = n - rank(gf, mat_sub(gf, act.gen, identity_matrix(n)))
    if fixed_dim != 1:
        return False
    if n != p:
        return False
    # columns indexed by basis tensors e_i x e_j, rows by (group element, k)
    columns = []
    for i in range(n):
        e_i = S.basis_vector(i)
        for j in range(n):
            e_j = S.basis_vector(j)
            col: list[int] = []
            for a in range(p):
                col.extend(S.multiply(e_i, act.apply(e_j, a)))
            columns.append(col)
    h_rows = list(zip(*columns))
    return rank(gf, h_rows) == n * n


def galois_by_ideal_separation(S: FqAlgebra, act: GAction) -> bool:
    """Galois test through maximal ideals, for split algebras only.

    In split form the maximal ideals are the coordinate hyperplanes, and the
    requirement is that every nontrivial group element moves some element of
    S modulo each of them.  Cross-checks the rank criterion on F_q^p.
    """
    if not S.is_coordinatewise():
        raise ValueError("ideal enumeration requires a coordinatewise algebra")
    if act.is_identity():
        raise ValueError("the action is not faithful (generator acts as identity)")
    gf, n = S.gf, S.dim
    fixed_dim = n - rank(gf, mat_sub(gf, act.gen, identity_matrix(n)))
    if fixed_dim != 1:
        return False
    for a in range(1, act.p):
        diff = mat_sub(gf, act.matrix_power(a), identity_matrix(n))
        # some s with g(s) != s mod m_i exists iff row i of (g - 1) is nonzero
        if any(all(c == 0 for c in row) for row in diff):
            return False
    return True


def primitive_element(
    ctx: PrimeCtx, S: FqAlgebra, act: GAction, chi: Character | None = None
) -> Vector | None:
    """An invertible chi-eigenvector, or None if the eigenspace has none.

    For a Galois extension the returned element alpha satisfies alpha^p in
    F_q^* and its powers 1, alpha, ..., alpha^(p-1) form a basis; both facts
    are verified and violations are reported as errors.
    """
    if chi is None:
        chi = Character(ctx.p, 1)
    if chi.is_trivial():
        raise ValueError("a primitive element needs a nontrivial character")
    basis = eigenspace(ctx, act, chi)
    alpha = next((v for v in _span_candidates(S.gf, basis) if S.is_unit(v)), None)
    if alpha is None:
        return None
    _, scalar = _scalar_pth_power(ctx, S, alpha)
    if scalar == 0:
        raise ValueError("invertible eigenvector has non-unit p-th power")
    powers = [S.power(alpha, e) for e in range(ctx.p)]
    if S.dim != ctx.p or rank(S.gf, powers) != ctx.p:
        raise ValueError("powers of the eigenvector do not form a basis")
    return alpha


def _span_candidates(gf: GF, basis: list[Vector]):
    """Nonzero vectors in the span, basis vectors first; bounded enumeration."""
    for v in basis:
        yield v
    if len(basis) >= 2 and gf.q ** len(basis) <= 4096:
        for coeffs in itertools.product(range(gf.q), repeat=len(basis)):
            v = tuple(
                _dot(gf, coeffs, col) for col in zip(*basis)
            )
            if any(v):
                yield v


def _scalar_pth_power(ctx: PrimeCtx, S: FqAlgebra, alpha: Sequence[int]) -> tuple[Vector, int]:
    """alpha^p together with its scalar value; raises if not a scalar."""
    gf = ctx.gf
    ap = S.power(alpha, ctx.p)
    pivot = next((i for i, c in enumerate(S.one) if c != 0), None)
    scalar = gf.mul(ap[pivot], gf.inv(S.one[pivot]))
    if ap != S.scale(scalar, S.one):
        raise ValueError("p-th power of the eigenvector is not a scalar")
    return ap, scalar


def unit_class_of(
    ctx: PrimeCtx, S: FqAlgebra, act: GAction, chi: Character | None = None
) -> int:
    """The constant alpha^p in F_q^* attached to a Galois extension."""
    alpha = primitive_element(ctx, S, act, chi)
    if alpha is None:
        raise ValueError("no invertible eigenvector: the extension is not Galois")
    return _scalar_pth_power(ctx, S, alpha)[1]


def harrison_product(
    ctx: PrimeCtx,
    S1: FqAlgebra,
    act1: GAction,
    S2: FqAlgebra,
    act2: GAction,
) -> tuple[FqAlgebra, GAction]:
    """Product of two Galois extensions: the sum of matched eigenspace tensors.

    Both inputs must be Galois over the same base; each eigenspace is then a
    line, and the product is the rank-p algebra spanned by the tensors of
    matching eigenvectors, with the generator acting diagonally.
    """
    gf, p = ctx.gf, ctx.p
    if S1.gf != gf or S2.gf != gf or act1.p != p or act2.p != p:
        raise ValueError("the factors live over incompatible contexts")
    if not is_galois(S1, act1) or not is_galois(S2, act2):
        raise ValueError("both factors must be Galois extensions")
    u_bases, v_bases = [], []
    for e in range(p):
        chi = Character(p, e)
        b1 = eigenspace(ctx, act1, chi)
        b2 = eigenspace(ctx, act2, chi)
        if len(b1) != 1 or len(b2) != 1:
            raise ValueError(
                "an eigenspace is not a line; the factors are not Galois"
            )
        u_bases.append(S1.one if e == 0 else b1[0])
        v_bases.append(S2.one if e == 0 else b2[0])

    def structure_scalar(S: FqAlgebra, bases: list[Vector], e: int, f: int) -> int:
        w = S.multiply(bases[e], bases[f])
        t = bases[(e + f) % p]
        pivot = next(i for i, c in enumerate(t) if c != 0)
        c = gf.mul(w[pivot], gf.inv(t[pivot]))
        if w != tuple(gf.mul(c, x) for x in t):
            raise ValueError("eigenvector products left the matching eigenline")
        return c

    mul = [[None] * p for _ in range(p)]
    for e in range(p):
        for f in range(p):
            c = gf.mul(
                structure_scalar(S1, u_bases, e, f),
                structure_scalar(S2, v_bases, e, f),
            )
            vec = [0] * p
            vec[(e + f) % p] = c
            mul[e][f] = tuple(vec)
    one = tuple(1 if i == 0 else 0 for i in range(p))
    S = FqAlgebra(gf, p, mul, one)
    zeta = _zeta(ctx)
    gen = tuple(
        tuple(gf.pow(zeta, i) if i == j else 0 for j in range(p)) for i in range(p)
    )
    return S, GAction(S, p, gen)


def equivariantly_isomorphic(
    ctx: PrimeCtx,
    S1: FqAlgebra,
    act1: GAction,
    S2: FqAlgebra,
    act2: GAction,
    chi: Character | None = None,
) -> bool:
    """Whether two Galois extensions are isomorphic compatibly with the action.

    Decided through primitive elements: the constants alpha_i^p must agree in
    F_q^* modulo p-th powers.
    """
    u1 = unit_class_of(ctx, S1, act1, chi)
    u2 = unit_class_of(ctx, S2, act2, chi)
    gf = ctx.gf
    ratio = gf.mul(u1, gf.inv(u2))
    return gf.pow(ratio, (gf.q - 1) // ctx.p) == 1


def twist(S: FqAlgebra, act: GAction, tau: int) -> tuple[FqAlgebra, GAction]:
    """The same algebra with the generator replaced by its tau-th power."""
    if tau % act.p == 0:
        raise ValueError(f"{tau} is not a unit mod {act.p}")
    gen = mat_pow(S.gf, act.gen, tau % act.p)
    return S, GAction(S, act.p, gen)


# -- interchange format ----------------------------------------------------


def find_unit_vector(gf: GF, dim: int, mul) -> Vector:
    """Solve for the unit of a structure-constant table, or raise."""
    rows = []
    rhs = []
    for i in range(dim):
        for k in range(dim):
            rows.append([mul[j][i][k] for j in range(dim)])
            rhs.append(1 if i == k else 0)
    one = solve_linear(gf, rows, rhs)
    if one is None:
        raise ValueError("the structure constants define a non-unital algebra")
    return one


def algebra_to_json(S: FqAlgebra, act: GAction) -> dict:
    return {
        "q": S.gf.q,
        "dim": S.dim,
        "mul": [[list(v) for v in row] for row in S.mul],
        "gen": [list(row) for row in act.gen],
    }


def algebra_from_json(payload: dict, p: int) -> tuple[FqAlgebra, GAction]:
    if not isinstance(payload, dict):
        raise ValueError("algebra payload must be an object")
    missing = {"q", "dim", "mul", "gen"} - set(payload)
    if missing:
        raise ValueError(f"algebra payload is missing {sorted(missing)}")
    q, dim = payload["q"], payload["dim"]
    if not isinstance(q, int) or not isinstance(dim, int) or dim < 1:
        raise ValueError('"q" and "dim" must be positive integers')
    gf = GF(q)
    mul = payload["mul"]
    if (
        not isinstance(mul, list)
        or len(mul) != dim
        or any(not isinstance(row, list) or len(row) != dim for row in mul)
        or any(
            not isinstance(v, list) or len(v) != dim or not all(isinstance(c, int) for c in v)
            for row in mul
            for v in row
        )
    ):
        raise ValueError('"mul" must be a dim x dim x dim table of integers')
    one = find_unit_vector(gf, dim, mul)
    S = FqAlgebra(gf, dim, mul, one)
    return S, GAction(S, p, payload["gen"])
