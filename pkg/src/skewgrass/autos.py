"""Automorphisms of M_n(D) and their inner/semilinear decomposition.

M_n(D) is a Q-vector space on the elements E_st * b_u (entry b_u at position
(s, t)), ordered by (s, t, u); an automorphism is a rational matrix in that
coordinate system.  Every automorphism factors as M -> P sigma(M) P^{-1}
where sigma applies a lifted center automorphism entrywise and P is
invertible over D.  sigma is pinned down by the action on the center, and P
is found by solving the linear equations f(B) P = P B, which have a one
dimensional solution space over the center once sigma has been split off.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import qlinalg
from .algebra import (
    AlgebraAutomorphism,
    AlgebraElement,
    DivisionAlgebra,
    LiftTable,
    center,
    center_restriction,
    verify_center_automorphism,
)
from .errors import ValidationError
from .linalg import (
    MatrixOverD,
    RightSubspace,
    apply_matrix,
    apply_sigma,
    column_echelon,
    random_subspace,
    subseed,
    try_inverse,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Block:
    """One matrix-algebra factor M_n(D) together with its lift table."""

    __slots__ = ("algebra", "n", "lifts")

    def __init__(self, algebra: DivisionAlgebra, n: int, lifts: LiftTable | None = None):
        if n < 1:
            raise ValidationError("matrix size must be at least 1")
        self.algebra = algebra
        self.n = n
        self.lifts = lifts if lifts is not None else LiftTable.build(algebra)
        if self.lifts.algebra != algebra:
            raise ValidationError("lift table belongs to a different algebra")

    @property
    def dim_q(self) -> int:
        return self.algebra.dim * self.n * self.n

    @property
    def label(self) -> str:
        return f"M_{self.n}({self.algebra.label})"

    def basis_position(self, q: int) -> tuple[int, int, int]:
        d = self.algebra.dim
        s, rem = divmod(q, self.n * d)
        t, u = divmod(rem, d)
        return s, t, u

    def basis_matrix(self, q: int) -> MatrixOverD:
        s, t, u = self.basis_position(q)
        return MatrixOverD.unit_entry(self.algebra, self.n, self.n, s, t,
                                      self.algebra.basis_element(u))

    def basis_label(self, q: int) -> str:
        s, t, u = self.basis_position(q)
        return f"E[{s + 1},{t + 1}]*{self.algebra.basis_labels[u]}"

    def flatten(self, m: MatrixOverD):
        if m.rows != self.n or m.cols != self.n or m.algebra != self.algebra:
            raise ValidationError(f"matrix does not live in {self.label}")
        return m.coords()

    def unflatten(self, vec) -> MatrixOverD:
        d = self.algebra.dim
        ents = []
        pos = 0
        for _ in range(self.n):
            row = []
            for _ in range(self.n):
                row.append(AlgebraElement(self.algebra, tuple(vec[pos:pos + d])))
                pos += d
            ents.append(row)
        return MatrixOverD(self.algebra, ents)

    def same_description(self, other: "Block") -> bool:
        return self.n == other.n and self.algebra == other.algebra and self.lifts == other.lifts

    def __eq__(self, other):
        if not isinstance(other, Block):
            return NotImplemented
        return self.same_description(other)

    def __hash__(self):
        return hash((self.n, self.algebra))

    def __repr__(self):
        return f"Block({self.label})"


class MatrixAlgebraAutomorphism:
    """An automorphism of M_n(D) held as its rational coordinate matrix."""

    __slots__ = ("block", "linear_map", "decomposition")

    def __init__(self, block: Block, linear_map, decomposition=None):
        self.block = block
        self.linear_map = tuple(tuple(c for c in row) for row in linear_map)
        dq = block.dim_q
        if len(self.linear_map) != dq or any(len(r) != dq for r in self.linear_map):
            raise ValidationError(f"linear map must be {dq}x{dq} for {block.label}")
        self.decomposition = decomposition

    def apply_flat(self, vec):
        return tuple(qlinalg.matvec([list(r) for r in self.linear_map], list(vec)))

    def apply(self, m: MatrixOverD) -> MatrixOverD:
        return self.block.unflatten(self.apply_flat(self.block.flatten(m)))

    def is_identity(self) -> bool:
        return qlinalg.is_identity([list(r) for r in self.linear_map])

    def compose(self, other: "MatrixAlgebraAutomorphism") -> "MatrixAlgebraAutomorphism":
        """self after other."""
        if self.block != other.block:
            raise ValidationError("cannot compose automorphisms of different blocks")
        prod = qlinalg.matmul([list(r) for r in self.linear_map],
                              [list(r) for r in other.linear_map])
        return MatrixAlgebraAutomorphism(self.block, prod)

    def __eq__(self, other):
        if not isinstance(other, MatrixAlgebraAutomorphism):
            return NotImplemented
        return self.block == other.block and self.linear_map == other.linear_map

    def __hash__(self):
        return hash(self.linear_map)

    def __repr__(self):
        return f"MatrixAlgebraAutomorphism({self.block.label})"


def _conjugation_image(p: MatrixOverD, pinv: MatrixOverD, s: int, t: int,
                       x: AlgebraElement) -> MatrixOverD:
    """P (E_st x) P^{-1} without forming the sparse middle matrix."""
    alg = p.algebra
    n = p.rows
    left = [p.entries[r][s] * x for r in range(n)]
    ents = [[left[r] * pinv.entries[t][c] for c in range(n)] for r in range(n)]
    return MatrixOverD(alg, ents)


def from_pair(block: Block, p: MatrixOverD, sigma: AlgebraAutomorphism,
              pinv: MatrixOverD | None = None) -> MatrixAlgebraAutomorphism:
    """Automorphism M -> P sigma(M) P^{-1} as a coordinate matrix."""
    if p.rows != block.n or p.cols != block.n or p.algebra != block.algebra:
        raise ValidationError(f"P must be an invertible {block.n}x{block.n} matrix over {block.algebra.label}")
    if sigma.algebra != block.algebra:
        raise ValidationError("sigma acts on a different algebra")
    if pinv is None:
        pinv = try_inverse(p)
        if pinv is None:
            raise ValidationError(f"P is singular over {block.algebra.label}")
    dq = block.dim_q
    cols = []
    for q in range(dq):
        s, t, u = block.basis_position(q)
        x = sigma.apply(block.algebra.basis_element(u))
        cols.append(block.flatten(_conjugation_image(p, pinv, s, t, x)))
    rows = tuple(tuple(cols[q][r] for q in range(dq)) for r in range(dq))
    return MatrixAlgebraAutomorphism(block, rows, decomposition=(p, sigma))


def extend_entrywise(block: Block, sigma: AlgebraAutomorphism) -> MatrixAlgebraAutomorphism:
    """Apply an automorphism of D to every matrix entry."""
    return from_pair(block, MatrixOverD.identity(block.algebra, block.n), sigma,
                     pinv=MatrixOverD.identity(block.algebra, block.n))


def validate_matrix_algebra_automorphism(block: Block, linear_map) -> MatrixAlgebraAutomorphism:
    """Full check: bijective, unital, multiplicative on all basis pairs."""
    rows = [[Fraction(c) if isinstance(c, int) else c for c in row] for row in linear_map]
    f = MatrixAlgebraAutomorphism(block, rows)
    dq = block.dim_q
    if qlinalg.inverse([list(r) for r in f.linear_map]) is None:
        raise ValidationError(f"linear map on {block.label} is not invertible")
    ident = MatrixOverD.identity(block.algebra, block.n)
    if f.apply_flat(block.flatten(ident)) != block.flatten(ident):
        raise ValidationError(f"linear map on {block.label} does not fix the identity matrix")
    images = [f.block.unflatten(tuple(f.linear_map[r][q] for r in range(dq))) for q in range(dq)]
    for p_idx in range(dq):
        bp = block.basis_matrix(p_idx)
        for q_idx in range(dq):
            bq = block.basis_matrix(q_idx)
            lhs = f.apply_flat(block.flatten(bp * bq))
            rhs = block.flatten(images[p_idx] * images[q_idx])
            if lhs != rhs:
                raise ValidationError(
                    f"linear map on {block.label} is not multiplicative on "
                    f"({block.basis_label(p_idx)}, {block.basis_label(q_idx)})"
                )
    return f


def restrict_to_center(f: MatrixAlgebraAutomorphism):
    """Action of f on the center F * identity, as a matrix on center coordinates."""
    block = f.block
    cen = center(block.algebra)
    cols = []
    for l in range(cen.dim):
        z = cen.basis[l]
        img = f.apply(MatrixOverD.scalar(block.algebra, block.n, z))
        diag = img.entries[0][0]
        for i in range(block.n):
            for j in range(block.n):
                e = img.entries[i][j]
                if i == j:
                    if e != diag:
                        raise ValidationError(
                            f"automorphism of {block.label} does not preserve the center "
                            f"(image of a central scalar is not scalar)"
                        )
                elif not e.is_zero():
                    raise ValidationError(
                        f"automorphism of {block.label} does not preserve the center "
                        f"(image of a central scalar has off-diagonal entries)"
                    )
        cc = cen.coords_in_center(diag.coords)
        if cc is None:
            raise ValidationError(
                f"automorphism of {block.label} maps a central scalar outside the center"
            )
        cols.append(tuple(cc))
    gamma = tuple(tuple(cols[j][i] for j in range(cen.dim)) for i in range(cen.dim))
    return verify_center_automorphism(cen, gamma)


def _left_mul_operator(block: Block, a: MatrixOverD):
    """Rational matrix of X -> a X on block coordinates."""
    dq = block.dim_q
    cols = [block.flatten(a * block.basis_matrix(q)) for q in range(dq)]
    return [[cols[q][r] for q in range(dq)] for r in range(dq)]


def _right_mul_operator(block: Block, b: MatrixOverD):
    """Rational matrix of X -> X b on block coordinates."""
    dq = block.dim_q
    cols = [block.flatten(block.basis_matrix(q) * b) for q in range(dq)]
    return [[cols[q][r] for q in range(dq)] for r in range(dq)]


def _first_invertible_combination(candidates, build, invertible, seed: int,
                                  coeff_bound: int = 5, cap: int = 1000):
    """First invertible object among candidate coordinate vectors.

    Tries the candidates themselves, then seeded random small-integer
    combinations of them.  ``build`` turns a coordinate vector into the
    object, ``invertible`` tests it.
    """
    for vec in candidates:
        obj = build(vec)
        if invertible(obj):
            return obj
    rng = random.Random(subseed(seed, 0x1C0))
    width = len(candidates[0]) if candidates else 0
    for _ in range(cap):
        coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in candidates]
        if not any(coeffs):
            continue
        vec = [sum(c * cand[i] for c, cand in zip(coeffs, candidates)) for i in range(width)]
        obj = build(vec)
        if invertible(obj):
            return obj
    return None


def inner_conjugator(h: MatrixAlgebraAutomorphism, seed: int = 0) -> MatrixOverD:
    """Invertible P with h(M) = P M P^{-1}, for h trivial on the center.

    Solves the linear system h(B) P - P B = 0 over all coordinate basis
    matrices B; any invertible solution conjugates correctly, and solutions
    differ only by central factors.
    """
    block = h.block
    gamma = restrict_to_center(h)
    if not qlinalg.is_identity([list(r) for r in gamma]):
        raise ValidationError(
            f"automorphism of {block.label} is not trivial on the center; split off a lift first"
        )
    dq = block.dim_q
    system = []
    for q in range(dq):
        a = block.unflatten(tuple(h.linear_map[r][q] for r in range(dq)))
        b = block.basis_matrix(q)
        left = _left_mul_operator(block, a)
        right = _right_mul_operator(block, b)
        for r in range(dq):
            system.append([left[r][c] - right[r][c] for c in range(dq)])
    kernel = qlinalg.kernel_basis(system)
    if not kernel:
        raise ValidationError(f"no conjugator exists for this map on {block.label}")
    found = _first_invertible_combination(
        kernel,
        build=lambda vec: block.unflatten(tuple(vec)),
        invertible=lambda m: try_inverse(m) is not None,
        seed=seed,
    )
    if found is None:
        raise ValidationError(f"conjugator solution space of {block.label} has no invertible element")
    return found


def decompose(f: MatrixAlgebraAutomorphism, seed: int = 0):
    """Split f into (P, sigma) with f(M) = P sigma(M) P^{-1}, sigma from the lifts.

    The center action pins down sigma; peeling its entrywise extension off
    leaves a center-trivial automorphism, which is inner.  The result is
    verified exactly on every coordinate basis matrix before it is returned,
    and is cached on f.
    """
    block = f.block
    gamma = restrict_to_center(f)
    sigma = block.lifts.for_center_restriction(gamma)
    h = f.compose(extend_entrywise(block, sigma.inverse()))
    p = inner_conjugator(h, seed=seed)
    rebuilt = from_pair(block, p, sigma)
    if rebuilt.linear_map != f.linear_map:
        raise ValidationError(
            f"decomposition of an automorphism of {block.label} failed to reconstruct it"
        )
    f.decomposition = (p, sigma)
    return p, sigma


def compose_autos(block: Block, pair1, pair2, seed: int = 0):
    """Compose two decomposed automorphisms into decomposed form.

    For (P1, s1) after (P2, s2) the composite semilinear part s1 s2 need not
    be a table entry; the entry sigma with the same center action differs
    from it by an inner automorphism of D, witnessed by a unit u with
    (s1 s2)(x) u = u sigma(x).  Then P = P1 s1(P2) (u I).
    """
    p1, s1 = pair1
    p2, s2 = pair2
    alg = block.algebra
    cen = center(alg)
    s_comp = s1.compose(s2)
    gamma = center_restriction(s_comp, cen)
    sigma = block.lifts.for_center_restriction(gamma)
    d = alg.dim
    system = []
    for v in range(d):
        lhs = AlgebraElement(alg, s_comp.apply_coords(
            tuple(_ONE if t == v else _ZERO for t in range(d))))
        rhs = sigma.apply(alg.basis_element(v))
        left = lhs.left_regular_matrix()
        # right-regular matrix of rhs: column j holds b_j * rhs
        rcols = [alg.mul_coords(tuple(_ONE if t == j else _ZERO for t in range(d)), rhs.coords)
                 for j in range(d)]
        for r in range(d):
            system.append([left[r][c] - rcols[c][r] for c in range(d)])
    kernel = qlinalg.kernel_basis(system)
    if not kernel:
        raise ValidationError(f"no unit relates the composed lift to the table entry on {alg.label}")
    u = _first_invertible_combination(
        kernel,
        build=lambda vec: AlgebraElement(alg, tuple(vec)),
        invertible=lambda e: e.try_inv() is not None,
        seed=seed,
    )
    if u is None:
        raise ValidationError(f"no invertible unit found relating lifts on {alg.label}")
    p = p1 * apply_sigma(s1, p2) * MatrixOverD.scalar(alg, block.n, u)
    composite = from_pair(block, p1, s1).compose(from_pair(block, p2, s2))
    rebuilt = from_pair(block, p, sigma)
    if rebuilt.linear_map != composite.linear_map:
        raise ValidationError(f"composition on {block.label} failed to reconstruct the product action")
    return p, sigma


def is_trivial_on_grassmannian(p: MatrixOverD, sigma: AlgebraAutomorphism, k: int) -> bool:
    """Whether M -> P sigma(M) P^{-1} fixes every k-subspace of D^n.

    Exact, not sampled: for 1 <= k <= n-1 the action is trivial exactly when
    sigma is the identity and P is a central homothety; for k = 0 or k = n
    the Grassmannian is a single point and everything acts trivially.
    """
    n = p.rows
    if k < 0 or k > n:
        raise ValidationError(f"subspace dimension {k} out of range for ambient dimension {n}")
    if k == 0 or k == n:
        return True
    if not sigma.is_identity():
        return False
    alg = p.algebra
    lam = p.entries[0][0]
    for i in range(n):
        for j in range(n):
            e = p.entries[i][j]
            if i == j:
                if e != lam:
                    return False
            elif not e.is_zero():
                return False
    return all(lam * b == b * lam for b in alg.basis_elements())


def act_on_subspace(p: MatrixOverD, sigma: AlgebraAutomorphism, v: RightSubspace) -> RightSubspace:
    """Image of a subspace under the decomposed automorphism (P, sigma)."""
    return apply_matrix(p, apply_sigma(sigma, v))


def probe_subspaces(algebra: DivisionAlgebra, n: int, k: int):
    """Deterministic k-subspaces that separate nontrivial Grassmannian actions.

    Standard coordinate subspaces detect a non-homothety P; the spans of
    e_i + e_j x for basis elements x detect a noncentral homothety or a
    nontrivial sigma.
    """
    from itertools import combinations

    zero, one = algebra.zero(), algebra.one()

    def std(r):
        return tuple(one if i == r else zero for i in range(n))

    for rows in combinations(range(n), k):
        cols = [std(r) for r in rows]
        yield column_echelon(MatrixOverD.from_columns(algebra, cols, n))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            free = [r for r in range(n) if r not in (i, j)][: k - 1]
            for x in algebra.basis_elements():
                mixed = tuple(one if r == i else (x if r == j else zero) for r in range(n))
                cols = [mixed] + [std(r) for r in free]
                yield column_echelon(MatrixOverD.from_columns(algebra, cols, n))


def find_moved_subspace(p: MatrixOverD, sigma: AlgebraAutomorphism, k: int,
                        seed: int = 0, samples: int = 100) -> RightSubspace | None:
    """A k-subspace moved by (P, sigma), or None if none is found.

    Tries the deterministic probe set first, then seeded random subspaces.
    For a pair that is nontrivial on the Grassmannian the probe set alone
    is expected to exhibit a mover.
    """
    n = p.rows
    for v in probe_subspaces(p.algebra, n, k):
        if act_on_subspace(p, sigma, v) != v:
            return v
    for t in range(samples):
        v = random_subspace(p.algebra, n, k, subseed(seed, 0xF1, t))
        if act_on_subspace(p, sigma, v) != v:
            return v
    return None
