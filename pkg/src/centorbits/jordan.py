"""Jordan structure of a rational matrix.

The similarity class of an operator is captured by its block data: for each
eigenvalue, the multiset of Jordan block sizes. Matrix input is accepted
whenever the characteristic polynomial factors completely into rational
roots; every downstream computation depends only on the block data, so an
operator with irrational or complex eigenvalues can still be analyzed by
supplying a :class:`JordanType` directly, with opaque string labels standing
in for the eigenvalues.

Conventions, pinned for reproducibility:

* Jordan blocks carry their 1s on the subdiagonal (``LOWER_SUBDIAGONAL_ONES``
  below; the chain-coordinate code assumes this orientation).
* The chain basis of a block of size s is (v, Nv, ..., N^{s-1}v) with
  N = T - lambda, and the change of basis lists chains by eigenvalue (in the
  canonical order below), then by increasing block size, then by chain index.
* Rational eigenvalues are ordered by (numerator, denominator) of their
  canonical form; symbolic labels follow all rationals, ordered as strings.

Chain construction walks block sizes from largest to smallest. At size s the
vectors already forced into ker N^s are a basis of ker N^{s-1} together with
the depth s - 1 tails N^{j-s} w of the chains of sizes j > s found earlier;
new chain generators are taken from the kernel basis of N^s, in its
deterministic order, whenever they extend the span of those forced vectors.
The count of generators found this way must match the block multiplicities,
and the result is verified outright: the assembled change of basis P must
satisfy P^-1 T P == the canonical block matrix of the type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

from .linalg import Matrix, ShapeError

Eigenvalue = Union[Fraction, str]

# Orientation of the 1s in a canonical block. The classification code in this
# package assumes the lower convention; flipping this constant only changes
# jordan_block / jordan_matrix output.
LOWER_SUBDIAGONAL_ONES = True


class NonSplittingCharPoly(ValueError):
    """The characteristic polynomial has an irrational or complex root."""


def eigenvalue_sort_key(eig: Eigenvalue) -> tuple:
    """Canonical eigenvalue order: rationals by (numerator, denominator), then labels."""
    if isinstance(eig, Fraction):
        return (0, eig.numerator, eig.denominator)
    return (1, str(eig))


def _normalize_eigenvalue(eig) -> Eigenvalue:
    if isinstance(eig, Fraction):
        return eig
    if isinstance(eig, bool) or isinstance(eig, float):
        raise TypeError(f"eigenvalue {eig!r} must be an int, Fraction or symbolic label")
    if isinstance(eig, int):
        return Fraction(eig)
    if isinstance(eig, str):
        label = eig.strip()
        if not label:
            raise ValueError("symbolic eigenvalue label must be nonempty")
        return label
    raise TypeError(f"eigenvalue {eig!r} must be an int, Fraction or symbolic label")


@dataclass(frozen=True)
class JordanType:
    """Complete similarity invariant: per eigenvalue, (block size, multiplicity) pairs.

    ``eigen_blocks`` is canonical: eigenvalues in the order of
    :func:`eigenvalue_sort_key`, sizes strictly increasing within each
    eigenvalue, all sizes and multiplicities >= 1.
    """

    eigen_blocks: tuple

    def __post_init__(self):
        if not self.eigen_blocks:
            raise ValueError("a Jordan type needs at least one eigenvalue")
        keys = [eigenvalue_sort_key(eig) for eig, _ in self.eigen_blocks]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise ValueError("eigenvalues must be distinct and canonically ordered")
        for eig, blocks in self.eigen_blocks:
            if not blocks:
                raise ValueError(f"eigenvalue {eig!r} has no blocks")
            sizes = [size for size, _ in blocks]
            if sizes != sorted(sizes) or len(set(sizes)) != len(sizes):
                raise ValueError(f"block sizes for eigenvalue {eig!r} must strictly increase")
            for size, mult in blocks:
                if size < 1 or mult < 1:
                    raise ValueError(f"block ({size}, {mult}) for {eig!r}: size and multiplicity must be >= 1")

    @classmethod
    def of(cls, blocks_by_eigenvalue) -> "JordanType":
        """Canonicalize arbitrary block data.

        Accepts a mapping or an iterable of (eigenvalue, blocks) pairs, where
        blocks is an iterable of (size, multiplicity). Repeated sizes merge by
        summing multiplicities; repeated eigenvalue keys merge their blocks.
        """
        if isinstance(blocks_by_eigenvalue, Mapping):
            items: Iterable = blocks_by_eigenvalue.items()
        else:
            items = blocks_by_eigenvalue
        merged: dict = {}
        for eig, blocks in items:
            eig = _normalize_eigenvalue(eig)
            per_size = merged.setdefault(eig, {})
            for size, mult in blocks:
                per_size[int(size)] = per_size.get(int(size), 0) + int(mult)
        canonical = tuple(
            (eig, tuple(sorted(per_size.items())))
            for eig, per_size in sorted(merged.items(), key=lambda kv: eigenvalue_sort_key(kv[0]))
        )
        return cls(canonical)

    @property
    def dimension(self) -> int:
        return sum(size * mult for _, blocks in self.eigen_blocks for size, mult in blocks)

    def eigenvalues(self) -> tuple:
        return tuple(eig for eig, _ in self.eigen_blocks)

    def blocks_for(self, eig: Eigenvalue) -> tuple:
        for e, blocks in self.eigen_blocks:
            if e == eig:
                return blocks
        raise KeyError(eig)

    def is_rational(self) -> bool:
        return all(isinstance(eig, Fraction) for eig, _ in self.eigen_blocks)


class ChainSlot(NamedTuple):
    """Position of one Jordan chain in chain coordinates."""

    eigenvalue: Eigenvalue
    size: int
    index: int   # 1-based within (eigenvalue, size)
    offset: int  # first chain coordinate of this chain


def chain_slots(jt: JordanType) -> tuple:
    """Chains of a type in canonical order, with their coordinate offsets."""
    slots = []
    offset = 0
    for eig, blocks in jt.eigen_blocks:
        for size, mult in blocks:
            for index in range(1, mult + 1):
                slots.append(ChainSlot(eig, size, index, offset))
                offset += size
    return tuple(slots)


# -- characteristic polynomial and rational roots -----------------------


def characteristic_polynomial(t: Matrix) -> tuple:
    """Monic characteristic polynomial det(xI - T), coefficients highest first."""
    if not t.is_square():
        raise ShapeError(f"characteristic polynomial needs a square matrix, got {t.rows}x{t.cols}")
    n = t.rows
    coeffs = [Fraction(1)]
    m = Matrix.identity(n)
    for k in range(1, n + 1):
        m = t @ m
        ck = -m.trace() / k
        coeffs.append(ck)
        if k < n:
            m = m + Matrix.identity(n).scaled(ck)
    return tuple(coeffs)


def _positive_divisors(n: int) -> list:
    n = abs(n)
    factors = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    divisors = [1]
    for prime, power in factors.items():
        divisors = [d * prime**k for d in divisors for k in range(power + 1)]
    return sorted(divisors)


def _rational_roots(coeffs: Sequence[Fraction]) -> list:
    """All rational roots (root, multiplicity) of a monic polynomial.

    Raises NonSplittingCharPoly when a nontrivial factor remains after every
    rational root has been divided out.
    """
    work = list(coeffs)
    roots = []
    zero_mult = 0
    while len(work) > 1 and work[-1] == 0:
        work.pop()
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if len(work) > 1:
        scale = 1
        for c in work:
            scale = lcm(scale, c.denominator)
        ints = [int(c * scale) for c in work]
        candidates = set()
        for p in _positive_divisors(ints[-1]):
            for q in _positive_divisors(ints[0]):
                cand = Fraction(p, q)
                candidates.add(cand)
                candidates.add(-cand)
        for cand in sorted(candidates, key=eigenvalue_sort_key):
            mult = 0
            while len(work) > 1:
                quotient = [work[0]]
                for c in work[1:-1]:
                    quotient.append(c + cand * quotient[-1])
                remainder = work[-1] + cand * quotient[-1]
                if remainder != 0:
                    break
                work = quotient
                mult += 1
            if mult:
                roots.append((cand, mult))
            if len(work) == 1:
                break
        if len(work) > 1:
            raise NonSplittingCharPoly(
                "the characteristic polynomial has an irrational or complex root "
                f"(residual factor of degree {len(work) - 1}); supply the Jordan block "
                "data directly (eigenvalue -> [size, multiplicity] pairs) to analyze "
                "this operator"
            )
    return sorted(roots, key=lambda pair: eigenvalue_sort_key(pair[0]))


def rational_eigenvalues(t: Matrix) -> list:
    """Eigenvalues with algebraic multiplicities, when all of them are rational."""
    roots = _rational_roots(characteristic_polynomial(t))
    assert sum(m for _, m in roots) == t.rows
    return roots


# -- Jordan type and basis ----------------------------------------------


def jordan_type(t: Matrix) -> JordanType:
    """Block structure via the rank sequence of powers of T - lambda.

    With r_k = rank((T - lambda)^k), the number of blocks of size exactly i
    equals r_{i-1} - 2 r_i + r_{i+1}.
    """
    n = t.rows
    ident = Matrix.identity(n)
    data = {}
    for eig, alg_mult in rational_eigenvalues(t):
        a = t - ident.scaled(eig)
        ranks = [n]
        power = ident
        while ranks[-1] > n - alg_mult:
            power = power @ a
            ranks.append(power.rank())

        def r(i, _ranks=ranks):
            return _ranks[i] if i < len(_ranks) else _ranks[-1]

        blocks = []
        for size in range(1, len(ranks)):
            count = r(size - 1) - 2 * r(size) + r(size + 1)
            if count:
                blocks.append((size, count))
        assert sum(size * mult for size, mult in blocks) == alg_mult
        data[eig] = blocks
    return JordanType.of(data)


def jordan_block(eig: Fraction, size: int) -> Matrix:
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = Fraction(eig)
    for i in range(size - 1):
        if LOWER_SUBDIAGONAL_ONES:
            rows[i + 1][i] = Fraction(1)
        else:
            rows[i][i + 1] = Fraction(1)
    return Matrix(rows)


def jordan_matrix(jt: JordanType) -> Matrix:
    """The canonical block matrix of a type with rational eigenvalues."""
    n = jt.dimension
    rows = [[Fraction(0)] * n for _ in range(n)]
    for slot in chain_slots(jt):
        if not isinstance(slot.eigenvalue, Fraction):
            raise TypeError(
                f"symbolic eigenvalue label {slot.eigenvalue!r} has no matrix realization"
            )
        for k in range(slot.size):
            rows[slot.offset + k][slot.offset + k] = slot.eigenvalue
        for k in range(slot.size - 1):
            if LOWER_SUBDIAGONAL_ONES:
                rows[slot.offset + k + 1][slot.offset + k] = Fraction(1)
            else:
                rows[slot.offset + k][slot.offset + k + 1] = Fraction(1)
    return Matrix(rows)


class JordanChain(NamedTuple):
    eigenvalue: Eigenvalue
    size: int
    index: int
    vectors: tuple  # (v, Nv, ..., N^{size-1} v) as n x 1 matrices


@dataclass(frozen=True)
class JordanBasis:
    """Explicit chain basis of a matrix: P^-1 T P is the canonical block matrix."""

    matrix: Matrix
    jordan_type: JordanType
    chains: tuple
    transform: Matrix          # P, chain vectors as columns in canonical order
    inverse_transform: Matrix  # P^-1

    @property
    def dimension(self) -> int:
        return self.matrix.rows


class _SpanTracker:
    """Incremental membership test for the span of a growing vector set."""

    def __init__(self):
        self._rows = {}

    def add(self, vec: Matrix) -> bool:
        """Reduce vec against the stored echelon rows; True if it enlarges the span."""
        row = [vec[i, 0] for i in range(vec.rows)]
        for j in range(len(row)):
            if row[j] == 0:
                continue
            if j in self._rows:
                f = row[j]
                row = [a - f * b for a, b in zip(row, self._rows[j])]
            else:
                inv = 1 / row[j]
                self._rows[j] = [x * inv for x in row]
                return True
        return False


def jordan_basis(t: Matrix) -> JordanBasis:
    jt = jordan_type(t)
    n = t.rows
    ident = Matrix.identity(n)
    all_chains = []
    for eig, blocks in jt.eigen_blocks:
        nilpotent = t - ident.scaled(eig)
        largest = blocks[-1][0]
        powers = [ident]
        for _ in range(largest):
            powers.append(nilpotent @ powers[-1])
        kernels = [[]] + [powers[k].kernel_basis() for k in range(1, largest + 1)]
        mult = dict(blocks)
        tops = []  # (size, generator), found from the largest size down
        for size in range(largest, 0, -1):
            tracker = _SpanTracker()
            for vec in kernels[size - 1]:
                tracker.add(vec)
            for bigger, top in tops:
                tracker.add(powers[bigger - size] @ top)
            needed = mult.get(size, 0)
            found = 0
            for cand in kernels[size]:
                if found == needed:
                    break
                if tracker.add(cand):
                    tops.append((size, cand))
                    found += 1
            if found != needed:
                raise RuntimeError("Jordan chain construction failed; this is a bug")
        counters: dict = {}
        for size, top in sorted(tops, key=lambda st: st[0]):
            counters[size] = counters.get(size, 0) + 1
            vectors = tuple(powers[k] @ top for k in range(size))
            all_chains.append(JordanChain(eig, size, counters[size], vectors))
    columns = [vec for chain in all_chains for vec in chain.vectors]
    p = Matrix.from_columns(columns)
    p_inv = p.inverse()
    if p_inv @ t @ p != jordan_matrix(jt):
        raise RuntimeError("Jordan basis reconstruction check failed; this is a bug")
    return JordanBasis(t, jt, tuple(all_chains), p, p_inv)


def coords_in_jordan_basis(basis: JordanBasis, v: Matrix) -> Matrix:
    """Coordinates of v in the chain basis, i.e. P^-1 v."""
    if v.rows != basis.dimension or v.cols != 1:
        raise ShapeError(
            f"vector must be {basis.dimension}x1, got {v.rows}x{v.cols}"
        )
    return basis.inverse_transform @ v
