"""Exact dense linear algebra over arbitrary-precision integers."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DiscrepancyError


class IntMatrix:
    """Square matrix of Python integers, immutable by convention."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if not rows:
            raise ValueError("matrix must be non-empty")
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        self.rows = rows
        self.dim = len(rows)

    @classmethod
    def identity(cls, dim: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def zero(cls, dim: int) -> "IntMatrix":
        return cls([[0] * dim for _ in range(dim)])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return IntMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * x for x in row] for row in self.rows])

    def transpose(self) -> "IntMatrix":
        return IntMatrix(list(zip(*self.rows)))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dim))


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients ascending by degree."""

    coeffs: tuple

    def __post_init__(self) -> None:
        cs = tuple(int(c) for c in self.coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0 and self.degree > 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}t" if k == 1 else f"{mag}t^{k}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            out[i + j] += ca * cb
    return IntPolynomial(tuple(out))


def poly_pow(a: IntPolynomial, k: int) -> IntPolynomial:
    if k < 0:
        raise ValueError("negative power")
    acc = IntPolynomial((1,))
    base = a
    while k:
        if k & 1:
            acc = poly_mul(acc, base)
        base = poly_mul(base, base)
        k >>= 1
    return acc


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every interior division is exact; a nonzero remainder would mean a
    broken invariant and trips an assertion.  A zero column with no pivot
    available means the matrix is singular.
    """
    n = m.dim
    if n == 1:
        return m.rows[0][0]
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - aik * row_k[j]
                q, r = divmod(num, prev)
                assert r == 0, "fraction-free step did not divide exactly"
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def charpoly(m: IntMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(tI - M), Faddeev-LeVerrier.

    Works entirely over the integers: the division by the step index k
    is exact (Newton's identities) and is asserted to be so.
    """
    n = m.dim
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = IntMatrix.identity(n)
    for k in range(1, n + 1):
        if k > 1:
            mk = am + IntMatrix.identity(n).scale(coeffs[n - k + 1])
        am = m @ mk
        tr = am.trace()
        assert tr % k == 0, "Faddeev-LeVerrier trace division not exact"
        coeffs[n - k] = -(tr // k)
    return IntPolynomial(tuple(coeffs))


def _minor(rows, drop_i: int, drop_j: int) -> IntMatrix:
    return IntMatrix(
        [
            [x for j, x in enumerate(row) if j != drop_j]
            for i, row in enumerate(rows)
            if i != drop_i
        ]
    )


def adjugate(m: IntMatrix) -> IntMatrix:
    """Adjugate via cofactors: adj(M)[i][j] = (-1)^(i+j) det(minor_ji)."""
    n = m.dim
    if n == 1:
        return IntMatrix([[1]])
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            c = det(_minor(m.rows, j, i))
            out[i][j] = c if (i + j) % 2 == 0 else -c
    return IntMatrix(out)


def rank_one_update_det(h: IntMatrix, u: list, v: list) -> int:
    """det(H + u v^T) by direct elimination and by the rank-one update
    formula det(H) + v^T adj(H) u; the two routes must agree exactly."""
    n = h.dim
    if len(u) != n or len(v) != n:
        raise ValueError("vector length must match matrix dimension")
    updated = IntMatrix(
        [[h.rows[i][j] + u[i] * v[j] for j in range(n)] for i in range(n)]
    )
    direct = det(updated)
    adj = adjugate(h)
    via_adjugate = det(h) + sum(
        v[i] * sum(adj.rows[i][j] * u[j] for j in range(n)) for i in range(n)
    )
    if direct != via_adjugate:
        raise DiscrepancyError(
            f"rank-one update mismatch: elimination {direct}, adjugate {via_adjugate}"
        )
    return direct
