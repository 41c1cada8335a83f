"""Exact arithmetic in the cyclotomic field Q(zeta_p) and its numeric embedding.

Elements are stored on the power basis 1, zeta, ..., zeta^(p-2); the single
relation zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)) keeps every element in
canonical form.  Exponents are always reduced mod p first since zeta^p = 1.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import OddPrime, legendre
from .errors import DiscrepancyError, PrecisionError

_EPS = 2.0 ** -50


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class CycElem:
    """Element of Q(zeta_p) with exact rational coefficients."""

    __slots__ = ("prime", "coeffs")

    def __init__(self, prime: OddPrime, coeffs) -> None:
        coeffs = tuple(_norm_coeff(c) for c in coeffs)
        if len(coeffs) != prime.p - 1:
            raise ValueError(f"need {prime.p - 1} coefficients, got {len(coeffs)}")
        self.prime = prime
        self.coeffs = coeffs

    @classmethod
    def from_exponents(cls, prime: OddPrime, vec) -> "CycElem":
        # vec has length p, one slot per exponent; fold zeta^(p-1) away
        top = vec[prime.p - 1]
        return cls(prime, [vec[i] - top for i in range(prime.p - 1)])

    @classmethod
    def zero(cls, prime: OddPrime) -> "CycElem":
        return cls(prime, [0] * (prime.p - 1))

    @classmethod
    def const(cls, prime: OddPrime, c) -> "CycElem":
        return cls(prime, [c] + [0] * (prime.p - 2))

    @classmethod
    def one(cls, prime: OddPrime) -> "CycElem":
        return cls.const(prime, 1)

    @classmethod
    def zeta_pow(cls, prime: OddPrime, e: int) -> "CycElem":
        vec = [0] * prime.p
        vec[e % prime.p] = 1
        return cls.from_exponents(prime, vec)

    def _check(self, other: "CycElem") -> None:
        if self.prime.p != other.prime.p:
            raise ValueError("mixed cyclotomic fields")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CycElem)
            and self.prime.p == other.prime.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.prime.p, self.coeffs))

    def __add__(self, other: "CycElem") -> "CycElem":
        self._check(other)
        return CycElem(self.prime, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CycElem") -> "CycElem":
        self._check(other)
        return CycElem(self.prime, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CycElem":
        return CycElem(self.prime, [-a for a in self.coeffs])

    def __mul__(self, other: "CycElem") -> "CycElem":
        self._check(other)
        p = self.prime.p
        out = [0] * p
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs):
                if cj == 0:
                    continue
                out[(i + j) % p] += ci * cj
        return CycElem.from_exponents(self.prime, out)

    def scale(self, c) -> "CycElem":
        return CycElem(self.prime, [c * a for a in self.coeffs])

    def conj(self) -> "CycElem":
        """Complex conjugation, the field automorphism zeta -> zeta^(-1)."""
        p = self.prime.p
        vec = [0] * p
        for i, c in enumerate(self.coeffs):
            vec[(p - i) % p] += c
        return CycElem.from_exponents(self.prime, vec)

    def inv(self) -> "CycElem":
        """Multiplicative inverse via the extended Euclidean algorithm
        against the p-th cyclotomic polynomial (irreducible over Q)."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse in Q(zeta_p)")
        p = self.prime.p
        f = _trim([Fraction(c) for c in self.coeffs])
        phi = [Fraction(1)] * p
        g, s = _poly_half_xgcd(f, phi)
        if len(g) != 1 or g[0] == 0:
            raise ArithmeticError("cyclotomic polynomial split unexpectedly")
        scale = 1 / g[0]
        inv_coeffs = [c * scale for c in s]
        inv_coeffs += [Fraction(0)] * (p - 1 - len(inv_coeffs))
        return CycElem(self.prime, inv_coeffs)

    def embed(self) -> "ComplexApprox":
        return embed(self)

    def __str__(self) -> str:
        if all(c == 0 for c in self.coeffs[1:]):
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = "1" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if i > 0 and mag != 1:
                body = f"{mag}*{body}"
            elif i == 0:
                body = str(mag)
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _trim(cs: list) -> list:
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_divmod(a: list, b: list):
    # ascending Fraction coefficients, b trimmed and nonzero
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    r = list(a)
    inv_lead = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] * inv_lead
        if c == 0:
            continue
        q[k] = c
        for j, bj in enumerate(b):
            r[k + j] -= c * bj
    return _trim(q), _trim(r)


def _poly_half_xgcd(f: list, g: list):
    """Return (gcd, s) with s*f = gcd modulo g, over Q[x]."""
    r0, r1 = list(f), list(g)
    s0, s1 = [Fraction(1)], [Fraction(0)]
    while r1 != [0] and r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r if r else [Fraction(0)]
        prod = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, qi in enumerate(q):
            if qi == 0:
                continue
            for j, sj in enumerate(s1):
                prod[i + j] += qi * sj
        width = max(len(s0), len(prod))
        nxt = [(s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)
               for i in range(width)]
        s0, s1 = s1, _trim(nxt)
    return r0, s0


@dataclass(frozen=True)
class ComplexApprox:
    """Double-precision complex value with a coarse tracked error budget."""

    re: float
    im: float
    err_budget: float = 0.0

    @classmethod
    def from_complex(cls, z: complex, err_budget: float = 0.0) -> "ComplexApprox":
        return cls(z.real, z.imag, err_budget)

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    @property
    def magnitude(self) -> float:
        return abs(self.z)

    def __add__(self, other: "ComplexApprox") -> "ComplexApprox":
        w = self.z + other.z
        eb = self.err_budget + other.err_budget + abs(w) * _EPS
        return ComplexApprox(w.real, w.imag, eb)

    def __sub__(self, other: "ComplexApprox") -> "ComplexApprox":
        w = self.z - other.z
        eb = self.err_budget + other.err_budget + abs(w) * _EPS
        return ComplexApprox(w.real, w.imag, eb)

    def __mul__(self, other: "ComplexApprox") -> "ComplexApprox":
        w = self.z * other.z
        eb = (
            self.magnitude * other.err_budget
            + other.magnitude * self.err_budget
            + self.err_budget * other.err_budget
            + 4.0 * abs(w) * _EPS
        )
        return ComplexApprox(w.real, w.imag, eb)

    def conj(self) -> "ComplexApprox":
        return ComplexApprox(self.re, -self.im, self.err_budget)

    def close_to(self, other: "ComplexApprox", rel: float = 1e-6,
                 floor: float = 1e-9) -> bool:
        diff = abs(self.z - other.z)
        tol = max(rel * max(self.magnitude, other.magnitude), floor,
                  self.err_budget + other.err_budget)
        return diff <= tol


def embed(x: CycElem) -> ComplexApprox:
    """Numeric image of x under zeta -> exp(2*pi*i/p)."""
    p = x.prime.p
    z = 0j
    total = 0.0
    for i, c in enumerate(x.coeffs):
        if c == 0:
            continue
        fc = float(c)
        total += abs(fc)
        z += fc * cmath.exp(2j * math.pi * i / p)
    return ComplexApprox(z.real, z.imag, total * (p + 8) * _EPS)


def _root_pow(p: int, e: int) -> complex:
    return cmath.exp(2j * math.pi * (e % p) / p)


def gauss_sum(p: OddPrime) -> CycElem:
    """Quadratic Gauss sum: sum over k of (k/p) * zeta^k, exact."""
    vec = [0] * p.p
    for k in range(1, p.p):
        vec[k] = legendre(k, p)
    return CycElem.from_exponents(p, vec)


def gauss_sum_scaled(p: OddPrime, a: int) -> CycElem:
    """Twisted sum over k of (k/p) * zeta^(a*k), exact."""
    vec = [0] * p.p
    for k in range(1, p.p):
        vec[(a * k) % p.p] += legendre(k, p)
    return CycElem.from_exponents(p, vec)


def frakp_residue(x: CycElem) -> int:
    """Residue of an integral element modulo the prime ideal (1 - zeta):
    the coefficient sum mod p."""
    if not x.is_integral():
        raise ValueError("residue defined for integer-coefficient elements only")
    return sum(x.coeffs) % x.prime.p


def quadratic_gauss_identity(p: OddPrime, a: int) -> bool:
    """Exact check of 1 + 2*sum_{k=1..n} zeta^(a k^2) = (a/p) * gauss_sum(p).

    For a divisible by p the left side degenerates to the constant p,
    whose (1 - zeta)-residue is 0; both facts are checked instead.
    """
    vec = [0] * p.p
    vec[0] = 1
    for k in range(1, p.n + 1):
        vec[(a * k * k) % p.p] += 2
    lhs = CycElem.from_exponents(p, vec)
    if a % p.p == 0:
        if lhs != CycElem.const(p, p.p) or frakp_residue(lhs) != 0:
            raise DiscrepancyError(f"degenerate square sum wrong at p={p.p}")
        return True
    rhs = gauss_sum(p).scale(legendre(a, p))
    if lhs != rhs:
        raise DiscrepancyError(f"square-sum identity failed at p={p.p}, a={a}")
    return True


def sun_product_one(p: OddPrime) -> ComplexApprox:
    """Numeric product over k=1..n of (1 - zeta^(k^2))."""
    z = 1 + 0j
    for k in range(1, p.n + 1):
        z *= 1 - _root_pow(p.p, k * k)
    return ComplexApprox(z.real, z.imag, abs(z) * (p.n + 2) * 8 * _EPS)


def sun_product_two(p: OddPrime) -> ComplexApprox:
    """Numeric product over pairs j < k of (zeta^(j^2) - zeta^(k^2))^2."""
    roots = [_root_pow(p.p, k * k) for k in range(p.n + 1)]
    z = 1 + 0j
    for k in range(2, p.n + 1):
        for j in range(1, k):
            z *= (roots[j] - roots[k]) ** 2
    return ComplexApprox(z.real, z.imag, abs(z) * (p.n * p.n + 2) * 8 * _EPS)


def sun_product_two_norm_sq(p: OddPrime) -> ComplexApprox:
    """Squared modulus of the product over pairs j < k of
    (zeta^(k^2) - zeta^(j^2)); real and nonnegative."""
    roots = [_root_pow(p.p, k * k) for k in range(p.n + 1)]
    z = 1 + 0j
    for k in range(2, p.n + 1):
        for j in range(1, k):
            z *= roots[k] - roots[j]
    m = abs(z) ** 2
    return ComplexApprox(m, 0.0, m * (p.n * p.n + 2) * 8 * _EPS)


def _fraction_det(rows: list) -> Fraction:
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    sign = 1
    acc = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pivot = a[k][k]
        acc *= pivot
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            factor = a[i][k] / pivot
            for j in range(k, n):
                a[i][j] -= factor * a[k][j]
    return sign * acc


def cauchy_det(u: list, v: list) -> Fraction:
    """det [ 1/(1 + u_i v_j) ] by exact elimination and by the closed form

        prod_{i<j} (u_i - u_j)(v_j - v_i) / prod_{i,j} (1 + u_i v_j),

    with the denominator running over all index pairs.  The two routes
    must agree exactly."""
    if len(u) != len(v) or not u:
        raise ValueError("need two equal-length non-empty node lists")
    u = [Fraction(x) for x in u]
    v = [Fraction(x) for x in v]
    m = len(u)
    for ui in u:
        for vj in v:
            if 1 + ui * vj == 0:
                raise ValueError("node pair with 1 + u*v = 0")
    direct = _fraction_det([[1 / (1 + ui * vj) for vj in v] for ui in u])
    num = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            num *= (u[i] - u[j]) * (v[j] - v[i])
    den = Fraction(1)
    for ui in u:
        for vj in v:
            den *= 1 + ui * vj
    closed = num / den
    if direct != closed:
        raise DiscrepancyError(
            f"Cauchy determinant mismatch: elimination {direct}, closed {closed}"
        )
    return direct


@dataclass(frozen=True)
class MtildeParts:
    """The structured matrix together with its rank-one-update witnesses."""

    prime: OddPrime
    matrix: tuple
    nu: tuple
    a_mat: tuple
    b_mat: tuple


def build_mtilde(p: OddPrime) -> MtildeParts:
    """Matrix with row 0 all -1 and, for rows i >= 1,
    entry(i, j) = -1 + 2 * sum_{k=0..n} zeta^((i-j) k^2); plus the
    witnesses nu (all ones), A = [zeta^(i j^2)] with row 0 zeroed,
    and B = [zeta^(-i j^2)]."""
    dim = p.n + 1
    rows = [tuple(CycElem.const(p, -1) for _ in range(dim))]
    for i in range(1, dim):
        row = []
        for j in range(dim):
            vec = [0] * p.p
            vec[0] -= 1
            for k in range(dim):
                vec[((i - j) * k * k) % p.p] += 2
            row.append(CycElem.from_exponents(p, vec))
        rows.append(tuple(row))
    nu = tuple(CycElem.one(p) for _ in range(dim))
    a_rows = [tuple(CycElem.zero(p) for _ in range(dim))]
    for i in range(1, dim):
        a_rows.append(tuple(CycElem.zeta_pow(p, i * j * j) for j in range(dim)))
    b_rows = [
        tuple(CycElem.zeta_pow(p, -i * j * j) for j in range(dim)) for i in range(dim)
    ]
    return MtildeParts(p, tuple(rows), nu, tuple(a_rows), tuple(b_rows))


def mtilde_structure_check(parts: MtildeParts) -> bool:
    """Exact entrywise check that the matrix equals -nu nu^T + 2 A B^T."""
    p = parts.prime
    dim = p.n + 1
    two = CycElem.const(p, 2)
    for i in range(dim):
        for j in range(dim):
            acc = CycElem.zero(p)
            for k in range(dim):
                acc = acc + parts.a_mat[i][k] * parts.b_mat[j][k]
            want = two * acc - parts.nu[i] * parts.nu[j]
            if parts.matrix[i][j] != want:
                raise DiscrepancyError(
                    f"structure identity failed at p={p.p}, entry ({i},{j})"
                )
    return True


def cyc_det(p: OddPrime, rows) -> CycElem:
    """Determinant over Q(zeta_p) by ordinary Gaussian elimination,
    pivoting with exact cyclotomic inverses."""
    n = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    acc = CycElem.one(p)
    for k in range(n):
        piv = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if piv is None:
            return CycElem.zero(p)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pivot = a[k][k]
        acc = acc * pivot
        inv_p = pivot.inv()
        for i in range(k + 1, n):
            if a[i][k].is_zero():
                continue
            factor = a[i][k] * inv_p
            a[i][k] = CycElem.zero(p)
            for j in range(k + 1, n):
                a[i][j] = a[i][j] - factor * a[k][j]
    return acc if sign == 1 else -acc


def exact_product_one(p: OddPrime) -> CycElem:
    """Exact product over k=1..n of (1 - zeta^(k^2))."""
    acc = CycElem.one(p)
    for k in range(1, p.n + 1):
        acc = acc * (CycElem.one(p) - CycElem.zeta_pow(p, k * k))
    return acc


def exact_product_two(p: OddPrime) -> CycElem:
    """Exact product over pairs j < k of (zeta^(k^2) - zeta^(j^2))."""
    acc = CycElem.one(p)
    for k in range(2, p.n + 1):
        for j in range(1, k):
            acc = acc * (CycElem.zeta_pow(p, k * k) - CycElem.zeta_pow(p, j * j))
    return acc


@dataclass(frozen=True)
class MtildeCheck:
    """Outcome of comparing the structured determinant to its closed form."""

    p: int
    exact_checked: bool
    det_numeric: complex
    closed_numeric: complex
    rel_err: float


_MTILDE_EXACT_CAP = 19
_MTILDE_NUMERIC_CAP = 31


def mtilde_det_check(p: OddPrime, tolerance: float = 1e-6) -> MtildeCheck:
    """Check det of the structured matrix against
    -(-2)^n * conj(prod(1 - zeta^(k^2))) * |prod(zeta^(k^2) - zeta^(j^2))|^2:
    exactly over Q(zeta_p) for p <= 19, numerically for p <= 31.

    The closed form needs sum_{k<=n} k^2 = p(p^2-1)/24 to vanish mod p,
    which holds for every prime p >= 5 but not for p = 3."""
    if p.p < 5:
        raise ValueError("closed form requires p >= 5")
    if p.p > _MTILDE_NUMERIC_CAP:
        raise ValueError(f"capped at p <= {_MTILDE_NUMERIC_CAP}")
    parts = build_mtilde(p)
    n = p.n
    lead = -((-2) ** n)

    exact_checked = False
    if p.p <= _MTILDE_EXACT_CAP:
        det_exact = cyc_det(p, parts.matrix)
        p2 = exact_product_two(p)
        closed_exact = (
            exact_product_one(p).conj() * p2 * p2.conj()
        ).scale(lead)
        if det_exact != closed_exact:
            raise DiscrepancyError(f"exact determinant mismatch at p={p.p}")
        exact_checked = True

    num = np.array(
        [[e.embed().z for e in row] for row in parts.matrix], dtype=complex
    )
    det_num = complex(np.linalg.det(num))
    prod1 = 1 + 0j
    for k in range(1, n + 1):
        prod1 *= 1 - _root_pow(p.p, k * k)
    prod2 = 1 + 0j
    for k in range(2, n + 1):
        for j in range(1, k):
            prod2 *= _root_pow(p.p, k * k) - _root_pow(p.p, j * j)
    closed_num = lead * prod1.conjugate() * (abs(prod2) ** 2)
    rel = abs(det_num - closed_num) / max(abs(closed_num), 1e-30)
    if rel > tolerance:
        raise PrecisionError(
            f"numeric determinant off by relative {rel:.3e} at p={p.p}"
        )
    return MtildeCheck(p.p, exact_checked, det_num, closed_num, rel)
