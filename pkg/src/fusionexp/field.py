"""Arithmetic in the extension field GF(q^n) = Z_q[X]/(f).

An element is the coefficient vector (x_0, ..., x_{n-1}) of a residue
polynomial, index i holding the coefficient of X^i.  The modulus f is monic
of degree n and is stored through its n low coefficients only.

Multiplication is organised around the coefficient functions lam[i][j]:
reducing X^n, ..., X^{2n-2} to the base monomials and collecting the
product terms per x_j yields

    (x * y)_i = sum_j x_j * lam[i][j](y)   (mod q),

where each lam[i][j] is linear in the coefficients of y.  The n x n matrix
of lam values for a fixed y is exposed as `lambda_matrix`; tuple
exponentiation in the `fusion` module is driven directly by it, which is
why multiplication here is routed through the same matrix rather than
through plain polynomial remainder arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import BadDegree, NotIrreducible, NotPrime, ParamsMismatch, ZeroInverse
from .primes import is_prime


@dataclass(frozen=True)
class FieldParams:
    """Validated parameters of GF(q^n): prime q, degree n, low coefficients of f."""

    q: int
    n: int
    f_low: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "f_low", tuple(int(c) for c in self.f_low))
        if self.n < 1:
            raise BadDegree(f"extension degree must be >= 1, got {self.n}")
        if len(self.f_low) != self.n:
            raise BadDegree(
                f"f_low must have length n={self.n}, got {len(self.f_low)}"
            )
        if not is_prime(self.q):
            raise NotPrime(f"coefficient modulus {self.q} is not prime")
        if any(not 0 <= c < self.q for c in self.f_low):
            raise BadDegree("f coefficients must lie in [0, q)")
        if not is_irreducible(self.q, self.f_low + (1,)):
            raise NotIrreducible(
                f"X^{self.n} + {list(self.f_low)} is reducible mod {self.q}"
            )

    @property
    def field_order(self) -> int:
        return self.q**self.n


@dataclass(frozen=True)
class FieldElement:
    """Coefficient vector of a field element, reduced mod q."""

    params: FieldParams
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) != self.params.n:
            raise BadDegree(
                f"need {self.params.n} coefficients, got {len(self.coeffs)}"
            )
        if any(not 0 <= c < self.params.q for c in self.coeffs):
            raise BadDegree("coefficients must lie in [0, q)")


@dataclass(frozen=True)
class LambdaMatrix:
    """The n x n matrix of lam[i][j](y) values for one fixed multiplier y."""

    q: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise BadDegree("matrix must be square")
        if any(not 0 <= e < self.q for row in self.entries for e in row):
            raise BadDegree("entries must lie in [0, q)")


@dataclass(frozen=True)
class MixingReport:
    """Zero-entry count and reducibility of one lambda matrix."""

    zero_entry_count: int
    is_reducible: bool


def make_field_params(q: int, n: int, f_low: Sequence[int]) -> FieldParams:
    """Build validated field parameters for GF(q^n) with modulus X^n + f.

    The low coefficients are reduced mod q; q must be prime and the modulus
    polynomial irreducible.
    """
    if n < 1:
        raise BadDegree(f"extension degree must be >= 1, got {n}")
    if len(f_low) != n:
        raise BadDegree(f"f_low must have length n={n}, got {len(f_low)}")
    if q < 2 or not is_prime(q):
        raise NotPrime(f"coefficient modulus {q} is not prime")
    return FieldParams(q=q, n=n, f_low=tuple(int(c) % q for c in f_low))


def fe(params: FieldParams, coeffs: Sequence[int]) -> FieldElement:
    """Field element from any integer vector of length n (reduced mod q)."""
    if len(coeffs) != params.n:
        raise BadDegree(f"need {params.n} coefficients, got {len(coeffs)}")
    return FieldElement(params, tuple(int(c) % params.q for c in coeffs))


def fe_zero(params: FieldParams) -> FieldElement:
    return FieldElement(params, (0,) * params.n)


def fe_one(params: FieldParams) -> FieldElement:
    return FieldElement(params, (1,) + (0,) * (params.n - 1))


def fe_is_zero(a: FieldElement) -> bool:
    return all(c == 0 for c in a.coeffs)


def fe_from_int(params: FieldParams, value: int) -> FieldElement:
    """Element whose coefficients are the base-q digits of value."""
    value %= params.field_order
    digits = []
    for _ in range(params.n):
        value, d = divmod(value, params.q)
        digits.append(d)
    return FieldElement(params, tuple(digits))


def fe_random(params: FieldParams, rng: random.Random, nonzero: bool = False) -> FieldElement:
    """Uniformly random element; redraws until nonzero when requested."""
    while True:
        e = FieldElement(params, tuple(rng.randrange(params.q) for _ in range(params.n)))
        if not nonzero or not fe_is_zero(e):
            return e


def _check_same_params(a: FieldElement, b: FieldElement) -> None:
    if a.params != b.params:
        raise ParamsMismatch("field elements from different parameter sets")


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_params(a, b)
    q = a.params.q
    return FieldElement(a.params, tuple((x + y) % q for x, y in zip(a.coeffs, b.coeffs)))


def fe_neg(a: FieldElement) -> FieldElement:
    q = a.params.q
    return FieldElement(a.params, tuple(-x % q for x in a.coeffs))


def fe_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_params(a, b)
    q = a.params.q
    return FieldElement(a.params, tuple((x - y) % q for x, y in zip(a.coeffs, b.coeffs)))


def _reduction_rows(n: int, f_low: Sequence[int], q: int | None) -> list[list[int]]:
    """Rows R[m] with X^m = sum_i R[m][i] X^i modulo the monic modulus.

    Covers m = 0 .. 2n-2, which is every monomial a degree < n product can
    reach.  Row m >= n is the shift of row m-1 with the overflow folded back
    through X^n = -f.  With q None the recursion runs over the plain
    integers, giving the canonical signed coefficients.
    """
    rows = [[0] * n for _ in range(2 * n - 1)]
    for m in range(n):
        rows[m][m] = 1
    for m in range(n, 2 * n - 1):
        prev = rows[m - 1]
        top = prev[n - 1]
        row = [0] + prev[: n - 1]
        if top:
            for i in range(n):
                row[i] -= top * f_low[i]
        if q is not None:
            row = [c % q for c in row]
        rows[m] = row
    return rows


def _lambda_entries(params: FieldParams, coeffs: Sequence[int]) -> list[list[int]]:
    q, n = params.q, params.n
    rows = _reduction_rows(n, params.f_low, q)
    return [
        [sum(coeffs[k] * rows[j + k][i] for k in range(n)) % q for j in range(n)]
        for i in range(n)
    ]


def lambda_matrix(y: FieldElement) -> LambdaMatrix:
    """Matrix of the coefficient functions evaluated at y.

    entries[i][j] is linear in the coefficients of y, and multiplication by
    y is the matrix-vector product: (x*y)_i = sum_j entries[i][j] * x_j.
    """
    ent = _lambda_entries(y.params, y.coeffs)
    return LambdaMatrix(q=y.params.q, entries=tuple(tuple(r) for r in ent))


def lambda_symbolic(n: int, f_low: Sequence[int]) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Symbolic lambda matrix over the integers for a monic modulus X^n + f.

    Returns sym with sym[i][j][k] = the integer coefficient of y_k in
    lam[i][j].  No coefficient modulus is involved; entries are exact, so
    the table can be lifted into any Z_q.
    """
    if n < 1:
        raise BadDegree(f"extension degree must be >= 1, got {n}")
    if len(f_low) != n:
        raise BadDegree(f"f_low must have length n={n}, got {len(f_low)}")
    rows = _reduction_rows(n, tuple(int(c) for c in f_low), None)
    return tuple(
        tuple(tuple(rows[j + k][i] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def lambda_entry_expr(coeffs: Sequence[int]) -> str:
    """Render one symbolic entry, e.g. (1, 0, -1) -> 'y0-y2'."""
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if terms else "")
        mag = abs(c)
        terms.append(f"{sign}{mag}*y{k}" if mag != 1 else f"{sign}y{k}")
    return "".join(terms) if terms else "0"


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """Product via the lambda matrix of b; equals schoolbook multiply-then-reduce."""
    _check_same_params(a, b)
    q, n = a.params.q, a.params.n
    lam = _lambda_entries(a.params, b.coeffs)
    return FieldElement(
        a.params,
        tuple(sum(a.coeffs[j] * lam[i][j] for j in range(n)) % q for i in range(n)),
    )


def fe_pow(a: FieldElement, k: int) -> FieldElement:
    """a to a nonnegative integer power, by square and multiply."""
    if k < 0:
        raise ValueError("negative exponent; invert first")
    result = fe_one(a.params)
    base = a
    while k:
        if k & 1:
            result = fe_mul(result, base)
        base = fe_mul(base, base)
        k >>= 1
    return result


def fe_inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse by the extended Euclidean algorithm on polynomials."""
    if fe_is_zero(a):
        raise ZeroInverse("zero has no multiplicative inverse")
    q = a.params.q
    f_full = list(a.params.f_low) + [1]
    g, u, _ = _pxgcd(list(a.coeffs), f_full, q)
    # gcd of a nonzero element with an irreducible modulus is a unit
    c_inv = pow(g[0], -1, q)
    inv = [x * c_inv % q for x in u]
    inv += [0] * (a.params.n - len(inv))
    return FieldElement(a.params, tuple(inv[: a.params.n]))


def lambda_mixing_report(params: FieldParams, y: FieldElement) -> MixingReport:
    """Zero count and reducibility of the lambda matrix at y.

    The matrix is reducible when simultaneous row/column permutation brings
    it to block-triangular form, i.e. when the directed graph of its
    nonzero pattern is not strongly connected.
    """
    if y.params != params:
        raise ParamsMismatch("element does not belong to the given parameters")
    ent = _lambda_entries(params, y.coeffs)
    n = params.n
    zeros = sum(1 for row in ent for e in row if e == 0)
    adj = [[j for j in range(n) if ent[i][j] != 0] for i in range(n)]
    radj = [[i for i in range(n) if ent[i][j] != 0] for j in range(n)]
    reducible = not (_reaches_all(adj, n) and _reaches_all(radj, n))
    return MixingReport(zero_entry_count=zeros, is_reducible=reducible)


def _reaches_all(adj: list[list[int]], n: int) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


# ---------------------------------------------------------------------------
# Polynomial helpers over Z_q (coefficient lists, little-endian, trimmed).
# Used by the irreducibility test and by inversion, not by fe_mul.
# ---------------------------------------------------------------------------


def _ptrim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a: list[int], b: list[int], q: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    return _ptrim(out)


def _psub(a: list[int], b: list[int], q: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % q
    return _ptrim(out)


def _pmod(a: list[int], m: list[int], q: int) -> list[int]:
    a = list(a)
    _ptrim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, q)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = a[-1] * inv_lead % q
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * c) % q
        _ptrim(a)
    return a


def _ppowmod(base: list[int], e: int, m: list[int], q: int) -> list[int]:
    result = [1]
    base = _pmod(list(base), m, q)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, q), m, q)
        base = _pmod(_pmul(base, base, q), m, q)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = list(a), list(b)
    _ptrim(a)
    _ptrim(b)
    while b:
        a, b = b, _pmod(a, b, q)
    return a


def _pxgcd(a: list[int], b: list[int], q: int) -> tuple[list[int], list[int], list[int]]:
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g."""
    r0, r1 = _ptrim(list(a)), _ptrim(list(b))
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while r1:
        # quotient of r0 by r1 via repeated leading-term elimination
        quot: list[int] = []
        rem = list(r0)
        inv_lead = pow(r1[-1], -1, q)
        while len(rem) >= len(r1) and rem:
            shift = len(rem) - len(r1)
            factor = rem[-1] * inv_lead % q
            if len(quot) < shift + 1:
                quot += [0] * (shift + 1 - len(quot))
            quot[shift] = factor
            for i, c in enumerate(r1):
                rem[shift + i] = (rem[shift + i] - factor * c) % q
            _ptrim(rem)
        r0, r1 = r1, rem
        u0, u1 = u1, _psub(u0, _pmul(quot, u1, q), q)
        v0, v1 = v1, _psub(v0, _pmul(quot, v1, q), q)
    return r0, u0, v0


def is_irreducible(q: int, poly: Sequence[int]) -> bool:
    """True iff the monic polynomial has no nontrivial factor over Z_q.

    Uses the gcd test against X^(q^i) - X for i up to deg/2: any factor of
    degree d <= deg/2 divides X^(q^d) - X and is caught by the gcd.
    """
    if not is_prime(q):
        raise NotPrime(f"coefficient modulus {q} is not prime")
    p = [int(c) % q for c in poly]
    if len(p) < 2 or p[-1] != 1:
        raise BadDegree("polynomial must be monic of degree >= 1")
    n = len(p) - 1
    x = [0, 1]
    h = list(x)
    for _ in range(n // 2):
        h = _ppowmod(h, q, p, q)
        g = _pgcd(p, _psub(h, x, q), q)
        if len(g) - 1 > 0:
            return False
    return True


def find_irreducible(q: int, n: int, seed: int) -> tuple[int, ...]:
    """Low coefficients of a monic irreducible degree-n modulus over Z_q.

    Seeded random search filtered by is_irreducible; deterministic for a
    fixed (q, n, seed).  Roughly one in n monic candidates is irreducible,
    so the search is short.
    """
    if not is_prime(q):
        raise NotPrime(f"coefficient modulus {q} is not prime")
    if n < 1:
        raise BadDegree(f"extension degree must be >= 1, got {n}")
    rng = random.Random(seed)
    while True:
        cand = tuple(rng.randrange(q) for _ in range(n))
        if is_irreducible(q, cand + (1,)):
            return cand


# ---------------------------------------------------------------------------
# JSON interchange (decimal strings for all coefficient values)
# ---------------------------------------------------------------------------


def field_params_to_json(params: FieldParams) -> dict:
    return {
        "q": str(params.q),
        "n": params.n,
        "f": [str(c) for c in params.f_low],
    }


def field_params_from_json(obj: dict) -> FieldParams:
    return make_field_params(int(obj["q"], 10), int(obj["n"]), [int(c, 10) for c in obj["f"]])


def fe_to_json(a: FieldElement) -> list[str]:
    return [str(c) for c in a.coeffs]


def fe_from_json(params: FieldParams, data: Sequence[str]) -> FieldElement:
    if len(data) != params.n:
        raise BadDegree(f"need {params.n} coefficients, got {len(data)}")
    return fe(params, [int(c, 10) for c in data])
