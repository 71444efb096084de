"""Independent reference implementations used as test oracles.

Everything here recomputes results through a different route than the
library: plain convolution plus top-down long division for field products,
bilinear-form elimination for the symbolic coefficient matrices, factor
enumeration for irreducibility, and iterated multiplication for powers.
"""

from __future__ import annotations

import itertools


def schoolbook_mulmod(q, f_low, a, b):
    """Convolution followed by long division by the monic modulus X^n + f."""
    n = len(f_low)
    prod = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % q
    for m in range(2 * n - 2, n - 1, -1):
        c = prod[m]
        if c:
            prod[m] = 0
            for i in range(n):
                prod[m - n + i] = (prod[m - n + i] - c * f_low[i]) % q
    return tuple(prod[:n])


def bilinear_lambda(n, f_low):
    """Symbolic multiply-then-reduce over the integers.

    Polynomial coefficients are n x n integer matrices recording the
    coefficient of x_j*y_k.  Returns table[i][j][k], the coefficient of y_k
    in the factor that multiplies x_j in output coordinate i.
    """
    size = 2 * n - 1
    prod = [[[0] * n for _ in range(n)] for _ in range(size)]
    for j in range(n):
        for k in range(n):
            prod[j + k][j][k] += 1
    for m in range(size - 1, n - 1, -1):
        mat = prod[m]
        prod[m] = [[0] * n for _ in range(n)]
        for i in range(n):
            if f_low[i]:
                for j in range(n):
                    for k in range(n):
                        prod[m - n + i][j][k] -= f_low[i] * mat[j][k]
    return tuple(
        tuple(tuple(prod[i][j][k] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def parse_entry(expr, n):
    """Parse a signed linear expression like '-y1-y3+y4' into n coefficients."""
    coeffs = [0] * n
    expr = expr.replace(" ", "")
    if expr == "0":
        return tuple(coeffs)
    for piece in expr.replace("-", "+-").split("+"):
        if not piece:
            continue
        sign = 1
        if piece.startswith("-"):
            sign = -1
            piece = piece[1:]
        if "*" in piece:
            mag, var = piece.split("*")
            sign *= int(mag)
            piece = var
        assert piece.startswith("y"), piece
        coeffs[int(piece[1:])] += sign
    return tuple(coeffs)


def poly_has_factor(q, poly):
    """Trial division by every lower-degree monic polynomial over Z_q."""
    n = len(poly) - 1
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(q), repeat=d):
            divisor = list(tail) + [1]
            if _poly_rem(poly, divisor, q) == []:
                return True
    return False


def _poly_rem(a, m, q):
    a = [c % q for c in a]
    while a and a[-1] == 0:
        a.pop()
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = a[-1]  # m is monic
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * c) % q
        while a and a[-1] == 0:
            a.pop()
    return a


def iterated_pow(g, e, modulus):
    """Exponentiation by e-fold multiplication; the slow reference."""
    acc = 1
    for _ in range(e):
        acc = acc * g % modulus
    return acc


def trial_division_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def reducible_by_permutation(matrix):
    """Brute-force reducibility: search all simultaneous row/column
    permutations for a block-triangular arrangement (zero upper-right block)."""
    n = len(matrix)
    if n == 1:
        return False
    for perm in itertools.permutations(range(n)):
        for split in range(1, n):
            if all(
                matrix[perm[i]][perm[j]] == 0
                for i in range(split)
                for j in range(split, n)
            ):
                return True
    return False


def draw_nonzero_mod(rng, q):
    """Uniform draw from [1, q) using the library's redraw-on-zero pattern,
    so seeded runs consume the rng identically."""
    while True:
        v = rng.randrange(q)
        if v:
            return v


class ScalarElGamal:
    """Textbook ElGamal in the prime-order subgroup, for n=1 comparisons."""

    def __init__(self, params):
        self.params = params

    def keygen(self, rng):
        q, P, g = self.params.q, self.params.modulus, self.params.generator
        x = draw_nonzero_mod(rng, q)
        return x, pow(g, x, P)

    def encrypt(self, pk, msg, rng):
        q, P, g = self.params.q, self.params.modulus, self.params.generator
        k = draw_nonzero_mod(rng, q)
        return pow(g, k, P), msg * pow(pk, k, P) % P

    def decrypt(self, sk, ct):
        c1, c2 = ct
        P = self.params.modulus
        return c2 * pow(pow(c1, sk, P), -1, P) % P
