"""Grover evolution on arcs, positive supports, and the generalized zeta.

Matrices are dense ``numpy`` arrays of ``dtype=object`` holding Python
``int`` or ``Fraction`` entries, so every product is exact. Entry ``[b, a]``
is the amplitude sent from arc ``a`` to arc ``b``.
"""
from __future__ import annotations

import csv
import io
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graphcore import Graph

__all__ = [
    "build_grover",
    "build_grover_scaled",
    "positive_support",
    "support_of_power",
    "hashimoto",
    "flip_J",
    "j_matrix",
    "transpose",
    "int_power",
    "identity",
    "charpoly",
    "bareiss_det",
    "zeta_poly",
    "poly_eval",
    "squarefree_part",
    "matrix_to_csv",
]


def identity(n: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=object)
    for i in range(n):
        m[i, i] = 1
    return m


def _zeros(n: int) -> np.ndarray:
    return np.zeros((n, n), dtype=object)


def _check_degrees(g: Graph) -> None:
    for v, d in enumerate(g.degrees):
        if d == 0:
            raise ValueError(f"vertex {v} is isolated; the Grover walk needs degree >= 1")


def build_grover(g: Graph) -> np.ndarray:
    """The Grover evolution ``U`` with ``Fraction`` entries.

    ``U[a, b] = 2/deg(o(a)) - [b == inverse(a)]`` whenever ``t(b) == o(a)``.
    """
    _check_degrees(g)
    n = g.arc_count
    u = _zeros(n)
    u[:, :] = Fraction(0)
    for a in range(n):
        v = g.origin(a)
        w = Fraction(2, g.degree(v))
        for b in g.in_arcs[v]:
            u[a, b] = w - 1 if b == g.inverse(a) else w
    return u


def build_grover_scaled(g: Graph) -> np.ndarray:
    """``k * U`` as an integer matrix for a ``k``-regular graph.

    Entries are 2 for transmission and ``2 - k`` for reflection.
    """
    k = g.regularity()
    if k is None:
        raise ValueError("integer Grover matrix needs a regular graph")
    _check_degrees(g)
    n = g.arc_count
    u = _zeros(n)
    for a in range(n):
        for b in g.in_arcs[g.origin(a)]:
            u[a, b] = 2 - k if b == g.inverse(a) else 2
    return u


def positive_support(m: np.ndarray) -> np.ndarray:
    """0/1 integer matrix marking the strictly positive entries of ``m``."""
    out = _zeros(m.shape[0]) if m.shape[0] == m.shape[1] else np.zeros(m.shape, dtype=object)
    for idx, val in np.ndenumerate(m):
        out[idx] = 1 if val > 0 else 0
    return out


def hashimoto(g: Graph) -> np.ndarray:
    """Non-backtracking matrix built combinatorially: 1 iff ``t(a) = o(b)``, ``b != inverse(a)``."""
    n = g.arc_count
    h = _zeros(n)
    for a in range(n):
        for b in g.out_arcs[g.terminus(a)]:
            if b != g.inverse(a):
                h[b, a] = 1
    return h


def int_power(m: np.ndarray, j: int) -> np.ndarray:
    if j < 0:
        raise ValueError("negative matrix power")
    result = identity(m.shape[0])
    base = m
    while j:
        if j & 1:
            result = result.dot(base)
        j >>= 1
        if j:
            base = base.dot(base)
    return result


def support_of_power(g: Graph, n: int) -> np.ndarray:
    """``S(U^n)``. Regular graphs take the integer route through ``(kU)^n``."""
    if n < 1:
        raise ValueError("power must be >= 1")
    if g.regularity() is not None:
        return positive_support(int_power(build_grover_scaled(g), n))
    return positive_support(int_power(build_grover(g), n))


def j_matrix(g_or_n) -> np.ndarray:
    """Permutation matrix of the arc reversal ``a -> a ^ 1``."""
    n = g_or_n.arc_count if isinstance(g_or_n, Graph) else int(g_or_n)
    if n % 2:
        raise ValueError("arc count must be even")
    j = _zeros(n)
    for a in range(n):
        j[a ^ 1, a] = 1
    return j


def flip_J(m: np.ndarray, side: str = "left") -> np.ndarray:
    """``J @ m`` (``side='left'``) or ``m @ J`` (``side='right'``), as a permutation."""
    perm = np.arange(m.shape[0]) ^ 1
    if side == "left":
        return m[perm, :].copy()
    if side == "right":
        return m[:, perm].copy()
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def transpose(m: np.ndarray) -> np.ndarray:
    return m.T.copy()


# ---------------------------------------------------------------- determinants


def bareiss_det(m) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


_PRIME_CEILING = 1 << 26  # products of two residues stay below 2**52 in int64


def _is_prime(n: int) -> bool:
    if n < 2 or n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


_PRIMES: list[int] = []


def _primes(count: int) -> list[int]:
    c = _PRIMES[-1] - 2 if _PRIMES else _PRIME_CEILING - 1
    while len(_PRIMES) < count:
        if _is_prime(c):
            _PRIMES.append(c)
        c -= 2
    return _PRIMES[:count]


def _charpoly_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Characteristic polynomial mod ``p`` via Hessenberg reduction, constant term first."""
    h = a.copy()
    n = h.shape[0]
    for j in range(n - 2):
        nz = np.nonzero(h[j + 1:, j])[0]
        if nz.size == 0:
            continue
        i = j + 1 + nz[0]
        if i != j + 1:
            h[[i, j + 1], :] = h[[j + 1, i], :]
            h[:, [i, j + 1]] = h[:, [j + 1, i]]
        inv = pow(int(h[j + 1, j]), p - 2, p)
        u = (h[j + 2:, j] * inv) % p
        if not u.any():
            continue
        # row_r -= u_r * row_{j+1}, then column_{j+1} += sum_r u_r * column_r
        h[j + 2:, :] = (h[j + 2:, :] - (u[:, None] * h[j + 1, :][None, :]) % p) % p
        h[:, j + 1] = (h[:, j + 1] + ((h[:, j + 2:] * u[None, :]) % p).sum(axis=1)) % p
    # p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} * prod(subdiagonal) * p_{m-i-1}
    polys = [np.zeros(n + 1, dtype=np.int64)]
    polys[0][0] = 1
    for m in range(n):
        nxt = np.zeros(n + 1, dtype=np.int64)
        prev = polys[m]
        nxt[1:] = prev[:-1]
        nxt = (nxt - (h[m, m] * prev) % p) % p
        prod = 1
        for i in range(1, m + 1):
            prod = (prod * int(h[m - i + 1, m - i])) % p
            if prod == 0:
                break
            coef = (int(h[m - i, m]) * prod) % p
            if coef:
                nxt = (nxt - (coef * polys[m - i]) % p) % p
        polys.append(nxt)
    return polys[n]


def charpoly(m: np.ndarray) -> list[int]:
    """Coefficients of ``det(x I - m)`` for an integer matrix, constant term first.

    Computed modulo enough primes to cover the bound ``|c_i| <= (1 + rho)**n``
    (``rho`` the largest absolute row sum) and recombined by CRT, so the
    result is exact.
    """
    n = m.shape[0]
    if n == 0:
        return [1]
    ints = [[int(x) for x in row] for row in m]
    rho = max(sum(abs(x) for x in row) for row in ints)
    bound = 2 * (1 + rho) ** n + 1
    residues, modulus = [], 1
    while modulus <= bound:
        p = _primes(len(residues) + 1)[-1]
        a = np.array([[x % p for x in row] for row in ints], dtype=np.int64)
        residues.append((p, _charpoly_mod(a, p)))
        modulus *= p
    coeffs = []
    for i in range(n + 1):
        x, mod = 0, 1
        for p, r in residues:
            # Garner-style incremental CRT
            t = ((int(r[i]) - x) * pow(mod, -1, p)) % p
            x += mod * t
            mod *= p
        if x > mod // 2:
            x -= mod
        coeffs.append(x)
    return coeffs


def poly_eval(coeffs: Sequence, x):
    """Horner evaluation, constant term first."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Division of rational polynomials, constant term first."""
    num = [Fraction(c) for c in num]
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = Fraction(den[-1])
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        f = num[-1] / lead
        q[shift] = f
        for i, c in enumerate(den):
            num[shift + i] -= f * c
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return q, num


def _primitive(coeffs: Sequence[Fraction]) -> list[int]:
    den = 1
    for c in coeffs:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    sign = -1 if ints[-1] < 0 else 1
    return [sign * c // g for c in ints]


def squarefree_part(coeffs: Sequence[int]) -> list[int]:
    """``p / gcd(p, p')`` as a primitive integer polynomial, constant term first.

    Same roots as ``p``, each simple, so residuals at them scale linearly
    with the distance to the nearest root.
    """
    p = [int(c) for c in coeffs]
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    if len(p) <= 2:
        return _primitive(p) if any(p) else p
    a, b = p, [i * c for i, c in enumerate(p)][1:]
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, (_primitive(r) if r else [])
    q, r = _poly_divmod(p, a)
    assert not r
    return _primitive(q)


def zeta_poly(g: Graph, n: int = 1) -> list[int]:
    """Coefficients of ``det(I - u S(U^n))`` in ``u``, constant term first.

    This is the reverse of the characteristic polynomial of ``S(U^n)``.
    """
    cp = charpoly(support_of_power(g, n))
    out = list(reversed(cp))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------- export


def matrix_to_csv(m: np.ndarray) -> str:
    """Row-major CSV; integers as-is, rationals as ``p/q``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in m:
        w.writerow([str(x) for x in row])
    return buf.getvalue()
