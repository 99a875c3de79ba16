"""How adjacency eigenvalues lift to eigenvalues of S(U^n).

For a k-regular graph with girth > 2(n-1), each adjacency eigenvalue
``mu != +-k`` contributes the roots of

    lambda**2 - tr(F_n(mu)) * lambda + det(F_n(mu)) = 0,

where ``F_n`` is the structure formula with ``S(U) -> K_mu``, ``J -> sigma_X``
and ``K_mu = [[0, -1], [k-1, mu]]``. Polynomials here are in ``mu`` only;
``k`` is a fixed integer per computation.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Optional, Sequence

import numpy as np

from . import walkops
from .graphcore import Graph
from .structure import EPS, StructureFormula, check_preconditions, coefficients


class Poly:
    """Integer polynomial in ``mu``, coefficients constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls([c])

    @classmethod
    def mu(cls) -> "Poly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "Poly") -> "Poly":
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(a * other for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        return walkops.poly_eval(self.coeffs, x)

    def abs_scale(self, x: float) -> float:
        """``sum |c_i| |x|^i``, the natural magnitude for residuals at ``x``."""
        ax = abs(x)
        return sum(abs(float(c)) * ax ** i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "mu" if i == 1 else f"mu^{i}"
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class PolyMat2:
    a: Poly
    b: Poly
    c: Poly
    d: Poly

    @classmethod
    def identity(cls) -> "PolyMat2":
        return cls(Poly.const(1), Poly(), Poly(), Poly.const(1))

    @classmethod
    def zero(cls) -> "PolyMat2":
        return cls(Poly(), Poly(), Poly(), Poly())

    def __add__(self, o: "PolyMat2") -> "PolyMat2":
        return PolyMat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "PolyMat2") -> "PolyMat2":
        return PolyMat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __mul__(self, o) -> "PolyMat2":
        if isinstance(o, (int, Poly)):
            return PolyMat2(self.a * o, self.b * o, self.c * o, self.d * o)
        return PolyMat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __matmul__(self, o: "PolyMat2") -> "PolyMat2":
        return self * o

    def swap_conjugate(self) -> "PolyMat2":
        """``sigma_X @ self @ sigma_X``."""
        return PolyMat2(self.d, self.c, self.b, self.a)

    def swap_left(self) -> "PolyMat2":
        """``sigma_X @ self``: rows exchanged."""
        return PolyMat2(self.c, self.d, self.a, self.b)

    def swap_right(self) -> "PolyMat2":
        """``self @ sigma_X``: columns exchanged."""
        return PolyMat2(self.b, self.a, self.d, self.c)

    def trace(self) -> Poly:
        return self.a + self.d

    def det(self) -> Poly:
        return self.a * self.d - self.b * self.c

    def evaluate(self, mu):
        return ((self.a(mu), self.b(mu)), (self.c(mu), self.d(mu)))

    def entries(self) -> tuple[Poly, Poly, Poly, Poly]:
        return (self.a, self.b, self.c, self.d)


SIGMA_X = PolyMat2(Poly(), Poly.const(1), Poly.const(1), Poly())


def k_mu(k: int) -> PolyMat2:
    """``[[0, -1], [k-1, mu]]``."""
    return PolyMat2(Poly(), Poly.const(-1), Poly.const(k - 1), Poly.mu())


def formula_matrix(f: StructureFormula) -> PolyMat2:
    """Substitute ``K_mu`` for ``S(U)`` and ``sigma_X`` for ``J`` in a formula."""
    km = k_mu(f.k)
    powers = [PolyMat2.identity()]
    total = PolyMat2.zero()
    for kind, j in f.terms():
        while len(powers) <= abs(j):
            powers.append(powers[-1] * km)
        p = powers[abs(j)]
        if kind == EPS:
            total = total + (p if j >= 0 else p.swap_conjugate())
        else:
            total = total + (p.swap_left() if j >= 0 else p.swap_right())
    return total


def f_n_matrix(k: int, n: int) -> PolyMat2:
    return formula_matrix(coefficients(k, n))


@dataclass(frozen=True)
class TraceDetDisc:
    trace: Poly
    det: Poly
    disc: Poly


def trace_det_disc(k: int, n: int) -> TraceDetDisc:
    f = f_n_matrix(k, n)
    tr, dt = f.trace(), f.det()
    return TraceDetDisc(tr, dt, tr * tr - dt * 4)


@dataclass(frozen=True)
class AppendixPair:
    """``Q_n = trace(mu) - 2x`` and ``P_n = disc(mu) + 4y^2`` at a fixed ``k``."""

    k: int
    n: int
    q_mu: Poly
    q_x: int
    p_mu: Poly
    p_y2: int

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "Q": {"mu": list(self.q_mu.coeffs), "x": self.q_x},
            "P": {"mu": list(self.p_mu.coeffs), "y^2": self.p_y2},
        }


def appendix_polys(k: int, n: int) -> AppendixPair:
    t = trace_det_disc(k, n)
    return AppendixPair(k, n, t.trace, -2, t.disc, 4)


# ---------------------------------------------------------------- curves


@dataclass(frozen=True)
class CurvePoint:
    mu: float
    x: float
    y: float
    branch: str  # "real_pair" or "complex_pair"


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        return Fraction(str(v))
    return Fraction(v)


def curve_samples(k: int, n: int, mu_min, mu_max, count: int) -> list[CurvePoint]:
    """Real and imaginary parts of the lifted eigenvalues at evenly spaced ``mu``.

    Sample points are exact rationals; trace/det/disc are evaluated exactly
    and only the final square root is taken in floating point. A negative
    discriminant yields one complex-pair point (``y > 0``, conjugate implied);
    otherwise one point per distinct real root.
    """
    if count < 2:
        raise ValueError("count must be >= 2")
    lo, hi = _as_fraction(mu_min), _as_fraction(mu_max)
    t = trace_det_disc(k, n)
    out = []
    for i in range(count):
        mu = lo + (hi - lo) * i / (count - 1)
        tr, disc = t.trace(mu), t.disc(mu)
        if disc < 0:
            out.append(CurvePoint(float(mu), float(tr) / 2, math.sqrt(float(-disc)) / 2, "complex_pair"))
        elif disc == 0:
            out.append(CurvePoint(float(mu), float(tr) / 2, 0.0, "real_pair"))
        else:
            s = math.sqrt(float(disc))
            for x in ((float(tr) - s) / 2, (float(tr) + s) / 2):
                out.append(CurvePoint(float(mu), x, 0.0, "real_pair"))
    return out


def curves_csv(points: Sequence[CurvePoint]) -> str:
    lines = ["mu,x,y,branch"]
    lines += [f"{p.mu!r},{p.x!r},{p.y!r},{p.branch}" for p in points]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- graph checks


def adjacency_eigenvalues(g: Graph) -> np.ndarray:
    return np.linalg.eigvalsh(np.array(g.adjacency(), dtype=float))


def _group(values: Sequence[float], tol: float = 1e-8) -> list[tuple[float, int]]:
    """Cluster sorted eigenvalues into ``(mean, multiplicity)``."""
    groups: list[list[float]] = []
    for v in sorted(values):
        if groups and abs(v - groups[-1][-1]) <= tol * max(1.0, abs(v)):
            groups[-1].append(v)
        else:
            groups.append([v])
    return [(sum(g) / len(g), len(g)) for g in groups]


def lift_roots(t: TraceDetDisc, mu: float) -> tuple[complex, complex]:
    tr, dt = float(t.trace(mu)), float(t.det(mu))
    s = cmath.sqrt(tr * tr - 4 * dt)
    return ((tr + s) / 2, (tr - s) / 2)


def relative_residual(coeffs: Sequence[int], lam: complex) -> float:
    """``|p(lam)| / sum |c_i| |lam|^i`` for an exact integer polynomial ``p``."""
    val = 0j
    for c in reversed(coeffs):
        val = val * lam + float(c)
    scale = sum(abs(float(c)) * abs(lam) ** i for i, c in enumerate(coeffs))
    return abs(val) / scale if scale else abs(val)


@dataclass
class LiftEntry:
    mu: float
    multiplicity: int
    roots: tuple[complex, complex]
    residuals: tuple[float, float]


@dataclass
class LiftReport:
    k: int
    n: int
    tol: float
    entries: list[LiftEntry] = field(default_factory=list)
    excluded: list[float] = field(default_factory=list)
    charpoly_degree: int = 0

    @property
    def max_residual(self) -> float:
        return max((r for e in self.entries for r in e.residuals), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol

    @property
    def predicted_count(self) -> int:
        return sum(2 * e.multiplicity for e in self.entries)

    def to_json_obj(self) -> dict:
        return {
            "pass": self.passed,
            "k": self.k,
            "n": self.n,
            "tol": self.tol,
            "max_residual": self.max_residual,
            "predicted_eigenvalues": self.predicted_count,
            "excluded_mu": self.excluded,
            "entries": [
                {
                    "mu": e.mu,
                    "multiplicity": e.multiplicity,
                    "roots": [[r.real, r.imag] for r in e.roots],
                    "residuals": list(e.residuals),
                }
                for e in self.entries
            ],
        }


def lift_verify(g: Graph, n: int, tol: float = 1e-8) -> LiftReport:
    """Check every lifted root against the exact characteristic polynomial of ``S(U^n)``.

    The residual is taken on the squarefree kernel of that polynomial.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    k, _ = check_preconditions(g, n)
    t = trace_det_disc(k, n)
    cp = walkops.charpoly(walkops.support_of_power(g, n))
    report = LiftReport(k, n, tol, charpoly_degree=len(cp) - 1)
    # repeated roots flatten p, so residuals are taken on its squarefree kernel
    cp = walkops.squarefree_part(cp)
    for mu, mult in _group(adjacency_eigenvalues(g)):
        if abs(abs(mu) - k) <= 1e-8 * k:
            report.excluded.append(float(round(mu)))
            continue
        roots = lift_roots(t, mu)
        res = tuple(relative_residual(cp, lam) for lam in roots)
        report.entries.append(LiftEntry(float(mu), mult, roots, res))
    return report


# ---------------------------------------------------------------- diagonalizability


@dataclass(frozen=True)
class NondiagFlag:
    mu: float
    exact: bool
    disc_value: float


def _scalar_matrix(m) -> bool:
    (a, b), (c, d) = m
    return b == 0 and c == 0 and a == d


def nondiag_check(f_mat: PolyMat2, disc: Poly, mu, tol: float = 1e-8) -> bool:
    """True when ``disc(mu) = 0`` and ``F_n(mu)`` is not a scalar matrix.

    Exact for rational ``mu``; with a float ``mu`` both tests are relative to
    the polynomial magnitudes at ``mu``.
    """
    if isinstance(mu, (int, Fraction)):
        return disc(mu) == 0 and not _scalar_matrix(f_mat.evaluate(mu))
    if abs(disc(mu)) > tol * max(1.0, disc.abs_scale(mu)):
        return False
    (a, b), (c, d) = f_mat.evaluate(mu)
    scale = max(1.0, *(p.abs_scale(mu) for p in f_mat.entries()))
    return max(abs(b), abs(c), abs(a - d)) > tol * scale


def nondiag_predict(g: Graph, n: int, tol: float = 1e-8) -> list[NondiagFlag]:
    """Adjacency eigenvalues at which ``S(U^n)`` is predicted non-diagonalizable.

    Eigenvalues within 1e-9 of an integer ``m`` with ``det(A - mI) = 0``
    (checked exactly) are handled in exact arithmetic.
    """
    k, _ = check_preconditions(g, n)
    f_mat = f_n_matrix(k, n)
    disc = f_mat.trace() * f_mat.trace() - f_mat.det() * 4
    adj = g.adjacency()
    flags = []
    for mu, _ in _group(adjacency_eigenvalues(g)):
        m = round(mu)
        exact: Optional[int] = None
        if abs(mu - m) < 1e-9:
            shifted = [[adj[i][j] - (m if i == j else 0) for j in range(len(adj))] for i in range(len(adj))]
            if walkops.bareiss_det(shifted) == 0:
                exact = m
        if exact is not None:
            if nondiag_check(f_mat, disc, exact, tol):
                flags.append(NondiagFlag(float(exact), True, float(disc(exact))))
        elif nondiag_check(f_mat, disc, float(mu), tol):
            flags.append(NondiagFlag(float(mu), False, float(disc(float(mu)))))
    return flags
