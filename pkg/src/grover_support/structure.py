"""Coefficients of S(U^n) read off the discriminant walk, and their check on graphs.

For girth > 2(n-1) and a k-regular graph,

    S(U^n) = sum_j eps[j] * T_j + tau[j] * J T_j,   j in [-(n-1), n],

with ``T_j = S(U)^j`` for ``j >= 0`` and ``T_j = transpose(S(U)^|j|)`` for
``j < 0``. The walk at step ``n`` decides the bits:

    eps[j] = 1  iff  cell (j; R)   has phase ZERO
    tau[j] = 1  iff  cell (j-1; L) has phase ZERO

All index bookkeeping lives in :func:`cell_for` / :func:`term_for_cell`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import walkops
from .graphcore import Graph, girth
from .lineqw import L, R, evolve

EPS, TAU = "eps", "tau"


class PreconditionError(ValueError):
    """The input is outside the range where the structure formula is valid."""


class InvariantViolation(RuntimeError):
    """An assembled sum produced an entry above 1 under the girth condition."""


# ---------------------------------------------------------------- index table


def cell_for(kind: str, j: int) -> tuple[int, str]:
    """Walk cell deciding coefficient ``kind[j]``."""
    if kind == EPS:
        return (j, R)
    if kind == TAU:
        return (j - 1, L)
    raise ValueError(kind)


def term_for_cell(x: int, chirality: str) -> tuple[str, int]:
    """Inverse of :func:`cell_for`: ``(x; R) -> eps[x]``, ``(x; L) -> tau[x + 1]``."""
    if chirality == R:
        return (EPS, x)
    return (TAU, x + 1)


def term_label(kind: str, j: int) -> str:
    """Matrix term multiplied by ``kind[j]``, e.g. ``J ^T S(U)^3``."""
    if j == 0:
        base = "I"
    else:
        p = abs(j)
        base = "S(U)" if p == 1 else f"S(U)^{p}"
        if j < 0:
            base = "^T " + base
    if kind == TAU:
        return "J" if base == "I" else "J " + base
    return base


def index_range(n: int) -> range:
    return range(-(n - 1), n + 1)


# ---------------------------------------------------------------- formula


@dataclass(frozen=True)
class StructureFormula:
    k: int
    n: int
    eps: dict[int, int] = field(hash=False)
    tau: dict[int, int] = field(hash=False)

    def terms(self) -> list[tuple[str, int]]:
        """Present terms in canonical order (ascending index)."""
        out = []
        for j in index_range(self.n):
            # eps[j] and tau[j] never both fire: their cells differ in parity
            if self.eps.get(j):
                out.append((EPS, j))
            if self.tau.get(j):
                out.append((TAU, j))
        return out

    def to_text(self) -> str:
        terms = self.terms()
        if not terms:
            return "0"
        return " + ".join(term_label(kind, j) for kind, j in terms)

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "eps": {str(j): self.eps.get(j, 0) for j in index_range(self.n)},
            "tau": {str(j): self.tau.get(j, 0) for j in index_range(self.n)},
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "StructureFormula":
        return cls(
            int(obj["k"]),
            int(obj["n"]),
            {int(j): int(b) for j, b in obj["eps"].items()},
            {int(j): int(b) for j, b in obj["tau"].items()},
        )

    def same_terms(self, other: "StructureFormula") -> bool:
        return self.n == other.n and self.terms() == other.terms()


def coefficients(k: int, n: int) -> StructureFormula:
    """Run the walk for ``n`` steps and read the coefficient bits from its phases."""
    if k < 3:
        raise PreconditionError("structure coefficients need k >= 3")
    if n < 1:
        raise PreconditionError("structure coefficients need n >= 1")
    state = evolve(k, n)
    eps = {j: 0 for j in index_range(n)}
    tau = {j: 0 for j in index_range(n)}
    for x in state.positions():
        for c in (L, R):
            if state.sign(x, c) <= 0:
                continue
            kind, j = term_for_cell(x, c)
            target = eps if kind == EPS else tau
            if j not in target:
                raise InvariantViolation(f"ZERO phase at ({x};{c}) maps outside the index range")
            target[j] = 1
    return StructureFormula(k, n, eps, tau)


def pretty_print(f: StructureFormula, fmt: str = "text") -> str:
    if fmt == "text":
        return f.to_text()
    if fmt == "json":
        return json.dumps(f.to_json_obj(), sort_keys=False)
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------- assembly


class TermCache:
    """Powers of ``S(U)`` for one graph, computed once."""

    def __init__(self, g: Graph):
        self.graph = g
        self.s = walkops.support_of_power(g, 1)
        self._powers = [walkops.identity(g.arc_count)]

    def power(self, p: int) -> np.ndarray:
        while len(self._powers) <= p:
            self._powers.append(self._powers[-1].dot(self.s))
        return self._powers[p]

    def term(self, kind: str, j: int) -> np.ndarray:
        t = self.power(abs(j))
        if j < 0:
            t = walkops.transpose(t)
        if kind == TAU:
            t = walkops.flip_J(t, "left")
        return t


def _girth_ok(g: Graph, n: int) -> bool:
    return girth(g) > 2 * (n - 1)


def assemble_rhs(g: Graph, f: StructureFormula, cache: Optional[TermCache] = None) -> np.ndarray:
    """Integer sum of the formula's terms on ``g``.

    Under the girth condition every entry must be 0 or 1 (the terms have
    disjoint supports); anything larger raises :class:`InvariantViolation`.
    """
    if g.regularity() != f.k:
        raise PreconditionError(f"graph is not {f.k}-regular (regularity {g.regularity()})")
    cache = cache or TermCache(g)
    total = np.zeros((g.arc_count, g.arc_count), dtype=object)
    for kind, j in f.terms():
        total = total + cache.term(kind, j)
    if _girth_ok(g, f.n):
        bad = [(int(b), int(a)) for (b, a), v in np.ndenumerate(total) if v > 1]
        if bad:
            raise InvariantViolation(
                f"{len(bad)} entries exceed 1 under girth > {2 * (f.n - 1)}; first {bad[:5]}"
            )
    return total


@dataclass
class VerificationReport:
    passed: bool
    n: int
    k: int
    girth: float
    mismatches: list[tuple[int, int]]
    formula: str = ""

    def to_json_obj(self) -> dict:
        return {
            "pass": self.passed,
            "n": self.n,
            "k": self.k,
            "girth": None if self.girth == float("inf") else int(self.girth),
            "formula": self.formula,
            "mismatches": [list(p) for p in self.mismatches],
        }


def check_preconditions(g: Graph, n: int) -> tuple[int, float]:
    """Return ``(k, girth)`` or raise :class:`PreconditionError`."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    k = g.regularity()
    if k is None:
        raise PreconditionError("graph is not regular")
    if k < 3:
        raise PreconditionError(f"degree {k} < 3 is outside the supported range")
    gir = girth(g)
    if not gir > 2 * (n - 1):
        raise PreconditionError(f"girth too small: need > 2(n-1) = {2 * (n - 1)}, got {gir}")
    return k, gir


def verify(g: Graph, n: int) -> VerificationReport:
    """Compare the assembled formula with brute-force ``S(U^n)`` entrywise.

    Every mismatching ``(b, a)`` arc pair is reported.
    """
    k, gir = check_preconditions(g, n)
    f = coefficients(k, n)
    rhs = assemble_rhs(g, f)
    lhs = walkops.support_of_power(g, n)
    mismatches = [
        (int(b), int(a)) for (b, a), v in np.ndenumerate(lhs) if v != rhs[b, a]
    ]
    return VerificationReport(not mismatches, n, k, gir, mismatches, f.to_text())

