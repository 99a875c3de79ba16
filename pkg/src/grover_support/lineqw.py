"""The two-component discriminant walk on the integer line.

Amplitudes live in Q(sqrt(k-1)). Internally each amplitude at step ``n`` is
kept as an integer pair ``(p, q)`` standing for ``(p + q*sqrt(k-1)) / k**n``;
the coin scaled by ``k`` has entries ``2*sqrt(k-1)`` and ``+-(k-2)``, so the
evolution never leaves the integers.
"""
from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exact import ExtScalar, ext_sign, sign_parts

L, R = "L", "R"


class Phase(enum.Enum):
    ZERO = "#"
    EMPTY = "."
    PI = "o"

    @property
    def char(self) -> str:
        return self.value

    @property
    def label(self) -> str:
        return {"#": "0", ".": "empty", "o": "pi"}[self.value]


def coin(k: int, side: str) -> list[list[ExtScalar]]:
    """2x2 coin used at ``x >= 0`` (``side='nonneg'``) or ``x < 0`` (``'neg'``)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    r = k - 1
    d = ExtScalar(0, Fraction(2, k), r)
    off = ExtScalar(1 - Fraction(2, k), 0, r)
    if side == "nonneg":
        return [[d, -off], [off, d]]
    if side == "neg":
        return [[d, off], [-off, d]]
    raise ValueError(f"side must be 'nonneg' or 'neg', got {side!r}")


@dataclass(frozen=True)
class WalkState:
    """Walk state after ``step`` applications of the evolution from delta_0|R>.

    ``left[i]`` / ``right[i]`` hold the scaled integer pair for position
    ``x = i - step``. Use :meth:`amplitude` for the exact field value.
    """

    k: int
    step: int
    left: tuple[tuple[int, int], ...]
    right: tuple[tuple[int, int], ...]

    @property
    def radicand(self) -> int:
        return self.k - 1

    def positions(self) -> range:
        return range(-self.step, self.step + 1)

    def _pair(self, x: int, chirality: str) -> tuple[int, int]:
        if abs(x) > self.step:
            return (0, 0)
        i = x + self.step
        return self.left[i] if chirality == L else self.right[i]

    def amplitude(self, x: int, chirality: str) -> ExtScalar:
        p, q = self._pair(x, chirality)
        scale = self.k ** self.step
        return ExtScalar(Fraction(p, scale), Fraction(q, scale), self.radicand)

    def sign(self, x: int, chirality: str) -> int:
        p, q = self._pair(x, chirality)
        return sign_parts(p, q, self.radicand)

    def norm_squared(self) -> ExtScalar:
        """Sum of squared amplitudes, exact in Q(sqrt(k-1))."""
        total = ExtScalar(0, 0, self.radicand)
        for x in self.positions():
            for c in (L, R):
                a = self.amplitude(x, c)
                total = total + a * a
        return total


def initial_state(k: int) -> WalkState:
    if k < 2:
        raise ValueError("k must be >= 2")
    return WalkState(k, 0, ((0, 0),), ((1, 0),))


def step(state: WalkState) -> WalkState:
    """One application of the evolution: L output moves left, R output moves right."""
    k, n, r = state.k, state.step, state.k - 1
    m = n + 1
    left = [(0, 0)] * (2 * m + 1)
    right = [(0, 0)] * (2 * m + 1)

    for i in range(2 * n + 1):
        x = i - n
        lp, lq = state.left[i]
        rp, rq = state.right[i]
        if not (lp or lq or rp or rq):
            continue
        off = k - 2 if x >= 0 else -(k - 2)
        # k*H(x) = [[2s, -off], [off, 2s]] with s = sqrt(r); off sign flips for x < 0
        # L output: 2s*phiL - off*phiR, lands at x - 1
        outl = (2 * r * lq - off * rp, 2 * lp - off * rq)
        # R output: off*phiL + 2s*phiR, lands at x + 1
        outr = (off * lp + 2 * r * rq, off * lq + 2 * rp)
        j = x - 1 + m
        a, b = left[j]
        left[j] = (a + outl[0], b + outl[1])
        j = x + 1 + m
        a, b = right[j]
        right[j] = (a + outr[0], b + outr[1])
    return WalkState(k, m, tuple(left), tuple(right))


def iterate(k: int, n_max: int) -> Iterator[WalkState]:
    """States for steps 0..n_max."""
    state = initial_state(k)
    yield state
    for _ in range(n_max):
        state = step(state)
        yield state


def evolve(k: int, n: int) -> WalkState:
    if n < 0:
        raise ValueError("n must be >= 0")
    state = initial_state(k)
    for _ in range(n):
        state = step(state)
    return state


def _to_phase(s: int) -> Phase:
    if s > 0:
        return Phase.ZERO
    if s < 0:
        return Phase.PI
    return Phase.EMPTY


def phase(state: WalkState) -> dict[tuple[int, str], Phase]:
    """Phase of every cell in the light cone, keyed by ``(x, chirality)``."""
    out = {}
    for x in state.positions():
        for c in (L, R):
            out[(x, c)] = _to_phase(ext_sign(state.amplitude(x, c)))
    return out


def _fast_phase_row(state: WalkState, width: int) -> tuple[Phase, ...]:
    cells = []
    for x in range(-width, width + 1):
        for c in (L, R):
            cells.append(_to_phase(state.sign(x, c)))
    return tuple(cells)


@dataclass(frozen=True)
class PhaseGrid:
    """Rows for steps 1..n_max over the window ``x in [-n_max, n_max]``.

    Each row lists ``(x; L), (x; R)`` for ascending ``x``.
    """

    k: int
    n_max: int
    rows: tuple[tuple[Phase, ...], ...]

    def cell(self, n: int, x: int, chirality: str) -> Phase:
        if abs(x) > self.n_max:
            return Phase.EMPTY
        col = 2 * (x + self.n_max) + (0 if chirality == L else 1)
        return self.rows[n - 1][col]

    def black_cells(self, n: int) -> set[tuple[int, str]]:
        """Cells of row ``n`` with phase ZERO."""
        out = set()
        for col, ph in enumerate(self.rows[n - 1]):
            if ph is Phase.ZERO:
                out.add((col // 2 - self.n_max, L if col % 2 == 0 else R))
        return out

    def to_ascii(self) -> str:
        return "".join("".join(p.char for p in row) + "\n" for row in self.rows)

    def to_csv(self) -> str:
        """One line per light-cone cell: ``n,x,chirality,phase``."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "x", "chirality", "phase"])
        for n in range(1, self.n_max + 1):
            for x in range(-n, n + 1):
                for c in (L, R):
                    w.writerow([n, x, c, self.cell(n, x, c).label])
        return buf.getvalue()

    def to_pgm(self) -> bytes:
        """Binary PGM (P5); ZERO cells black (0), all others white (255)."""
        width = 2 * (2 * self.n_max + 1)
        header = f"P5\n{width} {self.n_max}\n255\n".encode("ascii")
        body = bytearray()
        for row in self.rows:
            body.extend(0 if p is Phase.ZERO else 255 for p in row)
        return header + bytes(body)

    @classmethod
    def from_ascii(cls, k: int, text: str) -> "PhaseGrid":
        by_char = {p.char: p for p in Phase}
        rows = tuple(tuple(by_char[ch] for ch in line) for line in text.splitlines() if line)
        return cls(k, len(rows), rows)


def pattern(k: int, n_max: int) -> PhaseGrid:
    """Phase rows for steps 1..n_max. ``#`` cells are drawn black in the PGM export."""
    if k < 3:
        raise ValueError("phase patterns need k >= 3")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    for state in iterate(k, n_max):
        if state.step == 0:
            continue
        rows.append(_fast_phase_row(state, n_max))
    return PhaseGrid(k, n_max, tuple(rows))


def zero_fraction_profile(grid: PhaseGrid, bins: int = 20) -> list[tuple[float, float]]:
    """Share of occupied cells with phase ZERO, binned by ``|x| / n``.

    Returns ``(bin_centre, share)`` for bins over ``(0, 1]``; empty bins are skipped.
    Intended for eyeballing the region structure of large grids.
    """
    zero = [0] * bins
    occupied = [0] * bins
    for n in range(1, grid.n_max + 1):
        for x in range(-n, n + 1):
            if x == 0:
                continue
            b = min(bins - 1, int(abs(x) / n * bins - 1e-12))
            for c in (L, R):
                ph = grid.cell(n, x, c)
                if ph is Phase.EMPTY:
                    continue
                occupied[b] += 1
                if ph is Phase.ZERO:
                    zero[b] += 1
    return [((b + 0.5) / bins, zero[b] / occupied[b]) for b in range(bins) if occupied[b]]

