"""Grid representations over base n and the cube calculus on them.

A representation couples an initial point delta in Q^d with one digit row
per axis.  Generation m >= 0 of the grid it generates is the tiling by
half-open cubes of side n^-m anchored on delta's residue; generation -j
(side n^j) is anchored on delta + location(rep, j), the row partial sums
recording which slot each coarser ancestor was chosen in.  Distinct
(delta, rows) pairs can generate the same family of cubes; grids_equal
decides that exactly, and alternate_representation constructs such a
sibling from an integer translation of delta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .digits import DigitSequence, SignedDigitSequence


@dataclass(frozen=True)
class GridRepresentation:
    """Initial point plus one digit row per axis, over a shared base."""

    n: int
    delta: tuple[Fraction, ...]
    rows: tuple[DigitSequence, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"base must be an integer >= 2, got {self.n!r}")
        delta = tuple(Fraction(c) for c in self.delta)
        rows = tuple(self.rows)
        if not delta:
            raise ValueError("delta must have at least one coordinate")
        if len(rows) != len(delta):
            raise ValueError("need exactly one digit row per axis")
        for row in rows:
            if not isinstance(row, DigitSequence) or row.base != self.n:
                raise ValueError("digit rows must be DigitSequences over the same base")
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "rows", rows)

    @property
    def d(self) -> int:
        return len(self.delta)


@dataclass(frozen=True)
class QueryCube:
    """Half-open axis-aligned cube [a_1, a_1+s) x ... x [a_d, a_d+s)."""

    anchor: tuple[Fraction, ...]
    side: Fraction

    def __post_init__(self) -> None:
        anchor = tuple(Fraction(c) for c in self.anchor)
        side = Fraction(self.side)
        if side <= 0:
            raise ValueError(f"sidelength must be positive, got {side}")
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "side", side)

    @property
    def d(self) -> int:
        return len(self.anchor)


@dataclass(frozen=True)
class GridCube:
    """A generation-`level` cube of its owning representation."""

    rep: GridRepresentation
    level: int
    index: tuple[int, ...]

    @property
    def side(self) -> Fraction:
        return generation_scale(self.rep.n, self.level)

    @property
    def anchor(self) -> tuple[Fraction, ...]:
        offset = generation_offset(self.rep, self.level)
        side = self.side
        return tuple(o + k * side for o, k in zip(offset, self.index))

    def as_query_cube(self) -> QueryCube:
        return QueryCube(self.anchor, self.side)


@dataclass(frozen=True)
class GridSystem:
    """An ordered list of representations sharing base and dimension."""

    n: int
    d: int
    grids: tuple[GridRepresentation, ...]

    def __post_init__(self) -> None:
        grids = tuple(self.grids)
        if not grids:
            raise ValueError("a system needs at least one grid")
        for rep in grids:
            if rep.n != self.n or rep.d != self.d:
                raise ValueError("all grids in a system must share base and dimension")
        object.__setattr__(self, "grids", grids)


def generation_scale(n: int, m: int) -> Fraction:
    """Sidelength n^-m of generation m cubes (n^|m| for m < 0)."""
    if m >= 0:
        return Fraction(1, n**m)
    return Fraction(n ** (-m))


@lru_cache(maxsize=65536)
def location(rep: GridRepresentation, j: int) -> tuple[int, ...]:
    """Row partial sums sum(a_i * n^i, i < j); the ancestor displacement."""
    if j < 0:
        raise ValueError("location is defined for j >= 0")
    return tuple(row.partial_sum(j) for row in rep.rows)


@lru_cache(maxsize=65536)
def generation_offset(rep: GridRepresentation, m: int) -> tuple[Fraction, ...]:
    """Anchor residue of generation m, componentwise in [0, n^-m).

    The generation-m anchor lattice is offset + n^-m * Z^d, with the offset
    read from delta alone for m >= 0 and from delta + location(rep, -m) for
    the coarse generations.
    """
    scale = generation_scale(rep.n, m)
    if m >= 0:
        base = rep.delta
    else:
        base = tuple(c + l for c, l in zip(rep.delta, location(rep, -m)))
    return tuple(c % scale for c in base)


def cube_containing(
    rep: GridRepresentation, point: tuple[Fraction, ...], m: int
) -> GridCube:
    """The unique generation-m cube of rep containing the point."""
    if len(point) != rep.d:
        raise ValueError("point dimension does not match the representation")
    scale = generation_scale(rep.n, m)
    offset = generation_offset(rep, m)
    index = tuple(
        math.floor((Fraction(c) - o) / scale) for c, o in zip(point, offset)
    )
    return GridCube(rep, m, index)


def contains(cube: GridCube | QueryCube, query: QueryCube) -> bool:
    """Whether the half-open box of `query` is a subset of `cube`'s."""
    anchor = cube.anchor
    side = cube.side
    if len(anchor) != query.d:
        raise ValueError("cube and query dimensions differ")
    return all(
        a <= qa and qa + query.side <= a + side
        for a, qa in zip(anchor, query.anchor)
    )


def grids_equal(r1: GridRepresentation, r2: GridRepresentation) -> bool:
    """Exact equality of the two generated cube families.

    The fine generations agree iff delta1 - delta2 is an integer vector.
    Given that, generation -j agrees iff the offset congruence
    delta1 + location1(j) == delta2 + location2(j) (mod n^j) holds; with u
    the integer coordinate difference this says the running quotient

        q_j = (u + sum((a_i - b_i) n^i, i < j)) / n^j

    is an integer for every j.  It obeys q_{j+1} = (q_j + a_j - b_j) / n and
    stays within max(|u|, 1), so once the digit difference is periodic the
    pair (phase, q) revisits a state and the congruences hold forever; a
    non-integral step pins the first generation where the families differ.
    """
    if r1.n != r2.n:
        return False
    if r1.d != r2.d:
        raise ValueError("representations live in different dimensions")
    n = r1.n
    for s in range(r1.d):
        u = r1.delta[s] - r2.delta[s]
        if u.denominator != 1:
            return False
        q = u.numerator
        diff = SignedDigitSequence.difference(r1.rows[s], r2.rows[s])
        start = len(diff.preperiod)
        span = len(diff.period)
        seen: set[tuple[int, int]] = set()
        i = 0
        while True:
            if i >= start:
                state = ((i - start) % span, q)
                if state in seen:
                    break
                seen.add(state)
            t = q + diff.digit(i)
            if t % n:
                return False
            q = t // n
            i += 1
    return True


def alternate_representation(
    rep: GridRepresentation, shift: tuple[int, ...]
) -> GridRepresentation:
    """Sibling representation anchored at delta + shift (an integer vector).

    An integer translation of the initial point preserves every fine
    generation; each digit row must then absorb the translation so that the
    partial sums keep their residues mod n^j, i.e. the new row carries the
    base-n digits of (old partial sums - shift).  That is plain base-n
    subtraction with a running carry; the carry is bounded by max(|shift|, 1),
    so the (carry, phase) state cycles and the output row is eventually
    periodic with period dividing the input's.
    """
    if len(shift) != rep.d:
        raise ValueError("shift dimension does not match the representation")
    new_rows = []
    for s, row in enumerate(rep.rows):
        move = shift[s]
        if move != int(move):
            raise ValueError("shift entries must be integers")
        carry = -int(move)
        start = len(row.preperiod)
        span = len(row.period)
        out: list[int] = []
        seen: dict[tuple[int, int], int] = {}
        i = 0
        while True:
            if i >= start:
                state = ((i - start) % span, carry)
                if state in seen:
                    first = seen[state]
                    new_rows.append(
                        DigitSequence(rep.n, tuple(out[:first]), tuple(out[first:]))
                    )
                    break
                seen[state] = i
            t = row.digit(i) + carry
            digit = t % rep.n
            out.append(digit)
            carry = (t - digit) // rep.n
            i += 1
    new_delta = tuple(c + int(m) for c, m in zip(rep.delta, shift))
    return GridRepresentation(rep.n, new_delta, tuple(new_rows))
