"""Steiner triple systems with constant-time pair and triple queries.

A system of order v lives on points 0..v-1 and stores, besides its block
list, a flat v*v table mapping an ordered pair (x, y) to the unique third
point of the block through x and y.  The diagonal holds the sentinel v.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class StsError(ValueError):
    """Base class for system construction and parsing errors."""


class StsValidationError(StsError):
    pass


class StsParseError(StsError):
    pass


def admissible_order(v: int) -> bool:
    """True iff a Steiner triple system of order v exists (v = 1, 3 mod 6)."""
    if v < 1:
        raise ValueError(f"order must be positive, got {v}")
    return v % 6 in (1, 3)


class SteinerTripleSystem:
    """An STS(v): validated at construction, immutable afterwards.

    Blocks are kept in canonical order (each block sorted ascending, block
    list sorted lexicographically), so serialization is byte-stable.
    """

    __slots__ = ("v", "blocks", "_table")

    def __init__(self, v: int, blocks: Iterable[Sequence[int]]):
        if not admissible_order(v):
            raise StsValidationError(f"inadmissible order {v} (must be 1 or 3 mod 6)")
        canon = sorted(tuple(sorted(b)) for b in blocks)
        expected = v * (v - 1) // 6
        for b in canon:
            if len(b) != 3 or len(set(b)) != 3:
                raise StsValidationError(f"block {b} is not a 3-subset")
            if b[0] < 0 or b[2] >= v:
                raise StsValidationError(f"block {b} out of range 0..{v - 1}")
        if len(canon) != expected:
            raise StsValidationError(f"block count {len(canon)} != {expected}")
        table = [v] * (v * v)
        for x, y, z in canon:
            for a, b, c in ((x, y, z), (x, z, y), (y, z, x)):
                if table[a * v + b] != v:
                    raise StsValidationError(
                        f"pair {{{a},{b}}} covered twice "
                        f"(blocks {{{a},{b},{table[a * v + b]}}} and {{{a},{b},{c}}})"
                    )
                table[a * v + b] = c
                table[b * v + a] = c
        self.v = v
        self.blocks = tuple(canon)
        self._table = table

    def pair_third(self, x: int, y: int) -> int:
        """The unique z with {x, y, z} a block; requires x != y."""
        if x == y:
            raise ValueError(f"pair_third needs two distinct points, got ({x}, {y})")
        return self._table[x * self.v + y]

    def has_block(self, x: int, y: int, z: int) -> bool:
        """True iff {x, y, z} is a block; degenerate triples give False."""
        if x == y or x == z:
            return False
        return self._table[x * self.v + y] == z

    def pair_table(self) -> list[int]:
        """Flat v*v third-point table (sentinel v on the diagonal); read-only use."""
        return self._table

    def degree(self, p: int) -> int:
        return sum(1 for b in self.blocks if p in b)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SteinerTripleSystem)
            and self.v == other.v
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.v, self.blocks))

    def __repr__(self) -> str:
        return f"SteinerTripleSystem(v={self.v}, blocks={len(self.blocks)})"


def build_sts(v: int, blocks: Iterable[Sequence[int]]) -> SteinerTripleSystem:
    """Validate and index a block list as an STS(v)."""
    return SteinerTripleSystem(v, blocks)


def write_sts(sts: SteinerTripleSystem) -> str:
    """Serialize in the canonical text format: header v, then one block per line."""
    lines = [str(sts.v)]
    lines.extend(f"{x} {y} {z}" for x, y, z in sts.blocks)
    return "\n".join(lines) + "\n"


def read_sts(text: str) -> SteinerTripleSystem:
    """Parse the text format; '#' lines are comments.  Errors carry line numbers."""
    v = None
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if v is None:
            if len(fields) != 1:
                raise StsParseError(f"line {lineno}: expected the order v, got {line!r}")
            try:
                v = int(fields[0])
            except ValueError:
                raise StsParseError(f"line {lineno}: order is not an integer: {line!r}")
            continue
        if len(fields) != 3:
            raise StsParseError(f"line {lineno}: expected 3 points, got {len(fields)}")
        try:
            blocks.append(tuple(int(f) for f in fields))
        except ValueError:
            raise StsParseError(f"line {lineno}: non-integer point in {line!r}")
    if v is None:
        raise StsParseError("empty input: no order line")
    return SteinerTripleSystem(v, blocks)
