"""Small configurations: closures, canonical forms, automorphisms, generating sets.

A configuration is a set of 3-element lines on dense points 0..w-1 in which
every pair of points lies on at most one line and every point lies on at
least one line.  Isomorphism testing goes through an explicit canonical
form; configurations here never exceed ~16 points, so backtracking search
is fast.
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple, Sequence

Line = tuple[int, int, int]


class ConfigurationError(ValueError):
    pass


def _colex_key(line: Line) -> tuple[int, int, int]:
    # colex order on 3-sets: compare largest point first
    return (line[2], line[1], line[0])


class Configuration:
    """Immutable small set system; lines stored sorted in colex order."""

    __slots__ = ("w", "lines", "name", "_canonical", "_aut", "_mingen")

    def __init__(self, lines: Iterable[Sequence[int]], name: str | None = None):
        norm = sorted((tuple(sorted(L)) for L in lines), key=_colex_key)
        if not norm:
            raise ConfigurationError("a configuration needs at least one line")
        pairs = set()
        points = set()
        for L in norm:
            if len(L) != 3 or len(set(L)) != 3:
                raise ConfigurationError(f"line {L} is not a 3-subset")
            if L[0] < 0:
                raise ConfigurationError(f"negative point in line {L}")
            points.update(L)
            for pr in itertools.combinations(L, 2):
                if pr in pairs:
                    raise ConfigurationError(f"pair {{{pr[0]},{pr[1]}}} lies on two lines")
                pairs.add(pr)
        w = max(points) + 1
        if len(points) != w:
            missing = sorted(set(range(w)) - points)
            raise ConfigurationError(f"points must be dense 0..{w - 1}; missing {missing}")
        self.w = w
        self.lines = tuple(norm)
        self.name = name
        self._canonical = None
        self._aut = None
        self._mingen = None

    @property
    def b(self) -> int:
        return len(self.lines)

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.w
        for L in self.lines:
            for p in L:
                deg[p] += 1
        return tuple(deg)

    def line_masks(self) -> list[int]:
        return [(1 << x) | (1 << y) | (1 << z) for x, y, z in self.lines]

    def relabeled(self, perm: Sequence[int]) -> "Configuration":
        """Apply a point permutation (perm[old] = new)."""
        return Configuration(
            [tuple(perm[p] for p in L) for L in self.lines], name=self.name
        )

    def canonical(self) -> tuple[Line, ...]:
        if self._canonical is None:
            key, labeling, auts = _canonical_search(self.w, self.lines)
            self._canonical = key
            self._aut = auts
        return self._canonical

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Configuration)
            and self.w == other.w
            and self.lines == other.lines
        )

    def __hash__(self) -> int:
        return hash((self.w, self.lines))

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"Configuration(w={self.w}, b={self.b}{tag})"


class Classification(NamedTuple):
    is_full: bool
    is_w3: bool


def classify(cfg: Configuration) -> Classification:
    """Full: every point on >= 2 lines.  w3: 3-regular with as many lines as points."""
    deg = cfg.degrees()
    return Classification(
        is_full=min(deg) >= 2,
        is_w3=cfg.b == cfg.w and all(d == 3 for d in deg),
    )


def closure(cfg: Configuration, v0: Iterable[int]) -> frozenset[int]:
    """Least point set containing v0 closed under completing lines from pairs."""
    mask = 0
    for p in v0:
        if p < 0 or p >= cfg.w:
            raise ValueError(f"point {p} outside 0..{cfg.w - 1}")
        mask |= 1 << p
    mask = _closure_mask(cfg.line_masks(), mask)
    return frozenset(p for p in range(cfg.w) if mask >> p & 1)


def _closure_mask(line_masks: list[int], mask: int) -> int:
    changed = True
    while changed:
        changed = False
        for lm in line_masks:
            if lm & mask != lm and (lm & mask).bit_count() >= 2:
                mask |= lm
                changed = True
    return mask


def minimum_generating_sets(cfg: Configuration) -> tuple[int, list[tuple[int, ...]]]:
    """Smallest k admitting a k-subset whose closure is everything, with all such subsets."""
    if cfg._mingen is not None:
        return cfg._mingen
    masks = cfg.line_masks()
    full = (1 << cfg.w) - 1
    for k in range(1, cfg.w + 1):
        found = [
            c
            for c in itertools.combinations(range(cfg.w), k)
            if _closure_mask(masks, sum(1 << p for p in c)) == full
        ]
        if found:
            cfg._mingen = (k, found)
            return cfg._mingen
    raise AssertionError("unreachable: the full point set always generates")


# ---------------------------------------------------------------------------
# Canonical labeling.
#
# The canonical form of a configuration is the minimal line list over all
# point relabelings, where each line is an ascending triple and lines are
# sorted in colex order (largest point first).  Colex has the property that
# once labels 0..k-1 are placed, the lines inside them form a fixed prefix
# of the final key: a line's key entry (c, b, a) is appended exactly when
# its largest label c is assigned, which makes prefix pruning sound.
#
# The search assigns labels 0, 1, ... to points, comparing the entries each
# assignment completes against the incumbent best key.  Strictly smaller
# entries overwrite the incumbent (and clear recorded achievers); larger
# prune.  Every leaf therefore matches the incumbent exactly, and the leaf
# labelings are precisely the maps achieving the canonical form, so the
# automorphism group falls out of the same search.
#
# Two schedule cuts keep the search polynomial in practice: key entries
# record their completion depth in the high bits, so a branch whose next
# incumbent entry completes before depth k can never be matched (return),
# and a point completing no line at depth k cannot beat an incumbent entry
# completing at depth <= k (skip).  Labels 0 and 1 must be co-linear, since
# every canonical key starts with the line (0, 1, 2).
# ---------------------------------------------------------------------------


def _canonical_search(w: int, lines: Sequence[Line]):
    """Return (canonical line list, an achieving point->label map, automorphisms)."""
    b = len(lines)
    inc: list[list[tuple[int, int, int]]] = [[] for _ in range(w)]
    partners: list[set[int]] = [set() for _ in range(w)]
    for li, (x, y, z) in enumerate(lines):
        inc[x].append((li, y, z))
        inc[y].append((li, x, z))
        inc[z].append((li, x, y))
        partners[x].update((y, z))
        partners[y].update((x, z))
        partners[z].update((x, y))
    INF = 1 << 20  # entries pack (c, b, a) as c<<16 | b<<8 | a with c < w <= 16
    best = [INF] * b
    achievers: list[tuple[int, ...]] = []
    lab = [-1] * w
    nlab = [0] * b  # labeled points per line

    def dfs(k: int, pos: int):
        if k == w:
            achievers.append(tuple(lab))
            return
        if pos < b:
            sched = best[pos] >> 16
            if sched < k:
                return
            allow_empty = sched > k
        else:
            allow_empty = True
        if k == 1:
            empty = [p for p in partners[lab.index(0)] if lab[p] < 0]
            nonempty = []
        else:
            nonempty = []
            empty = []
            for p in range(w):
                if lab[p] >= 0:
                    continue
                seg = None
                for li, q, r in inc[p]:
                    if nlab[li] == 2:
                        lq = lab[q]
                        lr = lab[r]
                        e = (
                            (k << 16) | (lq << 8) | lr
                            if lq > lr
                            else (k << 16) | (lr << 8) | lq
                        )
                        if seg is None:
                            seg = [e]
                        else:
                            seg.append(e)
                if seg is None:
                    if allow_empty:
                        empty.append(p)
                elif len(seg) == 1:
                    nonempty.append((seg, p))
                else:
                    seg.sort()
                    nonempty.append((seg, p))
            nonempty.sort()
        for seg, p in nonempty:
            j = pos
            improved = False
            pruned = False
            for e in seg:
                if not improved:
                    be = best[j]
                    if e > be:
                        pruned = True
                        break
                    if e < be:
                        improved = True
                        achievers.clear()
                if improved:
                    best[j] = e
                j += 1
            if pruned:
                continue
            if improved:
                for t in range(j, b):
                    best[t] = INF
            lab[p] = k
            for li, _, _ in inc[p]:
                nlab[li] += 1
            dfs(k + 1, j)
            for li, _, _ in inc[p]:
                nlab[li] -= 1
            lab[p] = -1
        for p in empty:
            lab[p] = k
            for li, _, _ in inc[p]:
                nlab[li] += 1
            dfs(k + 1, pos)
            for li, _, _ in inc[p]:
                nlab[li] -= 1
            lab[p] = -1

    dfs(0, 0)
    key = tuple((e & 0xFF, (e >> 8) & 0xFF, e >> 16) for e in best)
    pi0 = achievers[0]
    auts = []
    for ach in achievers:
        inv = [0] * w
        for p in range(w):
            inv[ach[p]] = p
        auts.append(tuple(inv[pi0[p]] for p in range(w)))
    return key, pi0, tuple(auts)


def canonical_form(cfg: Configuration) -> tuple[Line, ...]:
    """Canonical line list; equal iff the configurations are isomorphic."""
    return cfg.canonical()


def are_isomorphic(a: Configuration, b: Configuration) -> bool:
    return a.w == b.w and a.b == b.b and a.canonical() == b.canonical()


class PermGroup:
    """A permutation group stored by full element enumeration."""

    __slots__ = ("degree", "elements", "_generators")

    def __init__(self, degree: int, elements: Iterable[tuple[int, ...]]):
        self.degree = degree
        self.elements = tuple(sorted(set(elements)))
        self._generators = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> tuple[int, ...]:
        return tuple(range(self.degree))

    def orbit(self, x: int) -> frozenset[int]:
        return frozenset(g[x] for g in self.elements)

    def stabilizer(self, x: int) -> "PermGroup":
        return PermGroup(self.degree, (g for g in self.elements if g[x] == x))

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        """A small generating subset, found greedily."""
        if self._generators is None:
            gens: list[tuple[int, ...]] = []
            closed = {self.identity()}
            for g in self.elements:
                if g in closed:
                    continue
                gens.append(g)
                frontier = list(closed)
                closed.add(g)
                queue = [g]
                while queue:
                    h = queue.pop()
                    for f in gens:
                        prod = tuple(h[f[i]] for i in range(self.degree))
                        if prod not in closed:
                            closed.add(prod)
                            queue.append(prod)
                    for f in frontier:
                        prod = tuple(f[h[i]] for i in range(self.degree))
                        if prod not in closed:
                            closed.add(prod)
                            queue.append(prod)
            self._generators = tuple(gens)
        return self._generators


def automorphism_group(cfg: Configuration) -> PermGroup:
    """All point permutations mapping lines onto lines.

    Backtracking on point images: degrees must match, co-linearity must be
    preserved, and the third point of a mapped pair must agree whenever it
    is already placed.  Independent of the canonical-form search.
    """
    w = cfg.w
    deg = cfg.degrees()
    third = [[-1] * w for _ in range(w)]
    for x, y, z in cfg.lines:
        third[x][y] = third[y][x] = z
        third[x][z] = third[z][x] = y
        third[y][z] = third[z][y] = x
    img = [-1] * w
    used = [False] * w
    elements = []

    def rec(i: int):
        if i == w:
            elements.append(tuple(img))
            return
        for t in range(w):
            if used[t] or deg[t] != deg[i]:
                continue
            ok = True
            for j in range(i):
                r = third[i][j]
                s = third[t][img[j]]
                if (r < 0) != (s < 0):
                    ok = False
                    break
                if r >= 0 and r < i and img[r] != s:
                    ok = False
                    break
            if ok:
                img[i] = t
                used[t] = True
                rec(i + 1)
                used[t] = False
                img[i] = -1

    rec(0)
    return PermGroup(w, elements)


def remove_subconfiguration(cfg: Configuration, sub: Iterable[Sequence[int]]) -> Configuration:
    """Remove a proper n_3 subconfiguration (its lines and points) from a w_3 one."""
    if not classify(cfg).is_w3:
        raise ConfigurationError("removal is defined on w_3 configurations")
    sub_lines = set(tuple(sorted(L)) for L in sub)
    cfg_lines = set(cfg.lines)
    if not sub_lines or not sub_lines < cfg_lines:
        raise ConfigurationError("subconfiguration must be a proper nonempty subset of the lines")
    sub_deg: dict[int, int] = {}
    for L in sub_lines:
        for p in L:
            sub_deg[p] = sub_deg.get(p, 0) + 1
    if any(d != 3 for d in sub_deg.values()) or len(sub_deg) != len(sub_lines):
        raise ConfigurationError("line subset is not an n_3 configuration on its support")
    remaining = [L for L in cfg.lines if L not in sub_lines]
    support = sorted(set(p for L in remaining for p in L))
    relab = {p: i for i, p in enumerate(support)}
    return Configuration([tuple(relab[p] for p in L) for L in remaining])


# ---------------------------------------------------------------------------
# The nine built-in configurations, labeled exactly as in the source figures
# (letters a, b, c, ... = points 0, 1, 2, ...).
# ---------------------------------------------------------------------------

_BUILTIN_LINES = {
    "pasch": [(0, 1, 4), (0, 2, 5), (1, 2, 3), (3, 4, 5)],
    "mitre": [(0, 1, 6), (0, 2, 5), (1, 3, 4), (2, 3, 6), (4, 5, 6)],
    "fano-line": [(0, 2, 6), (0, 4, 5), (1, 2, 4), (1, 5, 6), (2, 3, 5), (3, 4, 6)],
    "crown": [(0, 1, 2), (0, 5, 6), (1, 3, 5), (2, 6, 7), (3, 4, 6), (4, 5, 7)],
    "hexagon": [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 7), (2, 6, 7), (4, 5, 7)],
    "prism": [(0, 1, 4), (0, 3, 6), (1, 2, 5), (2, 4, 7), (3, 7, 8), (5, 6, 8)],
    "grid": [(0, 1, 3), (0, 4, 6), (1, 2, 5), (2, 4, 7), (3, 7, 8), (5, 6, 8)],
    "fano": [(0, 1, 4), (0, 2, 6), (0, 3, 5), (1, 2, 5), (1, 3, 6), (2, 3, 4), (4, 5, 6)],
    "moebius-kantor": [
        (0, 1, 6), (1, 2, 7), (2, 5, 6), (4, 6, 7),
        (3, 5, 7), (0, 4, 5), (1, 3, 4), (0, 2, 3),
    ],
}

BUILTIN_NAMES = tuple(_BUILTIN_LINES)

_builtin_cache: dict[str, Configuration] = {}


def builtin(name: str) -> Configuration:
    if name not in _BUILTIN_LINES:
        raise KeyError(f"unknown configuration {name!r}; known: {', '.join(BUILTIN_NAMES)}")
    if name not in _builtin_cache:
        _builtin_cache[name] = Configuration(_BUILTIN_LINES[name], name=name)
    return _builtin_cache[name]


def write_configuration(cfg: Configuration) -> str:
    lines = [f"{cfg.w} {cfg.b}"]
    lines.extend(f"{x} {y} {z}" for x, y, z in cfg.lines)
    return "\n".join(lines) + "\n"


def read_configuration(text: str, name: str | None = None) -> Configuration:
    header = None
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if header is None:
            if len(fields) != 2:
                raise ConfigurationError(f"line {lineno}: expected header 'w b'")
            header = (int(fields[0]), int(fields[1]))
            continue
        if len(fields) != 3:
            raise ConfigurationError(f"line {lineno}: expected 3 points")
        lines.append(tuple(int(f) for f in fields))
    if header is None:
        raise ConfigurationError("empty input: no header line")
    cfg = Configuration(lines, name=name)
    if (cfg.w, cfg.b) != header:
        raise ConfigurationError(
            f"header says w={header[0]} b={header[1]}, lines give w={cfg.w} b={cfg.b}"
        )
    return cfg
