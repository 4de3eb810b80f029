"""Isomorph-free enumeration of full n-line and w_3 configurations.

Canonical augmentation: systems grow one line at a time through all
pair-disjoint 3-line systems.  A child is accepted only if the line just
added is, up to the child's automorphisms, the canonically last line of the
child (the colex-last line of its canonical form) -- deleting that line
recovers the parent.  Candidates are taken one per orbit of the parent's
automorphism group, new points are appended densely, and the target class
(full / w_3) is filtered at the final level only, with degree-deficiency
pruning in between.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .configuration import (
    Configuration,
    _canonical_search,
    automorphism_group,
    minimum_generating_sets,
)

FULL_LIMIT = 9
W3_LIMIT = 13


def enumerate_full(n: int) -> list[Configuration]:
    """One representative per isomorphism class of full n-line configurations."""
    if not 4 <= n <= FULL_LIMIT:
        raise ValueError(f"full n-line enumeration supports 4 <= n <= {FULL_LIMIT}, got {n}")
    return _enumerate("full", n, max_points=(3 * n) // 2)


def enumerate_w3(w: int) -> list[Configuration]:
    """One representative per isomorphism class of w_3 configurations."""
    if not 7 <= w <= W3_LIMIT:
        raise ValueError(f"w_3 enumeration supports 7 <= w <= {W3_LIMIT}, got {w}")
    return _enumerate("w3", w, max_points=w)


def _enumerate(kind: str, n_target: int, max_points: int) -> list[Configuration]:
    out: list[tuple] = []
    root_lines = ((0, 1, 2),)
    _, _, root_auts = _canonical_search(3, root_lines)
    _grow(kind, n_target, max_points, root_lines, 3, root_auts, out)
    out.sort()
    return [Configuration(lines) for lines in out]


def _grow(kind, n_target, max_points, lines, w, auts, out):
    k = len(lines)
    last = k + 1 == n_target
    degrees = [0] * w
    covered = set()
    for L in lines:
        for p in L:
            degrees[p] += 1
        covered.add((L[0], L[1]))
        covered.add((L[0], L[2]))
        covered.add((L[1], L[2]))

    for cand in _candidate_orbits(kind, lines, w, degrees, covered, auts, max_points):
        new_pts = sum(1 for p in cand if p >= w)
        w_t = w + new_pts
        t_lines = lines + (cand,)
        if not _viable(kind, n_target, max_points, t_lines, w_t, last):
            continue
        key, pi0, t_auts = _canonical_search(w_t, t_lines)
        # canonical deletion: pull the colex-last canonical line back and ask
        # whether the added line sits in its automorphism orbit
        pt_of = [0] * w_t
        for p in range(w_t):
            pt_of[pi0[p]] = p
        deleted = frozenset(pt_of[p] for p in key[-1])
        added = frozenset(cand)
        if not any(frozenset(g[p] for p in deleted) == added for g in t_auts):
            continue
        if last:
            out.append(key)
        else:
            canon_auts = tuple(
                tuple(pi0[g[pt_of[x]]] for x in range(w_t)) for g in t_auts
            )
            _grow(kind, n_target, max_points, key, w_t, canon_auts, out)


def _candidate_orbits(kind, lines, w, degrees, covered, auts, max_points):
    """New lines up to the parent's automorphisms; new points appended densely.

    A line on three fresh points starts a new connected component.  In a
    colex-minimal labeling a line disjoint from the support can only follow
    once no remaining line touches the support, i.e. once every component
    placed so far is complete; so fresh components may start only from a
    union of full components, and for w_3 targets below 14 points (which
    are necessarily connected) never at all.
    """
    if kind == "w3":
        open_pts = [p for p in range(w) if degrees[p] < 3]
    else:
        open_pts = list(range(w))
    cands = []
    for i_idx in range(len(open_pts)):
        x = open_pts[i_idx]
        for j_idx in range(i_idx + 1, len(open_pts)):
            y = open_pts[j_idx]
            if (x, y) in covered:
                continue
            for k_idx in range(j_idx + 1, len(open_pts)):
                z = open_pts[k_idx]
                if (x, z) in covered or (y, z) in covered:
                    continue
                cands.append((x, y, z))
            if w + 1 <= max_points:
                cands.append((x, y, w))
        if w + 2 <= max_points:
            cands.append((x, w, w + 1))
    if kind == "full" and w + 3 <= max_points and min(degrees) >= 2:
        cands.append((w, w + 1, w + 2))

    seen = set()
    for cand in cands:
        rep = min(
            tuple(sorted(g[p] if p < w else p for p in cand)) for g in auts
        )
        if rep not in seen:
            seen.add(rep)
            yield rep


def _viable(kind, n_target, max_points, t_lines, w_t, last) -> bool:
    k = len(t_lines)
    deg = [0] * w_t
    for L in t_lines:
        for p in L:
            deg[p] += 1
    if kind == "full":
        if last:
            return min(deg) >= 2
        deficient = sum(1 for d in deg if d < 2)
        if deficient > 3 * (n_target - k):
            return False
        # valid canonical prefixes have at most one incomplete component
        return _nonfull_components(t_lines, w_t, deg) <= 1
    # w3: degree caps enforced by candidate generation; final level must be
    # exactly 3-regular on exactly the target point count.  Intermediate
    # states must be connected (see _candidate_orbits).
    if last:
        return w_t == max_points and all(d == 3 for d in deg)
    return _connected(t_lines, w_t)


def _component_roots(t_lines, w_t):
    root = list(range(w_t))

    def find(a):
        while root[a] != a:
            root[a] = root[root[a]]
            a = root[a]
        return a

    for x, y, z in t_lines:
        rx, ry, rz = find(x), find(y), find(z)
        root[ry] = rx
        root[find(rz)] = rx
    return [find(p) for p in range(w_t)]


def _connected(t_lines, w_t) -> bool:
    return len(set(_component_roots(t_lines, w_t))) == 1


def _nonfull_components(t_lines, w_t, deg) -> int:
    roots = _component_roots(t_lines, w_t)
    bad = set(roots[p] for p in range(w_t) if deg[p] < 2)
    return len(bad)


@dataclass(frozen=True)
class EnumStats:
    kind: str
    n: int
    count: int
    aut_distribution: tuple[tuple[int, int], ...]  # (group order, frequency) ascending
    gen_size_distribution: tuple[tuple[int, int], ...]  # (min gen size, count) ascending

    def gen_size_count(self, size: int) -> int:
        return dict(self.gen_size_distribution).get(size, 0)

    def aut_text(self) -> str:
        return " ".join(f"{o}^{f}" for o, f in self.aut_distribution)


def tabulate(configs: list[Configuration], kind: str = "full") -> EnumStats:
    """Table statistics: class count, |Aut| distribution, minimum generating sizes."""
    if not configs:
        raise ValueError("no configurations to tabulate")
    n = configs[0].b if kind == "full" else configs[0].w
    auts = Counter(automorphism_group(c).order for c in configs)
    gens = Counter(minimum_generating_sets(c)[0] for c in configs)
    return EnumStats(
        kind=kind,
        n=n,
        count=len(configs),
        aut_distribution=tuple(sorted(auts.items())),
        gen_size_distribution=tuple(sorted(gens.items())),
    )


def stats_csv_header(kind: str) -> str:
    if kind == "full":
        return "n,N,aut,N3,N4,N5,N6,N7,N8,N9"
    return "w,N,aut,N3,N4,N5,N6"


def stats_csv_row(stats: EnumStats) -> str:
    sizes = range(3, 10) if stats.kind == "full" else range(3, 7)
    cells = [str(stats.n), str(stats.count), stats.aut_text()]
    cells.extend(str(stats.gen_size_count(s)) for s in sizes)
    return ",".join(cells)
