"""
Isomorph-free generation of small closed tilings.

Side s = face * gon + i owns darts 2s (start) and 2s + 1 (end); alpha0 and
alpha1 are fixed by the polygons, the search chooses alpha2. The smallest
free side is always paired next, either with a free side of a face already
reached or with side 0 of the next unreached face. Vertices are tracked as
chains of corners in a union-find that can be rolled back.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple

from tilesub.config.settings import DEFAULT_JOBS, ENUMERATION_CAP
from tilesub.errors import CapExceeded, MapError
from tilesub.gmap.core import GMap, build_gmap
from tilesub.gmap.isomorphism import canonical_key
from tilesub.gmap.surface import classify_surface, parse_surface_word
from tilesub.models.schemas import Census, EnumSpec
from tilesub.tiling.quad import classify_all

logger = logging.getLogger(__name__)

Key = Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]


class CornerUnionFind:
    """Corners joined through alpha2; a vertex closes when no dart is left open."""

    def __init__(self, count: int):
        self.parent = list(range(count))
        self.size = [1] * count
        self.open = [2] * count
        self.history: List[Tuple[int, int, int]] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def link(self, x: int, y: int) -> int:
        """Join the corners of two darts glued by alpha2; returns the root."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            self.history.append((rx, rx, self.open[rx]))
            self.open[rx] -= 2
            return rx
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.history.append((rx, ry, self.open[rx]))
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.open[rx] += self.open[ry] - 2
        return rx

    def undo(self) -> None:
        rx, ry, old_open = self.history.pop()
        self.open[rx] = old_open
        if rx != ry:
            self.parent[ry] = ry
            self.size[rx] -= self.size[ry]


class _Search:
    def __init__(self, spec: EnumSpec):
        self.gon = spec.gon
        self.faces = spec.faces
        self.sides = spec.gon * spec.faces
        self.min_degree = spec.min_degree
        self.vertex_target: Optional[int] = None
        if spec.surface is not None:
            _, euler = parse_surface_word(spec.surface)
            edges = self.sides // 2
            self.vertex_target = euler + edges - self.faces
        self.partner = [-1] * self.sides
        self.straight = [False] * self.sides
        self.corners = CornerUnionFind(self.sides)
        self.closed = 0
        self.closed_corners = 0

    def corner_of(self, dart: int) -> int:
        """Corner index: the corner at the start of side s is s."""
        s, end = divmod(dart, 2)
        if not end:
            return s
        face, i = divmod(s, self.gon)
        return face * self.gon + (i + 1) % self.gon

    def _glue(self, s: int, t: int, straight: bool) -> Tuple[List[int], bool]:
        """Record the pairing; returns the vertices it closed and whether the state survives."""
        self.partner[s], self.partner[t] = t, s
        self.straight[s] = self.straight[t] = straight
        links = [(2 * s, 2 * t), (2 * s + 1, 2 * t + 1)] if straight else [(2 * s, 2 * t + 1), (2 * s + 1, 2 * t)]
        closed = []
        ok = True
        for x, y in links:
            root = self.corners.link(self.corner_of(x), self.corner_of(y))
            if self.corners.open[root] == 0:
                closed.append(root)
                self.closed += 1
                self.closed_corners += self.corners.size[root]
                if self.corners.size[root] < self.min_degree:
                    ok = False
        return closed, ok and self._bounds_ok()

    def _unglue(self, s: int, t: int, closed: List[int]) -> None:
        for root in closed:
            self.closed -= 1
            self.closed_corners -= self.corners.size[root]
        self.corners.undo()
        self.corners.undo()
        self.partner[s] = self.partner[t] = -1

    def _bounds_ok(self) -> bool:
        if self.vertex_target is None:
            return True
        if self.closed > self.vertex_target:
            return False
        still_open = self.sides - self.closed_corners
        return self.closed + still_open // self.min_degree >= self.vertex_target

    def _adjacent(self, s: int, t: int) -> bool:
        fs, i = divmod(s, self.gon)
        ft, j = divmod(t, self.gon)
        return fs == ft and (i - j) % self.gon in (1, self.gon - 1)

    def choices(self, s: int, reached: int) -> List[Tuple[int, bool]]:
        """Partners for side s as (side, straight)."""
        options = []
        for t in range(s + 1, reached * self.gon):
            if self.partner[t] != -1:
                continue
            for straight in (False, True):
                if not straight and self._adjacent(s, t):
                    # opposing identification of adjacent sides
                    continue
                options.append((t, straight))
        if reached < self.faces:
            options.append((reached * self.gon, False))
        return options

    def run(self, first: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
        """alpha2 tables of every complete gluing; `first` restricts the first choice."""
        yield from self._extend(1, first)

    def _extend(self, reached: int, only: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
        s = next((x for x in range(self.sides) if self.partner[x] == -1), None)
        if s is None:
            yield self._alpha2()
            return
        if s >= reached * self.gon:
            return  # nothing reached is left open, the rest would be disconnected
        options = self.choices(s, reached)
        if only is not None:
            options = [options[only]]
        for t, straight in options:
            grows = t == reached * self.gon
            closed, alive = self._glue(s, t, straight)
            if alive:
                yield from self._extend(reached + 1 if grows else reached)
            self._unglue(s, t, closed)

    def _alpha2(self) -> Tuple[int, ...]:
        a2 = [0] * (2 * self.sides)
        for s in range(self.sides):
            t = self.partner[s]
            if self.straight[s]:
                a2[2 * s], a2[2 * s + 1] = 2 * t, 2 * t + 1
            else:
                a2[2 * s], a2[2 * s + 1] = 2 * t + 1, 2 * t
        return tuple(a2)

    def build(self, alpha2: Tuple[int, ...]) -> GMap:
        n = 2 * self.sides
        a0 = [d ^ 1 for d in range(n)]
        a1 = [0] * n
        for s in range(self.sides):
            face, i = divmod(s, self.gon)
            nxt = face * self.gon + (i + 1) % self.gon
            a1[2 * s + 1], a1[2 * nxt] = 2 * nxt, 2 * s + 1
        return build_gmap(n, a0, a1, alpha2)


def _check_cap(spec: EnumSpec, cap: Optional[int]) -> None:
    cap = ENUMERATION_CAP if cap is None else cap
    if spec.faces > cap:
        raise CapExceeded(spec.faces, cap)


def _accepts(spec: EnumSpec, g: GMap) -> bool:
    if spec.surface is None:
        return True
    orientable, euler = parse_surface_word(spec.surface)
    signature = classify_surface(g)
    return signature.orientable == orientable and signature.euler == euler


def _branch_keys(spec: EnumSpec, branch: Optional[int]) -> Set[Key]:
    search = _Search(spec)
    keys: Set[Key] = set()
    for alpha2 in search.run(branch):
        try:
            g = search.build(alpha2)
        except MapError as exc:
            logger.debug("skipping gluing: %s", exc)
            continue
        if _accepts(spec, g):
            keys.add(canonical_key(g))
    return keys


def first_level_branches(spec: EnumSpec) -> int:
    search = _Search(spec)
    return len(search.choices(0, 1))


def enumerate_keys(spec: EnumSpec, jobs: Optional[int] = None, cap: Optional[int] = None) -> List[Key]:
    _check_cap(spec, cap)
    jobs = DEFAULT_JOBS if jobs is None else jobs
    if jobs <= 1:
        keys = _branch_keys(spec, None)
    else:
        branches = range(first_level_branches(spec))
        keys = set()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_branch_keys, [spec] * len(branches), branches):
                keys |= part
    logger.debug("enumerated %d classes for gon=%d faces=%d", len(keys), spec.gon, spec.faces)
    return sorted(keys)


def enumerate_tilings(spec: EnumSpec, jobs: Optional[int] = None, cap: Optional[int] = None) -> Iterator[GMap]:
    """Canonical maps, pairwise non-isomorphic, in sorted canonical order."""
    for a0, a1, a2 in enumerate_keys(spec, jobs, cap):
        yield GMap(len(a0), a0, a1, a2)


def class_multiset(g: GMap) -> str:
    counts = Counter(tile.label for tile in classify_all(g).values())
    return "+".join(f"{label}x{count}" for label, count in sorted(counts.items()))


def census(maps: Iterable[GMap], gon: int = 4) -> Census:
    total = 0
    by_surface: Dict[str, int] = Counter()
    by_classes: Dict[str, int] = Counter()
    for g in maps:
        total += 1
        by_surface[classify_surface(g).word] += 1
        if gon == 4:
            by_classes[class_multiset(g)] += 1
    return Census(total=total, by_surface=dict(sorted(by_surface.items())), by_classes=dict(sorted(by_classes.items())))
