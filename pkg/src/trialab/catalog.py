"""Exhaustive generation of alternating dimaps with k edges, up to
orientation-preserving unlabeled isomorphism.

The default generator fixes the dart pairing (edge i owns darts 2i, 2i+1)
and enumerates every way to arrange all darts into alternating cyclic
vertex sequences; each cycle starts at its smallest dart so rotations are
produced once.  Disconnected maps fall out of the same dart partitioning.
A second, structurally different generator fixes vertex degree shapes
first and enumerates tail-to-head wirings; the two must agree and the
k = 3 count is pinned as a regression constant in the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .altmap import (
    AlternatingDimap,
    Edge,
    canonical_form,
    components,
    genus,
    is_valid,
    isomorphic,
    total_genus,
    trial,
)
from .errors import CapExceeded

DEFAULT_CAP = 4


@dataclass(frozen=True)
class Catalog:
    k: int
    maps: tuple[AlternatingDimap, ...]

    def summary(self) -> dict[tuple[int, tuple[int, ...], bool], int]:
        """Counts keyed by (component count, sorted genus profile, self-trial)."""
        out: dict[tuple[int, tuple[int, ...], bool], int] = {}
        for g in self.maps:
            comps = components(g)
            profile = tuple(sorted(genus(g, c) for c in comps))
            key = (len(comps), profile, isomorphic(trial(g)[0], g))
            out[key] = out.get(key, 0) + 1
        return out


def _alternating_partitions(darts: list[int], is_head) -> list[list[tuple[int, ...]]]:
    """All partitions of darts into alternating cyclic sequences.

    Each cycle is anchored at its smallest dart, and cycles are opened in
    increasing order of their anchors, so every set of cyclic orders is
    produced exactly once.
    """
    results: list[list[tuple[int, ...]]] = []

    def extend(remaining: set[int], current: list[int], vertices: list[tuple[int, ...]]):
        if not current:
            if not remaining:
                results.append(list(vertices))
                return
            anchor = min(remaining)
            extend(remaining - {anchor}, [anchor], vertices)
            return
        # Close the cycle when the wrap also alternates.
        if len(current) >= 2 and is_head(current[-1]) != is_head(current[0]):
            vertices.append(tuple(current))
            extend(remaining, [], vertices)
            vertices.pop()
        want_head = not is_head(current[-1])
        for d in sorted(remaining):
            if is_head(d) == want_head and d > current[0]:
                extend(remaining - {d}, current + [d], vertices)

    extend(set(darts), [], [])
    return results


def generate_dart_pairing_first(k: int) -> list[AlternatingDimap]:
    """All k-edge maps (with duplicates) from fixed pairing, free rotations."""
    edges = tuple(Edge(f"e{i}", 2 * i, 2 * i + 1) for i in range(k))
    darts = list(range(2 * k))
    maps = []
    for rotations in _alternating_partitions(darts, lambda d: d % 2 == 1):
        g = AlternatingDimap(edges, tuple(rotations))
        if is_valid(g):
            maps.append(g)
    return maps


def generate_rotation_first(k: int) -> list[AlternatingDimap]:
    """All k-edge maps (with duplicates) from fixed degree shapes, free wiring."""
    maps = []
    for shape in _partitions(k):
        # Vertex j has shape[j] out-slots interleaved with in-slots.
        tails: list[int] = []
        rotations_template = []
        dart = 0
        slots_in: list[int] = []
        for d in shape:
            rot = []
            for _ in range(d):
                rot.append(dart)      # out slot
                tails.append(dart)
                rot.append(dart + 1)  # in slot
                slots_in.append(dart + 1)
                dart += 2
            rotations_template.append(tuple(rot))
        for heads in itertools.permutations(slots_in):
            edges = tuple(Edge(f"e{i}", tails[i], heads[i]) for i in range(k))
            g = AlternatingDimap(edges, tuple(rotations_template))
            if is_valid(g):
                maps.append(g)
    return maps


def _partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    largest = n if largest is None else largest
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return out


def _dedupe(maps) -> tuple[AlternatingDimap, ...]:
    seen = {}
    for g in maps:
        seen.setdefault(canonical_form(g), g)
    return tuple(seen[key] for key in sorted(seen))


def enumerate_dimaps(k: int, cap: int = DEFAULT_CAP,
                     strategy: str = "dart-pairing") -> Catalog:
    """Catalog of all k-edge alternating dimaps up to isomorphism."""
    if k > cap:
        raise CapExceeded(f"k = {k} above cap {cap}")
    if k == 0:
        return Catalog(0, (AlternatingDimap((), ()),))
    if strategy == "dart-pairing":
        raw = generate_dart_pairing_first(k)
    elif strategy == "rotation-first":
        raw = generate_rotation_first(k)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return Catalog(k, _dedupe(raw))


def self_trial_members(catalog: Catalog) -> list[AlternatingDimap]:
    return [g for g in catalog.maps if isomorphic(trial(g)[0], g)]


def random_dimap(k: int, rng) -> AlternatingDimap:
    """A random valid k-edge map; alternation holds by construction."""
    if k == 0:
        return AlternatingDimap((), ())
    edges = []
    tails = list(rng.permutation(range(k)))
    heads = list(rng.permutation(range(k)))
    for i in range(k):
        edges.append(Edge(f"e{i}", 2 * i, 2 * i + 1))
    # Random composition of k into vertex out-degrees.
    remaining = k
    rotations = []
    ti = hi = 0
    while remaining:
        d = int(rng.integers(1, remaining + 1))
        rot = []
        for _ in range(d):
            rot.append(2 * tails[ti])
            rot.append(2 * heads[hi] + 1)
            ti += 1
            hi += 1
        rotations.append(tuple(rot))
        remaining -= d
    g = AlternatingDimap(tuple(edges), tuple(rotations))
    assert is_valid(g)
    return g


__all__ = [
    "Catalog",
    "DEFAULT_CAP",
    "enumerate_dimaps",
    "generate_dart_pairing_first",
    "generate_rotation_first",
    "random_dimap",
    "self_trial_members",
    "total_genus",
]
