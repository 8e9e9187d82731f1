"""Exhaustive and random generation of small Gauss diagrams."""
from __future__ import annotations

import itertools
import random
from typing import Iterator

from .diagram import Endpoint, GaussDiagram, Kind, Role


def _matchings(slots: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not slots:
        yield []
        return
    a = slots[0]
    for b in slots[1:]:
        rest = [s for s in slots if s != a and s != b]
        for m in _matchings(rest):
            yield [(a, b), *m]


def diagrams_with(chords: int, kind=Kind.LINEAR) -> Iterator[GaussDiagram]:
    """Every diagram with exactly ``chords`` chords, one per isomorphism class."""
    kind = Kind(kind)
    seen = set()
    for m in _matchings(list(range(2 * chords))):
        for roles in itertools.product((Role.TAIL, Role.HEAD), repeat=chords):
            for signs in itertools.product((1, -1), repeat=chords):
                word = [None] * (2 * chords)
                for k, (a, b) in enumerate(m):
                    word[a] = Endpoint(k + 1, roles[k])
                    word[b] = Endpoint(k + 1, roles[k].other)
                g = GaussDiagram(kind, word, {k + 1: s for k, s in enumerate(signs)})
                if kind is Kind.CIRCULAR:
                    key = g.canonical_key()
                    if key in seen:
                        continue
                    seen.add(key)
                yield g


def all_diagrams(max_chords: int, kind=Kind.LINEAR) -> Iterator[GaussDiagram]:
    """Every diagram with at most ``max_chords`` chords, up to isomorphism."""
    for c in range(max_chords + 1):
        yield from diagrams_with(c, kind)


def random_diagram(chords: int, rng: random.Random, kind=Kind.LINEAR) -> GaussDiagram:
    """A uniformly shuffled word with random orientations and signs."""
    word = []
    for c in range(1, chords + 1):
        word += [Endpoint(c, Role.TAIL), Endpoint(c, Role.HEAD)]
    rng.shuffle(word)
    return GaussDiagram(kind, word, {c: rng.choice((1, -1)) for c in range(1, chords + 1)})
