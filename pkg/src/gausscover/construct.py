"""Anklets, parallel chord bands, snails and the covering-spectrum constructions.

All constructions work on linear diagrams; ``realize_spectrum_closed`` opens
circular inputs, builds the long diagram and closes it again.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .arithmetic import CoefficientTable, f_table, g_table
from .diagram import Endpoint, GaussDiagram, Kind, Role, closure, juxtapose, open_diagram
from .errors import GaussCoverError, KindError, RealizabilityError, UnknownChordError
from .invariants import indices, realizability_failure, writhe_polynomial, writhe_vector
from .polynomial import LaurentPolynomial

__all__ = [
    "AnkletSpec",
    "Construction",
    "add_anklets",
    "add_anklets_to_index",
    "snail",
    "zero_covering_construction",
    "single_covering_construction",
    "realize_zero_covering",
    "realize_single_covering",
    "adjust_writhe",
    "realize_spectrum",
    "realize_spectrum_closed",
]


@dataclass(frozen=True)
class AnkletSpec:
    """``count`` nested anklets around one endpoint of ``target``.

    ``tail_left`` puts each anklet's tail before the straddled endpoint.
    """

    target: int
    at: Role
    count: int
    sign: int
    tail_left: bool = True


def add_anklets(g: GaussDiagram, spec: AnkletSpec) -> tuple[GaussDiagram, list[int]]:
    """Insert anklets as described by ``spec``; returns the diagram and the new ids."""
    tail, head = g.positions(spec.target)
    pos = tail if spec.at is Role.TAIL else head
    word = list(g.word)
    signs = g.signs
    new = []
    nid = g.next_id()
    left, right = (Role.TAIL, Role.HEAD) if spec.tail_left else (Role.HEAD, Role.TAIL)
    lo = hi = pos
    # each new anklet wraps the nest built so far: the first one is innermost
    for k in range(spec.count):
        c = nid + k
        word.insert(hi + 1, Endpoint(c, right))
        word.insert(lo, Endpoint(c, left))
        hi += 2
        signs[c] = spec.sign
        new.append(c)
    return GaussDiagram(g.kind, word, signs), new


def add_anklets_to_index(g: GaussDiagram, targets: Mapping[int, int]) -> GaussDiagram:
    """Give each target chord the requested index by adding anklets at its tail.

    Each anklet straddles the tail with its tail endpoint outside the arc of
    the target and its head endpoint inside it, so the head's sign (the sign
    of the required change) is added to the target's index.  No other chord's
    index changes.
    """
    current = indices(g)
    for c in targets:
        if c not in current:
            raise UnknownChordError(f"no chord {c} in diagram")
    order = sorted(targets, key=lambda c: g.positions(c)[0])
    for c in order:
        d = targets[c] - current[c]
        if d:
            g, _ = add_anklets(g, AnkletSpec(c, Role.TAIL, abs(d), 1 if d > 0 else -1))
    return g


# -- snails -------------------------------------------------------------------


def _snail_ok(g: GaussDiagram, main: int, n: int, eps: int) -> bool:
    ind = indices(g)
    if ind[main] != n or any(v != 1 for c, v in ind.items() if c != main):
        return False
    want: dict[int, int] = {}
    for k, v in ((n, eps), (1, -eps * n)):
        want[k] = want.get(k, 0) + v
    return writhe_vector(g) == {k: v for k, v in sorted(want.items()) if v}


@lru_cache(maxsize=None)
def snail(n: int, eps: int) -> GaussDiagram:
    """The (n, eps)-snail: a chord of sign ``eps`` and index ``n`` with |n|
    anklets of index 1.

    Found by a deterministic search over the main chord's orientation on the
    line, the straddled endpoint, and the anklets' orientation and sign.
    """
    if n == 0:
        raise GaussCoverError("snail needs n != 0")
    if eps not in (1, -1):
        raise GaussCoverError("snail sign must be +1 or -1")
    for first in (Role.TAIL, Role.HEAD):
        base = GaussDiagram(Kind.LINEAR, [(1, first), (1, first.other)], {1: eps})
        for at in (Role.TAIL, Role.HEAD):
            for tail_left in (True, False):
                for sign in (1, -1):
                    g, _ = add_anklets(base, AnkletSpec(1, at, abs(n), sign, tail_left))
                    if _snail_ok(g, 1, n, eps):
                        return g
    raise AssertionError(f"no snail configuration found for n={n}, eps={eps}")


# -- parallel bands -----------------------------------------------------------


@dataclass(frozen=True)
class Construction:
    """A constructed diagram with its band bookkeeping.

    ``bands[c]`` lists ``(new chord id, target index)`` for the chords that
    replaced chord ``c`` of the input.
    """

    diagram: GaussDiagram
    bands: dict[int, list[tuple[int, int]]]


def _replace_by_bands(h: GaussDiagram, band: Sequence[tuple[int, int]]) -> Construction:
    """Replace every chord of ``h`` by parallel copies.

    ``band`` lists ``(sign factor, target index)`` per copy.  Copies keep the
    orientation of the chord they replace; the head block is the tail block
    reversed, so the copies are pairwise non-crossing.
    """
    if h.kind is not Kind.LINEAR:
        raise KindError("the covering constructions need a linear diagram")
    ids: dict[int, list[int]] = {}
    nid = 1
    for c in h.chord_ids:
        ids[c] = list(range(nid, nid + len(band)))
        nid += len(band)
    word: list[Endpoint] = []
    signs: dict[int, int] = {}
    bands: dict[int, list[tuple[int, int]]] = {}
    for c, role in h.word:
        block = ids[c] if role is Role.TAIL else ids[c][::-1]
        word.extend(Endpoint(x, role) for x in block)
        if role is Role.TAIL:
            eps = h.sign(c)
            bands[c] = []
            for x, (factor, target) in zip(ids[c], band):
                signs[x] = eps * factor
                bands[c].append((x, target))
    g = GaussDiagram(Kind.LINEAR, word, signs)
    targets = {x: t for members in bands.values() for x, t in members}
    return Construction(add_anklets_to_index(g, targets), bands)


def _band_from_table(table: CoefficientTable) -> list[tuple[int, int]]:
    out = []
    for i in table.support:
        v = table[i]
        out += [(1 if v > 0 else -1, i)] * abs(v)
    return out


def zero_covering_construction(h: GaussDiagram, n: int) -> Construction:
    """Each chord becomes ``c0`` (same sign, index 0) followed by, for every
    ``i`` in the support of ``f_n`` and ``j <= |f_n(i)|``, a chord of index
    ``i`` whose sign is the chord's sign times the sign of ``f_n(i)``."""
    if n < 1:
        raise GaussCoverError(f"n must be >= 1, got {n}")
    band = [(1, 0)]
    if n >= 2:
        band += _band_from_table(f_table(n))
    return _replace_by_bands(h, band)


def single_covering_construction(h: GaussDiagram, n: int) -> Construction:
    """Each chord becomes one chord of index ``i`` per ``i`` in the support of
    ``g_n``, signed by the sign of ``g_n(i)``."""
    if n < 2:
        raise GaussCoverError(f"n must be >= 2, got {n}")
    return _replace_by_bands(h, _band_from_table(g_table(n)))


def realize_zero_covering(h: GaussDiagram, n: int) -> GaussDiagram:
    """A long diagram whose 0-covering and r-coverings for r > n are ``h``,
    and whose r-coverings for 2 <= r <= n simplify to the empty diagram."""
    return zero_covering_construction(h, n).diagram


def realize_single_covering(h: GaussDiagram, n: int) -> GaussDiagram:
    """A long diagram whose n-covering is ``h`` and whose other coverings
    (r = 0 and r >= 2, r != n) are trivial."""
    return single_covering_construction(h, n).diagram


# -- writhe polynomial --------------------------------------------------------


def _require_realizable(f: LaurentPolynomial):
    msg = realizability_failure(f)
    if msg is not None:
        raise RealizabilityError(f"not a writhe polynomial: {msg}")


def adjust_writhe(h: GaussDiagram, f: LaurentPolynomial) -> GaussDiagram:
    """Append snails to ``h`` so that the writhe polynomial becomes ``f``.

    With ``f - W_h = sum a_n t^n``, one snail S(n, sign a_n) is appended per
    unit of |a_n| for every n other than 0 and 1, in increasing n.  Coverings
    for r = 0 and r >= 2 only gain isolated chords.
    """
    if h.kind is not Kind.LINEAR:
        raise KindError("adjust_writhe needs a linear diagram")
    _require_realizable(f)
    diff = f - writhe_polynomial(h)
    parts = [h]
    for e, a in sorted(diff.terms.items()):
        if e in (0, 1):
            continue
        parts += [snail(e, 1 if a > 0 else -1)] * abs(a)
    return juxtapose(*parts)


def realize_spectrum(js: Sequence[GaussDiagram], f: LaurentPolynomial | None = None) -> GaussDiagram:
    """A long diagram with prescribed coverings and writhe polynomial.

    ``js`` is ``[J0, J2, J3, ..., Jm]`` (so ``m = len(js)``).  The result's
    0-covering and r-coverings for r > m give J0, the r-covering for
    2 <= r <= m gives Jr (after cancelling trivial summands), and its writhe
    polynomial is ``f`` (zero by default).
    """
    f = LaurentPolynomial() if f is None else f
    if not js:
        raise GaussCoverError("need at least J0")
    for j in js:
        if j.kind is not Kind.LINEAR:
            raise KindError("realize_spectrum needs linear diagrams")
    _require_realizable(f)
    m = len(js)
    parts = [realize_zero_covering(js[0], m)]
    parts += [realize_single_covering(js[r - 1], r) for r in range(2, m + 1)]
    return adjust_writhe(juxtapose(*parts), f)


def realize_spectrum_closed(js: Sequence[GaussDiagram], f: LaurentPolynomial | None = None) -> GaussDiagram:
    """Circular version of ``realize_spectrum``: each input is cut open before
    its canonical first endpoint, and the long result is closed up."""
    for j in js:
        if j.kind is not Kind.CIRCULAR:
            raise KindError("realize_spectrum_closed needs circular diagrams")
    return closure(realize_spectrum([open_diagram(j) for j in js], f))
