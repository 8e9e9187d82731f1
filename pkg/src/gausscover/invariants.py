"""Chord index, r-coverings, n-writhes and the writhe polynomial."""
from __future__ import annotations

from . import kernels
from .diagram import GaussDiagram, Kind
from .errors import GaussCoverError, UnknownChordError
from .polynomial import LaurentPolynomial

__all__ = [
    "indices",
    "index",
    "covering",
    "writhe_vector",
    "writhe_polynomial",
    "odd_writhe",
    "check_realizability",
    "realizability_failure",
]


def indices(g: GaussDiagram) -> dict[int, int]:
    """Index of every chord, keyed by chord id.

    Linear diagrams are read through their closure, which only changes how
    the word is interpreted, not the word itself.
    """
    cached = g._cache.get("indices")
    if cached is None:
        recs = g.chords
        ids = list(recs)
        vals = kernels.chord_indices(
            g.endpoint_signs,
            [recs[c].tail_pos for c in ids],
            [recs[c].head_pos for c in ids],
        )
        cached = dict(zip(ids, vals))
        g._cache["indices"] = cached
    return dict(cached)


def index(g: GaussDiagram, chord: int) -> int:
    """Sum of endpoint signs strictly inside the arc from ``chord``'s tail to its head."""
    ind = indices(g)
    if chord not in ind:
        raise UnknownChordError(f"no chord {chord} in diagram")
    return ind[chord]


def _kept(ind: int, r: int) -> bool:
    if r == 0:
        return ind == 0
    return ind % r == 0


def covering(g: GaussDiagram, r: int) -> GaussDiagram:
    """The r-covering: drop every chord whose index (in ``g``) is not divisible by r.

    ``r = 0`` keeps exactly the index-0 chords; ``r = 1`` returns ``g``.
    """
    if r < 0:
        raise GaussCoverError(f"covering needs r >= 0, got {r}")
    if r == 1:
        return g
    ind = indices(g)
    return g.without(c for c, i in ind.items() if not _kept(i, r))


def writhe_vector(g: GaussDiagram) -> dict[int, int]:
    """Nonzero n-writhes ``{n: w_n}``; index-0 chords are ignored."""
    ind = indices(g)
    w: dict[int, int] = {}
    for c, n in ind.items():
        if n:
            w[n] = w.get(n, 0) + g.sign(c)
    return {n: v for n, v in sorted(w.items()) if v}


def writhe_polynomial(g: GaussDiagram) -> LaurentPolynomial:
    w = writhe_vector(g)
    return LaurentPolynomial(w) - sum(w.values())


def odd_writhe(g: GaussDiagram) -> int:
    return sum(v for n, v in writhe_vector(g).items() if n % 2)


def realizability_failure(f: LaurentPolynomial) -> str | None:
    """None if f(1) = f'(1) = 0, else a message naming the failed condition."""
    v0 = f(1)
    if v0 != 0:
        return f"f(1) = {v0} != 0"
    v1 = f.derivative()(1)
    if v1 != 0:
        return f"f'(1) = {v1} != 0"
    return None


def check_realizability(f: LaurentPolynomial) -> bool:
    """True iff f is the writhe polynomial of some virtual knot."""
    return realizability_failure(f) is None


def max_abs_index(g: GaussDiagram) -> int:
    return max((abs(i) for i in indices(g).values()), default=0)

