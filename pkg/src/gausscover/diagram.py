"""Gauss diagrams: data model, text format, closure, juxtaposition, isomorphism.

A diagram is stored as its endpoint word (a tuple of ``Endpoint``) plus a
sign per chord.  Everything else (chord positions, partner table, endpoint
signs) is derived from the word and cached, since diagrams are immutable.

Text format::

    kind linear
    seq T1 T2 H1 H2
    sign 1 +
    sign 2 +
"""
from __future__ import annotations

import re
from enum import Enum
from typing import Iterable, Mapping, NamedTuple

from .errors import ArityError, GaussSyntaxError, KindError, SignError, UnknownChordError

__all__ = [
    "Kind",
    "Role",
    "Endpoint",
    "ChordRecord",
    "GaussDiagram",
    "parse_diagram",
    "serialize_diagram",
    "closure",
    "open_diagram",
    "juxtapose",
    "is_isomorphic",
]


class Kind(str, Enum):
    LINEAR = "linear"
    CIRCULAR = "circular"


class Role(str, Enum):
    TAIL = "T"
    HEAD = "H"

    @property
    def other(self) -> "Role":
        return Role.HEAD if self is Role.TAIL else Role.TAIL


class Endpoint(NamedTuple):
    chord: int
    role: Role

    def __str__(self):
        return f"{self.role.value}{self.chord}"


class ChordRecord(NamedTuple):
    id: int
    sign: int
    tail_pos: int
    head_pos: int


_TOKEN = re.compile(r"^([TH])([1-9][0-9]*)$")


def _check_sign(value) -> int:
    if value in ("+", "+1"):
        return 1
    if value in ("-", "-1"):
        return -1
    if isinstance(value, bool) or value not in (1, -1):
        raise SignError(f"sign must be +1 or -1, got {value!r}")
    return int(value)


def _parse_token(tok: str) -> Endpoint:
    m = _TOKEN.match(tok)
    if m is None:
        raise GaussSyntaxError(f"bad endpoint token {tok!r}")
    return Endpoint(int(m.group(2)), Role(m.group(1)))


class GaussDiagram:
    """An immutable linear or circular Gauss diagram.

    Parameters
    ----------
    kind : Kind or str
        ``"linear"`` or ``"circular"``.
    word : iterable of Endpoint, or str
        The endpoint sequence; a string is split into ``T<k>``/``H<k>`` tokens.
    signs : mapping chord id -> +1/-1
        One sign per chord of ``word``.
    """

    __slots__ = ("kind", "word", "_signs", "_cache")

    def __init__(self, kind, word, signs: Mapping[int, object]):
        try:
            self.kind = Kind(kind)
        except ValueError:
            raise KindError(f"unknown diagram kind {kind!r}") from None
        if isinstance(word, str):
            word = [_parse_token(t) for t in word.split()]
        self.word = tuple(Endpoint(int(c), Role(r)) for c, r in word)
        self._signs = {int(c): _check_sign(s) for c, s in signs.items()}
        self._cache = {}
        self._validate()

    def _validate(self):
        seen = {}
        for pos, (c, role) in enumerate(self.word):
            if c < 1:
                raise ArityError(f"chord ids must be positive, got {c}")
            roles = seen.setdefault(c, {})
            if role in roles:
                raise ArityError(f"chord {c} has two {'tails' if role is Role.TAIL else 'heads'}")
            roles[role] = pos
        for c, roles in seen.items():
            if len(roles) != 2:
                raise ArityError(f"chord {c} is missing its {'head' if Role.TAIL in roles else 'tail'}")
        missing = seen.keys() - self._signs.keys()
        if missing:
            raise SignError(f"no sign given for chord(s) {sorted(missing)}")
        extra = self._signs.keys() - seen.keys()
        if extra:
            raise SignError(f"sign given for absent chord(s) {sorted(extra)}")
        self._cache["pos"] = {c: (r[Role.TAIL], r[Role.HEAD]) for c, r in seen.items()}

    # -- construction helpers ------------------------------------------------

    @classmethod
    def empty(cls, kind=Kind.LINEAR) -> "GaussDiagram":
        return cls(kind, (), {})

    def _derive(self, word, signs=None, kind=None) -> "GaussDiagram":
        signs = self._signs if signs is None else signs
        used = {c for c, _ in word}
        return GaussDiagram(kind or self.kind, word, {c: s for c, s in signs.items() if c in used})

    # -- basic queries -------------------------------------------------------

    @property
    def is_linear(self) -> bool:
        return self.kind is Kind.LINEAR

    @property
    def signs(self) -> dict[int, int]:
        return dict(self._signs)

    def sign(self, chord: int) -> int:
        try:
            return self._signs[chord]
        except KeyError:
            raise UnknownChordError(f"no chord {chord} in diagram") from None

    def __len__(self):
        return len(self.word)

    @property
    def chord_count(self) -> int:
        return len(self._signs)

    @property
    def chord_ids(self) -> list[int]:
        """Chord ids in order of first appearance in the word."""
        out, seen = [], set()
        for c, _ in self.word:
            if c not in seen:
                seen.add(c)
                out.append(c)
        return out

    def positions(self, chord: int) -> tuple[int, int]:
        """``(tail_pos, head_pos)`` of ``chord``."""
        try:
            return self._cache["pos"][chord]
        except KeyError:
            raise UnknownChordError(f"no chord {chord} in diagram") from None

    @property
    def chords(self) -> dict[int, ChordRecord]:
        return {c: ChordRecord(c, self._signs[c], t, h) for c, (t, h) in self._cache["pos"].items()}

    @property
    def partner(self) -> list[int]:
        """``partner[p]`` is the position of the other endpoint of the chord at ``p``."""
        p = self._cache.get("partner")
        if p is None:
            p = [0] * len(self.word)
            for t, h in self._cache["pos"].values():
                p[t], p[h] = h, t
            self._cache["partner"] = p
        return p

    def endpoint_sign(self, pos: int) -> int:
        c, role = self.word[pos]
        s = self._signs[c]
        return -s if role is Role.TAIL else s

    @property
    def endpoint_signs(self) -> list[int]:
        """Endpoint signs: ``-sign`` at a tail, ``+sign`` at a head."""
        es = self._cache.get("esigns")
        if es is None:
            es = [self.endpoint_sign(p) for p in range(len(self.word))]
            self._cache["esigns"] = es
        return es

    def adjacent(self, p: int, q: int) -> bool:
        """True if position ``q`` immediately follows ``p`` (cyclically for circular)."""
        n = len(self.word)
        if self.kind is Kind.CIRCULAR:
            return n > 0 and (p + 1) % n == q
        return q == p + 1

    # -- equality, hashing, canonical forms ----------------------------------

    def __eq__(self, other):
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self.kind is other.kind and self.word == other.word and self._signs == other._signs

    def __hash__(self):
        return hash((self.kind, self.word, tuple(sorted(self._signs.items()))))

    def __repr__(self):
        seq = " ".join(map(str, self.word))
        sg = ",".join(f"{c}:{'+' if s > 0 else '-'}" for c, s in sorted(self._signs.items()))
        return f"GaussDiagram({self.kind.value}, '{seq}', {{{sg}}})"

    def _rotation_key(self, start: int) -> tuple:
        labels = {}
        key = []
        n = len(self.word)
        for i in range(n):
            c, role = self.word[(start + i) % n]
            lab = labels.setdefault(c, len(labels) + 1)
            key.append((lab, 0 if role is Role.TAIL else 1, 0 if self._signs[c] > 0 else 1))
        return tuple(key)

    def canonical_start(self) -> int:
        """Start position of the canonical reading (always 0 for linear diagrams)."""
        start = self._cache.get("cstart")
        if start is None:
            if self.kind is Kind.LINEAR or not self.word:
                start = 0
            else:
                start = min(range(len(self.word)), key=self._rotation_key)
            self._cache["cstart"] = start
        return start

    def canonical_key(self) -> tuple:
        """Hashable key; equal keys iff the diagrams are isomorphic."""
        key = self._cache.get("ckey")
        if key is None:
            key = (self.kind.value, self._rotation_key(self.canonical_start()))
            self._cache["ckey"] = key
        return key

    def rotated(self, start: int) -> "GaussDiagram":
        """The circular diagram read from position ``start``."""
        if self.kind is not Kind.CIRCULAR:
            raise KindError("only circular diagrams can be rotated")
        if not self.word:
            return self
        start %= len(self.word)
        return self._derive(self.word[start:] + self.word[:start])

    def relabeled(self) -> "GaussDiagram":
        """Same word with chords renumbered 1..c in order of first appearance."""
        new = {c: i + 1 for i, c in enumerate(self.chord_ids)}
        return GaussDiagram(self.kind, [(new[c], r) for c, r in self.word],
                            {new[c]: s for c, s in self._signs.items()})

    def canonical(self) -> "GaussDiagram":
        d = self
        if self.kind is Kind.CIRCULAR and self.word:
            d = self.rotated(self.canonical_start())
        return d.relabeled()

    def without(self, chords: Iterable[int]) -> "GaussDiagram":
        """Delete the given chords, keeping the order of the remaining endpoints."""
        drop = set(chords)
        for c in drop:
            self.sign(c)
        return self._derive([e for e in self.word if e.chord not in drop])

    def next_id(self) -> int:
        return max(self._signs, default=0) + 1


# -- text format -------------------------------------------------------------


def parse_diagram(text: str) -> GaussDiagram:
    """Parse Gauss-code text into a diagram."""
    lines = []
    for raw in text.split("\n"):
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    if not lines:
        raise GaussSyntaxError("empty input: expected a 'kind' line")
    head = lines[0].split()
    if head[0] != "kind" or len(head) != 2:
        raise GaussSyntaxError(f"expected 'kind linear|circular', got {lines[0]!r}")
    if head[1] not in ("linear", "circular"):
        raise KindError(f"unknown diagram kind {head[1]!r}")
    if len(lines) < 2 or lines[1].split()[0] != "seq":
        raise GaussSyntaxError("expected a 'seq' line after 'kind'")
    word = [_parse_token(t) for t in lines[1].split()[1:]]
    signs: dict[int, int] = {}
    for line in lines[2:]:
        parts = line.split()
        if parts[0] != "sign":
            raise GaussSyntaxError(f"unexpected line {line!r}")
        if len(parts) != 3 or not parts[1].isdigit() or parts[2] not in ("+", "-"):
            raise SignError(f"malformed sign line {line!r}")
        c = int(parts[1])
        if c in signs:
            raise SignError(f"duplicate sign for chord {c}")
        signs[c] = 1 if parts[2] == "+" else -1
    return GaussDiagram(head[1], word, signs)


def serialize_diagram(g: GaussDiagram) -> str:
    """Canonical text: chords relabeled 1..c, circular diagrams in least rotation."""
    d = g.canonical()
    seq = " ".join(str(e) for e in d.word)
    out = [f"kind {d.kind.value}", f"seq {seq}" if seq else "seq"]
    out += [f"sign {c} {'+' if s > 0 else '-'}" for c, s in sorted(d.signs.items())]
    return "\n".join(out) + "\n"


# -- structural operations ---------------------------------------------------


def closure(g: GaussDiagram) -> GaussDiagram:
    """One-point compactification: the same word read cyclically."""
    if g.kind is not Kind.LINEAR:
        raise KindError("closure needs a linear diagram")
    return GaussDiagram(Kind.CIRCULAR, g.word, g.signs)


def open_diagram(g: GaussDiagram) -> GaussDiagram:
    """Cut a circular diagram before its canonical first endpoint.

    The closure of the result is isomorphic to ``g``.
    """
    if g.kind is not Kind.CIRCULAR:
        raise KindError("open_diagram needs a circular diagram")
    r = g.rotated(g.canonical_start()) if g.word else g
    return GaussDiagram(Kind.LINEAR, r.word, r.signs)


def juxtapose(*diagrams: GaussDiagram) -> GaussDiagram:
    """Concatenate linear diagrams left to right, renumbering later chords."""
    word: list[Endpoint] = []
    signs: dict[int, int] = {}
    offset = 0
    for g in diagrams:
        if g.kind is not Kind.LINEAR:
            raise KindError("juxtapose needs linear diagrams")
        new = {c: offset + i + 1 for i, c in enumerate(g.chord_ids)}
        word.extend(Endpoint(new[c], r) for c, r in g.word)
        signs.update((new[c], s) for c, s in g.signs.items())
        offset += g.chord_count
    return GaussDiagram(Kind.LINEAR, word, signs)


def is_isomorphic(g: GaussDiagram, h: GaussDiagram) -> bool:
    if g.kind is not h.kind:
        raise KindError(f"cannot compare a {g.kind.value} diagram with a {h.kind.value} one")
    if len(g) != len(h):
        return False
    return g.canonical_key() == h.canonical_key()


def rotation_between(g: GaussDiagram, h: GaussDiagram) -> int | None:
    """An offset ``k`` with ``g[i]`` matching ``h[(i + k) % len]`` up to relabeling.

    Always 0 for isomorphic linear diagrams; None when not isomorphic.
    """
    if not is_isomorphic(g, h):
        return None
    if g.kind is Kind.LINEAR or not g.word:
        return 0
    return (h.canonical_start() - g.canonical_start()) % len(g)
