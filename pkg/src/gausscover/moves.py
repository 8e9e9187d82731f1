"""Reidemeister moves on Gauss diagrams, greedy simplification and bounded search.

Move sites are positional, so a recorded sequence can be replayed on the
diagram it was found on.  Text form, one move per line::

    R1- <pos>                              remove the chord at pos, pos+1
    R1+ <gap> <+|-> <T|H>                  insert a chord at gap; role of the first endpoint
    R2- <p1> <p2>                          remove the bigon with blocks at p1 and p2
    R2+ <g1> <g2> <+|-> <T|H> <ab|ba> <ab|ba>
                                           insert chords a (given sign) and b (opposite sign);
                                           block 1 at g1 has the given role, block 2 at g2 the
                                           other one; the orders say which chord comes first
    R3 <p1> <p2> <p3>                      reverse the three blocks of a triangle

Positions index the current word; a gap ``g`` is the slot before position
``g``.  In a circular diagram a block may wrap from the last position to 0.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from . import kernels
from .diagram import Endpoint, GaussDiagram, Kind, Role, is_isomorphic, rotation_between
from .errors import GaussSyntaxError, InvalidMoveError, KindError
from .invariants import covering, odd_writhe, writhe_polynomial

__all__ = [
    "MoveKind",
    "Direction",
    "MoveSite",
    "Verdict",
    "EquivalenceVerdict",
    "find_moves",
    "insertion_sites",
    "apply_move",
    "apply_moves",
    "inverse_site",
    "simplify",
    "simplify_with_moves",
    "random_move_walk",
    "equivalent_bounded",
    "parse_moves",
    "format_moves",
]


class MoveKind(str, Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"


class Direction(str, Enum):
    REMOVE = "-"
    INSERT = "+"
    SWAP = ""


@dataclass(frozen=True)
class MoveSite:
    kind: MoveKind
    direction: Direction
    data: tuple

    def __str__(self):
        d = self.data
        head = f"{self.kind.value}{self.direction.value}"
        if self.direction is not Direction.INSERT:
            return " ".join([head, *map(str, d)])
        sign = "+" if d[-4 if self.kind is MoveKind.R2 else 1] > 0 else "-"
        if self.kind is MoveKind.R1:
            return f"{head} {d[0]} {sign} {d[2].value}"
        return f"{head} {d[0]} {d[1]} {sign} {d[3].value} {d[4]} {d[5]}"


ALL_KINDS = frozenset(MoveKind)


# -- site discovery -----------------------------------------------------------


def _pair(g: GaussDiagram, p: int) -> tuple[int, int]:
    """Positions of the block starting at ``p``; raises if it runs off a linear word."""
    n = len(g)
    if not 0 <= p < n:
        raise InvalidMoveError(f"position {p} out of range")
    if p + 1 < n:
        return p, p + 1
    if g.kind is Kind.CIRCULAR and n >= 2:
        return p, 0
    raise InvalidMoveError(f"no block starts at the last position {p} of a linear word")


def _r3_deltas(g: GaussDiagram, blocks: Sequence[tuple[int, int]]) -> dict[int, int]:
    """Index change of each chord when every block is reversed in place."""
    delta: dict[int, int] = {}
    for a, b in blocks:
        (fc, frole), (sc, srole) = g.word[a], g.word[b]
        fs, ss = g.endpoint_sign(a), g.endpoint_sign(b)
        delta[fc] = delta.get(fc, 0) + (-ss if frole is Role.TAIL else ss)
        delta[sc] = delta.get(sc, 0) + (fs if srole is Role.TAIL else -fs)
    return delta


def _is_r3(g: GaussDiagram, starts: Sequence[int]) -> bool:
    try:
        blocks = [_pair(g, p) for p in starts]
    except InvalidMoveError:
        return False
    pos = [q for b in blocks for q in b]
    if len(set(pos)) != 6:
        return False
    chords = [frozenset((g.word[a].chord, g.word[b].chord)) for a, b in blocks]
    if any(len(c) != 2 for c in chords) or len(set(chords)) != 3:
        return False
    if len(set().union(*chords)) != 3:
        return False
    role_pairs = [{g.word[a].role, g.word[b].role} for a, b in blocks]
    # cyclically oriented triangles cannot come from three strands at distinct heights
    if all(len(r) == 2 for r in role_pairs):
        return False
    return all(v == 0 for v in _r3_deltas(g, blocks).values())


def _block_start(g: GaussDiagram, p: int, q: int) -> int | None:
    """Start of the block {p, q} if the two positions are adjacent, else None."""
    if g.adjacent(p, q):
        return p
    if g.adjacent(q, p):
        return q
    return None


def _r3_sites(g: GaussDiagram) -> list[tuple[int, int, int]]:
    n = len(g)
    if n < 6:
        return []
    part = g.partner
    found = set()
    last = n if g.kind is Kind.CIRCULAR else n - 1
    for p in range(last):
        q = p + 1 if p + 1 < n else 0
        x, y = g.word[p].chord, g.word[q].chord
        if x == y:
            continue
        px, py = part[p], part[q]
        for nb in (px - 1, px + 1):
            if g.kind is Kind.CIRCULAR:
                nb %= n
            elif not 0 <= nb < n:
                continue
            z = g.word[nb].chord
            if z in (x, y):
                continue
            s2 = _block_start(g, px, nb)
            s3 = _block_start(g, part[nb], py)
            if s2 is None or s3 is None:
                continue
            starts = tuple(sorted((p, s2, s3)))
            if starts not in found and _is_r3(g, starts):
                found.add(starts)
    return sorted(found)


def find_moves(g: GaussDiagram, kinds: Iterable[MoveKind] = ALL_KINDS) -> list[MoveSite]:
    """All removal sites (R1, R2) and triangle sites (R3) of ``g``.

    Ordered R1 first, then R2, then R3; within a kind by lowest position.
    """
    kinds = {MoveKind(k) for k in kinds}
    circ = g.kind is Kind.CIRCULAR
    out: list[MoveSite] = []
    if MoveKind.R1 in kinds:
        out += [MoveSite(MoveKind.R1, Direction.REMOVE, (p,))
                for p in kernels.r1_positions(g.partner, circ)]
    if MoveKind.R2 in kinds:
        is_tail = [1 if e.role is Role.TAIL else 0 for e in g.word]
        csign = [g.sign(e.chord) for e in g.word]
        blocks = sorted(kernels.r2_blocks(g.partner, is_tail, csign, circ))
        out += [MoveSite(MoveKind.R2, Direction.REMOVE, tuple(b)) for b in blocks]
    if MoveKind.R3 in kinds:
        out += [MoveSite(MoveKind.R3, Direction.SWAP, s) for s in _r3_sites(g)]
    return out


# -- applying moves -----------------------------------------------------------


def _check_r2_remove(g: GaussDiagram, p1: int, p2: int) -> tuple[int, int]:
    b1, b2 = _pair(g, p1), _pair(g, p2)
    if len({*b1, *b2}) != 4:
        raise InvalidMoveError("R2 blocks overlap")
    a, b = g.word[b1[0]].chord, g.word[b1[1]].chord
    if a == b or {g.word[b2[0]].chord, g.word[b2[1]].chord} != {a, b}:
        raise InvalidMoveError("R2 blocks must each hold one endpoint of the same two chords")
    if g.word[b1[0]].role is not g.word[b1[1]].role:
        raise InvalidMoveError("endpoints within an R2 block must share a role")
    if g.sign(a) != -g.sign(b):
        raise InvalidMoveError("R2 chords must have opposite signs")
    return a, b


def _insert_r1(g: GaussDiagram, gap: int, sign: int, first: Role) -> GaussDiagram:
    n = len(g)
    if not 0 <= gap <= n:
        raise InvalidMoveError(f"gap {gap} out of range 0..{n}")
    if sign not in (1, -1):
        raise InvalidMoveError("sign must be +1 or -1")
    c = g.next_id()
    word = list(g.word)
    word[gap:gap] = [Endpoint(c, first), Endpoint(c, first.other)]
    signs = g.signs
    signs[c] = sign
    return GaussDiagram(g.kind, word, signs)


def _insert_r2(g, g1, g2, sign, role1, order1, order2) -> GaussDiagram:
    n = len(g)
    if not 0 <= g1 <= g2 <= n:
        raise InvalidMoveError(f"gaps must satisfy 0 <= g1 <= g2 <= {n}")
    if sign not in (1, -1) or order1 not in ("ab", "ba") or order2 not in ("ab", "ba"):
        raise InvalidMoveError("bad R2 insertion data")
    a = g.next_id()
    b = a + 1
    ids = {"a": a, "b": b}
    blk1 = [Endpoint(ids[k], role1) for k in order1]
    blk2 = [Endpoint(ids[k], role1.other) for k in order2]
    word = list(g.word)
    word = word[:g1] + blk1 + word[g1:g2] + blk2 + word[g2:]
    signs = g.signs
    signs[a], signs[b] = sign, -sign
    return GaussDiagram(g.kind, word, signs)


def apply_move(g: GaussDiagram, site: MoveSite) -> GaussDiagram:
    """Rewrite ``g`` at ``site``; raises InvalidMoveError if it does not apply."""
    kind, direction, d = site.kind, site.direction, site.data
    if direction is Direction.REMOVE:
        if kind is MoveKind.R1:
            p, q = _pair(g, d[0])
            if g.word[p].chord != g.word[q].chord:
                raise InvalidMoveError(f"positions {p},{q} are not the ends of one chord")
            return g.without([g.word[p].chord])
        if kind is MoveKind.R2:
            return g.without(_check_r2_remove(g, d[0], d[1]))
    elif direction is Direction.INSERT:
        if kind is MoveKind.R1:
            return _insert_r1(g, *d)
        if kind is MoveKind.R2:
            return _insert_r2(g, *d)
    elif kind is MoveKind.R3:
        if not _is_r3(g, d):
            raise InvalidMoveError(f"no R3 triangle at blocks {d}")
        word = list(g.word)
        for p in d:
            a, b = _pair(g, p)
            word[a], word[b] = word[b], word[a]
        return GaussDiagram(g.kind, word, g.signs)
    raise InvalidMoveError(f"unsupported move {site}")


def apply_moves(g: GaussDiagram, sites: Iterable[MoveSite]) -> GaussDiagram:
    for s in sites:
        g = apply_move(g, s)
    return g


def inverse_site(g: GaussDiagram, site: MoveSite) -> MoveSite:
    """A site on ``apply_move(g, site)`` whose application gives back ``g``
    (exactly, or up to rotation when a circular block wraps)."""
    n = len(g)
    d = site.data
    if site.kind is MoveKind.R3:
        return site
    if site.direction is Direction.INSERT:
        if site.kind is MoveKind.R1:
            return MoveSite(MoveKind.R1, Direction.REMOVE, (d[0],))
        return MoveSite(MoveKind.R2, Direction.REMOVE, (d[0], d[1] + 2))
    if site.kind is MoveKind.R1:
        p, q = _pair(g, d[0])
        gap = p if q == p + 1 else 0
        return MoveSite(MoveKind.R1, Direction.INSERT, (gap, g.sign(g.word[p].chord), g.word[p].role))
    p1, p2 = d
    _check_r2_remove(g, p1, p2)
    if p2 == n - 1 and g.kind is Kind.CIRCULAR:
        # the wrapping block goes first, at gap 0; position 0 was removed
        first, second = _pair(g, p2), _pair(g, p1)
        g1, g2 = 0, p1 - 1
    else:
        first, second = _pair(g, p1), _pair(g, p2)
        g1, g2 = p1, p2 - 2
    a = g.word[first[0]].chord
    order2 = "ab" if g.word[second[0]].chord == a else "ba"
    return MoveSite(MoveKind.R2, Direction.INSERT,
                    (g1, g2, g.sign(a), g.word[first[0]].role, "ab", order2))


def transport_site(site: MoveSite, src: GaussDiagram, dst: GaussDiagram) -> MoveSite:
    """Re-express a site of ``src`` on an isomorphic diagram ``dst``."""
    k = rotation_between(src, dst)
    if k is None:
        raise InvalidMoveError("cannot transport a move between non-isomorphic diagrams")
    n = len(src)
    if k == 0 or n == 0:
        return site
    d = site.data
    if site.direction is not Direction.INSERT:
        return MoveSite(site.kind, site.direction, tuple(sorted((p + k) % n for p in d)))
    if site.kind is MoveKind.R1:
        return MoveSite(site.kind, site.direction, ((d[0] + k) % n,) + d[1:])
    g1, g2, sign, role1, o1, o2 = d
    h1, h2 = (g1 + k) % n, (g2 + k) % n
    if h1 < h2 or (h1 == h2 and g1 == g2):
        return MoveSite(site.kind, site.direction, (h1, h2, sign, role1, o1, o2))
    return MoveSite(site.kind, site.direction, (h2, h1, sign, role1.other, o2, o1))


# -- simplification -----------------------------------------------------------


def simplify_with_moves(g: GaussDiagram) -> tuple[GaussDiagram, list[MoveSite]]:
    """Greedy R1/R2 removal, lowest R1 site first, then lowest R2 site."""
    moves = []
    while True:
        sites = find_moves(g, (MoveKind.R1,)) or find_moves(g, (MoveKind.R2,))
        if not sites:
            return g, moves
        g = apply_move(g, sites[0])
        moves.append(sites[0])


def simplify(g: GaussDiagram) -> GaussDiagram:
    return simplify_with_moves(g)[0]


# -- random walks -------------------------------------------------------------


def _random_insert(g: GaussDiagram, kind: MoveKind, rng: random.Random) -> MoveSite:
    n = len(g)
    top = n if g.kind is Kind.LINEAR or n == 0 else n - 1
    sign = rng.choice((1, -1))
    role = rng.choice((Role.TAIL, Role.HEAD))
    if kind is MoveKind.R1:
        return MoveSite(kind, Direction.INSERT, (rng.randint(0, top), sign, role))
    g1, g2 = sorted((rng.randint(0, top), rng.randint(0, top)))
    return MoveSite(kind, Direction.INSERT,
                    (g1, g2, sign, role, rng.choice(("ab", "ba")), rng.choice(("ab", "ba"))))


def random_move_walk(g: GaussDiagram, steps: int, seed, max_chords: int | None = None,
                     history: list | None = None) -> GaussDiagram:
    """Apply ``steps`` random Reidemeister moves, deterministically from ``seed``.

    Each step picks a move family uniformly among the ones available (R1+,
    R2+, R1-, R2-, R3) and then a site of that family uniformly.  Insertions
    are disabled once the diagram has ``max_chords`` chords (default
    ``c(g) + 12``) to keep walks small.  Applied sites are appended to
    ``history`` when given.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = random.Random(seed)
    cap = g.chord_count + 12 if max_chords is None else max_chords
    for _ in range(steps):
        sites = find_moves(g)
        families: dict[str, list[MoveSite] | MoveKind] = {}
        for s in sites:
            families.setdefault(f"{s.kind.value}{s.direction.value}", []).append(s)
        if g.chord_count + 1 <= cap:
            families["R1+"] = MoveKind.R1
        if g.chord_count + 2 <= cap:
            families["R2+"] = MoveKind.R2
        if not families:
            break
        choice = families[rng.choice(sorted(families))]
        site = _random_insert(g, choice, rng) if isinstance(choice, MoveKind) else rng.choice(choice)
        g = apply_move(g, site)
        if history is not None:
            history.append(site)
    return g


# -- bounded equivalence ------------------------------------------------------


class Verdict(str, Enum):
    EQUIVALENT = "equivalent"
    DISTINCT = "distinct"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Result of ``equivalent_bounded``.

    For EQUIVALENT, ``apply_moves(G, moves)`` is isomorphic to H.  For
    DISTINCT, ``invariant`` names a separating invariant and ``values`` holds
    its value on G and on H.
    """

    verdict: Verdict
    moves: tuple[MoveSite, ...] = ()
    invariant: str | None = None
    values: tuple = field(default=())


def _separating_invariant(g: GaussDiagram, h: GaussDiagram):
    checks = [("writhe polynomial", writhe_polynomial), ("odd writhe", odd_writhe)]
    for name, fn in checks:
        a, b = fn(g), fn(h)
        if a != b:
            return name, (a, b)
    for r in (0, 2, 3, 4, 5, 6, 7, 8):
        a, b = writhe_polynomial(covering(g, r)), writhe_polynomial(covering(h, r))
        if a != b:
            return f"writhe polynomial of the {r}-covering", (a, b)
    return None


def insertion_sites(g: GaussDiagram) -> list[MoveSite]:
    """Every R1 and R2 insertion on ``g`` (gaps up to rotation for circular words)."""
    n = len(g)
    top = n if g.kind is Kind.LINEAR or n == 0 else n - 1
    out = []
    for gap in range(top + 1):
        for sign in (1, -1):
            for role in (Role.TAIL, Role.HEAD):
                out.append(MoveSite(MoveKind.R1, Direction.INSERT, (gap, sign, role)))
    for g1 in range(top + 1):
        for g2 in range(g1, top + 1):
            for sign in (1, -1):
                for role in (Role.TAIL, Role.HEAD):
                    for o1 in ("ab", "ba"):
                        for o2 in ("ab", "ba"):
                            out.append(MoveSite(MoveKind.R2, Direction.INSERT,
                                                (g1, g2, sign, role, o1, o2)))
    return out


def _bfs(start: GaussDiagram, goal_key, depth: int, cap: int, max_states: int):
    seen = {start.canonical_key(): None}
    frontier = deque([(start, 0)])
    parent: dict = {}
    while frontier:
        d, dist = frontier.popleft()
        key = d.canonical_key()
        if key == goal_key:
            path = []
            while key in parent:
                key, site = parent[key]
                path.append(site)
            return d, path[::-1]
        if dist >= depth:
            continue
        nexts = find_moves(d)
        if d.chord_count < cap:
            nexts += insertion_sites(d)
        for site in nexts:
            if site.direction is Direction.INSERT:
                extra = 1 if site.kind is MoveKind.R1 else 2
                if d.chord_count + extra > cap:
                    continue
            e = apply_move(d, site)
            k = e.canonical_key()
            if k in seen:
                continue
            seen[k] = None
            parent[k] = (key, site)
            frontier.append((e, dist + 1))
            if len(seen) > max_states:
                return None
    return None


def equivalent_bounded(g: GaussDiagram, h: GaussDiagram, depth: int,
                       max_extra_chords: int = 1, max_states: int = 200_000) -> EquivalenceVerdict:
    """Decide equivalence by invariants plus a depth-limited breadth-first search.

    The search starts from ``simplify(g)`` and looks for a diagram isomorphic
    to ``simplify(h)``; insertions are allowed only while the chord count
    stays within ``max_extra_chords`` of the larger simplified diagram.
    """
    if g.kind is not h.kind:
        raise KindError(f"cannot compare a {g.kind.value} diagram with a {h.kind.value} one")
    if is_isomorphic(g, h):
        return EquivalenceVerdict(Verdict.EQUIVALENT)
    sep = _separating_invariant(g, h)
    if sep is not None:
        return EquivalenceVerdict(Verdict.DISTINCT, invariant=sep[0], values=sep[1])
    sg, rg = simplify_with_moves(g)
    # chain of diagrams H = D0 -> D1 -> ... -> Dk = simplify(H)
    chain = [h]
    rh = []
    while True:
        sites = find_moves(chain[-1], (MoveKind.R1,)) or find_moves(chain[-1], (MoveKind.R2,))
        if not sites:
            break
        rh.append(sites[0])
        chain.append(apply_move(chain[-1], sites[0]))
    sh = chain[-1]
    cap = max(sg.chord_count, sh.chord_count) + max_extra_chords
    found = _bfs(sg, sh.canonical_key(), depth, cap, max_states)
    if found is None:
        return EquivalenceVerdict(Verdict.UNKNOWN)
    cur, path = found
    moves = list(rg) + path
    for j in range(len(rh), 0, -1):
        inv = inverse_site(chain[j - 1], rh[j - 1])
        site = transport_site(inv, chain[j], cur)
        cur = apply_move(cur, site)
        moves.append(site)
    return EquivalenceVerdict(Verdict.EQUIVALENT, moves=tuple(moves))


# -- text form ----------------------------------------------------------------


def format_moves(sites: Iterable[MoveSite]) -> str:
    return "".join(f"{s}\n" for s in sites)


def _sign(tok: str) -> int:
    if tok not in ("+", "-"):
        raise GaussSyntaxError(f"expected + or -, got {tok!r}")
    return 1 if tok == "+" else -1


def _role(tok: str) -> Role:
    if tok not in ("T", "H"):
        raise GaussSyntaxError(f"expected T or H, got {tok!r}")
    return Role(tok)


def _order(tok: str) -> str:
    if tok not in ("ab", "ba"):
        raise GaussSyntaxError(f"expected ab or ba, got {tok!r}")
    return tok


def parse_moves(text: str) -> list[MoveSite]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        try:
            if head == "R1-" and len(rest) == 1:
                out.append(MoveSite(MoveKind.R1, Direction.REMOVE, (int(rest[0]),)))
            elif head == "R2-" and len(rest) == 2:
                out.append(MoveSite(MoveKind.R2, Direction.REMOVE, (int(rest[0]), int(rest[1]))))
            elif head == "R3" and len(rest) == 3:
                out.append(MoveSite(MoveKind.R3, Direction.SWAP, tuple(int(x) for x in rest)))
            elif head == "R1+" and len(rest) == 3:
                out.append(MoveSite(MoveKind.R1, Direction.INSERT,
                                    (int(rest[0]), _sign(rest[1]), _role(rest[2]))))
            elif head == "R2+" and len(rest) == 6:
                out.append(MoveSite(MoveKind.R2, Direction.INSERT,
                                    (int(rest[0]), int(rest[1]), _sign(rest[2]), _role(rest[3]),
                                     _order(rest[4]), _order(rest[5]))))
            else:
                raise GaussSyntaxError(f"bad move line {line!r}")
        except ValueError as exc:
            if isinstance(exc, GaussSyntaxError):
                raise
            raise GaussSyntaxError(f"bad move line {line!r}") from None
    return out
