"""The integer tables f_n and g_n, the Möbius function and their cross-checks.

``f_n`` and ``g_n`` are maps on ``{2, ..., n}`` fixed by divisor-class sums:
for every ``2 <= r <= n`` the values at the multiples of ``r`` add up to -1
(for ``f_n``), or to 0 for ``r < n`` with ``g_n(n) = 1`` (for ``g_n``).
Both are solved top-down, since the class of ``r`` only involves ``i >= r``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GaussCoverError

__all__ = [
    "CoefficientTable",
    "TableReport",
    "mobius",
    "mertens",
    "f_table",
    "g_table",
    "verify_tables",
    "format_table",
]


@dataclass(frozen=True)
class CoefficientTable:
    n: int
    values: dict[int, int]

    def __post_init__(self):
        if set(self.values) != set(range(2, self.n + 1)):
            raise GaussCoverError(f"table for n={self.n} must be defined exactly on 2..{self.n}")

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    @property
    def support(self) -> list[int]:
        return [i for i in range(2, self.n + 1) if self.values[i]]

    @property
    def weight(self) -> int:
        """Sum of |value| over the support."""
        return sum(abs(v) for v in self.values.values())

    def class_sum(self, r: int) -> int:
        """Sum of the values at the multiples of r in 2..n."""
        return sum(self.values[i] for i in range(r, self.n + 1, r))


def mobius(n: int) -> int:
    """Möbius function by trial division."""
    if n < 1:
        raise GaussCoverError(f"mobius needs n >= 1, got {n}")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def mertens(n: int) -> int:
    return sum(mobius(k) for k in range(1, n + 1))


def _solve(n: int, top: int, rest: int) -> CoefficientTable:
    vals: dict[int, int] = {}
    for r in range(n, 1, -1):
        target = top if r == n else rest
        vals[r] = target - sum(vals[i] for i in range(2 * r, n + 1, r))
    return CoefficientTable(n, dict(sorted(vals.items())))


def f_table(n: int) -> CoefficientTable:
    """The table whose class sums are all -1."""
    if n < 2:
        raise GaussCoverError(f"f_table needs n >= 2, got {n}")
    return _solve(n, -1, -1)


def g_table(n: int) -> CoefficientTable:
    """The table with g(n) = 1 and all other class sums 0."""
    if n < 2:
        raise GaussCoverError(f"g_table needs n >= 2, got {n}")
    return _solve(n, 1, 0)


@dataclass
class TableReport:
    n_max: int
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return f"ok: {self.checked} checks passed for 2 <= n <= {self.n_max}"
        return f"FAILED: {self.violations[0]} ({len(self.violations)} violation(s))"


def verify_tables(n_max: int) -> TableReport:
    """Check both tables against their defining sums, the Möbius closed form
    of g_n, and the Mertens closed form of f_n, for every 2 <= n <= n_max.

    The Mertens form f_n(r) = -M(n // r) is a derived identity (Möbius
    inversion of the defining sums), used here only as a cross-check.
    """
    rep = TableReport(n_max)
    mu = [0] + [mobius(k) for k in range(1, n_max + 1)]
    mert = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        mert[k] = mert[k - 1] + mu[k]

    def check(cond: bool, msg: str):
        rep.checked += 1
        if not cond:
            rep.violations.append(msg)

    for n in range(2, n_max + 1):
        f, g = f_table(n), g_table(n)
        for r in range(2, n + 1):
            check(f.class_sum(r) == -1, f"f_{n}: class sum at r={r} is {f.class_sum(r)}")
            want = 1 if r == n else 0
            check(g.class_sum(r) == want, f"g_{n}: class sum at r={r} is {g.class_sum(r)}")
            closed = mu[n // r] if n % r == 0 else 0
            check(g[r] == closed, f"g_{n}({r}) = {g[r]} but mobius form gives {closed}")
            check(f[r] == -mert[n // r], f"f_{n}({r}) = {f[r]} but -M({n // r}) = {-mert[n // r]}")
    return rep


def format_table(t: CoefficientTable) -> str:
    lines = [f"{i} {v}" for i, v in sorted(t.values.items())]
    lines.append(" ".join(["support", *map(str, t.support)]))
    return "\n".join(lines) + "\n"
