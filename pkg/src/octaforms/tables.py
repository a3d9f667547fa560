"""Declarative classification tables and their verification.

Each table is a line-oriented data file; a record is either

    prefix=2,2,2,3 slot=5..8!7 expect=tight:2
    prefix=2,2,2,3 expect=Z:8,11

The prefix lists fixed coefficients.  An optional slot contributes one
more coefficient ranging over lo..hi minus the exclusions after "!".
The expectation is either tight universality at the given floor n, or the
exact set Z of values >= the first coefficient that the form misses (the
list may be empty).  Blank lines and lines starting with "#" are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .escalation import DEFAULT_BOUND, EscalationTrace
from .polygonal import build_sieve, coeff_vector, insert_sorted

__all__ = [
    "Slot",
    "TableRow",
    "TableReport",
    "ZReport",
    "FamilyRule",
    "parse_table",
    "load_table",
    "bundled_table_path",
    "expand_row",
    "table_census",
    "verify_table",
    "verify_z_row",
]

TABLE_FILES = {1: "table1.txt", 2: "table2.txt", 3: "table3.txt", 4: "table4.txt"}


@dataclass(frozen=True)
class Slot:
    lo: int
    hi: int
    excluded: frozenset[int]

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty slot range {self.lo}..{self.hi}")
        if not self.excluded <= set(range(self.lo, self.hi + 1)):
            raise ValueError("slot exclusions outside the range")

    def values(self) -> list[int]:
        return [g for g in range(self.lo, self.hi + 1) if g not in self.excluded]


@dataclass(frozen=True)
class TableRow:
    prefix: tuple[int, ...]
    slot: Slot | None
    expect_kind: str  # "tight" | "Z"
    expect_n: int | None = None
    expect_z: tuple[int, ...] | None = None


@dataclass(frozen=True)
class TableReport:
    """Set comparison between a table expansion and an escalation's new forms."""

    equal: bool
    only_in_table: tuple[tuple[int, ...], ...]
    only_in_trace: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ZReport:
    row: TableRow
    ok: bool
    expected: tuple[int, ...]
    actual: tuple[int, ...]


@dataclass(frozen=True)
class FamilyRule:
    """The two coefficient families that stay tight for every floor n >= n_min.

    doubled(n) repeats the floor and runs to 2n-1; run(n) is the straight
    run from n to 2n.  Both have length n+1.
    """

    n_min: int = 5

    def doubled(self, n: int) -> tuple[int, ...]:
        if n < self.n_min:
            raise ValueError(f"family defined for n >= {self.n_min}")
        return (n,) + tuple(range(n, 2 * n))

    def run(self, n: int) -> tuple[int, ...]:
        if n < self.n_min:
            raise ValueError(f"family defined for n >= {self.n_min}")
        return tuple(range(n, 2 * n + 1))

    def pair(self, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.doubled(n), self.run(n))


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(","))


def parse_table(text: str) -> list[TableRow]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = {}
        for tok in line.split():
            if "=" not in tok:
                raise ValueError(f"line {lineno}: malformed token {tok!r}")
            key, _, val = tok.partition("=")
            if key in fields:
                raise ValueError(f"line {lineno}: duplicate field {key!r}")
            fields[key] = val
        try:
            prefix = coeff_vector(_parse_ints(fields.pop("prefix")))
            slot = None
            if "slot" in fields:
                slot_text = fields.pop("slot")
                rng, _, excl = slot_text.partition("!")
                lo, _, hi = rng.partition("..")
                slot = Slot(int(lo), int(hi), frozenset(_parse_ints(excl)))
            expect = fields.pop("expect")
            if fields:
                raise ValueError(f"unknown fields {sorted(fields)}")
            kind, _, payload = expect.partition(":")
            if kind == "tight":
                rows.append(TableRow(prefix, slot, "tight", expect_n=int(payload)))
            elif kind == "Z":
                if slot is not None:
                    raise ValueError("Z rows take no slot")
                rows.append(TableRow(prefix, slot, "Z", expect_z=_parse_ints(payload)))
            else:
                raise ValueError(f"unknown expectation kind {kind!r}")
        except ValueError as e:
            raise ValueError(f"line {lineno}: {e}") from None
    return rows


def bundled_table_path(table: int):
    if table not in TABLE_FILES:
        raise ValueError(f"no bundled table {table}")
    return resources.files("octaforms").joinpath("data", TABLE_FILES[table])


def load_table(source) -> list[TableRow]:
    """Parse a table from a path, or an int naming a bundled table 1..4."""
    if isinstance(source, int):
        return parse_table(bundled_table_path(source).read_text())
    with open(source, encoding="utf-8") as fh:
        return parse_table(fh.read())


def expand_row(row: TableRow) -> list[tuple[int, ...]]:
    """All coefficient vectors described by the row, sorted and deduplicated."""
    if row.slot is None:
        return [row.prefix]
    return sorted({insert_sorted(row.prefix, g) for g in row.slot.values()})


def table_census(rows) -> int:
    """Number of distinct coefficient vectors across all row expansions."""
    out: set[tuple[int, ...]] = set()
    for row in rows:
        out.update(expand_row(row))
    return len(out)


def verify_table(rows, n: int, trace: EscalationTrace) -> TableReport:
    """Compare a table expansion with the new tight forms of a trace."""
    if trace.n != n:
        raise ValueError(f"trace is for n={trace.n}, not n={n}")
    expanded: set[tuple[int, ...]] = set()
    for row in rows:
        if row.expect_kind != "tight":
            raise ValueError("verify_table expects tight-universality rows")
        if row.expect_n != n:
            raise ValueError(f"row {row.prefix} declares n={row.expect_n}, not {n}")
        expanded.update(expand_row(row))
    found: set[tuple[int, ...]] = set()
    for rec in trace.depths:
        found.update(rec.NU)
    return TableReport(
        equal=expanded == found,
        only_in_table=tuple(sorted(expanded - found)),
        only_in_trace=tuple(sorted(found - expanded)),
    )


def verify_z_row(row: TableRow, bound: int = DEFAULT_BOUND) -> ZReport:
    """Check that the form misses exactly Z among the values >= its first coefficient."""
    if row.expect_kind != "Z":
        raise ValueError("verify_z_row expects a Z row")
    sieve = build_sieve(row.prefix, bound)
    actual = tuple(sieve.missing_in_range(row.prefix[0], bound))
    return ZReport(row=row, ok=actual == row.expect_z, expected=row.expect_z, actual=actual)
