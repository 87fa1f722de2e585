"""Exhaustive enumeration of diagrams, the ground truth for every formula.

Counts here are produced by generating every diagram of a class and
classifying it one by one; nothing from the generating-function side is
consulted.  Enumeration is deterministic (vertices are paired in canonical
order), so two runs build identical tables, and the full-diagram stream can
be partitioned by the partner of vertex 1 with counts summed per part.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .diagrams import ChordDiagram, PartialDiagram, _cycle_count

DEFAULT_FULL_CAP = 9
DEFAULT_PARTIAL_CAP = 14


def _resolve_cap(n: int, cap: int | None, default: int, what: str, hint: str) -> None:
    limit = default if cap is None else cap
    if n > limit:
        raise ValueError(
            f"{what} enumeration at n={n} exceeds the safety cap {limit}; "
            f"pass cap={n} explicitly{hint} if you really want the full sweep"
        )


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! = (2n)!/(2^n n!), the number of full diagrams with n chords."""
    out = 1
    for k in range(3, 2 * n, 2):
        out *= k
    return out


@dataclass(frozen=True)
class GenusTable:
    """Counts of diagrams keyed by genus (and friends).

    Keys of ``entries`` are (g, n) or, when ``with_onechords`` is set,
    (g, n, m).  Missing keys mean a count of zero unless the producer chose
    to store explicit zeros.
    """

    class_tag: str  # "full" | "shape" | "macromolecular"
    n_max: int
    entries: dict[tuple[int, ...], int]
    with_onechords: bool = False
    sigma: int | None = None
    source: str = "enumeration"

    def count(self, g: int, n: int, m: int | None = None) -> int:
        key = (g, n) if m is None else (g, n, m)
        if m is None and self.with_onechords:
            return sum(v for k, v in self.entries.items() if k[0] == g and k[1] == n)
        return self.entries.get(key, 0)

    def total(self, n: int) -> int:
        return sum(v for k, v in self.entries.items() if k[1] == n)

    def max_genus(self) -> int:
        return max((k[0] for k, v in self.entries.items() if v), default=0)

    def genus_marginal(self) -> "GenusTable":
        """Collapse the 1-chord index, keeping (g, n) counts."""
        if not self.with_onechords:
            return self
        out: dict[tuple[int, ...], int] = {}
        for (g, n, _m), v in self.entries.items():
            key = (g, n)
            out[key] = out.get(key, 0) + v
        return GenusTable(self.class_tag, self.n_max, out, False, self.sigma, self.source)

    def merge(self, other: "GenusTable") -> "GenusTable":
        if (self.class_tag, self.with_onechords, self.sigma) != (
            other.class_tag,
            other.with_onechords,
            other.sigma,
        ):
            raise ValueError("cannot merge tables of different classes")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return GenusTable(
            self.class_tag,
            max(self.n_max, other.n_max),
            out,
            self.with_onechords,
            self.sigma,
            self.source,
        )

    def sorted_items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.entries.items())


# ---------------------------------------------------------------------------
# raw generators; they yield a shared mutable partner list for speed
# ---------------------------------------------------------------------------


def _full_matchings(length: int, first_partner: int | None = None) -> Iterator[list[int]]:
    partner = [-1] * length

    def rec(i: int) -> Iterator[list[int]]:
        while i < length and partner[i] >= 0:
            i += 1
        if i == length:
            yield partner
            return
        for j in range(i + 1, length):
            if partner[j] < 0:
                partner[i] = j
                partner[j] = i
                yield from rec(i + 1)
                partner[j] = -1
        partner[i] = -1

    if length == 0:
        yield partner
        return
    if first_partner is not None:
        if not 2 <= first_partner <= length:
            raise ValueError(f"first_partner must lie in 2..{length}")
        j = first_partner - 1
        partner[0] = j
        partner[j] = 0
        yield from rec(1)
        return
    yield from rec(0)


def _partial_matchings(length: int) -> Iterator[list[int]]:
    partner = [-1] * length

    def rec(i: int) -> Iterator[list[int]]:
        while i < length and partner[i] >= 0:
            i += 1
        if i == length:
            yield partner
            return
        yield from rec(i + 1)  # leave vertex i unmatched
        for j in range(i + 1, length):
            if partner[j] < 0:
                partner[i] = j
                partner[j] = i
                yield from rec(i + 1)
                partner[j] = -1
        partner[i] = -1

    yield from rec(0)


def _onechords(partner: Sequence[int]) -> int:
    return sum(1 for v, p in enumerate(partner) if p == v + 1)


def _min_stack_size(partner: Sequence[int]) -> int | None:
    # smallest parallelism class among the chords; None without chords
    length = len(partner)
    best: int | None = None
    for i, j in enumerate(partner):
        if j <= i:
            continue
        # head of its stack iff chord (i-1, j+1) is absent
        if i >= 1 and j + 1 < length and partner[i - 1] == j + 1:
            continue
        size = 1
        a, b = i, j
        while a + 1 < b - 1 and partner[a + 1] == b - 1:
            size += 1
            a += 1
            b -= 1
        if best is None or size < best:
            best = size
            if best == 1:
                break
    return best


def _is_shape_partner(partner: Sequence[int]) -> bool:
    for i, j in enumerate(partner):
        if j <= i:
            continue
        if i + 1 < j - 1 and partner[i + 1] == j - 1:
            return False
    return True


def _reduced_genus(partner: Sequence[int]) -> int:
    kept = [v for v, p in enumerate(partner) if p >= 0]
    k = len(kept)
    if k == 0:
        return 0
    pos = {}
    for idx, v in enumerate(kept):
        pos[v] = idx
    reduced = [pos[partner[v]] for v in kept]
    r = _cycle_count(reduced)
    return (k // 2 + 1 - r) // 2


# ---------------------------------------------------------------------------
# public streams
# ---------------------------------------------------------------------------


def enumerate_chord_diagrams(
    n: int, *, cap: int | None = None, first_partner: int | None = None
) -> Iterator[ChordDiagram]:
    """Every full diagram with n chords, each exactly once, in canonical order.

    ``first_partner`` restricts the stream to diagrams pairing vertex 1 with
    that vertex; the full stream is the disjoint union over 2..2n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    _resolve_cap(n, cap, DEFAULT_FULL_CAP, "full diagram", "")
    for partner in _full_matchings(2 * n, first_partner):
        yield ChordDiagram(tuple(partner))


def enumerate_partial_diagrams(n: int, *, cap: int | None = None) -> Iterator[PartialDiagram]:
    """Every partial diagram on n backbone vertices, each exactly once."""
    if n < 0:
        raise ValueError("n must be >= 0")
    _resolve_cap(n, cap, DEFAULT_PARTIAL_CAP, "partial diagram", "")
    for partner in _partial_matchings(n):
        yield PartialDiagram(tuple(partner))


# ---------------------------------------------------------------------------
# counting tables
# ---------------------------------------------------------------------------


def count_by_genus(n_max: int, *, cap: int | None = None) -> GenusTable:
    """c_g(n) for all n <= n_max by exhaustive genus evaluation."""
    _resolve_cap(n_max, cap, DEFAULT_FULL_CAP, "full diagram", "")
    entries: dict[tuple[int, ...], int] = {}
    for n in range(n_max + 1):
        for partner in _full_matchings(2 * n):
            r = _cycle_count(partner)
            g = (n + 1 - r) // 2
            key = (g, n)
            entries[key] = entries.get(key, 0) + 1
    return GenusTable("full", n_max, entries)


def count_by_genus_onechords(n_max: int, *, cap: int | None = None) -> GenusTable:
    """Joint counts c_g(n, m) over full diagrams, m the 1-chord number."""
    _resolve_cap(n_max, cap, DEFAULT_FULL_CAP, "full diagram", "")
    entries: dict[tuple[int, ...], int] = {}
    for n in range(n_max + 1):
        for partner in _full_matchings(2 * n):
            m = 0
            for v, p in enumerate(partner):
                if p == v + 1:
                    m += 1
            r = _cycle_count(partner)
            g = (n + 1 - r) // 2
            key = (g, n, m)
            entries[key] = entries.get(key, 0) + 1
    return GenusTable("full", n_max, entries, with_onechords=True)


def count_shapes(n_max: int, *, cap: int | None = None) -> GenusTable:
    """Joint counts s_g(n, m) over shapes (every stack a single chord)."""
    _resolve_cap(n_max, cap, DEFAULT_FULL_CAP, "full diagram", "")
    entries: dict[tuple[int, ...], int] = {}
    for n in range(n_max + 1):
        for partner in _full_matchings(2 * n):
            if not _is_shape_partner(partner):
                continue
            m = _onechords(partner)
            r = _cycle_count(partner)
            g = (n + 1 - r) // 2
            key = (g, n, m)
            entries[key] = entries.get(key, 0) + 1
    return GenusTable("shape", n_max, entries, with_onechords=True)


def count_macromolecular(n_max: int, sigma: int, *, cap: int | None = None) -> GenusTable:
    """d_{g,sigma}(n): partial diagrams, no 1-chords, all stacks >= sigma."""
    if sigma < 1:
        raise ValueError("sigma must be >= 1")
    return count_macromolecular_multi(n_max, (sigma,), cap=cap)[sigma]


def count_macromolecular_multi(
    n_max: int, sigmas: Iterable[int], *, cap: int | None = None
) -> dict[int, GenusTable]:
    """One enumeration pass classifying for several sigma values at once."""
    sig = sorted(set(sigmas))
    if not sig or sig[0] < 1:
        raise ValueError("sigma values must be >= 1")
    _resolve_cap(n_max, cap, DEFAULT_PARTIAL_CAP, "partial diagram", "")
    tables: dict[int, dict[tuple[int, ...], int]] = {s: {} for s in sig}
    for n in range(n_max + 1):
        for partner in _partial_matchings(n):
            has_one_chord = False
            for v, p in enumerate(partner):
                if p == v + 1:
                    has_one_chord = True
                    break
            if has_one_chord:
                continue
            smallest = _min_stack_size(partner)
            g = _reduced_genus(partner)
            key = (g, n)
            for s in sig:
                if smallest is None or smallest >= s:
                    t = tables[s]
                    t[key] = t.get(key, 0) + 1
    return {
        s: GenusTable("macromolecular", n_max, tables[s], sigma=s) for s in sig
    }
