"""Linear chord diagrams and partial diagrams on a segment backbone.

A diagram on vertices 1..N (drawn on a line, in order) matches some vertices
in pairs by chords; a full diagram matches every vertex.  The boundary-cycle
count of a full diagram with n chords is the number of cycles of tau o iota,
where iota is the chord involution and tau is the cyclic successor on the
2n vertices, and the genus g satisfies n + 1 - 2g = #cycles.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

Pair = tuple[int, int]

_UNMATCHED = -1


def _cycle_count(partners: Sequence[int]) -> int:
    # cycles of v -> (partners[v] + 1) mod L on 0-indexed vertices
    length = len(partners)
    if length == 0:
        return 1  # the empty diagram bounds a single face
    seen = bytearray(length)
    cycles = 0
    for start in range(length):
        if seen[start]:
            continue
        cycles += 1
        v = start
        while not seen[v]:
            seen[v] = 1
            w = partners[v] + 1
            v = w if w < length else 0
    return cycles


def _validate_partners(partners: Sequence[int], allow_unmatched: bool) -> None:
    length = len(partners)
    for v, p in enumerate(partners):
        if p == _UNMATCHED:
            if allow_unmatched:
                continue
            raise ValueError(f"vertex {v + 1} is unmatched in a full chord diagram")
        if not 0 <= p < length:
            raise ValueError(f"partner of vertex {v + 1} out of range")
        if p == v:
            raise ValueError(f"vertex {v + 1} is paired with itself")
        if partners[p] != v:
            raise ValueError(
                f"pairing is not an involution: {v + 1} -> {p + 1} -> {partners[p] + 1}"
            )


def _pairs_of(partners: Sequence[int]) -> list[Pair]:
    # 1-indexed chords (i, j) with i < j, ascending in i
    return [(v + 1, p + 1) for v, p in enumerate(partners) if p > v]


def _stacks_of_pairs(pairs: Iterable[Pair]) -> list[list[Pair]]:
    chord_set = set(pairs)
    out = []
    for i, j in sorted(chord_set):
        if (i - 1, j + 1) in chord_set:
            continue  # not the outermost chord of its stack
        stack = [(i, j)]
        while (i + 1, j - 1) in chord_set and i + 1 < j - 1:
            i, j = i + 1, j - 1
            stack.append((i, j))
        out.append(stack)
    return out


class ChordDiagram:
    """A full linear chord diagram: n chords on 2n ordered vertices."""

    __slots__ = ("partners",)

    partners: tuple[int, ...]

    def __init__(self, partners: Iterable[int]):
        p = tuple(partners)
        if len(p) % 2:
            raise ValueError("a full chord diagram has an even number of vertices")
        _validate_partners(p, allow_unmatched=False)
        object.__setattr__(self, "partners", p)

    def __setattr__(self, name, value):
        raise AttributeError("ChordDiagram is immutable")

    # -- constructors

    @classmethod
    def empty(cls) -> "ChordDiagram":
        return cls(())

    @classmethod
    def from_pairs(cls, pairs: Iterable[Pair]) -> "ChordDiagram":
        pairs = list(pairs)
        partners = [_UNMATCHED] * (2 * len(pairs))
        for i, j in pairs:
            for v in (i, j):
                if not 1 <= v <= len(partners):
                    raise ValueError(f"vertex {v} out of range for {len(pairs)} chords")
            if partners[i - 1] != _UNMATCHED or partners[j - 1] != _UNMATCHED:
                raise ValueError(f"vertex reused by chord ({i}, {j})")
            partners[i - 1] = j - 1
            partners[j - 1] = i - 1
        return cls(partners)

    @classmethod
    def from_text(cls, text: str) -> "ChordDiagram":
        d = PartialDiagram.from_text(text)
        if d.unmatched_count():
            raise ValueError("text encodes a partial diagram, not a full one")
        return cls(d.partners)

    # -- queries

    @property
    def n(self) -> int:
        """Number of chords."""
        return len(self.partners) // 2

    def pairs(self) -> list[Pair]:
        return _pairs_of(self.partners)

    def boundary_cycles(self) -> int:
        return _cycle_count(self.partners)

    def genus(self) -> int:
        r = self.boundary_cycles()
        num = self.n + 1 - r
        if num % 2:
            raise ArithmeticError(f"parity violation: n={self.n}, cycles={r}")
        return num // 2

    def one_chord_count(self) -> int:
        return sum(1 for v, p in enumerate(self.partners) if p == v + 1)

    def stacks(self) -> list[list[Pair]]:
        return _stacks_of_pairs(self.pairs())

    def is_shape(self) -> bool:
        """True when every stack has a single chord."""
        return all(len(s) == 1 for s in self.stacks())

    def to_partial(self) -> "PartialDiagram":
        return PartialDiagram(self.partners)

    def project_shape(self) -> "ChordDiagram":
        return self.to_partial().project_shape()

    def to_text(self) -> str:
        return self.to_partial().to_text()

    def __eq__(self, other) -> bool:
        return isinstance(other, ChordDiagram) and self.partners == other.partners

    def __hash__(self) -> int:
        return hash(("ChordDiagram", self.partners))

    def __repr__(self) -> str:
        return f"ChordDiagram.from_text({self.to_text()!r})"


class PartialDiagram:
    """A partial matching of n ordered vertices; unmatched vertices allowed."""

    __slots__ = ("partners",)

    partners: tuple[int, ...]

    def __init__(self, partners: Iterable[int]):
        p = tuple(partners)
        _validate_partners(p, allow_unmatched=True)
        object.__setattr__(self, "partners", p)

    def __setattr__(self, name, value):
        raise AttributeError("PartialDiagram is immutable")

    @classmethod
    def empty(cls, n: int = 0) -> "PartialDiagram":
        return cls((_UNMATCHED,) * n)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Pair]) -> "PartialDiagram":
        partners = [_UNMATCHED] * n
        for i, j in pairs:
            for v in (i, j):
                if not 1 <= v <= n:
                    raise ValueError(f"vertex {v} out of range 1..{n}")
            if i == j:
                raise ValueError(f"chord ({i}, {j}) pairs a vertex with itself")
            if partners[i - 1] != _UNMATCHED or partners[j - 1] != _UNMATCHED:
                raise ValueError(f"vertex reused by chord ({i}, {j})")
            partners[i - 1] = j - 1
            partners[j - 1] = i - 1
        return cls(partners)

    @classmethod
    def from_text(cls, text: str) -> "PartialDiagram":
        """Parse the canonical encoding 'n;p(1),p(2),...' with 0 for unmatched."""
        head, sep, body = text.partition(";")
        if not sep:
            raise ValueError("diagram text needs the form 'n;p(1),p(2),...'")
        try:
            n = int(head)
        except ValueError:
            raise ValueError(f"bad vertex count {head!r}") from None
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        entries = [s.strip() for s in body.split(",")] if body.strip() else []
        if n == 0 and not entries:
            return cls(())
        if len(entries) != n:
            raise ValueError(f"expected {n} partner entries, got {len(entries)}")
        try:
            values = [int(s) for s in entries]
        except ValueError:
            raise ValueError("partner entries must be integers") from None
        partners = [v - 1 if v else _UNMATCHED for v in values]
        return cls(partners)

    # -- queries

    @property
    def n(self) -> int:
        """Number of backbone vertices."""
        return len(self.partners)

    def chord_count(self) -> int:
        return sum(1 for v, p in enumerate(self.partners) if p > v)

    def unmatched_count(self) -> int:
        return sum(1 for p in self.partners if p == _UNMATCHED)

    def pairs(self) -> list[Pair]:
        return _pairs_of(self.partners)

    def matched_subdiagram(self) -> ChordDiagram:
        """Delete unmatched vertices and renumber the rest."""
        kept = [v for v, p in enumerate(self.partners) if p != _UNMATCHED]
        rank = {v: i for i, v in enumerate(kept)}
        return ChordDiagram(tuple(rank[self.partners[v]] for v in kept))

    def genus(self) -> int:
        return self.matched_subdiagram().genus()

    def boundary_cycles(self) -> int:
        return self.matched_subdiagram().boundary_cycles()

    def one_chord_count(self) -> int:
        return sum(1 for v, p in enumerate(self.partners) if p == v + 1)

    def stacks(self) -> list[list[Pair]]:
        return _stacks_of_pairs(self.pairs())

    def min_stack_size(self) -> int | None:
        """Size of the smallest stack, None when there are no chords."""
        sizes = [len(s) for s in self.stacks()]
        return min(sizes) if sizes else None

    def is_macromolecular(self, sigma: int) -> bool:
        """No chord on adjacent vertices, and every stack holds >= sigma chords."""
        if sigma < 1:
            raise ValueError("sigma must be >= 1")
        if self.one_chord_count():
            return False
        smallest = self.min_stack_size()
        return smallest is None or smallest >= sigma

    def project_shape(self) -> ChordDiagram:
        """Delete unmatched vertices and collapse every stack to one chord.

        Collapsing can bring previously separated chords next to each other,
        so the pass repeats until the result is a shape.
        """
        pairs = self.pairs()
        while True:
            # renumber onto the matched vertices only
            verts = sorted(v for pair in pairs for v in pair)
            rank = {v: i + 1 for i, v in enumerate(verts)}
            pairs = [(rank[i], rank[j]) for i, j in pairs]
            groups = _stacks_of_pairs(pairs)
            if all(len(s) == 1 for s in groups):
                return ChordDiagram.from_pairs(sorted(pairs))
            pairs = [group[0] for group in groups]

    def to_text(self) -> str:
        body = ",".join(str(p + 1 if p != _UNMATCHED else 0) for p in self.partners)
        return f"{self.n};{body}"

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialDiagram) and self.partners == other.partners

    def __hash__(self) -> int:
        return hash(("PartialDiagram", self.partners))

    def __repr__(self) -> str:
        return f"PartialDiagram.from_text({self.to_text()!r})"
