"""A first look at chord diagrams and their genus.

A chord diagram on n chords matches 2n points on a line in pairs.  Tracing
the boundary of the thickened diagram gives some number r of closed cycles,
and n + 1 - r is always even; half of it is the genus of the surface the
diagram fills.  This script builds a few diagrams by hand and then checks a
hand count against a full enumeration at n = 3.
"""

from chordgenus import ChordDiagram


def matchings(points):
    """Yield all ways to match the given points in pairs."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for k, other in enumerate(rest):
        for tail in matchings(rest[:k] + rest[k + 1 :]):
            yield [(first, other)] + tail


def describe(label, diagram):
    print(f"{label}: pairs {diagram.pairs()}")
    print(f"  boundary cycles {diagram.boundary_cycles()}, genus {diagram.genus()}")
    print(f"  1-chords {diagram.one_chord_count()}, stacks {diagram.stacks()}")
    print(f"  shape? {diagram.is_shape()}, text form {diagram.to_text()!r}")


def main():
    print("two chords, nested: planar, so genus 0")
    describe("nested", ChordDiagram.from_pairs([(1, 4), (2, 3)]))

    print()
    print("two chords, crossing: needs a torus, so genus 1")
    describe("crossing", ChordDiagram.from_pairs([(1, 3), (2, 4)]))

    print()
    print("a stack of two parallel chords collapses to one chord in the shape")
    stacked = ChordDiagram.from_pairs([(1, 6), (2, 5), (3, 4)])
    describe("stacked", stacked)
    describe("its shape", stacked.project_shape())

    print()
    print("all 15 diagrams on 3 chords, tallied by genus:")
    tally = {}
    for pairs in matchings(list(range(1, 7))):
        g = ChordDiagram.from_pairs(pairs).genus()
        tally[g] = tally.get(g, 0) + 1
    for g in sorted(tally):
        print(f"  genus {g}: {tally[g]} diagrams")
    assert tally == {0: 5, 1: 10}
    print("the genus-0 count is the Catalan number C_3 = 5, as it must be")


if __name__ == "__main__":
    main()
