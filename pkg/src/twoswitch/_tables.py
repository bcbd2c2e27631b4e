"""Lookup tables over the 64 edge patterns of a labeled 4-vertex set.

A quadruple ``a < b < c < d`` is encoded by six bits in the pair order
``ab, ac, ad, bc, bd, cd`` (bit 0 is ``ab``).
"""

from itertools import permutations

PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

# Order-4 classes, named after the usual drawing of the eleven graphs.
CLASS_NAMES = (
    "K4bar",  # empty
    "D4bar",  # single edge
    "2K2",
    "U4bar",  # P3 plus an isolated vertex
    "P4",
    "S4",  # claw
    "S4bar",  # triangle plus an isolated vertex
    "U4",  # paw
    "C4",
    "D4",  # diamond
    "K4",
)

_SIGNATURES = {
    (0, (0, 0, 0, 0)): "K4bar",
    (1, (1, 1, 0, 0)): "D4bar",
    (2, (1, 1, 1, 1)): "2K2",
    (2, (2, 1, 1, 0)): "U4bar",
    (3, (2, 2, 1, 1)): "P4",
    (3, (3, 1, 1, 1)): "S4",
    (3, (2, 2, 2, 0)): "S4bar",
    (4, (3, 2, 2, 1)): "U4",
    (4, (2, 2, 2, 2)): "C4",
    (5, (3, 3, 2, 2)): "D4",
    (6, (3, 3, 3, 3)): "K4",
}


def _pair_bit(x, y):
    if x > y:
        x, y = y, x
    return 1 << PAIRS.index((x, y))


def _classify(pattern):
    deg = [0, 0, 0, 0]
    edges = 0
    for k, (x, y) in enumerate(PAIRS):
        if (pattern >> k) & 1:
            deg[x] += 1
            deg[y] += 1
            edges += 1
    return CLASS_NAMES.index(_SIGNATURES[(edges, tuple(sorted(deg, reverse=True)))])


def _hamiltonian_paths(pattern):
    count = 0
    for p in permutations(range(4)):
        if p[0] > p[3]:
            continue
        if all(pattern & _pair_bit(p[i], p[i + 1]) for i in range(3)):
            count += 1
    return count


def _four_cycles(pattern):
    count = 0
    for cyc in ((0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3)):
        if all(pattern & _pair_bit(cyc[i], cyc[(i + 1) % 4]) for i in range(4)):
            count += 1
    return count


CLASS_OF = tuple(_classify(p) for p in range(64))
PATHS_OF = tuple(_hamiltonian_paths(p) for p in range(64))
CYCLES_OF = tuple(_four_cycles(p) for p in range(64))

_ACTIVE_CLASSES = {CLASS_NAMES.index(c) for c in ("2K2", "P4", "C4")}
IS_ACTIVE_PATTERN = tuple(int(CLASS_OF[p] in _ACTIVE_CLASSES) for p in range(64))
