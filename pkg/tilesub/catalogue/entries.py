# Built-in tilings. Each entry gives its faces either as boundary words
# ("words") or as vertex cycles ("cycles"), plus the record the tests check.


def _torus_grid(n: int) -> list:
    words = []
    for y in range(n):
        for x in range(n):
            right, up = (x + 1) % n, (y + 1) % n
            words.append(f"h{x}{y} v{right}{y} h{x}{up}' v{x}{y}'")
    return words


# Two hexagonal-ish patches of six squares; each leaves a two-sided slot
# (s1/s2 and s3/s4) that the Q13 tile closes up.
_PATCH = [
    "r1 r2 r3 s1'",
    "s2 r6' r5' r4'",
    "r3' r7 r8 r6",
    "r4 r10' r9' r1'",
    "r7' r2' r9 r11'",
    "r5 r8' r11 r10",
]


def _relabel(words: list, mapping: dict) -> list:
    out = []
    for word in words:
        tokens = []
        for token in word.split():
            name, prime = (token[:-1], "'") if token.endswith("'") else (token, "")
            if name in mapping:
                new = mapping[name]
                # a mapped name may itself carry a reversal
                flipped = new.endswith("'") != bool(prime)
                tokens.append(new.rstrip("'") + ("'" if flipped else ""))
            else:
                tokens.append(token)
        out.append(" ".join(tokens))
    return out


_LEFT_PATCH = _relabel(
    _PATCH,
    {**{f"r{i}": f"l{i}" for i in range(1, 12)}, "s1": "s3", "s2": "s4"},
)


def _icosahedron() -> list:
    # apex 0, upper ring 1..5, lower ring 6..10, apex 11
    cycles = []
    for k in range(5):
        u, u1 = 1 + k, 1 + (k + 1) % 5
        low, low1 = 6 + k, 6 + (k + 1) % 5
        cycles += [[0, u, u1], [u, low, u1], [low, low1, u1], [11, low1, low]]
    return cycles


ENTRIES = {
    "cube": {
        "cycles": [[0, 2, 3, 1], [4, 5, 7, 6], [0, 1, 5, 4], [2, 6, 7, 3], [0, 4, 6, 2], [1, 3, 7, 5]],
        "expected": {
            "surface": "S2",
            "faces": 6,
            "face_classes": {"Q": 6},
            "subdivisible": True,
            "notes": "sphere by six non-degenerate squares",
        },
    },
    "torus_2x2": {
        "words": _torus_grid(2),
        "expected": {
            "surface": "T2^1",
            "faces": 4,
            "face_classes": {"Q": 4},
            "subdivisible": True,
            "notes": "2x2 square grid on the torus; bipartite skeleton",
        },
    },
    "torus_3x3": {
        "words": _torus_grid(3),
        "expected": {
            "surface": "T2^1",
            "faces": 9,
            "face_classes": {"Q": 9},
            "subdivisible": False,
            "notes": "3x3 grid; odd cycles in the skeleton block subdivision",
        },
    },
    "sphere_q13": {
        "words": _PATCH + _LEFT_PATCH + ["s1 s2' s3 s4'"],
        "expected": {
            "surface": "S2",
            "faces": 13,
            "face_classes": {"Q": 12, "Q13": 1},
            "subdivisible": True,
            "notes": "one Q13 tile closing two six-square patches",
        },
    },
    "torus_qq": {
        "words": ["h0 v1 h1' v0'", "h1 v0 h0' v1'"],
        "expected": {
            "surface": "T2^1",
            "faces": 2,
            "face_classes": {"Q13_24": 2},
            "subdivisible": True,
            "notes": "two Q13_24 tiles; two vertices of degree 4",
        },
    },
    "klein_K": {
        "words": ["a a b b"],
        "expected": {
            "surface": "P2^2",
            "faces": 1,
            "face_classes": {"K": 1},
            "subdivisible": True,
            "notes": "single K tile on the Klein bottle",
        },
    },
    "p2_from_2gon": {
        "words": _relabel(_PATCH, {"s1": "c", "s2": "c'"}),
        "expected": {
            "surface": "P2^1",
            "faces": 6,
            "face_classes": {"Q": 4, "Q12": 2},
            "subdivisible": True,
            "notes": "antipodal quotient of a sphere tiling; the two degenerate tiles are computed",
        },
    },
    "r_pair": {
        "words": ["a a b c", "d d c b"],
        "expected": {
            "surface": "P2^2",
            "faces": 2,
            "face_classes": {"R": 2},
            "subdivisible": True,
            "notes": "two R tiles; each free side meets the other tile crosswise, so both vertices have degree 4",
        },
    },
    "r2_pair": {
        "words": ["a a b c", "d d b' c"],
        "expected": {
            "surface": "P2^3",
            "faces": 2,
            "face_classes": {"R2": 2},
            "subdivisible": True,
            "notes": "two R2 tiles glued with one side reversed",
        },
    },
    # An R1 tile capped by a cylinder tile. The cap identifies opposite sides, so
    # it is Forbidden and the tiling is not subdivisible. Two R1 tiles do not
    # close up into a tiling.
    "r1_pair": {
        "words": ["a a b c", "b' e c' e'"],
        "expected": {
            "surface": "P2^3",
            "faces": 2,
            "face_classes": {"R1": 1, "Forbidden:opposite_edge_identification": 1},
            "subdivisible": False,
            "notes": "an R1 tile capped by a Forbidden cylinder tile (opposite sides identified); two R1 tiles cannot close up",
        },
    },
    "hemicube": {
        "cycles": [[0, 2, 3, 1], [0, 1, 2, 3], [0, 3, 1, 2]],
        "expected": {
            "surface": "P2^1",
            "faces": 3,
            "face_classes": {"Q": 3},
            "subdivisible": True,
            "notes": "antipodal quotient of the cube; its T(4) is not subdivisible",
        },
    },
    "tetrahedron": {
        "cycles": [[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]],
        "expected": {"surface": "S2", "faces": 4, "notes": "triangular base for T(4) and T(5)"},
    },
    "icosahedron": {
        "cycles": _icosahedron(),
        "expected": {"surface": "S2", "faces": 20, "notes": "triangular base, every vertex of degree 5"},
    },
}
