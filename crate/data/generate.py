"""Regenerates the graph files and point fixtures in this directory.

Output is deterministic: each point list uses its own fixed seed.
"""
import json
import random
from fractions import Fraction as F
from pathlib import Path

HERE = Path(__file__).parent


def rat(x):
    x = F(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def graph(vertices, edges, divisor):
    return {
        "vertices": vertices,
        "edges": [{"from": t, "to": h, "length": rat(l)} for t, h, l in edges],
        "divisor": divisor,
    }


def tesseract():
    edges = [(i, j, 1) for i in range(16) for j in range(i + 1, 16) if bin(i ^ j).count("1") == 1]
    return graph([f"p{k}" for k in range(16)], edges, list(range(16)))


GRAPHS = {
    "segment": graph(["p0", "p1"], [(0, 1, 1)], [0, 0]),
    "circle": graph(["p1", "p0", "p2"], [(1, 0, F(1, 2)), (1, 2, 1), (0, 2, F(1, 2))], [0, 0, 0]),
    "joint_circles": graph(
        [f"p{k}" for k in range(5)],
        [(0, 1, 1), (1, 2, 1), (2, 0, 1), (0, 3, 2), (3, 4, 2), (4, 0, 2)],
        [2, 0, 0, 0, 0],
    ),
    "tesseract": tesseract(),
    "banana": graph(
        ["p0", "p1", "p2", "p3"],
        [(0, 1, 2), (0, 2, F(1, 2)), (2, 1, F(1, 2)), (0, 3, F(3, 2)), (3, 1, F(3, 2))],
        [1, 1, 0, 0],
    ),
    "two_bridges": graph(
        [f"p{k}" for k in range(6)],
        [(0, 1, 1), (1, 2, 1), (1, 3, 2), (2, 4, 1), (3, 4, 1), (4, 5, F(1, 2))],
        [1, 0, 2, 0, 0, 1],
    ),
    "circle_line": graph(["p1", "p2", "p3"], [(0, 1, 1), (0, 1, 2), (1, 2, 3)], [1, 1, 1]),
}

# graphs with a committed list of point pairs
POINT_GRAPHS = ["circle", "joint_circles", "tesseract", "banana", "two_bridges", "segment"]
PAIRS = 60


def random_point(rng, lengths):
    e = rng.randrange(len(lengths))
    length = lengths[e]
    roll = rng.random()
    if roll < 0.1:
        return e, F(0)
    if roll < 0.2:
        return e, length
    den = rng.choice([2, 3, 4, 5, 6, 7, 8, 9, 11, 12])
    return e, length * F(rng.randrange(1, den), den)


def points(name, seed):
    lengths = [F(e["length"]) for e in GRAPHS[name]["edges"]]
    rng = random.Random(seed)
    lines = []
    for k in range(PAIRS):
        x = random_point(rng, lengths)
        if k % 10 == 0:
            y = x
        elif k % 10 == 1:
            y = (x[0], lengths[x[0]] * F(rng.randrange(0, 8), 7))
        else:
            y = random_point(rng, lengths)
        lines.append(f"{x[0]}:{rat(x[1])} {y[0]}:{rat(y[1])}")
    return "\n".join(lines) + "\n"


def main():
    for name, g in GRAPHS.items():
        (HERE / f"{name}.json").write_text(json.dumps(g, indent=2) + "\n")
    for seed, name in enumerate(POINT_GRAPHS, start=1):
        (HERE / "points" / f"{name}.txt").write_text(points(name, seed))


if __name__ == "__main__":
    main()
