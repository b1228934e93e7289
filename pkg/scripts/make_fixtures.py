"""Write the small reference graphs as canonical edge-list fixtures.

Vertices are numbered in the order the node names are listed below (1-based
in the files), except the (2,3)-split graph which keeps its labels 1..15.
"""
from pathlib import Path

from chordspec.graph import from_edge_list, write_edge_list

OUT = Path(__file__).resolve().parents[1] / "src" / "chordspec" / "fixtures"

GRAPHS = {
    "kappa_a_1": (
        "a b c d e a1 b1 c1",
        "a/b a/c a/d a/e b/d b/c b/e c/d c/e d/e a1/a a1/b a1/e b1/a b1/e b1/d c1/a c1/e",
        "kappa = a example (a): chordal, not a cograph",
    ),
    "kappa_a_2": (
        "x y z t s s1 s2",
        # s1/s appears twice in the source drawing
        "x/y x/z x/t y/z y/t z/t t/s s/z s1/s s1/z s1/s s2/z s1/t",
        "kappa = a example (b)",
    ),
    "kappa_a_3": (
        "m n o p q q1 q2 q3",
        "m/n m/o m/p n/o n/p o/p q/m q/p q1/p q2/p q3/p",
        "kappa = a example (c)",
    ),
    "windmill_4_3": (
        "x x1 x2 t t1 t2 s w w1 w2",
        "x/x1 x/x2 x1/x2 x/s x1/s x2/s t/t1 t/t2 t1/t2 t/s t1/s t2/s w/w1 w/w2 w1/w2 w/s w1/s w2/s",
        "windmill Wd(4,3)",
    ),
    "split_complete_2_5": (
        "a b c d a1 b1 c1",
        "a/b a/d b/d a/c c/d a1/a a1/d b1/a b1/d c1/a c1/d",
        "split-complete graph on 7 vertices",
    ),
    "core_satellite_2_3_2": (
        "o p p2 q r p1 q1 p3",
        "o/p o/p2 o/q o/r p/p2 p/q p/r p2/q p2/r q/r o/p1 o/q1 o/p3 r/p1 r/q1 r/p3 p1/q1 p1/p3 q1/p3",
        "core-satellite Theta(2,3,2)",
    ),
    "kt_split_2_3_3": (
        "a b f d c e g h i j k l m n o",
        "a/b a/c a/d a/e a/f b/d b/c b/e b/f c/d c/e c/f d/e d/f e/f "
        "g/a g/b h/a h/b i/a i/b j/c j/d k/c k/d l/c l/d m/e m/f n/e n/f o/e o/f",
        "(2,3)-split graph, r = 3",
    ),
    "six_cliques": (
        "a1 b1 c1 a b c d e f x y z 1 2 3 4",
        "a/b a/c a/d a/e a/f b/d b/c b/e b/f c/d c/e c/f d/e d/f e/f "
        "x/y x/z y/z x/b x/c y/b y/c z/b z/c "
        "1/2 1/e 2/e 1/d 2/d 4/b 3/d "
        "a1/b1 a1/y b1/y a1/c1 b1/c1 c1/y",
        "chordal graph with 6 maximal cliques",
    ),
}

# node a is labelled 1, b is 2, ..., o is 15
KT_LABELS = dict(zip("a b c d e f g h i j k l m n o".split(), range(15)))


def build(name):
    nodes, edges, note = GRAPHS[name]
    index = KT_LABELS if name == "kt_split_2_3_3" else {v: i for i, v in enumerate(nodes.split())}
    pairs = [tuple(index[x] for x in e.split("/")) for e in edges.split()]
    return from_edge_list(len(index), pairs), note


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name in GRAPHS:
        g, note = build(name)
        write_edge_list(g, OUT / f"{name}.txt", comments=[note])
        print(f"{name}: n={g.n} m={g.m}")


if __name__ == "__main__":
    main()
