"""Clique graph of Delta: vertices E_{i,j} placed on levels j - i mod n-1."""

from __future__ import annotations

from dataclasses import dataclass, field

from .delta import delta_formula
from .homology import basis_pairs


def level(i, j, n):
    return (j - i) % (n - 1)


@dataclass
class CliqueGraph:
    n: int
    vertices: list
    edges: dict = field(default_factory=dict)

    def levels(self):
        out = {}
        for v in self.vertices:
            out.setdefault(level(*v, self.n), []).append(v)
        return out

    def neighbours(self, v):
        return sorted({b if a == v else a for a, b in self.edges if v in (a, b)})

    def level_is_complete(self, lev):
        verts = self.levels()[lev]
        return all((a, b) in self.edges for k, a in enumerate(verts)
                   for b in verts[k + 1:])

    def to_dot(self):
        lines = [f"graph delta_n{self.n} {{", "  node [shape=circle];"]
        for lev, verts in sorted(self.levels().items()):
            lines.append(f"  subgraph cluster_level{lev} {{")
            lines.append(f'    label="level {lev}";')
            for i, j in verts:
                lines.append(f'    E{i}_{j} [label="E{i},{j}", level={lev}];')
            lines.append("  }")
        for ((i1, j1), (i2, j2)), c in self.edges.items():
            colour = "black" if c > 0 else "red"
            lines.append(f'  E{i1}_{j1} -- E{i2}_{j2} '
                         f'[weight={c}, label="{c:+d}", color={colour}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def clique_graph(n):
    edges = {((i1, j1), (i2, j2)): c
             for (i1, j1, i2, j2), c in delta_formula(n)}
    return CliqueGraph(n, basis_pairs(n), edges)
