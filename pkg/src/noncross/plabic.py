"""Planar realization of a maximal noncrossing collection and its quiver.

Members embed at the vertex sums of a regular n-gon (labeled clockwise from
the top).  For each (k-1)-subset K the members containing K form a "black"
clique whose points lie on a unit circle centered at the point of K, and
dually for (k+1)-subsets ("white" cliques).  A pair of members is an edge
exactly when it is angularly consecutive in both of its cliques; cliques of
size >= 3 become faces.  Orienting every edge so that the black side sits on
its right turns each face boundary into a directed cycle: black faces run
clockwise, white faces counterclockwise, and the potential is the signed sum
of those cycles.  Interval members are the boundary of the disk and are
frozen; deleting them yields the Jacobian quiver, on which shifting every
index by -k acts as the Nakayama permutation whenever the collection is
symmetric.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .crossing import Collection, is_symmetric
from .cyclic import SubOrder, shift_set

#: Coincidence / angular-tie tolerance, on unit-radius normalization.
TOL = 1e-9

TAU = 2 * math.pi


class DegenerateEmbedding(ValueError):
    """Two embedded points (or clique angles) coincide within tolerance."""


class ComplexInconsistent(ValueError):
    """The clique-derived edges and faces do not assemble into a disk."""


class OrientationInconsistent(ValueError):
    """Edge directions induced by adjacent faces disagree."""


class NotAnAutomorphism(ValueError):
    """The shift permutation fails to preserve the quiver."""


class UnsupportedFormat(ValueError):
    """Unknown export format for the given structure."""


def ngon_vertices(n: int) -> np.ndarray:
    """Vertices of the regular n-gon, labeled clockwise starting at the top."""
    idx = np.arange(1, n + 1)
    return np.stack([np.sin(TAU * idx / n), np.cos(TAU * idx / n)], axis=1)


def embed(C: Collection) -> np.ndarray:
    """Planar points of all members, aligned with C.sets.

    Raises DegenerateEmbedding when two members land on the same point.
    """
    V = ngon_vertices(C.n)
    pts = np.zeros((len(C), 2))
    for i, s in enumerate(C.sets):
        if s:
            pts[i] = V[[e - 1 for e in s]].sum(axis=0)
    for i in range(len(C)):
        d = pts[i + 1 :] - pts[i]
        if len(d) and (np.einsum("ij,ij->i", d, d) < TOL * TOL).any():
            j = i + 1 + int(np.argmin(np.einsum("ij,ij->i", d, d)))
            raise DegenerateEmbedding(
                f"members {C.sets[i]} and {C.sets[j]} embed at the same point"
            )
    return pts


@dataclass(frozen=True)
class Face:
    """An internal face: clique label, boundary cycle, rotation sense.

    `cycle` holds vertex indices in the order the oriented 1-skeleton
    traverses them; sign +1 means clockwise (black, label size k-1), -1
    counterclockwise (white, label size k+1).
    """

    label: tuple[int, ...]
    cycle: tuple[int, ...]
    sign: int


@dataclass(frozen=True)
class EmbeddedComplex:
    collection: Collection
    points: np.ndarray
    frozen: tuple[bool, ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[Face, ...]

    @property
    def n(self) -> int:
        return self.collection.n

    @property
    def k(self) -> int:
        return self.collection.k

    def euler(self) -> int:
        return len(self.collection) - len(self.edges) + len(self.faces)


def _angular_cycle(
    members: list[int], pts: np.ndarray, center: np.ndarray, label
) -> list[int]:
    """Members sorted counterclockwise around `center`; ties are degenerate."""
    angles = sorted(
        (math.atan2(pts[v][1] - center[1], pts[v][0] - center[0]), v) for v in members
    )
    for (a1, v1), (a2, v2) in zip(angles, angles[1:]):
        if a2 - a1 < TOL:
            raise DegenerateEmbedding(
                f"clique {label}: members {v1} and {v2} at the same angle"
            )
    if len(angles) >= 2 and (angles[0][0] + TAU) - angles[-1][0] < TOL:
        raise DegenerateEmbedding(f"clique {label}: angular tie across the cut")
    return [v for _, v in angles]


def _cliques(C: Collection) -> tuple[dict, dict]:
    """Black cliques by (k-1)-label and white cliques by (k+1)-label."""
    black: dict[tuple[int, ...], list[int]] = {}
    white: dict[tuple[int, ...], list[int]] = {}
    for idx, s in enumerate(C.sets):
        for e in s:
            key = tuple(x for x in s if x != e)
            black.setdefault(key, []).append(idx)
        others = set(range(1, C.n + 1)) - set(s)
        for e in sorted(others):
            key = tuple(sorted(s + (e,)))
            white.setdefault(key, []).append(idx)
    black = {lab: ms for lab, ms in black.items() if len(ms) >= 2}
    white = {lab: ms for lab, ms in white.items() if len(ms) >= 2}
    return black, white


def _label_point(label: tuple[int, ...], V: np.ndarray) -> np.ndarray:
    if not label:
        return np.zeros(2)
    return V[[e - 1 for e in label]].sum(axis=0)


def build_complex(C: Collection) -> EmbeddedComplex:
    """Assemble the embedded CW-complex of a maximal noncrossing collection.

    The caller is expected to have verified maximality; on bad input the
    Euler and face-boundary checks below fail with ComplexInconsistent.
    """
    pts = embed(C)
    V = ngon_vertices(C.n)
    black, white = _cliques(C)

    def consecutive_pairs(groups: dict) -> tuple[set, list[tuple[tuple, list[int]]]]:
        pairs: set[tuple[int, int]] = set()
        cycles: list[tuple[tuple, list[int]]] = []
        for label in sorted(groups):
            cyc = _angular_cycle(groups[label], pts, _label_point(label, V), label)
            if len(cyc) == 2:
                pairs.add((min(cyc), max(cyc)))
            else:
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    pairs.add((min(a, b), max(a, b)))
                cycles.append((label, cyc))
        return pairs, cycles

    black_pairs, black_cycles = consecutive_pairs(black)
    white_pairs, white_cycles = consecutive_pairs(white)
    edges = tuple(sorted(black_pairs & white_pairs))
    edge_set = set(edges)

    faces = []
    for label, ccw in black_cycles:
        # black faces are traversed clockwise by the oriented skeleton
        faces.append(Face(label, tuple(reversed(ccw)), +1))
    for label, ccw in white_cycles:
        faces.append(Face(label, tuple(ccw), -1))

    for f in faces:
        for a, b in zip(f.cycle, f.cycle[1:] + f.cycle[:1]):
            if (min(a, b), max(a, b)) not in edge_set:
                raise ComplexInconsistent(
                    f"face {f.label} boundary pair ({a},{b}) was discovered by "
                    f"only one clique color"
                )

    ground = SubOrder.full(C.n)
    frozen = tuple(ground.is_interval(s) for s in C.sets)

    cx = EmbeddedComplex(C, pts, frozen, edges, tuple(faces))
    if cx.euler() != 1:
        raise ComplexInconsistent(
            f"Euler count V-E+F = {len(C)}-{len(edges)}+{len(faces)} != 1"
        )
    return cx


def _shoelace(cycle: tuple[int, ...], pts: np.ndarray) -> float:
    area = 0.0
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        area += pts[a][0] * pts[b][1] - pts[b][0] * pts[a][1]
    return area / 2.0


@dataclass(frozen=True)
class QuiverWithPotential:
    n: int
    k: int
    vertices: tuple[tuple[int, ...], ...]
    points: np.ndarray
    frozen: tuple[bool, ...]
    arrows: tuple[tuple[int, int], ...]
    potential: tuple[tuple[int, tuple[int, ...]], ...]

    def vertex_index(self) -> dict[tuple[int, ...], int]:
        return {s: i for i, s in enumerate(self.vertices)}


def orient(cx: EmbeddedComplex) -> QuiverWithPotential:
    """Orient the 1-skeleton so each arrow keeps its black face on the right.

    Face cycles are stored in that traversal direction already (black
    clockwise, white counterclockwise), so the two faces sharing an edge
    must agree on its direction; disagreement is an inconsistency.
    """
    directions: dict[tuple[int, int], tuple[int, int]] = {}
    colors: dict[tuple[int, int], list[int]] = {}
    for f in cx.faces:
        if _shoelace(f.cycle, cx.points) * f.sign > 0:
            # sign +1 must be geometrically clockwise (negative shoelace)
            raise OrientationInconsistent(
                f"face {f.label} rotation sense contradicts its label size"
            )
        for a, b in zip(f.cycle, f.cycle[1:] + f.cycle[:1]):
            key = (min(a, b), max(a, b))
            colors.setdefault(key, []).append(f.sign)
            prev = directions.get(key)
            if prev is None:
                directions[key] = (a, b)
            elif prev != (a, b):
                raise OrientationInconsistent(
                    f"edge {key} traversed in both directions by adjacent faces"
                )
    for key, signs in colors.items():
        if len(signs) > 2 or (len(signs) == 2 and signs[0] == signs[1]):
            raise OrientationInconsistent(
                f"edge {key} bounded by faces {signs}; need one of each color"
            )
    arrows = []
    for e in cx.edges:
        if e in directions:
            arrows.append(directions[e])
        else:
            arrows.append(e)  # no adjacent face: only in n <= 2 degenerates
    arrows.sort()
    potential = tuple((f.sign, f.cycle) for f in cx.faces)
    return QuiverWithPotential(
        cx.n,
        cx.k,
        cx.collection.sets,
        cx.points,
        cx.frozen,
        tuple(arrows),
        potential,
    )


def jacobian_quiver(qp: QuiverWithPotential) -> QuiverWithPotential:
    """Delete frozen vertices, their arrows, and every cycle through them."""
    keep = [i for i, fr in enumerate(qp.frozen) if not fr]
    remap = {old: new for new, old in enumerate(keep)}
    arrows = tuple(
        (remap[a], remap[b]) for a, b in qp.arrows if a in remap and b in remap
    )
    potential = tuple(
        (sign, tuple(remap[v] for v in cyc))
        for sign, cyc in qp.potential
        if all(v in remap for v in cyc)
    )
    return QuiverWithPotential(
        qp.n,
        qp.k,
        tuple(qp.vertices[i] for i in keep),
        qp.points[keep] if len(keep) else np.zeros((0, 2)),
        tuple(False for _ in keep),
        arrows,
        potential,
    )


@dataclass(frozen=True)
class NakayamaResult:
    """The shift I -> I - k as a permutation of the quiver vertices.

    `order` is the order of the underlying rotation of the plane,
    n / GCD(k, n); individual vertex cycles may be shorter (a vertex fixed
    by a smaller shift), which is what `cycle_lengths` records.
    """

    mapping: tuple[int, ...]
    order: int
    cycle_lengths: tuple[int, ...]

    @property
    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, j in enumerate(self.mapping) if i == j)


def nakayama(qp: QuiverWithPotential, k: int, n: int) -> NakayamaResult:
    """Verify I -> I - k is a quiver automorphism and report its order."""
    index = qp.vertex_index()
    mapping = []
    for s in qp.vertices:
        image = shift_set(s, n - k, n)
        if image not in index:
            raise NotAnAutomorphism(
                f"vertex {s} shifts to {image}, which is not a vertex"
            )
        mapping.append(index[image])
    arrow_set = set(qp.arrows)
    for a, b in qp.arrows:
        if (mapping[a], mapping[b]) not in arrow_set:
            raise NotAnAutomorphism(
                f"arrow {qp.vertices[a]} -> {qp.vertices[b]} is not preserved"
            )
    seen = [False] * len(mapping)
    lengths = []
    for i in range(len(mapping)):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = mapping[j]
            ln += 1
        lengths.append(ln)
    return NakayamaResult(tuple(mapping), n // math.gcd(k, n), tuple(sorted(lengths)))


# ---------------------------------------------------------------------------
# exports


def _set_name(s: tuple[int, ...]) -> str:
    return "-".join(map(str, s)) if s else "empty"


def _round(x: float) -> float:
    v = round(float(x), 12)
    return 0.0 if v == 0 else v


def _fmt2(x: float) -> str:
    out = f"{x:.2f}"
    return "0.00" if out == "-0.00" else out


def quiver_to_dot(qp: QuiverWithPotential) -> str:
    lines = ["digraph quiver {", "  // format 1"]
    for s, fr in zip(qp.vertices, qp.frozen):
        attr = " [shape=box]" if fr else ""
        lines.append(f'  "{_set_name(s)}"{attr};')
    for a, b in qp.arrows:
        lines.append(f'  "{_set_name(qp.vertices[a])}" -> "{_set_name(qp.vertices[b])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_to_json(qp: QuiverWithPotential) -> str:
    doc = {
        "format": 1,
        "n": qp.n,
        "k": qp.k,
        "vertices": [
            {
                "set": list(s),
                "x": _round(qp.points[i][0]) if len(qp.points) else 0.0,
                "y": _round(qp.points[i][1]) if len(qp.points) else 0.0,
                "frozen": fr,
            }
            for i, (s, fr) in enumerate(zip(qp.vertices, qp.frozen))
        ],
        "arrows": [[a, b] for a, b in qp.arrows],
        "potential": [{"sign": sign, "cycle": list(cyc)} for sign, cyc in qp.potential],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def complex_to_json(cx: EmbeddedComplex) -> str:
    doc = {
        "format": 1,
        "n": cx.n,
        "k": cx.k,
        "vertices": [
            {
                "set": list(s),
                "x": _round(cx.points[i][0]),
                "y": _round(cx.points[i][1]),
                "frozen": fr,
            }
            for i, (s, fr) in enumerate(zip(cx.collection.sets, cx.frozen))
        ],
        "edges": [[a, b] for a, b in cx.edges],
        "faces": [
            {"label": list(f.label), "cycle": list(f.cycle), "sign": f.sign}
            for f in cx.faces
        ],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _unit_scaled(points: np.ndarray) -> np.ndarray:
    if not len(points):
        return points
    radius = float(np.max(np.hypot(points[:, 0], points[:, 1])))
    return points / radius if radius > TOL else points


def complex_to_svg(cx: EmbeddedComplex) -> str:
    pts = _unit_scaled(cx.points) * 100.0
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        "<!-- format 1 -->",
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-120 -120 240 240">',
    ]
    for a, b in cx.edges:
        lines.append(
            f'  <line x1="{_fmt2(pts[a][0])}" y1="{_fmt2(-pts[a][1])}" '
            f'x2="{_fmt2(pts[b][0])}" y2="{_fmt2(-pts[b][1])}" '
            'stroke="black" stroke-width="0.8"/>'
        )
    for i, s in enumerate(cx.collection.sets):
        fill = "black" if cx.frozen[i] else "white"
        lines.append(
            f'  <circle cx="{_fmt2(pts[i][0])}" cy="{_fmt2(-pts[i][1])}" r="2.5" '
            f'fill="{fill}" stroke="black" stroke-width="0.6"/>'
        )
        lines.append(
            f'  <text x="{_fmt2(pts[i][0])}" y="{_fmt2(-pts[i][1] - 4.0)}" '
            'font-size="4" text-anchor="middle">'
            f"{_set_name(s)}</text>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def complex_to_tikz(cx: EmbeddedComplex) -> str:
    pts = _unit_scaled(cx.points)
    lines = ["% format 1", r"\begin{tikzpicture}[scale=4]"]
    for a, b in cx.edges:
        lines.append(
            f"  \\draw ({_fmt2(pts[a][0])},{_fmt2(pts[a][1])}) -- "
            f"({_fmt2(pts[b][0])},{_fmt2(pts[b][1])});"
        )
    for i, s in enumerate(cx.collection.sets):
        style = "fill=black" if cx.frozen[i] else "fill=white"
        lines.append(
            f"  \\filldraw[{style}, draw=black] ({_fmt2(pts[i][0])},{_fmt2(pts[i][1])}) "
            "circle (0.02);"
        )
        lines.append(
            f"  \\node[font=\\tiny, above=1pt] at ({_fmt2(pts[i][0])},{_fmt2(pts[i][1])}) "
            f"{{{_set_name(s)}}};"
        )
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def export(obj: Union[EmbeddedComplex, QuiverWithPotential], fmt: str) -> str:
    """Deterministic document for a complex (json/svg/tikz) or quiver (dot/json)."""
    if isinstance(obj, EmbeddedComplex):
        table = {"json": complex_to_json, "svg": complex_to_svg, "tikz": complex_to_tikz}
    elif isinstance(obj, QuiverWithPotential):
        table = {"dot": quiver_to_dot, "json": quiver_to_json}
    else:
        raise UnsupportedFormat(f"cannot export {type(obj).__name__}")
    if fmt not in table:
        raise UnsupportedFormat(
            f"format {fmt!r} not supported for {type(obj).__name__}"
        )
    return table[fmt](obj)
