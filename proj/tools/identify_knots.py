#!/usr/bin/env python3
"""Identify the knots described by genus-1 shadow pairs.

Reads the output of arcdist_candidates. Each pair (v, w) is drawn on the
standard torus in R^3: v is pushed into the inner solid torus V and w into the
outer one W, the union is projected to a plane and the planar diagram is handed
to SnapPy. Offline tool only; nothing in the build depends on it.

Torus coordinates: the unit square of the standard genus-1 triangulation, x
along edge 1 and y along edge 2, mapped by x -> angle around the z axis and
y -> angle around the tube. Edge 2 then bounds a disc in V and edge 1 bounds a
disc in W.

    identify_knots.py CANDIDATES.json [--limit N] > IDENTIFIED.json
"""

import argparse
import json
import math
import sys
import warnings

import numpy as np
import sympy
from sympy.polys.matrices import DomainMatrix

warnings.filterwarnings("ignore")
import snappy  # noqa: E402

# Corners of the four triangles of the standard table
# {1,5,-4}, {2,6,-5}, {-3,4,-6}, {3,-1,-2}, in square coordinates.
P2 = (2 / 3, 1 / 3)
TRIANGLES = [
    [(0, 0), (1, 0), P2],
    [(1, 0), (1, 1), P2],
    [(1, 1), (0, 0), P2],
    [(0, 0), (1, 1), (0, 1)],
]
R_MAJOR, R_MINOR, PUSH = 3.0, 1.0, 0.4
STEPS = 12


def side_point(side, plus, t):
    """Point at fraction t along the + side of the edge, seen from `side`."""
    tri, pos = side
    a, b = TRIANGLES[tri][pos], TRIANGLES[tri][(pos + 1) % 3]
    if not plus:
        a, b = b, a
    return np.array(a) + t * (np.array(b) - np.array(a))


def pieces(geom):
    """Straight pieces of the arc, each written in its own triangle's coordinates."""
    tri, pos = geom["start"]
    cur = np.array(TRIANGLES[tri][pos], dtype=float)
    out = []
    for c in geom["crossings"]:
        out.append((cur, side_point(c["side"], c["plus"], c["t"])))
        cur = side_point(c["entry"], not c["plus"], c["t"])
    tri, pos = geom["end"]
    out.append((cur, np.array(TRIANGLES[tri][pos], dtype=float)))
    return out


def cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def proper_cross(p, q, r, s):
    """Interior intersection of segments pq and rs."""
    d = cross2(q - p, s - r)
    if abs(d) < 1e-12:
        return False
    u = cross2(r - p, s - r) / d
    v = cross2(r - p, q - p) / d
    return 1e-9 < u < 1 - 1e-9 and 1e-9 < v < 1 - 1e-9


def check_embedded(geom):
    """Straight pieces inside one triangle must not cross."""
    ps = pieces(geom)
    tris = [geom["start"][0]] + [c["entry"][0] for c in geom["crossings"]]
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if tris[i] == tris[j] and proper_cross(*ps[i], *ps[j]):
                return False
    return True


def to_space(x, y, depth):
    phi, theta = 2 * math.pi * x, 2 * math.pi * y
    r = R_MINOR + depth
    return np.array([(R_MAJOR + r * math.cos(theta)) * math.cos(phi),
                     (R_MAJOR + r * math.cos(theta)) * math.sin(phi),
                     r * math.sin(theta)])


def space_curve(geom, sign):
    """Arc pushed off the torus: depth sign * PUSH * sin(pi t) along its length."""
    flat = []
    for a, b in pieces(geom):
        for k in range(STEPS):
            flat.append(a + (k / STEPS) * (b - a))
    tri, pos = geom["end"]
    flat.append(np.array(TRIANGLES[tri][pos], dtype=float))
    n = len(flat) - 1
    return [to_space(p[0], p[1], sign * PUSH * math.sin(math.pi * k / n)) for k, p in enumerate(flat)]


def rotation(seed):
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    return q


def pd_code(points, seed):
    """Planar diagram of the closed polygon through `points`."""
    pts = np.array(points) @ rotation(seed).T
    n = len(pts)
    segs = [(pts[k], pts[(k + 1) % n]) for k in range(n)]
    events = []  # (position along the knot, crossing id, over?)
    directions = {}
    count = 0
    for i in range(n):
        p, q = segs[i][0][:2], segs[i][1][:2]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            r, s = segs[j][0][:2], segs[j][1][:2]
            d = cross2(q - p, s - r)
            if abs(d) < 1e-12:
                continue
            u = cross2(r - p, s - r) / d
            v = cross2(r - p, q - p) / d
            if not (0 <= u < 1 and 0 <= v < 1):
                continue
            zi = segs[i][0][2] + u * (segs[i][1][2] - segs[i][0][2])
            zj = segs[j][0][2] + v * (segs[j][1][2] - segs[j][0][2])
            if abs(zi - zj) < 1e-9:
                raise ValueError("degenerate projection")
            i_over = zi > zj
            events.append((i + u, count, i_over))
            events.append((j + v, count, not i_over))
            directions[count] = (q - p, s - r, i_over)
            count += 1
    events.sort()
    m = len(events)
    slots = {}
    for k, (_, cid, over) in enumerate(events):
        slots.setdefault(cid, {})[over] = ((k - 1) % m, k)  # (incoming, outgoing) labels
    pd, wirtinger = [], []
    for cid in range(count):
        di, dj, i_over = directions[cid]
        under_dir, over_dir = (dj, di) if i_over else (di, dj)
        a, c = slots[cid][False]
        into, out = slots[cid][True]
        if cross2(-under_dir, over_dir) > 0:
            pd.append([a, out, c, into])
        else:
            pd.append([a, into, c, out])
        wirtinger.append((into, a, c, 1 if cross2(over_dir, under_dir) > 0 else -1))
    under_at = {k for k, (_, _, over) in enumerate(events) if not over}
    return pd, wirtinger, under_at, m


def alexander(wirtinger, under_at, m):
    """Alexander polynomial from the Wirtinger presentation by Fox calculus,
    normalized to a polynomial with nonzero constant term and positive
    leading coefficient."""
    t = sympy.symbols("t")
    if not wirtinger:
        return "1"
    # Overpasses: edge k continues edge k-1 unless event k is an undercrossing.
    arc_of, arc = [0] * m, 0
    start = min(under_at)
    for step in range(m):
        k = (start + step) % m
        if k in under_at and step > 0:
            arc += 1
        arc_of[k] = arc
    arcs = arc + 1
    rows = []
    for over_edge, under_in, under_out, sign in wirtinger:
        row = [0] * arcs
        o, i, j = arc_of[over_edge], arc_of[under_in], arc_of[under_out]
        if sign > 0:
            row[o] += 1 - t
            row[i] += t
            row[j] -= 1
        else:
            row[o] += t - 1
            row[i] += 1
            row[j] -= t
        rows.append(row)
    ring = sympy.ZZ[t]
    minor = DomainMatrix([[ring.from_sympy(sympy.sympify(x)) for x in row[: arcs - 1]] for row in rows[: arcs - 1]],
                         (arcs - 1, arcs - 1), ring)
    poly = sympy.Poly(ring.to_sympy(minor.det()), t)
    if poly.is_zero:
        raise ValueError("vanishing Alexander determinant")
    coeffs = poly.all_coeffs()
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return str(sympy.Poly(coeffs, t).as_expr())


def identify(pair, seed=7):
    v = space_curve(pair["v_geometry"], -1)
    w = space_curve(pair["w_geometry"], +1)
    points = v[:-1] + w[::-1][:-1]
    pd, wirtinger, under_at, m = pd_code(points, seed)
    if not pd:
        return {"name": "0_1", "crossings": 0, "alexander": "1"}
    alex = alexander(wirtinger, under_at, m)
    link = snappy.Link(pd)
    link.simplify("global")
    if len(link.crossings) == 0:
        return {"name": "0_1", "crossings": 0, "alexander": alex}
    name = None
    try:
        found = link.exterior().identify()
        names = [str(m).split("(")[0] for m in found]
        knots = [x for x in names if "_" in x and not x.startswith("K")]
        name = knots[0] if knots else (names[0] if names else None)
    except Exception:
        pass
    return {"name": name, "crossings": len(link.crossings), "alexander": alex}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("candidates")
    ap.add_argument("--limit", type=int, default=0)
    ap.add_argument("--only", choices=["disjoint", "distance2"], default=None)
    args = ap.parse_args()
    data = json.load(open(args.candidates))
    out = []
    for idx, pair in enumerate(data["pairs"]):
        if args.only == "disjoint" and pair["crossings"] != 0:
            continue
        if args.only == "distance2" and pair.get("distance") != 2:
            continue
        if not (check_embedded(pair["v_geometry"]) and check_embedded(pair["w_geometry"])):
            raise SystemExit(f"pair {idx}: drawing is not embedded")
        rec = {"index": idx, "crossings": pair["crossings"]}
        if "class" in pair:
            rec["class"] = pair["class"]
        rec.update(identify(pair))
        out.append(rec)
        if args.limit and len(out) >= args.limit:
            break
    json.dump(out, sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
