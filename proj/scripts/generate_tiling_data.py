#!/usr/bin/env python3
"""Generate include/tormap/tiling_data.hpp.

Each of the twelve doubly-periodic tilings is laid out geometrically here
(floating point is fine at codegen time), reduced to one fundamental cell,
and emitted as exact combinatorial tables: vertex classes with rational
coordinates in the translation basis, edges with integer shift vectors, and
oriented face walks.  The C++ library never recomputes any geometry; it only
consumes these tables and checks their combinatorial invariants.

Run from the repository root:  python3 scripts/generate_tiling_data.py
"""

import math
import sys
from fractions import Fraction

S2 = math.sqrt(2.0)
S3 = math.sqrt(3.0)
EPS = 1e-7


def regular_polygon(n, radius, start_deg):
    return [
        (radius * math.cos(math.radians(start_deg + k * 360.0 / n)),
         radius * math.sin(math.radians(start_deg + k * 360.0 / n)))
        for k in range(n)
    ]


class Spec:
    def __init__(self, tag, vertex_type, basis_a, basis_b, verts, edge_len,
                 point_group, plane_orbits, edge_symbol=None, dual=None,
                 assoc=None, basis_exact=None):
        self.tag = tag
        self.vertex_type = vertex_type
        self.A = basis_a
        self.B = basis_b
        self.verts = verts
        self.edge_len = edge_len
        self.point_group = point_group
        self.plane_orbits = plane_orbits
        self.edge_symbol = edge_symbol
        self.dual = dual
        self.assoc = assoc
        self.basis_exact = basis_exact  # (Ax, Ay, Bx, By, d), each (p, q, den)


def snub_hex_vertices():
    # Triangular lattice with an index-7 sublattice of points removed;
    # the removed points become the hexagon centres.
    a = (1.0, 0.0)
    b = (0.5, S3 / 2)
    A = (2 * a[0] + b[0], 2 * a[1] + b[1])          # 2a+b
    B = (-a[0] + 3 * b[0], -a[1] + 3 * b[1])        # rotate(A, 60deg)
    pts = []
    for i in range(-4, 5):
        for j in range(-4, 5):
            pts.append((i * a[0] + j * b[0], i * a[1] + j * b[1]))
    return A, B, pts


def make_specs():
    specs = []
    c = None

    specs.append(Spec(
        "3^6", "3.3.3.3.3.3", (1, 0), (0.5, S3 / 2), [(0, 0)], 1.0,
        "D6", 3, edge_symbol=(3, 3, 6, 6), dual="6^3",
        basis_exact=((1,0,1),(0,0,1),(1,0,2),(0,1,2),3)))

    specs.append(Spec(
        "4^4", "4.4.4.4", (1, 0), (0, 1), [(0, 0)], 1.0,
        "D4", 2, edge_symbol=(4, 4, 4, 4), dual="4^4",
        basis_exact=((1,0,1),(0,0,1),(0,0,1),(1,0,1),1)))

    specs.append(Spec(
        "6^3", "6.6.6", (S3, 0), (S3 / 2, 1.5), [(0, 1), (0, -1)], 1.0,
        "D6", 3, edge_symbol=(6, 6, 3, 3), dual="3^6",
        basis_exact=((0,1,1),(0,0,1),(0,1,2),(3,0,2),3)))

    specs.append(Spec(
        "3.6.3.6", "3.6.3.6", (2, 0), (1, S3),
        [(1, 0), (0.5, S3 / 2), (-0.5, S3 / 2)], 1.0,
        "D6", 3, edge_symbol=(3, 6, 4, 4), dual="rhombille",
        basis_exact=((2,0,1),(0,0,1),(1,0,1),(0,1,1),3)))

    specs.append(Spec(
        "rhombille", None, (2, 0), (1, S3),
        [(0, 0), (1, S3 / 3), (2, 2 * S3 / 3)], 2 / S3,
        "D6", 3, edge_symbol=(4, 4, 3, 6), dual="3.6.3.6",
        basis_exact=((2,0,1),(0,0,1),(1,0,1),(0,1,1),3)))

    c = 2 + S3
    specs.append(Spec(
        "3.12^2", "3.12.12", (c, 0), (c / 2, c * S3 / 2),
        regular_polygon(12, 1 / (2 * math.sin(math.radians(15))), 15), 1.0,
        "D6", 2, assoc="3^6",
        basis_exact=((2,1,1),(0,0,1),(2,1,2),(3,2,2),3)))

    c = 1 + S3
    specs.append(Spec(
        "3.4.6.4", "3.4.6.4", (c, 0), (c / 2, c * S3 / 2),
        regular_polygon(6, 1.0, 30), 1.0,
        "D6", 2, assoc="3^6",
        basis_exact=((1,1,1),(0,0,1),(1,1,2),(3,1,2),3)))

    c = 3 + S3
    specs.append(Spec(
        "4.6.12", "4.6.12", (c, 0), (c / 2, c * S3 / 2),
        regular_polygon(12, 1 / (2 * math.sin(math.radians(15))), 15), 1.0,
        "D6", 3, assoc="3^6",
        basis_exact=((3,1,1),(0,0,1),(3,1,2),(3,3,2),3)))

    c = 1 + S2
    specs.append(Spec(
        "4.8^2", "4.8.8", (c, 0), (0, c),
        regular_polygon(8, 1 / (2 * math.sin(math.radians(22.5))), 22.5), 1.0,
        "D4", 2, assoc="4^4",
        basis_exact=((1,1,1),(0,0,1),(0,0,1),(1,1,1),2)))

    specs.append(Spec(
        "3^3.4^2", "3.3.3.4.4", (1, 0), (0.5, 1 + S3 / 2),
        [(0.5, 0.5), (0.5, -0.5)], 1.0,
        "D2", 3, assoc="4^4",
        basis_exact=((1,0,1),(0,0,1),(1,0,2),(2,1,2),3)))

    c = math.sqrt(2 + S3)
    specs.append(Spec(
        "3^2.4.3.4", "3.3.4.3.4", (c, 0), (0, c),
        regular_polygon(4, S2 / 2, 60), 1.0,
        "Z4", 3, assoc="4^4",  # the linear reflections are not symmetries

        basis_exact=None))  # |A| = sqrt(2+sqrt(3)); kept as approx-only metadata

    A, B, pts = snub_hex_vertices()
    specs.append(Spec(
        "3^4.6", "3.3.3.3.6", A, B, pts, 1.0,
        "Z6", 2, assoc="3^6",
        basis_exact=((5,0,2),(0,1,2),(1,0,2),(0,3,2),3)))
    return specs


def solve_basis(A, B, p):
    det = A[0] * B[1] - A[1] * B[0]
    x = (p[0] * B[1] - p[1] * B[0]) / det
    y = (A[0] * p[1] - A[1] * p[0]) / det
    return x, y


def build(spec):
    A, B = spec.A, spec.B

    def cart(bc):
        return (bc[0] * A[0] + bc[1] * B[0], bc[0] * A[1] + bc[1] * B[1])

    # Reduce supplied vertices to one representative per translation class.
    cell = []  # basis coords in [0,1)
    for p in spec.verts:
        x, y = solve_basis(A, B, p)
        x -= math.floor(x + EPS)
        y -= math.floor(y + EPS)
        if x > 1 - EPS:
            x = 0.0
        if y > 1 - EPS:
            y = 0.0
        if spec.tag == "3^4.6" and abs(x) < EPS and abs(y) < EPS:
            continue  # removed sublattice class
        if not any(abs(x - q[0]) < EPS and abs(y - q[1]) < EPS for q in cell):
            cell.append((x, y))
    cell.sort()
    nv = len(cell)

    # Edges: pairs (i, j, shift) at the tiling's edge length.
    edges = set()
    for i in range(nv):
        for j in range(nv):
            for sx in range(-2, 3):
                for sy in range(-2, 3):
                    if i == j and sx == 0 and sy == 0:
                        continue
                    pi = cart(cell[i])
                    pj = cart((cell[j][0] + sx, cell[j][1] + sy))
                    d = math.hypot(pj[0] - pi[0], pj[1] - pi[1])
                    if spec.tag == "rhombille" and (i == 0) == (j == 0):
                        # only hexagon-centre <-> triangle-centre pairs are
                        # edges; same-class pairs happen to share the length
                        continue
                    if abs(d - spec.edge_len) < EPS:
                        key = (i, j, sx, sy)
                        rkey = (j, i, -sx, -sy)
                        edges.add(min(key, rkey))
    edges = sorted(edges)
    ne = len(edges)

    # Rotation system: darts (vertex, edge_idx, end) sorted by angle.
    incid = [[] for _ in range(nv)]  # (angle, edge_idx, end)
    for ei, (i, j, sx, sy) in enumerate(edges):
        pi = cart(cell[i])
        pj = cart((cell[j][0] + sx, cell[j][1] + sy))
        ang = math.atan2(pj[1] - pi[1], pj[0] - pi[0])
        incid[i].append((ang, ei, 0))
        # dart out of j towards i (shift moves with the dart, angle is enough)
        ang2 = math.atan2(pi[1] - pj[1], pi[0] - pj[0])
        incid[j].append((ang2, ei, 1))
    for lst in incid:
        lst.sort()

    def dart_target(ei, end, shift):
        # dart leaves vertex `edges[ei][end]` travelling along the edge
        i, j, sx, sy = edges[ei]
        if end == 0:
            return j, (shift[0] + sx, shift[1] + sy)
        return i, (shift[0] - sx, shift[1] - sy)

    def next_dart(ei, end, shift):
        # face to the left: reverse the dart, then step clockwise at the
        # target vertex
        w, wshift = dart_target(ei, end, shift)
        rev_end = 1 - end
        lst = incid[w]
        idx = next(k for k, (_, e2, en2) in enumerate(lst)
                   if e2 == ei and en2 == rev_end)
        _, e3, en3 = lst[(idx - 1) % len(lst)]
        return e3, en3, wshift

    # Trace faces; dedupe by translation-and-rotation-normalized walk.
    seen = set()
    faces = []
    for ei in range(ne):
        for end in (0, 1):
            if (ei, end) in seen:
                continue
            walk = []
            cur = (ei, end, (0, 0))
            while True:
                walk.append(cur)
                cur = next_dart(*cur)
                if cur[0] == walk[0][0] and cur[1] == walk[0][1] \
                        and cur[2] == walk[0][2]:
                    break
                if len(walk) > 64:
                    raise RuntimeError(f"runaway face in {spec.tag}")
            # normalize: rotate so the lexicographically least slot is first,
            # shifts relative to the first slot
            best = None
            for r in range(len(walk)):
                rot = walk[r:] + walk[:r]
                base = rot[0][2]
                cand = tuple((e, en, s[0] - base[0], s[1] - base[1])
                             for e, en, s in rot)
                if best is None or cand < best:
                    best = cand
            if best in seen:
                continue
            seen.add(best)
            for e, en, _, _ in best:
                seen.add((e, en))
            faces.append(best)
    total_slots = sum(len(f) for f in faces)
    assert total_slots == 2 * ne, (spec.tag, total_slots, ne)
    assert nv - ne + len(faces) == 0, (spec.tag, nv, ne, len(faces))

    # Vertex face-cycles (ccw): face left of each outgoing dart, in rotation
    # order.
    dart_face_size = {}
    for f in faces:
        for e, en, _, _ in f:
            dart_face_size[(e, en)] = len(f)
    vtypes = []
    for v in range(nv):
        cyc = [dart_face_size[(e, en)] for _, e, en in incid[v]]
        vtypes.append(cyc)

    # chi = -I about the origin must be a symmetry of the vertex class set.
    pairing = []
    for v in range(nv):
        x, y = (-cell[v][0]) % 1.0, (-cell[v][1]) % 1.0
        if x > 1 - EPS:
            x = 0.0
        if y > 1 - EPS:
            y = 0.0
        w = next((k for k in range(nv)
                  if abs(cell[k][0] - x) < EPS and abs(cell[k][1] - y) < EPS),
                 None)
        assert w is not None, f"{spec.tag}: vertex classes not chi-symmetric"
        pairing.append(w)

    # Exact rational coordinates, chi-equivariant by construction; for the
    # snub square the labels are made equivariant under the full C4 rotation
    # (the cell vertices form a single rotation orbit), which implies chi.
    rat = [None] * nv
    if spec.point_group == "Z4":
        def rot_img(p):  # (x, y) -> (-y, x) mod 1, on floats
            x, y = (-p[1]) % 1.0, p[0] % 1.0
            if x > 1 - EPS:
                x = 0.0
            if y > 1 - EPS:
                y = 0.0
            return x, y
        cur_v = 0
        cur_f = (Fraction(cell[0][0]).limit_denominator(97),
                 Fraction(cell[0][1]).limit_denominator(97))
        for _ in range(nv):
            rat[cur_v] = cur_f
            nxt = rot_img(cell[cur_v])
            cur_v = next(k for k in range(nv)
                         if abs(cell[k][0] - nxt[0]) < EPS
                         and abs(cell[k][1] - nxt[1]) < EPS)
            cur_f = ((-cur_f[1]) % 1, cur_f[0] % 1)
        assert all(r is not None for r in rat), \
            f"{spec.tag}: cell vertices are not one rotation orbit"
    elif spec.tag == "3^3.4^2":
        # The reflection (x, y) -> (-x - y, y) fixes both vertex classes,
        # which forces 2x + y = 0 mod 1 on the labels.
        fy = Fraction(cell[0][1]).limit_denominator(97)
        fx = (1 - fy) / 2
        assert abs(fx - cell[0][0]) < 0.01 and abs(fy - cell[0][1]) < 0.01
        rat[0] = (fx, fy)
        rat[1] = ((-fx) % 1, (-fy) % 1)
    else:
        for v in range(nv):
            if rat[v] is not None:
                continue
            fx = Fraction(cell[v][0]).limit_denominator(97)
            fy = Fraction(cell[v][1]).limit_denominator(97)
            w = pairing[v]
            if w == v:
                fx = Fraction(round(2 * cell[v][0]), 2)
                fy = Fraction(round(2 * cell[v][1]), 2)
                rat[v] = (fx % 1, fy % 1)
            else:
                rat[v] = (fx, fy)
                rat[w] = ((-fx) % 1, (-fy) % 1)
    assert len(set(rat)) == nv, f"{spec.tag}: rational coords collide"

    return {
        "cell": cell, "rat": rat, "edges": edges, "faces": faces,
        "vtypes": vtypes,
    }


def cyc_eq(a, b):
    if len(a) != len(b):
        return False
    for rev in (a, a[::-1]):
        for r in range(len(rev)):
            if rev[r:] + rev[:r] == b:
                return True
    return False


def main():
    specs = make_specs()
    out = []
    out.append("#pragma once")
    out.append("// Generated by scripts/generate_tiling_data.py -- do not edit by hand.")
    out.append("")
    out.append("namespace tormap::data {")
    out.append("")
    out.append("struct RawVertex { long long xn, xd, yn, yd; const char* type; };")
    out.append("struct RawEdge { int v1, v2, sx, sy; };")
    out.append("struct RawSlot { int edge, dir, sx, sy; };")
    out.append("struct RawBasisVec { long long p, q, den; };  // (p + q*sqrt(d)) / den")
    out.append("struct RawTiling {")
    out.append("  const char* tag;")
    out.append("  const char* vertex_type;     // empty when not semi-equivelar")
    out.append("  const char* edge_symbol;     // \"m,l,u,v\" or empty")
    out.append("  const char* dual_tag;        // empty when outside the dual table")
    out.append("  const char* assoc_tag;       // associated equivelar tag, or empty")
    out.append("  const char* point_group;     // D6, D4, D2 or Z6")
    out.append("  int plane_edge_orbits;")
    out.append("  int num_vertices, num_edges, num_faces;")
    out.append("  const RawVertex* vertices;")
    out.append("  const RawEdge* edges;")
    out.append("  const int* face_sizes;")
    out.append("  const RawSlot* face_slots;   // concatenated walks")
    out.append("  int basis_surd;              // d in sqrt(d); 0 when no closed form is stored")
    out.append("  RawBasisVec ax, ay, bx, by;")
    out.append("};")
    out.append("")

    names = []
    for spec in specs:
        data = build(spec)
        # sanity: every semi-equivelar vertex has the declared cycle
        want = [int(t) for t in (spec.vertex_type or "").split(".") if t]
        for v, cyc in enumerate(data["vtypes"]):
            if want:
                assert cyc_eq(cyc, want), (spec.tag, v, cyc, want)
        ident = spec.tag.replace("^", "_").replace(".", "_")
        names.append(ident)
        nv, ne, nf = len(data["cell"]), len(data["edges"]), len(data["faces"])

        vt_strings = []
        for cyc in data["vtypes"]:
            vt_strings.append(".".join(str(t) for t in cyc))

        out.append(f"inline constexpr RawVertex k_{ident}_vertices[] = {{")
        for (fx, fy), vt in zip(data["rat"], vt_strings):
            out.append(f"  {{{fx.numerator}, {fx.denominator}, "
                       f"{fy.numerator}, {fy.denominator}, \"{vt}\"}},")
        out.append("};")
        out.append(f"inline constexpr RawEdge k_{ident}_edges[] = {{")
        for (i, j, sx, sy) in data["edges"]:
            out.append(f"  {{{i}, {j}, {sx}, {sy}}},")
        out.append("};")
        sizes = ", ".join(str(len(f)) for f in data["faces"])
        out.append(f"inline constexpr int k_{ident}_face_sizes[] = {{{sizes}}};")
        out.append(f"inline constexpr RawSlot k_{ident}_face_slots[] = {{")
        for f in data["faces"]:
            # Slot shift = the cell the edge copy lives in; a reversed dart
            # starts at the copy's v2 end, offset from the copy by the edge's
            # own shift.
            def copy_cell(e, en, sx, sy):
                if en == 0:
                    return sx, sy
                _, _, ex, ey = data["edges"][e]
                return sx - ex, sy - ey
            row = ", ".join(
                "{{{}, {}, {}, {}}}".format(e, en, *copy_cell(e, en, sx, sy))
                for e, en, sx, sy in f)
            out.append(f"  {row},")
        out.append("};")
        out.append("")

        es = ",".join(str(x) for x in spec.edge_symbol) if spec.edge_symbol else ""
        be = spec.basis_exact
        if be is None:
            surd = 0
            vecs = "{0,0,1}, {0,0,1}, {0,0,1}, {0,0,1}"
        else:
            surd = be[4]
            vecs = ", ".join(f"{{{p}, {q}, {den}}}" for p, q, den in be[:4])
        out.append(f"inline constexpr RawTiling k_{ident} = {{")
        out.append(f"  \"{spec.tag}\", \"{spec.vertex_type or ''}\", \"{es}\", "
                   f"\"{spec.dual or ''}\", \"{spec.assoc or ''}\", "
                   f"\"{spec.point_group}\", {spec.plane_orbits},")
        out.append(f"  {nv}, {ne}, {nf},")
        out.append(f"  k_{ident}_vertices, k_{ident}_edges, "
                   f"k_{ident}_face_sizes, k_{ident}_face_slots,")
        out.append(f"  {surd}, {vecs},")
        out.append("};")
        out.append("")
        print(f"{spec.tag:10s} V={nv:2d} E={ne:2d} F={nf:2d} "
              f"types={sorted(set(vt_strings))}")

    out.append("inline constexpr const RawTiling* k_all_tilings[] = {")
    for ident in names:
        out.append(f"  &k_{ident},")
    out.append("};")
    out.append("inline constexpr int k_num_tilings = "
               f"{len(names)};")
    out.append("")
    out.append("}  // namespace tormap::data")
    out.append("")

    with open("include/tormap/tiling_data.hpp", "w") as fh:
        fh.write("\n".join(out))
    print("wrote include/tormap/tiling_data.hpp")


if __name__ == "__main__":
    sys.exit(main())
