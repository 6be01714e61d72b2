#include "foldatlas/curve.hpp"

#include <algorithm>
#include <cassert>

namespace foldatlas {

namespace {

struct ArcEnd {
    long other = -1;    // point id of the far end of the arc
    int other_end = -1; // which end slot at the far point
    int side = -1;      // polygon side of this end's slot, -1 for diagonals
};

} // namespace

TraceResult trace_coords(const Surface& s, const std::vector<long>& coords) {
    const SurfaceModel& m = SurfaceModel::get(s);
    TraceResult res;
    if (m.num_tri_edges == 0)
        throw FoldError("E_TRIANGULATION", "no public triangulation for this surface");
    if (static_cast<int>(coords.size()) != m.num_tri_edges)
        throw FoldError("E_COORDS", "expected " + std::to_string(m.num_tri_edges) + " weights");
    for (long w : coords)
        if (w < 0) {
            res.matching_ok = false;
            res.matching_error = "negative weight";
            return res;
        }

    std::vector<Triangle> tris = fan_triangles(m);
    for (std::size_t t = 0; t < tris.size(); t++) {
        long x = coords[tris[t].s[0].edge];
        long y = coords[tris[t].s[1].edge];
        long z = coords[tris[t].s[2].edge];
        if ((x + y + z) % 2 != 0) {
            res.matching_ok = false;
            res.matching_error = "parity failure in triangle " + std::to_string(t + 1);
            return res;
        }
        if (x > y + z || y > z + x || z > x + y) {
            res.matching_ok = false;
            res.matching_error = "triangle inequality failure in triangle " + std::to_string(t + 1);
            return res;
        }
    }

    // Point ids per edge.
    std::vector<long> offset(m.num_tri_edges + 1, 0);
    for (int e = 0; e < m.num_tri_edges; e++) offset[e + 1] = offset[e] + coords[e];
    long npts = offset[m.num_tri_edges];
    std::vector<std::vector<ArcEnd>> ends(npts);

    // Position along a slot traversal -> global point id. Polygon-side
    // slots are traversed in the side's own boundary direction; the gate
    // edge is oriented along its positive side, so negative sides reverse.
    auto point_at = [&](const TriSlot& sl, long pos) -> long {
        long w = coords[sl.edge];
        long idx;
        if (sl.side >= 0)
            idx = (m.side_sign[sl.side] > 0) ? pos : (w - 1 - pos);
        else
            idx = sl.forward ? pos : (w - 1 - pos);
        return offset[sl.edge] + idx;
    };

    auto connect = [&](const TriSlot& a, long pa, const TriSlot& b, long pb) {
        long u = point_at(a, pa), v = point_at(b, pb);
        int eu = static_cast<int>(ends[u].size());
        int ev = static_cast<int>(ends[v].size());
        ends[u].push_back(ArcEnd{v, ev, a.side});
        ends[v].push_back(ArcEnd{u, eu, b.side});
    };

    for (const Triangle& t : tris) {
        long x = coords[t.s[0].edge];
        long y = coords[t.s[1].edge];
        long z = coords[t.s[2].edge];
        long n1 = (x + y - z) / 2; // corner between slots 0 and 1
        long n2 = (y + z - x) / 2; // between slots 1 and 2
        long n0 = (z + x - y) / 2; // between slots 2 and 0
        for (long j = 0; j < n0; j++) connect(t.s[2], z - 1 - j, t.s[0], j);
        for (long j = 0; j < n1; j++) connect(t.s[0], x - 1 - j, t.s[1], j);
        for (long j = 0; j < n2; j++) connect(t.s[1], y - 1 - j, t.s[2], j);
    }

    for (long p = 0; p < npts; p++)
        assert(ends[p].size() == 2);

    // Walk components. Arriving at a gate point via the arc on side s
    // means the curve exits the polygon through s at that crossing.
    std::vector<bool> visited(npts, false);
    for (long start = 0; start < npts; start++) {
        if (visited[start]) continue;
        std::vector<Letter> word;
        long cur = start;
        int in_end = 0; // seed: pretend we arrived via end 0
        do {
            visited[cur] = true;
            const ArcEnd& arrive = ends[cur][in_end];
            if (arrive.side >= 0)
                word.push_back(m.crossing_letter(arrive.side));
            const ArcEnd& depart = ends[cur][1 - in_end];
            cur = depart.other;
            in_end = depart.other_end;
        } while (!(cur == start && in_end == 0));
        res.components.push_back(canonical_oriented(Word{std::move(word)}));
    }
    return res;
}

std::vector<Chord> polygon_chords(const SurfaceModel& m, const Word& w) {
    std::vector<Chord> out;
    std::size_t n = w.size();
    out.reserve(n);
    for (std::size_t i = 0; i < n; i++) {
        Letter prev = w.letters[(i + n - 1) % n];
        Letter cur = w.letters[i];
        out.push_back(Chord{m.enter_side(prev), m.exit_side(cur)});
    }
    return out;
}

std::vector<long> normal_coords(const Curve& c) {
    const SurfaceModel& m = SurfaceModel::get(c.surface);
    if (m.num_tri_edges == 0)
        throw FoldError("E_TRIANGULATION", "no public triangulation for this surface");
    std::vector<long> coords(m.num_tri_edges, 0);
    int g = c.surface.genus;
    int ns = m.num_sides;
    for (Letter l : c.word.letters) coords[gate_of(l)]++;
    std::vector<Chord> chords = polygon_chords(m, c.word);
    for (int k = 2; k <= ns - 2; k++) {
        long cnt = 0;
        for (const Chord& ch : chords) {
            bool a = ch.from_side < k;
            bool b = ch.to_side < k;
            if (a != b) cnt++;
        }
        coords[2 * g + (k - 2)] = cnt;
    }
    return coords;
}

CurveValidation validate_curve(const Surface& s, const std::vector<long>& coords) {
    CurveValidation v;
    TraceResult tr = trace_coords(s, coords);
    if (!tr.matching_ok) {
        v.reject = CurveReject::MatchingCondition;
        v.detail = tr.matching_error;
        return v;
    }
    if (tr.components.empty()) {
        v.reject = CurveReject::Empty;
        v.detail = "zero weights describe the empty multicurve";
        return v;
    }
    if (tr.components.size() > 1) {
        v.reject = CurveReject::MultiComponent;
        v.detail = "traced " + std::to_string(tr.components.size()) + " components";
        return v;
    }
    const SurfaceModel& m = SurfaceModel::get(s);
    const Word& w = tr.components[0];
    if (w.empty() || is_closed_trivial(m, w)) {
        v.reject = CurveReject::NullHomotopic;
        v.detail = "component is null-homotopic in the closed surface";
        return v;
    }
    v.curve = Curve(s, w);
    return v;
}

Curve curve_from_word(const Surface& s, const Word& w) {
    return Curve(s, w);
}

} // namespace foldatlas
