#include "foldatlas/surface.hpp"

#include <map>
#include <mutex>

namespace foldatlas {

namespace {

SurfaceModel build_model(const Surface& s) {
    SurfaceModel m;
    m.surface = s;
    int g = s.genus;

    if (g == 0 && s.marked == 0) {
        // Sphere: bigon e e^-.
        m.num_gates = 1;
        m.num_sides = 2;
        m.side_gate = {0, 0};
        m.side_sign = {+1, -1};
        m.partner = {1, 0};
        m.gate_side_pos = {0};
        m.gate_side_neg = {1};
        m.corner_class = {0, 0};
        return m;
    }

    // [a_1,b_1]...[a_g,b_g] handle blocks, then c_1 c_1^- c_2 c_2^- slits
    // when marked.
    m.num_gates = 2 * g + (s.marked == 2 ? 2 : 0);
    m.num_sides = 4 * g + (s.marked == 2 ? 4 : 0);
    m.side_gate.assign(m.num_sides, -1);
    m.side_sign.assign(m.num_sides, 0);
    m.partner.assign(m.num_sides, -1);
    m.gate_side_pos.assign(m.num_gates, -1);
    m.gate_side_neg.assign(m.num_gates, -1);

    for (int i = 0; i < g; i++) {
        int base = 4 * i;
        int ga = 2 * i, gb = 2 * i + 1;
        m.side_gate[base + 0] = ga; m.side_sign[base + 0] = +1;
        m.side_gate[base + 1] = gb; m.side_sign[base + 1] = +1;
        m.side_gate[base + 2] = ga; m.side_sign[base + 2] = -1;
        m.side_gate[base + 3] = gb; m.side_sign[base + 3] = -1;
        m.partner[base + 0] = base + 2;
        m.partner[base + 2] = base + 0;
        m.partner[base + 1] = base + 3;
        m.partner[base + 3] = base + 1;
        m.gate_side_pos[ga] = base + 0;
        m.gate_side_neg[ga] = base + 2;
        m.gate_side_pos[gb] = base + 1;
        m.gate_side_neg[gb] = base + 3;
    }
    if (s.marked == 2) {
        for (int i = 0; i < 2; i++) {
            int base = 4 * g + 2 * i;
            int gc = 2 * g + i;
            m.side_gate[base + 0] = gc; m.side_sign[base + 0] = +1;
            m.side_gate[base + 1] = gc; m.side_sign[base + 1] = -1;
            m.partner[base + 0] = base + 1;
            m.partner[base + 1] = base + 0;
            m.gate_side_pos[gc] = base + 0;
            m.gate_side_neg[gc] = base + 1;
        }
    }

    // Corner classes. Corner j sits between side j-1 and side j; the tip
    // between c_i and c_i^- is the marked point p_i.
    m.corner_class.assign(m.num_sides, 0);
    if (s.marked == 2) {
        m.corner_class[4 * g + 1] = 1;
        m.corner_class[4 * g + 3] = 2;
    }

    // Vertex link of v: chain corner-cutting arcs. The arc at corner j
    // runs from side j-1 to side j; crossing out through side j we
    // reappear on partner(j) at the far end.
    {
        std::vector<Letter> link;
        // Start at the corner between side (num_sides-1) and side 0,
        // skipping marked corners is unnecessary: marked corners are never
        // reached from v's corners by the corner walk.
        int side = 0; // about to cross out through this side
        int first_side = side;
        do {
            link.push_back(m.crossing_letter(side));
            int in = m.partner[side];
            // Gluing reverses side ends, so we arrive next to the corner
            // after `in`; the next arc cuts that corner and exits through
            // the following side. Marked corners are never reached: the
            // walk enters a slit through c_i and leaves past the far side.
            side = (in + 1) % m.num_sides;
        } while (side != first_side);
        m.link_relator = Word{link};
        m.vertex_link = canonical_unoriented(Word{std::move(link)});
    }

    if (s.marked == 0 && g >= 1) {
        m.num_tri_edges = 6 * g - 3;
        m.num_triangles = 4 * g - 2;
    }
    return m;
}

} // namespace

std::string SurfaceModel::gate_name(int gate) const {
    int g = surface.genus;
    if (surface.genus == 0 && surface.marked == 0) return "e";
    if (gate < 2 * g)
        return (gate % 2 == 0 ? "a" : "b") + std::to_string(gate / 2 + 1);
    return "c" + std::to_string(gate - 2 * g + 1);
}

const SurfaceModel& SurfaceModel::get(const Surface& s) {
    static std::map<std::pair<int, int>, SurfaceModel> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(s.genus, s.marked);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_model(s)).first;
    return it->second;
}

std::vector<Triangle> fan_triangles(const SurfaceModel& m) {
    int g = m.surface.genus;
    if (m.surface.marked != 0 || g < 1)
        throw FoldError("E_TRIANGULATION", "fan triangulation needs an unmarked surface of genus >= 1");
    int ns = m.num_sides; // 4g
    std::vector<Triangle> tris;
    auto rail = [&](int j) -> TriSlot {
        // The j-th fan rail, j in [1, 4g-1]: side s_0 for j=1, side
        // s_{4g-1} for j=4g-1, else diagonal d_j with id 2g + (j-2).
        if (j == 1) return TriSlot{m.side_gate[0], true, 0};
        if (j == ns - 1) return TriSlot{m.side_gate[ns - 1], true, ns - 1};
        return TriSlot{2 * g + (j - 2), true, -1};
    };
    for (int k = 1; k <= ns - 2; k++) {
        Triangle t;
        t.s[0] = rail(k); // corner 0 -> corner k
        t.s[1] = TriSlot{m.side_gate[k], true, k}; // corner k -> k+1
        t.s[2] = rail(k + 1); // traversed corner k+1 -> corner 0
        t.s[2].forward = (k + 1 == ns - 1); // s_{4g-1} runs toward corner 0
        tris.push_back(t);
    }
    return tris;
}

namespace {

// Dehn's algorithm on the closed genus-g surface group (g >= 2). In
// gate-crossing letters the relator is the vertex link word; its cyclic
// rotations and their inverses share no two-letter subword, so the
// presentation is C'(1/6) and any nonempty cyclically reduced word
// representing 1 contains more than half of some rotation.
bool dehn_trivial_impl(const SurfaceModel& m, Word w) {
    std::vector<Letter> rel;
    for (Letter l : m.link_relator.letters)
        if (gate_of(l) < 2 * m.surface.genus) rel.push_back(l);
    int R = static_cast<int>(rel.size()); // 4g
    auto rel_at = [&](int i, bool inverse) -> Letter {
        int n = R;
        int k = ((i % n) + n) % n;
        return inverse ? inv(rel[(n - 1 - k + n) % n]) : rel[k];
    };

    w = cyclic_reduce(w);
    while (!w.empty()) {
        int n = static_cast<int>(w.size());
        bool progressed = false;
        // Look for a subword of w matching > R/2 consecutive letters of a
        // rotation of rel or rel^-1.
        for (int start = 0; start < n && !progressed; start++) {
            for (int invflag = 0; invflag < 2 && !progressed; invflag++) {
                for (int roff = 0; roff < R && !progressed; roff++) {
                    int len = 0;
                    while (len < n && len < R &&
                           w.at_mod(start + len) == rel_at(roff + len, invflag))
                        len++;
                    if (2 * len > R) {
                        // Replace matched piece by the inverse of the rest
                        // of the relator: strictly shorter.
                        std::vector<Letter> out;
                        for (int i = len; i < n; i++)
                            out.push_back(w.at_mod(start + i));
                        for (int i = R - 1; i >= len; i--)
                            out.push_back(inv(rel_at(roff + i, invflag)));
                        w = cyclic_reduce(Word{std::move(out)});
                        progressed = true;
                    }
                }
            }
        }
        if (!progressed) return false;
    }
    return true;
}

} // namespace

bool is_closed_trivial(const SurfaceModel& m, const Word& w0) {
    // Delete marked-point letters: their loops bound disks in the closed
    // surface.
    Word w;
    for (Letter l : w0.letters)
        if (gate_of(l) < 2 * m.surface.genus) w.letters.push_back(l);
    w = cyclic_reduce(w);
    if (w.empty()) return true;
    int g = m.surface.genus;
    if (g == 0) return true;
    if (g == 1) {
        long ea = 0, eb = 0;
        for (Letter l : w.letters) {
            if (gate_of(l) == 0) ea += sign_of(l);
            else eb += sign_of(l);
        }
        return ea == 0 && eb == 0;
    }
    return dehn_trivial_impl(m, w);
}

} // namespace foldatlas
