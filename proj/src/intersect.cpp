#include "foldatlas/intersect.hpp"

#include <algorithm>
#include <cassert>

namespace foldatlas {

namespace {

// An infinite ray leaving the hub: dir=+1 follows the word forward from
// strand `base` (letters w[base], w[base+1], ...), dir=-1 follows it
// backward (letters w[base-1]^-1, w[base-2]^-1, ...).
struct Ray {
    const std::vector<Letter>* w;
    long base;
    int dir;

    Letter letter(long k) const {
        long n = static_cast<long>(w->size());
        if (dir > 0) {
            return (*w)[static_cast<std::size_t>(((base + k) % n + n) % n)];
        }
        long i = ((base - 1 - k) % n + n) % n;
        return inv((*w)[static_cast<std::size_t>(i)]);
    }
};

// Order of two rays inside the circular boundary order, as (side of first
// exit, position along that side). Returns -1 if a comes earlier in the
// linear cut at the corner before side 0, +1 if later, 0 if the rays are
// equal to depth `maxlen` (parallel strands).
int cmp_rays(const SurfaceModel& m, const Ray& a, const Ray& b, long maxlen) {
    int sa = m.exit_side(a.letter(0));
    int sb = m.exit_side(b.letter(0));
    if (sa != sb) return sa < sb ? -1 : +1;
    // Same first side: tie-break by where the strands go next. Gluing
    // reverses side ends, so position along the shared side corresponds
    // to view order of the next exit as seen from the re-entry side.
    for (long k = 1; k < maxlen; k++) {
        Letter pa = a.letter(k - 1);
        int sprime = m.partner[m.exit_side(pa)];
        int xa = m.exit_side(a.letter(k));
        int xb = m.exit_side(b.letter(k));
        if (xa != xb) {
            int va = ((xa - sprime - 1) % m.num_sides + m.num_sides) % m.num_sides;
            int vb = ((xb - sprime - 1) % m.num_sides + m.num_sides) % m.num_sides;
            return va < vb ? -1 : +1;
        }
    }
    return 0;
}

struct StrandRays {
    Ray out;
    Ray in;
};

StrandRays strand_rays(const std::vector<Letter>& w, long i) {
    return StrandRays{Ray{&w, i, +1}, Ray{&w, i, -1}};
}

// Analysis of one strand pair: whether they cross, the crossing sign, and
// which ray of b sits inside the linear span of a's rays (used to order
// crossings along a's strand).
//
// Two strands that enter the polygon through the same side share a
// backward corridor; a crossing between such strands is attributed to the
// domain where their backward rays diverge, so pairs with equal entry
// letters are skipped. With positions sorted by the divergence order on
// both ends, corridors carry no interior crossings and each geometric
// crossing is counted exactly once.
struct PairInfo {
    bool cross = false;
    int sign = 0;
    bool between_is_out = false; // b.out (vs b.in) lies in a's linear span
    Ray between{nullptr, 0, 0};
};

PairInfo analyze_pair(const SurfaceModel& m, const StrandRays& ra,
                      const StrandRays& rb, long L) {
    PairInfo p;
    int oo = cmp_rays(m, ra.out, rb.out, L);
    int oi = cmp_rays(m, ra.out, rb.in, L);
    int io = cmp_rays(m, ra.in, rb.out, L);
    int ii = cmp_rays(m, ra.in, rb.in, L);
    if (oo == 0 || oi == 0 || io == 0 || ii == 0) return p;
    bool bo_between = (oo < 0 && io > 0) || (oo > 0 && io < 0);
    bool bi_between = (oi < 0 && ii > 0) || (oi > 0 && ii < 0);
    if (bo_between == bi_between) return p;
    p.cross = true;
    p.between_is_out = bo_between;
    p.between = bo_between ? rb.out : rb.in;
    // Sign: positive when b's outgoing ray is reached first when walking
    // the boundary circle from a's incoming ray toward a's outgoing ray.
    // With the linear cut, walking from in to out passes exactly the rays
    // inside the span when in < out, and exactly those outside otherwise.
    bool in_before_out = (cmp_rays(m, ra.in, ra.out, L) < 0);
    bool bout_inside = bo_between;
    p.sign = (bout_inside == in_before_out) ? -1 : +1;
    return p;
}

} // namespace

std::vector<CrossingRef> curve_crossings(const Curve& a, const Curve& b) {
    if (!(a.surface == b.surface))
        throw FoldError("E_SURFACE_MISMATCH", "curves live on different surfaces");
    std::vector<CrossingRef> out;
    if (a.word.empty() || b.word.empty()) return out;
    if (canonical_unoriented(a.word) == canonical_unoriented(b.word)) return out;
    const SurfaceModel& m = SurfaceModel::get(a.surface);
    long na = static_cast<long>(a.word.size());
    long nb = static_cast<long>(b.word.size());
    long L = na + nb + 4;

    for (long i = 0; i < na; i++) {
        StrandRays ra = strand_rays(a.word.letters, i);
        Letter ea = a.word.at_mod(i - 1);
        for (long j = 0; j < nb; j++) {
            // Attribute each crossing to the start of its shared corridor:
            // skip pairs still linked backward, parallel or anti-parallel.
            if (b.word.at_mod(j - 1) == ea) continue;
            if (inv(b.word.at_mod(j)) == ea) continue;
            StrandRays rb = strand_rays(b.word.letters, j);
            PairInfo p = analyze_pair(m, ra, rb, L);
            if (p.cross) out.push_back(CrossingRef{i, j, p.sign});
        }
    }
    return out;
}

long geometric_intersection(const Curve& a, const Curve& b) {
    return static_cast<long>(curve_crossings(a, b).size());
}

std::vector<TwistCrossing> twist_crossings(const Curve& x, const Curve& c) {
    if (!(x.surface == c.surface))
        throw FoldError("E_SURFACE_MISMATCH", "curves live on different surfaces");
    std::vector<TwistCrossing> out;
    if (x.word.empty() || c.word.empty()) return out;
    if (canonical_unoriented(x.word) == canonical_unoriented(c.word)) return out;
    const SurfaceModel& m = SurfaceModel::get(x.surface);
    long nx = static_cast<long>(x.word.size());
    long nc = static_cast<long>(c.word.size());
    long L = nx + nc + 4;

    for (long i = 0; i < nx; i++) {
        StrandRays rx = strand_rays(x.word.letters, i);
        bool in_before_out = (cmp_rays(m, rx.in, rx.out, L) < 0);
        struct Hit {
            long j;
            int sign;
            Ray between;
        };
        std::vector<Hit> hits;
        Letter ex = x.word.at_mod(i - 1);
        for (long j = 0; j < nc; j++) {
            if (c.word.at_mod(j - 1) == ex) continue;
            if (inv(c.word.at_mod(j)) == ex) continue;
            StrandRays rc = strand_rays(c.word.letters, j);
            PairInfo p = analyze_pair(m, rx, rc, L);
            if (p.cross) hits.push_back(Hit{j, p.sign, p.between});
        }
        // Order along the strand from its incoming end: between-rays all
        // lie in the linear span of (in, out); distance from the in-ray
        // increases with the linear order iff in < out.
        std::sort(hits.begin(), hits.end(), [&](const Hit& h1, const Hit& h2) {
            int cp = cmp_rays(m, h1.between, h2.between, L);
            return in_before_out ? (cp < 0) : (cp > 0);
        });
        for (const Hit& h : hits)
            out.push_back(TwistCrossing{i, h.j, h.sign});
    }
    return out;
}

long algebraic_intersection_curves(const Curve& a, const Curve& b) {
    long s = 0;
    for (const CrossingRef& c : curve_crossings(a, b)) s += c.sign;
    return s;
}

long self_crossings(const Surface& s, const Word& w0) {
    Word w = canonical_oriented(w0);
    long n = static_cast<long>(w.size());
    if (n <= 1) return 0;
    const SurfaceModel& m = SurfaceModel::get(s);
    long L = 2 * n + 4;
    long count = 0;
    for (long i = 0; i < n; i++) {
        StrandRays ra = strand_rays(w.letters, i);
        Letter ea = w.at_mod(i - 1);
        for (long j = 0; j < n; j++) {
            if (j == i) continue;
            if (w.at_mod(j - 1) == ea) continue;
            if (inv(w.at_mod(j)) == ea) continue;
            StrandRays rb = strand_rays(w.letters, j);
            PairInfo p = analyze_pair(m, ra, rb, L);
            if (p.cross) count++;
        }
    }
    // Every geometric self-crossing is seen once from each of its two
    // ordered strand pairs.
    if (count % 2 != 0)
        throw FoldError("E_INTERNAL", "odd self-crossing tally");
    return count / 2;
}

HomologyClass homology_class(const Curve& c) {
    int g = c.surface.genus;
    HomologyClass h(static_cast<std::size_t>(2 * g), 0);
    for (Letter l : c.word.letters) {
        int gate = gate_of(l);
        if (gate < 2 * g) h[static_cast<std::size_t>(gate)] += sign_of(l);
    }
    return h;
}

long algebraic_intersection(const Surface& s, const HomologyClass& h1,
                            const HomologyClass& h2) {
    if (h1.size() != static_cast<std::size_t>(2 * s.genus) || h1.size() != h2.size())
        throw FoldError("E_GENUS_MISMATCH", "homology classes have wrong rank");
    long v = 0;
    for (int i = 0; i < s.genus; i++)
        v += h1[2 * i] * h2[2 * i + 1] - h1[2 * i + 1] * h2[2 * i];
    return v;
}

bool is_nonseparating(const Curve& c) {
    for (long x : homology_class(c))
        if (x != 0) return true;
    return false;
}

Curve standard_curve_A(const Surface& s, int i) {
    if (i < 1 || i > s.genus) throw FoldError("E_INDEX", "basis index out of range");
    return Curve(s, Word{{make_letter(2 * (i - 1), +1)}});
}

Curve standard_curve_B(const Surface& s, int i) {
    if (i < 1 || i > s.genus) throw FoldError("E_INDEX", "basis index out of range");
    return Curve(s, Word{{make_letter(2 * (i - 1) + 1, +1)}});
}

GeometricBasis standard_basis(const Surface& s) {
    if (s.genus < 1) throw FoldError("E_GENUS", "standard basis needs genus >= 1");
    GeometricBasis b;
    b.surface = s;
    for (int i = 1; i <= s.genus; i++)
        b.pairs.emplace_back(standard_curve_A(s, i), standard_curve_B(s, i));
    return b;
}

bool basis_invariants_hold(const GeometricBasis& b, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::size_t h = b.pairs.size();
    for (std::size_t i = 0; i < h; i++) {
        if (geometric_intersection(b.pairs[i].first, b.pairs[i].second) != 1)
            return fail("i(A_" + std::to_string(i + 1) + ", B_" + std::to_string(i + 1) + ") != 1");
        for (std::size_t j = i + 1; j < h; j++) {
            for (const Curve* x : {&b.pairs[i].first, &b.pairs[i].second})
                for (const Curve* y : {&b.pairs[j].first, &b.pairs[j].second})
                    if (geometric_intersection(*x, *y) != 0)
                        return fail("pairs " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " are not disjoint");
        }
    }
    std::vector<Word> classes;
    for (auto& [A, B] : b.pairs) {
        classes.push_back(canonical_unoriented(A.word));
        classes.push_back(canonical_unoriented(B.word));
    }
    std::sort(classes.begin(), classes.end());
    if (std::adjacent_find(classes.begin(), classes.end()) != classes.end())
        return fail("basis curves are not pairwise non-isotopic");
    return true;
}

} // namespace foldatlas
