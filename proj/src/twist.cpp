#include "foldatlas/twist.hpp"

#include <algorithm>

namespace foldatlas {

Curve apply_twist(const Curve& c, int k, const Curve& x) {
    if (!(c.surface == x.surface))
        throw FoldError("E_SURFACE_MISMATCH", "twist curve and target live on different surfaces");
    if (k == 0 || c.word.empty() || x.word.empty()) return x;
    std::vector<TwistCrossing> cr = twist_crossings(x, c);
    if (cr.empty()) return x;

    long n = static_cast<long>(x.word.size());
    long m = static_cast<long>(c.word.size());
    std::vector<Letter> out;
    out.reserve(x.word.size() + cr.size() * c.word.size() * static_cast<std::size_t>(std::abs(k)));
    std::size_t pos = 0;
    for (long i = 0; i < n; i++) {
        // Insertions at strand i (the hub passage before letter x_i), in
        // encounter order along the strand.
        while (pos < cr.size() && cr[pos].x_strand == i) {
            long j = cr[pos].c_strand;
            int e = -k * cr[pos].sign;
            if (e > 0) {
                for (int rep = 0; rep < e; rep++)
                    for (long t = 0; t < m; t++)
                        out.push_back(c.word.letters[(j + t) % m]);
            } else {
                for (int rep = 0; rep < -e; rep++)
                    for (long t = 0; t < m; t++)
                        out.push_back(inv(c.word.letters[((j - 1 - t) % m + m) % m]));
            }
            pos++;
        }
        out.push_back(x.word.letters[i]);
    }
    return Curve(x.surface, Word{std::move(out)});
}

Curve apply(const TwistWord& w, const Curve& x) {
    if (!(w.surface == x.surface))
        throw FoldError("E_SURFACE_MISMATCH", "word and curve live on different surfaces");
    Curve cur = x;
    // Letters act right-to-left.
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        cur = apply_twist(it->first, it->second, cur);
    return cur;
}

TwistWord compose(const TwistWord& u, const TwistWord& v) {
    if (!(u.surface == v.surface))
        throw FoldError("E_SURFACE_MISMATCH", "composing words on different surfaces");
    TwistWord r(u.surface);
    r.letters = u.letters;
    for (const auto& l : v.letters) {
        if (!r.letters.empty() && r.letters.back().first.same_oriented(l.first) &&
            r.letters.back().second + l.second == 0)
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

TwistWord invert(const TwistWord& u) {
    TwistWord r(u.surface);
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
        r.letters.emplace_back(it->first, -it->second);
    return r;
}

TwistWord twist(const Curve& c, int k) {
    TwistWord w(c.surface);
    if (k != 0) w.letters.emplace_back(c, k);
    return w;
}

std::vector<Curve> standard_generators(const Surface& s) {
    std::vector<Curve> gen;
    int g = s.genus;
    if (g >= 1) {
        gen.push_back(standard_curve_A(s, 1));
        gen.push_back(standard_curve_B(s, 1));
        for (int i = 1; i < g; i++) {
            // Connector between handles i and i+1: meets B_i and B_{i+1}
            // once, disjoint from every other basis curve and from the
            // neighboring connectors.
            Word chi{{make_letter(2 * (i - 1), +1), make_letter(2 * i - 1, +1),
                      make_letter(2 * i, -1), make_letter(2 * i - 1, -1)}};
            gen.push_back(Curve(s, chi));
            gen.push_back(standard_curve_B(s, i + 1));
        }
        if (g >= 2) gen.push_back(standard_curve_A(s, 2));
    }
    if (s.marked == 2) {
        int c1 = 2 * g, c2 = 2 * g + 1;
        gen.push_back(Curve(s, Word{{make_letter(c1, +1), make_letter(c2, +1)}}));
        if (g >= 1) {
            gen.push_back(Curve(s, Word{{make_letter(c1, +1), make_letter(0, +1)}}));
            gen.push_back(Curve(s, Word{{make_letter(c2, +1), make_letter(0, +1)}}));
        }
    }
    return gen;
}

std::vector<Curve> filling_configuration(const Surface& s) {
    std::vector<Curve> cfg = standard_generators(s);
    int g = s.genus;
    for (int i = 1; i <= g; i++) {
        cfg.push_back(standard_curve_A(s, i));
        cfg.push_back(standard_curve_B(s, i));
    }
    if (s.marked == 2) {
        cfg.push_back(Curve(s, Word{{make_letter(2 * g, +1)}}));
        cfg.push_back(Curve(s, Word{{make_letter(2 * g + 1, +1)}}));
    }
    std::sort(cfg.begin(), cfg.end(),
              [](const Curve& a, const Curve& b) { return a.word < b.word; });
    cfg.erase(std::unique(cfg.begin(), cfg.end(),
                          [](const Curve& a, const Curve& b) { return a.word == b.word; }),
              cfg.end());
    return cfg;
}

bool is_identity(const TwistWord& w) {
    for (const Curve& c : filling_configuration(w.surface))
        if (!apply(w, c).same_oriented(c)) return false;
    return true;
}

IntMatrix identity_matrix(int n) {
    IntMatrix m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; i++) m[i][i] = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    IntMatrix r(n, std::vector<long>(p, 0));
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < k; j++) {
            long aij = a[i][j];
            if (aij == 0) continue;
            for (std::size_t l = 0; l < p; l++) r[i][l] += aij * b[j][l];
        }
    return r;
}

IntMatrix homology_action(const TwistWord& w) {
    int n = 2 * w.surface.genus;
    IntMatrix m = identity_matrix(n);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        HomologyClass c = homology_class(it->first);
        long k = it->second;
        // T_c^k on homology: h -> h + k <c,h> c.
        IntMatrix t = identity_matrix(n);
        for (int col = 0; col < n; col++) {
            HomologyClass e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(col)] = 1;
            long pairing = algebraic_intersection(w.surface, c, e);
            for (int row = 0; row < n; row++) t[row][col] += k * pairing * c[row];
        }
        m = matmul(t, m);
    }
    return m;
}

bool is_symplectic(const Surface& s, const IntMatrix& m) {
    int n = 2 * s.genus;
    IntMatrix J(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < s.genus; i++) {
        J[2 * i][2 * i + 1] = 1;
        J[2 * i + 1][2 * i] = -1;
    }
    IntMatrix mt(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) mt[i][j] = m[j][i];
    return matmul(matmul(mt, J), m) == J;
}

} // namespace foldatlas
