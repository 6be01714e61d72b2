#include "foldatlas/word.hpp"

#include <algorithm>

namespace foldatlas {

Letter Word::at_mod(long i) const {
    long n = static_cast<long>(letters.size());
    long k = ((i % n) + n) % n;
    return letters[static_cast<std::size_t>(k)];
}

Word Word::inverse() const {
    Word r;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        r.letters.push_back(inv(*it));
    return r;
}

Word Word::rotated(std::size_t k) const {
    Word r;
    std::size_t n = letters.size();
    if (n == 0) return r;
    k %= n;
    r.letters.reserve(n);
    for (std::size_t i = 0; i < n; i++)
        r.letters.push_back(letters[(i + k) % n]);
    return r;
}

bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }

bool operator<(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size())
        return a.letters.size() < b.letters.size();
    return std::lexicographical_compare(a.letters.begin(), a.letters.end(),
                                        b.letters.begin(), b.letters.end());
}

Word free_reduce(const Word& w) {
    Word r;
    for (Letter l : w.letters) {
        if (!r.letters.empty() && r.letters.back() == inv(l))
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    while (r.letters.size() >= 2 && r.letters.front() == inv(r.letters.back())) {
        r.letters.erase(r.letters.begin());
        r.letters.pop_back();
        r = free_reduce(r);
    }
    return r;
}

Word canonical_oriented(const Word& w) {
    Word r = cyclic_reduce(w);
    std::size_t n = r.letters.size();
    if (n <= 1) return r;
    Word best = r;
    for (std::size_t k = 1; k < n; k++) {
        Word rot = r.rotated(k);
        if (rot < best) best = rot;
    }
    return best;
}

Word canonical_unoriented(const Word& w) {
    Word a = canonical_oriented(w);
    Word b = canonical_oriented(w.inverse());
    return a < b ? a : b;
}

std::string to_string(const Word& w) {
    std::string s;
    for (Letter l : w.letters) {
        if (!s.empty()) s += ' ';
        s += std::to_string(l);
    }
    return s;
}

} // namespace foldatlas
