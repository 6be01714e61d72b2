#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace foldatlas {

// A letter is a signed gate index: +(k+1) crosses gate k forward,
// -(k+1) crosses it backward. Gates are the glued side pairs of the
// polygon model (see surface.hpp).
using Letter = int;

inline int gate_of(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int sign_of(Letter l) { return l > 0 ? +1 : -1; }
inline Letter make_letter(int gate, int sign) { return sign > 0 ? gate + 1 : -(gate + 1); }
inline Letter inv(Letter l) { return -l; }

// Cyclic words over gate letters. Free and cyclic reduction never change
// the free homotopy class in the punctured surface.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
    Letter at_mod(long i) const;

    Word inverse() const;
    Word rotated(std::size_t k) const;
};

bool operator==(const Word& a, const Word& b);
bool operator<(const Word& a, const Word& b);

// Remove all xx^-1 pairs (linearly).
Word free_reduce(const Word& w);
// Free reduction plus reduction across the wrap-around point.
Word cyclic_reduce(const Word& w);
// Lexicographically least rotation of the cyclically reduced word.
// This is the canonical form of an oriented curve class.
Word canonical_oriented(const Word& w);
// Least of the canonical forms of w and w^-1 (unoriented class).
Word canonical_unoriented(const Word& w);

std::string to_string(const Word& w);

} // namespace foldatlas
