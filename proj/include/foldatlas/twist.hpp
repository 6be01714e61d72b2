#pragma once

#include <string>
#include <vector>

#include "foldatlas/curve.hpp"
#include "foldatlas/intersect.hpp"

namespace foldatlas {

// A mapping class as a word in Dehn twists along simple closed curves.
// Letters act right-to-left: apply(compose(u, v), c) = apply(u, apply(v, c)).
struct TwistWord {
    Surface surface;
    std::vector<std::pair<Curve, int>> letters; // (twist curve, exponent != 0)

    TwistWord() = default;
    explicit TwistWord(const Surface& s) : surface(s) {}
    bool empty() const { return letters.empty(); }
};

// One right-handed Dehn twist along c, to the k-th power, applied to x:
// every taut crossing of x with c is rerouted around a full copy of c^±.
Curve apply_twist(const Curve& c, int k, const Curve& x);

Curve apply(const TwistWord& w, const Curve& x);
TwistWord compose(const TwistWord& u, const TwistWord& v);
TwistWord invert(const TwistWord& u);
TwistWord twist(const Curve& c, int k = 1);

// Number of transverse self-crossings of a taut representative; simple
// curves have none.
long self_crossings(const Surface& s, const Word& w);

// The fixed twist-generator curves of a surface: a Humphries-style chain
// of 2g+1 curves, plus mark-respecting curves on twice-marked surfaces.
std::vector<Curve> standard_generators(const Surface& s);

// The fixed filling configuration used by the identity certificate.
std::vector<Curve> filling_configuration(const Surface& s);

// Alexander-method certificate: w is declared trivial iff it fixes every
// curve of the filling configuration with orientation.
bool is_identity(const TwistWord& w);

// 2g x 2g integer matrix of the action on closed homology, in the basis
// [A1],[B1],...,[Ag],[Bg]; column j is the image of basis vector j.
using IntMatrix = std::vector<std::vector<long>>;
IntMatrix homology_action(const TwistWord& w);
IntMatrix identity_matrix(int n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
bool is_symplectic(const Surface& s, const IntMatrix& m);

} // namespace foldatlas
