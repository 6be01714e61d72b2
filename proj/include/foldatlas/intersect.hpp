#pragma once

#include <vector>

#include "foldatlas/curve.hpp"
#include "foldatlas/surface.hpp"

namespace foldatlas {

// Geometric intersection number of two simple closed curves, computed by
// counting linked strand pairs of the reduced gate words: two hub
// passages cross exactly when their four boundary rays interleave in the
// circular order at the polygon boundary. Parallel copies of one class
// meet zero times.
long geometric_intersection(const Curve& a, const Curve& b);

// Crossing data for one linked strand pair.
struct CrossingRef {
    long strand_a; // strand index in a's word
    long strand_b; // strand index in b's word
    int sign;      // +1 / -1 with the surface orientation
};
std::vector<CrossingRef> curve_crossings(const Curve& a, const Curve& b);

// Signed count; equals the homology pairing.
long algebraic_intersection_curves(const Curve& a, const Curve& b);

// Crossing list of x with a twist curve c, grouped by strand of x and
// ordered along each strand from its incoming end. Used by apply_twist.
struct TwistCrossing {
    long x_strand;
    long c_strand;
    int sign;
};
std::vector<TwistCrossing> twist_crossings(const Curve& x, const Curve& c);

// Transverse self-crossings of a taut representative of the class; zero
// exactly for (multiples of) simple curves.
long self_crossings(const Surface& s, const Word& w);

// Closed-surface homology in the standard basis [A1],[B1],...,[Ag],[Bg].
using HomologyClass = std::vector<long>;
HomologyClass homology_class(const Curve& c);
long algebraic_intersection(const Surface& s, const HomologyClass& h1,
                            const HomologyClass& h2);

// True iff the class is nonzero in closed homology; for simple closed
// curves this is exactly non-separating.
bool is_nonseparating(const Curve& c);

// Standard basis curve words: A_i crosses gate a_i once, B_i crosses b_i.
Curve standard_curve_A(const Surface& s, int i); // i in [1, g]
Curve standard_curve_B(const Surface& s, int i);

struct GeometricBasis {
    Surface surface;
    std::vector<std::pair<Curve, Curve>> pairs;
};
GeometricBasis standard_basis(const Surface& s);

// Checks i(A_i,B_i)=1, all cross pairs 0, and pairwise distinct classes.
bool basis_invariants_hold(const GeometricBasis& b, std::string* why = nullptr);

} // namespace foldatlas
