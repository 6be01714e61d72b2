#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foldatlas/surface.hpp"
#include "foldatlas/word.hpp"

namespace foldatlas {

// A simple closed curve on a model surface, canonically represented by
// the reduced cyclic word of its gate crossings (oriented form is the
// lexicographically least rotation). Normal coordinates on the fan
// triangulation are derived data.
struct Curve {
    Surface surface;
    Word word; // canonical oriented form

    Curve() = default;
    Curve(const Surface& s, const Word& w)
        : surface(s), word(canonical_oriented(w)) {}

    bool same_class(const Curve& o) const {
        return surface == o.surface &&
               canonical_unoriented(word) == canonical_unoriented(o.word);
    }
    bool same_oriented(const Curve& o) const {
        return surface == o.surface && word == o.word;
    }
    Curve reversed() const { return Curve(surface, word.inverse()); }
};

// Weight vector -> multicurve structure. Components are returned as
// oriented gate words; the trace also reports the number of components.
struct TraceResult {
    bool matching_ok = true;
    std::string matching_error; // which condition failed, if any
    std::vector<Word> components;
};
TraceResult trace_coords(const Surface& s, const std::vector<long>& coords);

// Canonical normal coordinates of a curve class (weights per fan edge).
std::vector<long> normal_coords(const Curve& c);

// Chords of the canonical polygon position: one (entry side, exit side)
// pair per strand, in word order.
struct Chord {
    int from_side;
    int to_side;
};
std::vector<Chord> polygon_chords(const SurfaceModel& m, const Word& w);

enum class CurveReject {
    MatchingCondition, // triangle inequality / parity failure
    Empty,
    MultiComponent,
    NullHomotopic, // trivial in the closed surface (vertex/marked-point linking)
};

struct CurveValidation {
    std::optional<Curve> curve;
    std::optional<CurveReject> reject;
    std::string detail;
    bool ok() const { return curve.has_value(); }
};

// Full validation of a weight vector against the matching conditions,
// connectedness and essentiality. Accepted vectors yield the canonical
// Curve of the traced class.
CurveValidation validate_curve(const Surface& s, const std::vector<long>& coords);

// Curve from a word, checking simplicity is the caller's business.
Curve curve_from_word(const Surface& s, const Word& w);

} // namespace foldatlas
