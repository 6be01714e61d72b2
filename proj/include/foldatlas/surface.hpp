#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "foldatlas/word.hpp"

namespace foldatlas {

// Domain error with a stable code, thrown on contract violations.
struct FoldError : std::runtime_error {
    std::string code;
    FoldError(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct Surface {
    int genus = 0;
    int marked = 0; // number of marked points, 0 or 2

    bool operator==(const Surface&) const = default;
};

// Polygon model of a surface.
//
// Unmarked genus g >= 1: the 4g-gon with boundary word
//   a_1 b_1 a_1^- b_1^- ... a_g b_g a_g^- b_g^-
// glued in the standard way; one vertex v. Gate k in [0, 2g) is the glued
// side pair of a_{k/2+1} (k even) or b_{(k-1)/2+1} (k odd).
//
// Genus 0: the bigon e e^- (two vertices; degenerate minimal cell
// structure, no essential curves).
//
// Marked (g, 2): the (4g+4)-gon with word
//   [a_1,b_1] ... [a_g,b_g] c_1 c_1^- c_2 c_2^-
// where the corner between c_i and c_i^- is the marked point p_i and the
// remaining corners are v. Gates 2g and 2g+1 are the arcs c_1, c_2.
//
// Curves that avoid the vertices are cyclic words of gate crossings;
// reduced cyclic words are canonical forms of their isotopy classes in
// the surface punctured at the polygon vertices.
struct SurfaceModel {
    Surface surface;
    int num_gates = 0;
    int num_sides = 0;
    std::vector<int> side_gate;     // side -> gate index
    std::vector<int> side_sign;     // side -> +1 / -1
    std::vector<int> partner;       // side -> glued side
    std::vector<int> gate_side_pos; // gate -> its +1 side
    std::vector<int> gate_side_neg; // gate -> its -1 side
    // corner j sits between sides j-1 and j; class 0 = v, 1 = p1, 2 = p2
    std::vector<int> corner_class;
    Word vertex_link; // canonical unoriented word of the v-linking circle
    // The v-link in walk order. In gate-crossing letters this is the
    // relator of the closed-surface group (the link bounds the disk at v).
    Word link_relator;

    // Fan triangulation (public normal coordinates; unmarked, genus >= 1).
    // Edges 0..2g-1 are the gate edges a_1, b_1, ..., a_g, b_g; edges
    // 2g..6g-4 are the fan diagonals d_2..d_{4g-2} from polygon corner 0.
    int num_tri_edges = 0; // 6g-3
    int num_triangles = 0; // 4g-2

    int exit_side(Letter l) const {
        int g = gate_of(l);
        return sign_of(l) > 0 ? gate_side_pos[g] : gate_side_neg[g];
    }
    int enter_side(Letter l) const { return partner[exit_side(l)]; }
    Letter crossing_letter(int side_out) const {
        return make_letter(side_gate[side_out], side_sign[side_out]);
    }

    std::string gate_name(int gate) const;

    static const SurfaceModel& get(const Surface& s);
};

inline Surface standard_surface(int genus, int marked) {
    if (genus < 0) throw FoldError("E_GENUS", "genus must be nonnegative");
    if (marked != 0 && marked != 2)
        throw FoldError("E_MARKED", "marked point count must be 0 or 2");
    return Surface{genus, marked};
}

// Triangle slots of the fan triangulation, used by tracing and embedding.
struct TriSlot {
    int edge;     // public edge id
    bool forward; // slot traversal agrees with the edge's orientation
    int side = -1; // polygon side index when the edge is a gate edge
};
struct Triangle {
    TriSlot s[3];
};
// Triangles T_1..T_{4g-2}; only valid for unmarked genus >= 1.
std::vector<Triangle> fan_triangles(const SurfaceModel& m);

// Trivial-in-the-closed-surface test for free homotopy classes, via
// Dehn's algorithm on the surface group (marked-point letters are
// deleted first; loops around marked points bound disks in the closed
// surface).
bool is_closed_trivial(const SurfaceModel& m, const Word& w);

} // namespace foldatlas
