#include "doctest.h"

#include "foldatlas/curve.hpp"
#include "foldatlas/intersect.hpp"
#include "foldatlas/surface.hpp"
#include "foldatlas/word.hpp"

using namespace foldatlas;

TEST_CASE("standard surface cell counts") {
    Surface g2 = standard_surface(2, 0);
    const SurfaceModel& m = SurfaceModel::get(g2);
    CHECK(m.num_tri_edges == 9);
    CHECK(m.num_triangles == 6);
    // One vertex, 9 edges, 6 triangles.
    CHECK(1 - m.num_tri_edges + m.num_triangles == -2);

    Surface g0 = standard_surface(0, 0);
    const SurfaceModel& m0 = SurfaceModel::get(g0);
    // Bigon model: 2 vertices, 1 edge, 1 face.
    CHECK(2 - 1 + 1 == 2);
    CHECK(m0.num_gates == 1);

    CHECK_THROWS_AS(standard_surface(2, 1), FoldError);
    CHECK_THROWS_AS(standard_surface(-1, 0), FoldError);
}

TEST_CASE("standard surface is deterministic") {
    const SurfaceModel& m1 = SurfaceModel::get(standard_surface(2, 0));
    const SurfaceModel& m2 = SurfaceModel::get(standard_surface(2, 0));
    CHECK(&m1 == &m2);
    CHECK(m1.side_gate == m2.side_gate);
}

TEST_CASE("word reduction and canonical forms") {
    Word w{{1, 2, -2, 3}};
    CHECK(free_reduce(w) == Word{{1, 3}});
    Word c{{1, 2, -1}};
    CHECK(cyclic_reduce(c) == Word{{2}});
    Word r{{3, 1, 2}};
    CHECK(canonical_oriented(r) == canonical_oriented(Word{{1, 2, 3}}));
    CHECK(canonical_unoriented(Word{{1, 2}}) == canonical_unoriented(Word{{-2, -1}}));
}

TEST_CASE("standard basis intersection pattern") {
    for (int g : {1, 2, 3}) {
        Surface s = standard_surface(g, 0);
        GeometricBasis b = standard_basis(s);
        CHECK(static_cast<int>(b.pairs.size()) == g);
        std::string why;
        bool ok = basis_invariants_hold(b, &why);
        INFO("genus " << g << ": " << why);
        CHECK(ok);
    }
    CHECK_THROWS_AS(standard_basis(standard_surface(0, 0)), FoldError);
}

TEST_CASE("algebraic intersection pairing is symplectic") {
    Surface s = standard_surface(2, 0);
    Curve A1 = standard_curve_A(s, 1), B1 = standard_curve_B(s, 1);
    Curve A2 = standard_curve_A(s, 2);
    CHECK(homology_class(A1) == HomologyClass{1, 0, 0, 0});
    CHECK(algebraic_intersection(s, homology_class(A1), homology_class(B1)) == 1);
    CHECK(algebraic_intersection(s, homology_class(B1), homology_class(A1)) == -1);
    CHECK(algebraic_intersection(s, homology_class(A1), homology_class(A2)) == 0);
    // Signed crossings agree with the homology pairing.
    CHECK(algebraic_intersection_curves(A1, B1) == 1);
    CHECK(algebraic_intersection_curves(B1, A1) == -1);
}

TEST_CASE("geometric intersection basics") {
    Surface s = standard_surface(2, 0);
    Curve A1 = standard_curve_A(s, 1), B1 = standard_curve_B(s, 1);
    CHECK(geometric_intersection(A1, B1) == 1);
    CHECK(geometric_intersection(B1, A1) == 1);
    CHECK(geometric_intersection(A1, A1) == 0);
    CHECK(geometric_intersection(A1, standard_curve_A(s, 2)) == 0);
    CHECK_THROWS_AS(geometric_intersection(A1, standard_curve_A(standard_surface(3, 0), 1)),
                    FoldError);
}

TEST_CASE("normal coordinates roundtrip for standard curves") {
    for (int g : {1, 2, 3}) {
        Surface s = standard_surface(g, 0);
        for (int i = 1; i <= g; i++) {
            for (Curve c : {standard_curve_A(s, i), standard_curve_B(s, i)}) {
                std::vector<long> w = normal_coords(c);
                CurveValidation v = validate_curve(s, w);
                REQUIRE(v.ok());
                CHECK(v.curve->same_class(c));
            }
        }
    }
}

TEST_CASE("validate_curve rejections") {
    Surface s = standard_surface(2, 0);
    const SurfaceModel& m = SurfaceModel::get(s);

    SUBCASE("all-zero coords are empty") {
        CurveValidation v = validate_curve(s, std::vector<long>(9, 0));
        REQUIRE_FALSE(v.ok());
        CHECK(*v.reject == CurveReject::Empty);
    }
    SUBCASE("disjoint union of A1 and A2 has two components") {
        std::vector<long> w1 = normal_coords(standard_curve_A(s, 1));
        std::vector<long> w2 = normal_coords(standard_curve_A(s, 2));
        std::vector<long> sum(9, 0);
        for (int i = 0; i < 9; i++) sum[i] = w1[i] + w2[i];
        CurveValidation v = validate_curve(s, sum);
        REQUIRE_FALSE(v.ok());
        CHECK(*v.reject == CurveReject::MultiComponent);
    }
    SUBCASE("vertex-linking circle is null-homotopic") {
        Curve link(s, m.vertex_link);
        CurveValidation v = validate_curve(s, normal_coords(link));
        REQUIRE_FALSE(v.ok());
        CHECK(*v.reject == CurveReject::NullHomotopic);
    }
    SUBCASE("matching condition failure") {
        std::vector<long> w(9, 0);
        w[0] = 1; // a single crossing of one gate edge cannot close up
        CurveValidation v = validate_curve(s, w);
        REQUIRE_FALSE(v.ok());
        CHECK(*v.reject == CurveReject::MatchingCondition);
    }
}

TEST_CASE("closed-surface triviality") {
    Surface s = standard_surface(2, 0);
    const SurfaceModel& m = SurfaceModel::get(s);
    CHECK(is_closed_trivial(m, m.vertex_link));
    CHECK_FALSE(is_closed_trivial(m, Word{{1}}));
    // Separating curve around handle 1: commutator word, nontrivial class
    // in homotopy... it IS null-homotopic? No: separating curves are
    // essential. The commutator of a_1, b_1 is nontrivial in the closed
    // surface group for genus 2.
    Word comm{{1, 2, -1, -2}};
    CHECK_FALSE(is_closed_trivial(m, comm));

    Surface t = standard_surface(1, 0);
    const SurfaceModel& mt = SurfaceModel::get(t);
    CHECK(is_closed_trivial(mt, mt.vertex_link));
    CHECK_FALSE(is_closed_trivial(mt, Word{{1, 2}}));
}

TEST_CASE("marked model structure") {
    Surface s = standard_surface(1, 2);
    const SurfaceModel& m = SurfaceModel::get(s);
    CHECK(m.num_gates == 4);
    CHECK(m.num_sides == 8);
    CHECK(m.corner_class[5] == 1);
    CHECK(m.corner_class[7] == 2);
    // Loops around the marked points are closed-trivial.
    CHECK(is_closed_trivial(m, Word{{make_letter(2, +1)}}));
    CHECK(is_closed_trivial(m, Word{{make_letter(3, +1)}}));
    CHECK_FALSE(is_closed_trivial(m, Word{{make_letter(0, +1)}}));
}
