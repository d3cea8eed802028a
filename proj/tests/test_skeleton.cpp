#include "doctest.h"
#include "mirrorcalc/skeleton.hpp"

using namespace mirrorcalc::skeleton;
using mirrorcalc::complexes::Complex;
using mirrorcalc::exactlin::GradedSpace;
using mirrorcalc::exactlin::Grading;
using mirrorcalc::exactlin::Scalar;

namespace {

GradedSpace z2(long even, long odd) {
    GradedSpace s;
    s.grading = Grading::Mod2;
    s.add(0, even);
    s.add(1, odd);
    return s;
}

RibbonSkeleton tripod() {
    // one trivalent vertex with three half-edges
    RibbonSkeleton s;
    s.vertices.push_back({"v", {"A", "B", "C"}});
    s.edges.push_back({"e1", "v", std::nullopt});
    s.edges.push_back({"e2", "v", std::nullopt});
    s.edges.push_back({"e3", "v", std::nullopt});
    s.incidences.push_back({"v", "e1", "C", "A", false});
    s.incidences.push_back({"v", "e2", "A", "B", false});
    s.incidences.push_back({"v", "e3", "B", "C", false});
    s.validate();
    return s;
}

}  // namespace

TEST_CASE("tripod diagram: one A_2 node, six A_1 nodes, six relations") {
    CatDiagram d = build_diagram(tripod(), DiagramMode::Sheaf);
    CHECK(d.node_count() == 7);
    CHECK(d.relation_count() == 6);
    CHECK(d.nodes.at({PosetElt::V, 0}).quiver().n == 2);
    for (int i = 0; i < 3; ++i) {
        CHECK(d.nodes.at({PosetElt::E, i}).quiver().n == 1);
        CHECK(d.nodes.at({PosetElt::U, i}).quiver().n == 1);
    }
}

TEST_CASE("node sizes equal sector counts minus one on every builder skeleton") {
    for (int n = 2; n <= 5; ++n) {
        SphereSkeleton sph = punctured_sphere_skeleton(n);
        CatDiagram d = build_diagram(sph.skel, DiagramMode::Sheaf);
        for (int i = 0; i < (int)sph.skel.vertices.size(); ++i)
            CHECK(d.nodes.at({PosetElt::V, i}).quiver().n ==
                  (int)sph.skel.vertices[i].sectors.size() - 1);
    }
}

TEST_CASE("marker-vertex loop skeleton has A_1 nodes throughout") {
    SphereSkeleton sph = punctured_sphere_skeleton(2);
    CatDiagram d = build_diagram(sph.skel, DiagramMode::Sheaf);
    for (auto& [elt, node] : d.nodes) CHECK(node.quiver().n == 1);
}

TEST_CASE("punctured sphere skeleta") {
    SphereSkeleton s2 = punctured_sphere_skeleton(2);
    CHECK(s2.skel.vertices.size() == 1);
    CHECK(s2.skel.edges.size() == 1);
    SphereSkeleton s3 = punctured_sphere_skeleton(3);
    CHECK(s3.skel.vertices.size() == 2);
    CHECK(s3.skel.edges.size() == 3);
    for (auto& v : s3.skel.vertices) CHECK(v.sectors.size() == 3);
    for (int n = 2; n <= 6; ++n) {
        SphereSkeleton s = punctured_sphere_skeleton(n);
        long chi = (long)s.skel.vertices.size() - (long)s.skel.edges.size();
        CHECK(chi == 2 - n);
    }
    SphereSkeleton s4 = punctured_sphere_skeleton(4);
    CHECK(s4.skel.vertices.size() == 4);
    CHECK(s4.skel.edges.size() == 6);
    CHECK(s4.arc_edges.size() == 2);
}

TEST_CASE("skeleton file round trip and parser rejections") {
    SphereSkeleton s3 = punctured_sphere_skeleton(3);
    RibbonSkeleton back = parse_skeleton(skeleton_to_text(s3.skel));
    CHECK(back.vertices.size() == s3.skel.vertices.size());
    CHECK(back.edges.size() == s3.skel.edges.size());
    CHECK(back.incidences.size() == s3.skel.incidences.size());
    CHECK_THROWS_AS(parse_skeleton("vertex v\nsectors v A B C\n"
                                   "edge e v -\nincidence v e A C\n"),
                    ParseError);
}

TEST_CASE("circle skeleton: point family has the folded End (1,1)") {
    SphereSkeleton sph = punctured_sphere_skeleton(2);
    CatDiagram d = build_diagram(sph.skel, DiagramMode::Sheaf);
    LimitObject fam = circle_family(sph, 0, Scalar(1));
    CHECK(limit_hom(d, fam, fam) == z2(1, 1));
}

TEST_CASE("monodromy separates point families on the circle") {
    SphereSkeleton sph = punctured_sphere_skeleton(2);
    CatDiagram d = build_diagram(sph.skel, DiagramMode::Sheaf);
    LimitObject one = circle_family(sph, 0, Scalar(1));
    LimitObject two = circle_family(sph, 0, Scalar(2));
    LimitObject minus = circle_family(sph, 0, Scalar(-1));
    CHECK(limit_hom(d, two, two) == z2(1, 1));
    CHECK(limit_hom(d, minus, minus) == z2(1, 1));
    CHECK(limit_hom(d, one, two) == z2(0, 0));
    CHECK(limit_hom(d, two, one) == z2(0, 0));
    CHECK(limit_hom(d, two, minus) == z2(0, 0));
}

TEST_CASE("zero family") {
    SphereSkeleton sph = punctured_sphere_skeleton(2);
    CatDiagram d = build_diagram(sph.skel, DiagramMode::Sheaf);
    LimitObject zero;
    attach_certificates(sph.skel, zero);
    LimitObject fam = circle_family(sph, 0, Scalar(1));
    CHECK(limit_hom(d, zero, zero) == z2(0, 0));
    CHECK(limit_hom(d, zero, fam) == z2(0, 0));
    CHECK(limit_hom(d, fam, zero) == z2(0, 0));
}

TEST_CASE("families on different circles do not interact") {
    SphereSkeleton sph = punctured_sphere_skeleton(3);
    CatDiagram d = build_diagram(sph.skel, DiagramMode::Sheaf);
    LimitObject c0 = circle_family(sph, 0, Scalar(1));
    LimitObject c1 = circle_family(sph, 1, Scalar(1));
    CHECK(limit_hom(d, c0, c0) == z2(1, 1));
    CHECK(limit_hom(d, c1, c1) == z2(1, 1));
    CHECK(limit_hom(d, c0, c1) == z2(0, 0));
    CHECK(limit_hom(d, c1, c0) == z2(0, 0));
}

TEST_CASE("middle-circle families close up and have point Ends") {
    SphereSkeleton sph = punctured_sphere_skeleton(4);
    CatDiagram d = build_diagram(sph.skel, DiagramMode::Sheaf);
    for (int c = 0; c < 3; ++c) {
        LimitObject fam = circle_family(sph, c, Scalar(1));
        CHECK(limit_hom(d, fam, fam) == z2(1, 1));
    }
    LimitObject mid1 = circle_family(sph, 1, Scalar(1));
    LimitObject mid2 = circle_family(sph, 1, Scalar(3));
    CHECK(limit_hom(d, mid1, mid2) == z2(0, 0));
}

TEST_CASE("End always contains the identity class") {
    SphereSkeleton sph = punctured_sphere_skeleton(3);
    CatDiagram d = build_diagram(sph.skel, DiagramMode::Sheaf);
    for (int c = 0; c < 2; ++c) {
        LimitObject fam = circle_family(sph, c, Scalar(5));
        CHECK(limit_hom(d, fam, fam).dim(0) >= 1);
    }
}

TEST_CASE("tampered certificates are rejected") {
    SphereSkeleton sph = punctured_sphere_skeleton(2);
    CatDiagram d = build_diagram(sph.skel, DiagramMode::Sheaf);
    LimitObject fam = circle_family(sph, 0, Scalar(1));
    LimitObject bad = fam;
    bad.edge_certs[0].comps.clear();
    CHECK_THROWS_AS(limit_hom(d, bad, fam), CertificateFailure);
}

TEST_CASE("cover decomposition shapes") {
    CoverDecomposition c3 = cover_diagram(3);
    CHECK(c3.pieces.size() == 2);
    CHECK(c3.overlap_arcs.size() == 1);
    CoverDecomposition c4 = cover_diagram(4);
    CHECK(c4.pieces.size() == 3);
    CHECK(c4.overlap_arcs.size() == 2);
    CHECK(c4.pieces[1].kind == "middle");
    for (auto& aid : c4.overlap_arcs) {
        RibbonSkeleton line;
        line.edges.push_back({aid, std::nullopt, std::nullopt});
        line.validate();
        CatDiagram d = build_diagram(line, DiagramMode::Sheaf);
        CHECK(d.node_count() == 1);
        CHECK(d.nodes.at({PosetElt::E, 0}).quiver().n == 1);
    }
}

TEST_CASE("cover pieces glue Hom tables (Mayer-Vietoris)") {
    for (int n : {2, 3, 4}) {
        SphereSkeleton sph = punctured_sphere_skeleton(n);
        CatDiagram full = build_diagram(sph.skel, DiagramMode::Sheaf);
        CoverDecomposition cov = cover_diagram(n);
        for (int c = 0; c < n - 1; ++c) {
            LimitObject fam = circle_family(sph, c, Scalar(2));
            GradedSpace full_end = limit_hom(full, fam, fam);
            GradedSpace glued;
            glued.grading = Grading::Mod2;
            for (auto& piece : cov.pieces) {
                CatDiagram pd = build_diagram(piece.skel, DiagramMode::Sheaf);
                LimitObject r = restrict_family(fam, sph.skel, piece.skel);
                GradedSpace t = limit_hom(pd, r, r);
                for (auto& [deg, k] : t.dims) glued.add(deg, k);
            }
            // circle families restrict to zero on every overlap line
            CHECK(glued == full_end);
        }
    }
}
