#include "doctest.h"
#include "mirrorcalc/pantsgeom.hpp"

using namespace mirrorcalc::pantsgeom;

TEST_CASE("strata enumeration") {
    StrataTable t1 = strata(1);
    CHECK(t1.strata.size() == 3);
    int torus0 = 0, torus1 = 0;
    for (auto& s : t1.strata) {
        CHECK(s.torus_rank + s.simplex_dim == 1);
        if (s.torus_rank == 0) ++torus0;
        if (s.torus_rank == 1) ++torus1;
    }
    CHECK(torus0 == 1);
    CHECK(torus1 == 2);
    CHECK(strata(2).strata.size() == 7);
    for (int n = 1; n <= 10; ++n) {
        StrataTable t = strata(n);
        CHECK((long)t.strata.size() == (1l << (n + 1)) - 1);
        for (auto& s : t.strata) CHECK(s.torus_rank + s.simplex_dim == n);
    }
}

TEST_CASE("incidence is the frontier order") {
    StrataTable t = strata(2);
    CHECK(t.incident(0b001, 0b011));
    CHECK_FALSE(t.incident(0b011, 0b001));
    CHECK(t.incident(0b000, 0b101));
    // idempotent partial order on subsets
    for (auto& s : t.strata) CHECK(t.incident(s.subset, s.subset));
}

TEST_CASE("compactly supported euler characteristic") {
    CHECK(euler_char_c(1) == -1);
    CHECK(euler_char_c(2) == 1);
    for (int n = 1; n <= 10; ++n) CHECK(euler_char_c(n) == (n % 2 == 0 ? 1 : -1));
}

TEST_CASE("sign pattern meets") {
    SignPattern p{3, 0b0110, true}, q{3, 0b0011, true};
    CHECK(cover_meet(p, q).subset == 0b0010);
    CHECK(cover_meet(p, p) == p);
    SignPattern empty{3, 0, true};
    CHECK(cover_meet(p, empty).subset == 0);
    // idempotent, commutative, associative
    SignPattern r{3, 0b1010, true};
    CHECK(cover_meet(p, q) == cover_meet(q, p));
    CHECK(cover_meet(cover_meet(p, q), r) == cover_meet(p, cover_meet(q, r)));
}

TEST_CASE("cube diagram") {
    CubeDiagram d1 = cube_diagram(1);
    CHECK(d1.nodes.size() == 3);
    CHECK(d1.edges.size() == 2);
    CubeDiagram d2 = cube_diagram(2);
    CHECK(d2.nodes.size() == 7);
    CHECK(d2.edges.size() == 12);
    for (int n = 1; n <= 4; ++n) CHECK((long)cube_diagram(n).nodes.size() == (1l << (n + 1)) - 1);
}

TEST_CASE("contact cover degree is computed as a lattice index") {
    CHECK(contact_cover_degree(1) == 2);
    CHECK(contact_cover_degree(2) == 3);
    CHECK(contact_cover_degree(5) == 6);
    for (int n = 1; n <= 8; ++n) CHECK(contact_cover_degree(n) == n + 1);
}
