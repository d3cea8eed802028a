#include "doctest.h"
#include "mirrorcalc/mirror.hpp"

using namespace mirrorcalc::mirror;

TEST_CASE("surface comparison passes for 2, 3, 4 punctures") {
    for (int n : {2, 3, 4}) {
        MirrorReport r = verify_surface_mirror(n);
        if (!r.overall) {
            for (auto& c : r.node_results)
                if (!c.ok) MESSAGE(c.name, ": ", c.detail);
            for (auto& c : r.edge_results)
                if (!c.ok) MESSAGE(c.name, ": ", c.detail);
        }
        CHECK(r.overall);
    }
}

TEST_CASE("reports are deterministic") {
    MirrorReport a = verify_surface_mirror(3);
    MirrorReport b = verify_surface_mirror(3);
    CHECK(a.to_json() == b.to_json());
    CHECK(verify_pants_mirror(2).to_json() == verify_pants_mirror(2).to_json());
}

TEST_CASE("the five-puncture surface with two projective middles verifies") {
    MirrorReport r = verify_surface_mirror(5);
    CHECK(r.overall);
    int middles = 0;
    for (auto& c : r.node_results)
        if (c.name.find("middle") != std::string::npos &&
            c.name.find("dictionary") != std::string::npos)
            ++middles;
    CHECK(middles == 2);
}

TEST_CASE("pants comparison passes for dimensions 1 and 2") {
    for (int n : {1, 2}) {
        MirrorReport r = verify_pants_mirror(n);
        if (!r.overall) {
            for (auto& c : r.node_results)
                if (!c.ok) MESSAGE(c.name, ": ", c.detail);
            for (auto& c : r.edge_results)
                if (!c.ok) MESSAGE(c.name, ": ", c.detail);
        }
        CHECK(r.overall);
        CHECK_THROWS(verify_pants_mirror(0));
    }
}

TEST_CASE("every single-edge perturbation flips the surface verdict") {
    for (int n : {3, 4}) {
        auto targets = surface_edge_images(n);
        REQUIRE(!targets.empty());
        for (auto& t : targets) {
            MirrorReport r = verify_surface_mirror(n, {}, t);
            CHECK_FALSE(r.overall);
            bool found_failing_edge = false;
            for (auto& e : r.edge_results)
                if (!e.ok && e.name.find(t.edge) != std::string::npos) found_failing_edge = true;
            CHECK(found_failing_edge);
        }
    }
}

TEST_CASE("every single-edge perturbation flips the pants verdict") {
    auto targets = pants_edge_images(1);
    REQUIRE(!targets.empty());
    for (auto& t : targets) {
        MirrorReport r = verify_pants_mirror(1, {}, t);
        CHECK_FALSE(r.overall);
    }
}

TEST_CASE("unknown tamper targets are rejected") {
    CHECK_THROWS(verify_surface_mirror(3, {}, Perturbation{"no-such-edge", "O"}));
}
