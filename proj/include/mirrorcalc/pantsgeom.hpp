#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace mirrorcalc::pantsgeom {

// Strata of the pair-of-pants skeleton in dimension n: one stratum per proper
// subset I of the n+1 coordinate labels, a rank-|I| torus times an open
// simplex of complementary dimension.
struct Stratum {
    uint32_t subset = 0;  // bitmask over the n+1 labels
    int torus_rank = 0;
    int simplex_dim = 0;
};

struct StrataTable {
    int n = 1;
    std::vector<Stratum> strata;

    // frontier order: the closure of the I-stratum meets the J-stratum
    // exactly when I is contained in J
    bool incident(uint32_t i, uint32_t j) const;
};

StrataTable strata(int n);

// compactly supported Euler characteristic of the skeleton, summed over the
// product strata; only the torus-free stratum contributes
long euler_char_c(int n);

// Sign-pattern piece of the conic cover: the coordinates in `subset` may
// vanish, all others are nonzero, subject to the positive-sum constraint.
struct SignPattern {
    int n = 1;
    uint32_t subset = 0;
    bool sum_positive = true;

    bool operator==(const SignPattern&) const = default;
};

SignPattern cover_meet(const SignPattern& p, const SignPattern& q);

// The poset diagram of affine coordinate spaces indexed by proper subsets:
// nodes carry variable lists, arrows are the coordinate inclusions obtained
// by setting the complementary variables to zero.
struct CubeDiagram {
    int n = 1;
    std::vector<std::vector<int>> nodes;              // sorted variable lists
    std::vector<std::pair<int, int>> edges;           // (smaller node, larger node)
};

CubeDiagram cube_diagram(int n);

// Degree of the finite cover defined by the simultaneous angle-sum and
// diagonal-quotient maps, computed as a lattice index (an integer
// determinant), not asserted.
long contact_cover_degree(int n);

struct PantsRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mirrorcalc::pantsgeom
