#pragma once

#include "mirrorcalc/polyring.hpp"

namespace mirrorcalc::bmodels {

using complexes::ChainMap;
using complexes::Complex;
using exactlin::GradedSpace;
using exactlin::Grading;
using exactlin::Scalar;
using polyring::FreeComplex;
using polyring::MultiMonomial;
using polyring::Poly;
using polyring::PolyMatrix;

struct AlgebraMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotXInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// matrix factorizations of the product superpotential

// Pair of free-module generator lists with an odd differential squaring to
// w * id; differentials are multigraded for the recorded generator shifts.
struct MatrixFactorization {
    int nvars = 0;
    MultiMonomial w;
    std::vector<std::vector<int>> shifts0, shifts1;  // even / odd generators
    PolyMatrix d0, d1;                               // even->odd, odd->even

    void validate() const;  // d1 d0 = d0 d1 = w id, exactly
};

// the rank-(1,1) factorization  A --w/z_a--> A --z_a--> A
MatrixFactorization mf_generator(int n, int a);

// dims by (parity, total degree 0..D)
struct ParityTable {
    int D = 0;
    std::array<std::vector<long>, 2> dims;

    ParityTable() = default;
    explicit ParityTable(int bound) : D(bound) { dims[0].assign(bound + 1, 0), dims[1].assign(bound + 1, 0); }
    bool operator==(const ParityTable&) const = default;
};

// cohomology of the mod-2 Hom complex of two factorizations, computed exactly
// per multidegree and totalled by degree
ParityTable mf_hom_cohomology(const MatrixFactorization& x, const MatrixFactorization& y, int D);

// A window of the unfurled Hom complex of two factorizations (a genuine free
// complex: the Hom differential squares to w - w = 0). Cohomology is exact at
// the interior spots lo+1..hi-1 and 2-periodic under multidegree translation
// by the superpotential exponent.
FreeComplex mf_hom_complex(const MatrixFactorization& x, const MatrixFactorization& y, int lo = -1,
                           int hi = 2);

// ---------------------------------------------------------------------------
// coherent generators on the coordinate-hyperplane union

// dims by (cohomological degree, total polynomial degree 0..D_poly)
struct CohTable {
    int D_poly = 0;
    int max_cohdeg = 0;
    std::map<int, std::vector<long>> rows;

    std::vector<long>& row(int d);
    long at(int d, int t) const;
    bool operator==(const CohTable&) const = default;
};

// Ext between the hyperplane structure sheaves O^a, O^b on the hyperplane
// union in n variables, from 2-periodic resolutions truncated at length
// 2*D_u + 2; exact for cohomological degrees <= 2*D_u + 1.
CohTable coh_ext_table(int n, int a, int b, int D_poly, int D_u);

// the monomial-count oracle for the same table
CohTable coh_ext_oracle(int n, int a, int b, int D_poly, int D_u);

// Folded comparison: the table of O^a over the n-variable hyperplane union,
// collapsed mod 2 with the degree-2 tower variable recounted as the extra
// coordinate, against the factorization table in n+1 variables.
bool fold_compare(int n, int a, int D);
bool fold_compare_pair(int n, int a, int b, int D);

// ---------------------------------------------------------------------------
// the two-object quiver model of the projective line

// Complex-valued module over the two-object quiver with two arrows x, y.
// Objects are pairs of field complexes with two chain maps between them.
struct KroneckerModel {
    Complex ca, cb;  // integer-graded
    ChainMap x, y;   // ca -> cb

    void validate() const;
    bool x_invertible() const;  // strict degreewise invertibility
};

KroneckerModel kronecker_model(const Complex& ca, const Complex& cb, const ChainMap& x, const ChainMap& y);
// the generator mirror to the structure sheaf: (0, k)
KroneckerModel kronecker_structure_sheaf();
// the generator mirror to the (-1)-twist: (k[1], 0)
KroneckerModel kronecker_twisted_sheaf();
// the point module with parameter lambda: (k, k, 1, lambda); lambda != 0 is a
// loop model (both arrows invertible), lambda = 0 the boundary point
KroneckerModel kronecker_point(const Scalar& lambda);

// total RHom complex over the quiver
Complex kronecker_hom(const KroneckerModel& m1, const KroneckerModel& m2);

// hyperbolic restrictions at the two ends: the cone over one arrow,
// normalized so the structure-sheaf model goes to k in degree 0
Complex eta_plus(const KroneckerModel& m);
Complex eta_minus(const KroneckerModel& m);

// transport along the invertible arrow: the one-variable module presented by
// [ k[t] (x) ca --(tX - Y)--> k[t] (x) cb ]
FreeComplex kronecker_dictionary(const KroneckerModel& m);

// graded dims of Hom(O(a), O(b)) on the projective line via section counts
GradedSpace p1_hom_oracle(int a, int b);

// Ext table between points of the affine line (used as the B-side oracle for
// non-graded point parameters)
GradedSpace a1_point_ext(const Scalar& lambda, const Scalar& mu);

// ---------------------------------------------------------------------------
// descent data and glued Ext computations

// Strict restriction family over proper coordinate subsets: the object at I
// is the template with the complementary variables set to zero. Each
// inclusion's certificate is the identity, which is recorded and checked.
struct DescentObject {
    FreeComplex tmpl;

    FreeComplex at(const std::vector<int>& subset) const;  // sorted subset of 0..nvars-1
    void check_certificates() const;                       // restriction compatibility
};

// Hom table of two strict families in the limit over proper subsets of the
// coordinates, computed by the poset-nerve totalization, exactly per
// multidegree of total degree <= D. Keys: (cohomological degree, total degree).
std::map<std::pair<int, long>, long> glued_cube_ext(const DescentObject& x, const DescentObject& y, int D);

// The same Hom table computed directly over the hypersurface ring
// k[z_1..z_m]/(z_1...z_m) by sliced linear algebra.
std::map<std::pair<int, long>, long> direct_hypersurface_ext(const FreeComplex& x, const FreeComplex& y, int D);

// ---------------------------------------------------------------------------
// generator-level Ext tables on nodal chains  A^1 - P^1 - ... - P^1 - A^1

struct ChainGenerator {
    enum Kind { ComponentSheaf, NodeSky } kind;
    int index;  // component 0..m-1 or node 1..m-1 (node j joins components j-1, j)
};

// Ext table assembled from the descent presentation of the chain: component
// cohomology plus the 2-periodic node towers, exact up to degree bounds.
CohTable nodal_chain_ext(int components, ChainGenerator g1, ChainGenerator g2, int D_poly, int D_u);

// Ext table of the node skyscraper at a single node germ (the 2-periodic
// resolution over the nodal germ), exact in the stated range.
CohTable node_sky_ext(int D_poly, int D_u);

}  // namespace mirrorcalc::bmodels
