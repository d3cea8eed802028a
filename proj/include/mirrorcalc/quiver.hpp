#pragma once

#include <optional>

#include "mirrorcalc/complex.hpp"

namespace mirrorcalc::quivers {

using complexes::ChainMap;
using complexes::Complex;
using exactlin::ExactMatrix;
using exactlin::GradedSpace;
using exactlin::Grading;
using exactlin::Scalar;

struct VertexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PositionOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct QuiverMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The directed quiver 1 -> 2 -> ... -> n. Conventions used throughout:
// representations of 1 -> 2 -> ... -> n; the projective P_a is the interval
// [a, n], the injective I_a the interval [1, a], the skyscraper k_a the
// vertex a. Hom(P_a, P_b) is one-dimensional exactly when b <= a, spanned by
// the unique path, and paths compose with coefficient one.
struct LinearQuiver {
    int n = 1;
    explicit LinearQuiver(int vertices) : n(vertices) {
        if (n < 1) throw VertexOutOfRange("quiver needs at least one vertex");
    }
    bool operator==(const LinearQuiver&) const = default;
};

// Bounded complex of named projectives P_a. The differential stores, per
// degree, the scalar coefficient of the unique path: entry (row, col) may be
// nonzero only when label(row) <= label(col).
class PerfComplex {
public:
    explicit PerfComplex(LinearQuiver q) : q_(q) {}
    static PerfComplex make(LinearQuiver q, std::map<int, std::vector<int>> terms,
                            std::map<int, ExactMatrix> diffs);

    const LinearQuiver& quiver() const { return q_; }
    const std::map<int, std::vector<int>>& terms() const { return terms_; }
    const std::vector<int>& labels(int d) const;
    long dim(int d) const { return (long)labels(d).size(); }
    ExactMatrix diff(int d) const;
    bool has_terms() const { return !terms_.empty(); }
    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    // dimensions and differentials of the underlying representation at a vertex
    Complex realize_at_vertex(int v) const;

    bool operator==(const PerfComplex&) const = default;

private:
    void validate() const;
    LinearQuiver q_;
    std::map<int, std::vector<int>> terms_;  // degree -> projective labels, 1..n
    std::map<int, ExactMatrix> diffs_;
};

enum class NamedKind { Projective, Injective, Skyscraper };

// P_a: one term; k_a: P_{a+1} -> P_a (P_n alone when a = n);
// I_a: P_{a+1} -> P_1 (P_1 alone when a = n).
PerfComplex named_object(LinearQuiver q, NamedKind kind, int a);
std::string named_object_name(NamedKind kind, int a);

PerfComplex shift(const PerfComplex& x, int n);
PerfComplex direct_sum(const PerfComplex& a, const PerfComplex& b);

// Field-valued total Hom complex via Hom(P_a, P_b) = k for b <= a.
Complex quiver_hom(const PerfComplex& x, const PerfComplex& y);

// n x n matrix <k_a, k_b> = sum_i (-1)^i dim Ext^i(k_a, k_b), as integers.
std::vector<std::vector<mpz_class>> euler_matrix(LinearQuiver q);

// Subcycle positions on the (n+1)-cycle acting on the A_n category:
// positions 2..n+1 correspond to vertices 1..n; position 1 is the wrap-around.
// Restriction at position p >= 2 kills I_j (j != p-1) and sends I_{p-1} to k;
// restriction at position 1 kills P_j (j != 1) and sends P_1 to k[-1].
Complex subcycle_restrict(const PerfComplex& x, int position);

// Left adjoint on generators: k -> k_{p-1} for p >= 2, k -> P_1[1] for p = 1,
// extended additively in shifts and sums of the input field complex.
PerfComplex subcycle_extend(const Complex& v, LinearQuiver q, int position);

// the restriction functor on morphism complexes:
// quiver_hom(x, y) -> hom_complex(restrict x, restrict y)
ChainMap subcycle_restrict_on_hom(const PerfComplex& x, const PerfComplex& y, int position);

// Mutation of the simple cyclic rotation: the substitution functor
// P_a |-> I_a[-1] with the canonical projections on morphisms. On the
// generator roster it rotates the skyscrapers, k_a |-> k_{a+1}; iterating
// (n+1) times lands on the shift by [-2], which folds to the identity [2].
PerfComplex cyclic_rotate(const PerfComplex& x);

// Quasi-inverse up to quasi-isomorphism: rotate n more times and shift by [2].
PerfComplex cyclic_rotate_inverse(const PerfComplex& x);

// tensor with a finite field complex (extends objects additively in shifts)
PerfComplex tensor_field(const PerfComplex& x, const Complex& v);

// Duality on the nose: labels a |-> n+1-a, degrees negated, blocks transposed.
PerfComplex dualize(const PerfComplex& x);

// Quasi-isomorphism search between perf complexes (integer graded or folded):
// searches degree-0 cocycles of the quiver Hom complex and certifies via
// acyclicity of the cone at every vertex.
struct PerfQuasiIso {
    // (source degree, target degree) -> coefficient matrix in the path basis;
    // folded certificates may mix target degrees of the same parity
    std::map<std::pair<int, int>, ExactMatrix> comps;
};
std::optional<PerfQuasiIso> find_perf_quasi_iso(const PerfComplex& x, const PerfComplex& y,
                                                bool folded, int max_attempts = 600);

// graded dims of H^* quiver_hom(x, y)
GradedSpace ext_table(const PerfComplex& x, const PerfComplex& y);

// The hom-pairing duality check: finite Ext tables for all named generator
// pairs, table symmetry under the duality, double-dual comparison on objects,
// and unimodularity of the Euler matrix.
bool hom_pairing_duality_check(LinearQuiver q);

}  // namespace mirrorcalc::quivers
