#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mirrorcalc/matrix.hpp"

namespace mirrorcalc::complexes {

using exactlin::ExactMatrix;
using exactlin::GradedSpace;
using exactlin::Grading;
using exactlin::Scalar;

struct GradingMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cochain complex over the session field, d: C^i -> C^{i+1}, d^2 = 0.
// Mod2 complexes keep two terms and two differentials d0: C^0 -> C^1,
// d1: C^1 -> C^0 with both composites zero; unfurling to the 2-periodic
// integer-graded picture is a window view (see unfurl_window), not a copy.
class Complex {
public:
    explicit Complex(Grading g = Grading::Integer) : grading_(g) {}

    static Complex zero(Grading g = Grading::Integer) { return Complex(g); }
    static Complex single(int degree, long dim, Grading g = Grading::Integer);
    static Complex make(Grading g, std::map<int, long> terms, std::map<int, ExactMatrix> diffs);

    Grading grading() const { return grading_; }
    long dim(int d) const;
    const std::map<int, long>& terms() const { return terms_; }
    ExactMatrix diff(int d) const;  // zero matrix of the right shape when absent
    bool has_terms() const { return !terms_.empty(); }
    int min_degree() const;
    int max_degree() const;
    long total_dim() const;
    long euler() const;

    GradedSpace cohomology() const;
    bool is_acyclic() const;
    bool operator==(const Complex& o) const;

private:
    friend Complex shift(const Complex&, int);
    Grading grading_;
    std::map<int, long> terms_;          // degree -> dimension, nonzero only
    std::map<int, ExactMatrix> diffs_;   // degree -> d^i, nonzero only
};

int norm_degree(Grading g, int d);

struct ChainMap {
    Complex source, target;
    std::map<int, ExactMatrix> comps;  // degree -> f^i, zero components omitted

    ExactMatrix comp(int d) const;
    void validate() const;  // shapes and commutation with differentials
};

ChainMap identity_map(const Complex& c);
ChainMap compose(const ChainMap& g, const ChainMap& f);  // g after f

// Mapping cone: Cone(f)^i = x^{i+1} (+) y^i, D(a,b) = (-d_x a, f a + d_y b).
// chi(cone f) = chi(target) - chi(source).
Complex cone(const ChainMap& f);

// shift(c, n)^i = c^{i+n}: content in degree d moves to degree d - n;
// differentials pick up the sign (-1)^n.
Complex shift(const Complex& c, int n);
ChainMap shift(const ChainMap& f, int n);

// Folding: Mod2 complex with even part (+)_k C^{2k}, odd part (+)_k C^{2k+1}.
Complex fold(const Complex& c);
ChainMap fold(const ChainMap& f);

// Materializes degrees [lo, hi] of the 2-periodic unfurling of a Mod2 complex.
Complex unfurl_window(const Complex& c, int lo, int hi);

// Total Hom complex: Hom^n = (+)_i Hom(x^i, y^{i+n}), df = d_y f - (-1)^n f d_x.
Complex hom_complex(const Complex& x, const Complex& y);

// Reconstructs the chain map encoded by a degree-n element of hom_complex(x,y).
ChainMap hom_element_to_map(const Complex& x, const Complex& y, int n,
                            const std::map<exactlin::Index, Scalar>& coords);

// basis bookkeeping for hom_complex degree n: blocks (i, rows, cols, offset)
struct HomBlock {
    int i;
    long rows, cols, offset;
};
std::vector<HomBlock> hom_blocks(const Complex& x, const Complex& y, int n);

Complex direct_sum(const Complex& a, const Complex& b);
Complex tensor(const Complex& a, const Complex& b);

// Hom(A, B) -> Hom(A, C) induced by post-composition with g: B -> C.
ChainMap post_compose_hom(const Complex& A, const ChainMap& g);
// Hom(B, C) -> Hom(A, C) induced by pre-composition with f: A -> B.
ChainMap pre_compose_hom(const ChainMap& f, const Complex& C);

// canonical identification fold(hom_complex(A, B)) -> hom_complex(fold A, fold B)
// for integer-graded A, B
ChainMap fold_hom_iso(const Complex& A, const Complex& B);

bool is_quasi_iso(const ChainMap& f);

// Searches for a quasi-isomorphism x -> y among degree-0 cocycles of the Hom
// complex: single basis cocycles first, then sign patterns, then deterministic
// small-integer combinations. Returns the certificate when found.
std::optional<ChainMap> find_quasi_iso(const Complex& x, const Complex& y, int max_attempts = 400);

}  // namespace mirrorcalc::complexes
