#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "mirrorcalc/complex.hpp"

namespace mirrorcalc::polyring {

using complexes::Complex;
using exactlin::ExactMatrix;
using exactlin::Grading;
using exactlin::Scalar;

struct NotHomogeneous : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent vector of a monomial; length is fixed by the ambient algebra.
struct MultiMonomial {
    std::vector<int> e;

    MultiMonomial() = default;
    explicit MultiMonomial(std::vector<int> exps) : e(std::move(exps)) {}
    static MultiMonomial one(int nvars) { return MultiMonomial(std::vector<int>(nvars, 0)); }
    static MultiMonomial var(int nvars, int i, int power = 1);

    int nvars() const { return (int)e.size(); }
    long total() const {
        long t = 0;
        for (int x : e) t += x;
        return t;
    }
    bool divides(const MultiMonomial& m) const;
    MultiMonomial operator*(const MultiMonomial& m) const;
    // componentwise quotient; requires divisibility
    MultiMonomial operator/(const MultiMonomial& m) const;
    bool operator==(const MultiMonomial&) const = default;
    auto operator<=>(const MultiMonomial&) const = default;
};

// Monomial ideal kept with a reduced (pairwise-incomparable) generator list.
struct MonomialIdeal {
    int nvars = 0;
    std::vector<MultiMonomial> gens;

    MonomialIdeal(int nvars, std::vector<MultiMonomial> generators);
    bool contains(const MultiMonomial& m) const;
};

// Dimensions of (k[z_1..z_v] / I) in each total degree 0..D.
std::vector<long> hilbert_function(const MonomialIdeal& i, int D);

// Sparse polynomial: finitely many scalar-monomial terms.
struct Poly {
    int nvars = 0;
    std::map<std::vector<int>, Scalar> terms;

    Poly() = default;
    explicit Poly(int nvars) : nvars(nvars) {}
    static Poly monomial(const MultiMonomial& m, const Scalar& c = Scalar(1));
    static Poly constant(int nvars, const Scalar& c);
    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<int>& e, const Scalar& c);
    Poly operator+(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly&) const = default;
};

using PolyMatrix = std::map<std::pair<int, int>, Poly>;  // (row, col) -> entry

// Free module generator: multidegree shift (entries may be negative for Hom
// modules) plus the homological degree it sits in.
struct FreeGen {
    std::vector<int> shift;
    bool operator==(const FreeGen&) const = default;
};

// Bounded complex of free modules over k[z_1..z_v] with polynomial-entry
// differentials, homogeneous for the generator shifts. A generator with shift
// s contributes the rank-one free module A(-s).
class FreeComplex {
public:
    FreeComplex(int nvars, Grading g = Grading::Integer) : nvars_(nvars), grading_(g) {}

    static FreeComplex make(int nvars, Grading g, std::map<int, std::vector<FreeGen>> terms,
                            std::map<int, PolyMatrix> diffs, bool check_d2 = true);

    int nvars() const { return nvars_; }
    Grading grading() const { return grading_; }
    const std::map<int, std::vector<FreeGen>>& terms() const { return terms_; }
    long dim(int d) const;
    const std::vector<FreeGen>& gens(int d) const;
    Poly diff_entry(int d, int row, int col) const;
    const std::map<int, PolyMatrix>& diffs() const { return diffs_; }
    bool has_terms() const { return !terms_.empty(); }
    int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    // entries all homogeneous for the generator shifts
    bool homogeneous() const;

    // finite field-valued complex of multidegree-m components;
    // requires homogeneity
    Complex slice(const std::vector<int>& m) const;

    bool operator==(const FreeComplex&) const = default;

private:
    void validate(bool check_d2) const;
    int nvars_;
    Grading grading_;
    std::map<int, std::vector<FreeGen>> terms_;
    std::map<int, PolyMatrix> diffs_;
};

// free rank-one module concentrated in one degree
FreeComplex free_unit(int nvars, int degree = 0);

// Koszul complex of the variables listed in `vars`: resolves the coordinate
// subspace {z_a = 0, a in vars}; lives in degrees [-|vars|, 0].
FreeComplex koszul_complex(int nvars, const std::vector<int>& vars);

FreeComplex shift(const FreeComplex& c, int n);
FreeComplex tensor(const FreeComplex& a, const FreeComplex& b);
FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);
FreeComplex fold(const FreeComplex& c);

// Total Hom complex Hom_A(x, y) of free complexes, itself free.
FreeComplex hom_free(const FreeComplex& x, const FreeComplex& y);

// Derived restriction to {z_a = 0 : a not in keep}: on a complex of frees this
// is entrywise substitution z_a := 0, re-indexed over the kept variables.
// (Tensoring with the Koszul complex of the dropped variables computes the
// same thing; see tests.)
FreeComplex koszul_restrict(const FreeComplex& c, const std::vector<int>& keep);

// Substitution z_a := 0 for a in `drop`, keeping the ambient variable set.
FreeComplex set_vars_zero(const FreeComplex& c, const std::vector<int>& drop);

// cohomology dims of every slice with total degree <= D, keyed by
// (homological degree, total multidegree); exact in that range.
std::map<std::pair<int, long>, long> truncated_cohomology(const FreeComplex& c, int D);

// per-multidegree cohomology table, for 2-periodicity and oracle checks
std::map<std::pair<int, std::vector<int>>, long> sliced_cohomology(const FreeComplex& c, int D);

// all multidegrees at which some generator can contribute up to total degree D
std::set<std::vector<int>> relevant_multidegrees(const FreeComplex& c, int D);

}  // namespace mirrorcalc::polyring
