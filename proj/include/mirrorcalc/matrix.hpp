#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mirrorcalc/field.hpp"

namespace mirrorcalc::exactlin {

using Index = int;

struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAComplex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sparse matrix over the session field; only nonzero entries are stored.
// Acts on column vectors: an r x c matrix is a map k^c -> k^r.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(Index rows, Index cols);
    static ExactMatrix identity(Index n);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    void set(Index r, Index c, const Scalar& v);
    void add_to(Index r, Index c, const Scalar& v);
    Scalar at(Index r, Index c) const;
    const std::map<std::pair<Index, Index>, Scalar>& entries() const { return entries_; }

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scaled(const Scalar& s) const;
    bool operator==(const ExactMatrix& o) const;

    // writes `m` into this matrix with top-left corner at (r0, c0)
    void insert_block(Index r0, Index c0, const ExactMatrix& m);

private:
    void check_bounds(Index r, Index c) const;
    Index rows_, cols_;
    std::map<std::pair<Index, Index>, Scalar> entries_;
};

long rank(const ExactMatrix& m);

// dim ker(d_out) - rank(d_in) for a three-term piece  . --d_in--> . --d_out--> .
// Checks shape compatibility and d_out * d_in == 0.
long homology_dim(const ExactMatrix& d_in, const ExactMatrix& d_out);

// Basis of the kernel, as columns.
std::vector<std::map<Index, Scalar>> kernel_basis(const ExactMatrix& m);

// Fraction-free integer determinant of a square integer matrix.
mpz_class det_integer(const std::vector<std::vector<mpz_class>>& m);

enum class Grading { Integer, Mod2 };

// Graded dimension vector. Mod2 spaces use degrees {0, 1}.
struct GradedSpace {
    Grading grading = Grading::Integer;
    std::map<int, long> dims;  // nonzero entries only

    long dim(int d) const {
        auto it = dims.find(d);
        return it == dims.end() ? 0 : it->second;
    }
    long total() const {
        long t = 0;
        for (auto& [d, n] : dims) t += n;
        return t;
    }
    long euler() const {
        long e = 0;
        for (auto& [d, n] : dims) e += (d % 2 == 0 ? n : -n);
        return e;
    }
    void add(int d, long n) {
        if (n == 0) return;
        dims[d] += n;
        if (dims[d] == 0) dims.erase(d);
    }
    bool operator==(const GradedSpace&) const = default;
};

}  // namespace mirrorcalc::exactlin
