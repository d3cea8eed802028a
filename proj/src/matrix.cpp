#include "mirrorcalc/matrix.hpp"

#include <algorithm>
#include <limits>

namespace mirrorcalc::exactlin {

ExactMatrix::ExactMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(Index n) {
    ExactMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m.set(i, i, Scalar(1));
    return m;
}

void ExactMatrix::check_bounds(Index r, Index c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeMismatch("matrix index out of bounds");
}

void ExactMatrix::set(Index r, Index c, const Scalar& v) {
    check_bounds(r, c);
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void ExactMatrix::add_to(Index r, Index c, const Scalar& v) {
    check_bounds(r, c);
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        if (!v.is_zero()) entries_[{r, c}] = v;
        return;
    }
    Scalar s = it->second + v;
    if (s.is_zero())
        entries_.erase(it);
    else
        it->second = s;
}

Scalar ExactMatrix::at(Index r, Index c) const {
    check_bounds(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Scalar(0) : it->second;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
    // index o's rows for sparse traversal
    std::vector<std::vector<std::pair<Index, Scalar>>> orows(o.rows_);
    for (auto& [rc, v] : o.entries_) orows[rc.first].push_back({rc.second, v});
    ExactMatrix p(rows_, o.cols_);
    for (auto& [rc, v] : entries_) {
        for (auto& [c2, v2] : orows[rc.second]) p.add_to(rc.first, c2, v * v2);
    }
    return p;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
    ExactMatrix s = *this;
    for (auto& [rc, v] : o.entries_) s.add_to(rc.first, rc.second, v);
    return s;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o.scaled(Scalar(-1)); }

ExactMatrix ExactMatrix::scaled(const Scalar& s) const {
    ExactMatrix m(rows_, cols_);
    if (s.is_zero()) return m;
    for (auto& [rc, v] : entries_) m.set(rc.first, rc.second, v * s);
    return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

void ExactMatrix::insert_block(Index r0, Index c0, const ExactMatrix& m) {
    for (auto& [rc, v] : m.entries_) set(r0 + rc.first, c0 + rc.second, v);
}

namespace {

using Row = std::map<Index, Scalar>;

// Gaussian elimination with a fewest-nonzeros-in-row pivot rule; over the
// rationals rows are first scaled to integers (rank-invariant) so that the
// Bareiss-style update below keeps all intermediates integral.
long eliminate_rank(std::vector<Row> rows) {
    const bool over_q = session_field().kind == FieldKind::Rationals;
    if (over_q) {
        for (auto& row : rows) {
            mpz_class l(1);
            for (auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.value().get_den().get_mpz_t());
            if (l != 1) {
                Scalar f = Scalar::from_mpq(mpq_class(l));
                for (auto& [c, v] : row) v = v * f;
            }
        }
    }
    long rnk = 0;
    std::vector<bool> done(rows.size(), false);
    while (true) {
        // pivot row: fewest nonzeros among the remaining rows
        size_t best = rows.size();
        size_t best_nnz = std::numeric_limits<size_t>::max();
        for (size_t i = 0; i < rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            if (rows[i].size() < best_nnz) {
                best_nnz = rows[i].size();
                best = i;
            }
        }
        if (best == rows.size()) break;
        // pivot column within that row: fewest nonzeros below/above
        Index pcol = -1;
        size_t pcol_cnt = std::numeric_limits<size_t>::max();
        for (auto& [c, v] : rows[best]) {
            size_t cnt = 0;
            for (size_t i = 0; i < rows.size(); ++i)
                if (!done[i] && i != best && rows[i].count(c)) ++cnt;
            if (cnt < pcol_cnt) {
                pcol_cnt = cnt;
                pcol = c;
            }
        }
        const Scalar pivot = rows[best][pcol];
        for (size_t i = 0; i < rows.size(); ++i) {
            if (done[i] || i == best) continue;
            auto it = rows[i].find(pcol);
            if (it == rows[i].end()) continue;
            const Scalar coeff = it->second;
            Row updated;
            auto a = rows[i].begin();
            auto b = rows[best].begin();
            auto emit = [&](Index c, const Scalar& v) {
                if (!v.is_zero()) updated[c] = v;
            };
            while (a != rows[i].end() || b != rows[best].end()) {
                if (b == rows[best].end() || (a != rows[i].end() && a->first < b->first)) {
                    emit(a->first, a->second * pivot);
                    ++a;
                } else if (a == rows[i].end() || b->first < a->first) {
                    emit(b->first, -(b->second * coeff));
                    ++b;
                } else {
                    emit(a->first, a->second * pivot - b->second * coeff);
                    ++a;
                    ++b;
                }
            }
            updated.erase(pcol);
            if (over_q && !updated.empty()) {
                // divide out the row content to bound coefficient growth
                mpz_class g(0);
                for (auto& [c, v] : updated) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.value().get_num().get_mpz_t());
                if (g > 1) {
                    Scalar inv = Scalar::from_mpq(mpq_class(1) / mpq_class(g));
                    for (auto& [c, v] : updated) v = v * inv;
                }
            }
            rows[i] = std::move(updated);
        }
        done[best] = true;
        ++rnk;
    }
    return rnk;
}

}  // namespace

long rank(const ExactMatrix& m) {
    std::vector<Row> rows(m.rows());
    for (auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;
    return eliminate_rank(std::move(rows));
}

long homology_dim(const ExactMatrix& d_in, const ExactMatrix& d_out) {
    if (d_out.cols() != d_in.rows()) throw ShapeMismatch("homology_dim: middle dimensions disagree");
    if (!(d_out * d_in).is_zero()) throw NotAComplex("homology_dim: composite differential is nonzero");
    long ker = d_out.cols() - rank(d_out);
    return ker - rank(d_in);
}

std::vector<std::map<Index, Scalar>> kernel_basis(const ExactMatrix& m) {
    // Gauss-Jordan over the field; fine at the sizes this project meets.
    std::vector<Row> rows(m.rows());
    for (auto& [rc, v] : m.entries()) rows[rc.first][rc.second] = v;
    std::vector<Index> pivot_col_of_row;
    std::vector<bool> is_pivot_col(m.cols(), false);
    size_t rpos = 0;
    for (Index c = 0; c < m.cols(); ++c) {
        size_t sel = rows.size();
        for (size_t i = rpos; i < rows.size(); ++i)
            if (rows[i].count(c)) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[rpos]);
        const Scalar inv = rows[rpos][c].inverse();
        for (auto& [cc, v] : rows[rpos]) v = v * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rpos) continue;
            auto it = rows[i].find(c);
            if (it == rows[i].end()) continue;
            const Scalar f = it->second;
            for (auto& [cc, v] : rows[rpos]) {
                auto jt = rows[i].find(cc);
                Scalar nv = (jt == rows[i].end() ? Scalar(0) : jt->second) - v * f;
                if (nv.is_zero())
                    rows[i].erase(cc);
                else
                    rows[i][cc] = nv;
            }
        }
        pivot_col_of_row.push_back(c);
        is_pivot_col[c] = true;
        ++rpos;
    }
    std::vector<std::map<Index, Scalar>> basis;
    for (Index c = 0; c < m.cols(); ++c) {
        if (is_pivot_col[c]) continue;
        std::map<Index, Scalar> vec;
        vec[c] = Scalar(1);
        for (size_t i = 0; i < pivot_col_of_row.size(); ++i) {
            auto it = rows[i].find(c);
            if (it != rows[i].end()) vec[pivot_col_of_row[i]] = -it->second;
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

mpz_class det_integer(const std::vector<std::vector<mpz_class>>& in) {
    const size_t n = in.size();
    for (auto& row : in)
        if (row.size() != n) throw ShapeMismatch("det_integer: not square");
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> m = in;
    mpz_class prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[s], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace mirrorcalc::exactlin
