#include "mirrorcalc/complex.hpp"

#include <algorithm>

namespace mirrorcalc::complexes {

using exactlin::homology_dim;
using exactlin::Index;
using exactlin::kernel_basis;
using exactlin::NotAComplex;
using exactlin::rank;

int norm_degree(Grading g, int d) {
    if (g == Grading::Integer) return d;
    return ((d % 2) + 2) % 2;
}

Complex Complex::single(int degree, long dim, Grading g) {
    Complex c(g);
    if (dim > 0) c.terms_[norm_degree(g, degree)] = dim;
    return c;
}

Complex Complex::make(Grading g, std::map<int, long> terms, std::map<int, ExactMatrix> diffs) {
    Complex c(g);
    for (auto& [d, n] : terms) {
        if (n < 0) throw NotAComplex("negative term dimension");
        if (n > 0) c.terms_[norm_degree(g, d)] += n;
    }
    for (auto& [d, m] : diffs) {
        int dn = norm_degree(g, d);
        if (m.is_zero()) continue;
        if (m.cols() != c.dim(dn) || m.rows() != c.dim(dn + 1))
            throw exactlin::ShapeMismatch("differential shape does not match terms");
        c.diffs_[dn] = m;
    }
    // d^2 = 0 in every degree
    if (g == Grading::Integer) {
        for (auto& [d, m] : c.diffs_) {
            if (!(c.diff(d + 1) * m).is_zero()) throw NotAComplex("d o d != 0");
        }
    } else {
        if (!(c.diff(1) * c.diff(0)).is_zero() || !(c.diff(0) * c.diff(1)).is_zero())
            throw NotAComplex("d o d != 0 (mod-2 complex)");
    }
    return c;
}

long Complex::dim(int d) const {
    auto it = terms_.find(norm_degree(grading_, d));
    return it == terms_.end() ? 0 : it->second;
}

ExactMatrix Complex::diff(int d) const {
    int dn = norm_degree(grading_, d);
    auto it = diffs_.find(dn);
    if (it != diffs_.end()) return it->second;
    return ExactMatrix(dim(dn + 1), dim(dn));
}

int Complex::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Complex::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

long Complex::total_dim() const {
    long t = 0;
    for (auto& [d, n] : terms_) t += n;
    return t;
}

long Complex::euler() const {
    long e = 0;
    for (auto& [d, n] : terms_) e += (norm_degree(Grading::Mod2, d) == 0 ? n : -n);
    return e;
}

GradedSpace Complex::cohomology() const {
    GradedSpace h;
    h.grading = grading_;
    if (grading_ == Grading::Integer) {
        for (auto& [d, n] : terms_) h.add(d, homology_dim(diff(d - 1), diff(d)));
    } else {
        for (int d : {0, 1})
            if (dim(d) > 0) h.add(d, homology_dim(diff(d + 1), diff(d)));
    }
    return h;
}

bool Complex::is_acyclic() const { return cohomology().dims.empty(); }

bool Complex::operator==(const Complex& o) const {
    return grading_ == o.grading_ && terms_ == o.terms_ && diffs_ == o.diffs_;
}

ExactMatrix ChainMap::comp(int d) const {
    int dn = norm_degree(source.grading(), d);
    auto it = comps.find(dn);
    if (it != comps.end()) return it->second;
    return ExactMatrix(target.dim(dn), source.dim(dn));
}

void ChainMap::validate() const {
    if (source.grading() != target.grading()) throw GradingMismatch("chain map across gradings");
    auto check = [&](int d) {
        if (comp(d).rows() != target.dim(d) || comp(d).cols() != source.dim(d))
            throw exactlin::ShapeMismatch("chain map component shape");
        if (!(target.diff(d) * comp(d) - comp(d + 1) * source.diff(d)).is_zero())
            throw NotAComplex("chain map does not commute with differentials");
    };
    if (source.grading() == Grading::Integer) {
        int lo = std::min(source.has_terms() ? source.min_degree() : 0,
                          target.has_terms() ? target.min_degree() : 0) -
                 1;
        int hi = std::max(source.has_terms() ? source.max_degree() : 0,
                          target.has_terms() ? target.max_degree() : 0) +
                 1;
        for (int d = lo; d <= hi; ++d) check(d);
    } else {
        check(0);
        check(1);
    }
}

ChainMap identity_map(const Complex& c) {
    ChainMap f{c, c, {}};
    for (auto& [d, n] : c.terms()) f.comps[d] = ExactMatrix::identity(n);
    return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    ChainMap h{f.source, g.target, {}};
    auto degrees = [&](const Complex& c, std::map<int, long>& out) {
        for (auto& [d, n] : c.terms()) out[d] = n;
    };
    std::map<int, long> ds;
    degrees(f.source, ds);
    for (auto& [d, n] : ds) {
        ExactMatrix m = g.comp(d) * f.comp(d);
        if (!m.is_zero()) h.comps[d] = m;
    }
    return h;
}

Complex cone(const ChainMap& f) {
    f.validate();
    const Complex& x = f.source;
    const Complex& y = f.target;
    const Grading g = x.grading();
    std::map<int, long> terms;
    std::map<int, ExactMatrix> diffs;
    auto degrees_present = [&]() {
        std::vector<int> ds;
        if (g == Grading::Mod2) {
            ds = {0, 1};
        } else {
            int lo = 0, hi = -1;
            if (x.has_terms() || y.has_terms()) {
                lo = std::min(x.has_terms() ? x.min_degree() - 1 : 1 << 20,
                              y.has_terms() ? y.min_degree() : 1 << 20) -
                     1;
                hi = std::max(x.has_terms() ? x.max_degree() : -(1 << 20),
                              y.has_terms() ? y.max_degree() : -(1 << 20)) +
                     1;
            }
            for (int d = lo; d <= hi; ++d) ds.push_back(d);
        }
        return ds;
    };
    for (int i : degrees_present()) {
        long n = x.dim(i + 1) + y.dim(i);
        if (n > 0) terms[norm_degree(g, i)] = n;
    }
    for (int i : degrees_present()) {
        long rows = x.dim(i + 2) + y.dim(i + 1);
        long cols = x.dim(i + 1) + y.dim(i);
        if (rows == 0 || cols == 0) continue;
        ExactMatrix D(rows, cols);
        D.insert_block(0, 0, x.diff(i + 1).scaled(Scalar(-1)));
        D.insert_block(x.dim(i + 2), 0, f.comp(i + 1));
        D.insert_block(x.dim(i + 2), x.dim(i + 1), y.diff(i));
        if (!D.is_zero()) diffs[norm_degree(g, i)] = D;
    }
    return Complex::make(g, terms, diffs);
}

Complex shift(const Complex& c, int n) {
    Complex s(c.grading());
    const int sign = (n % 2 == 0) ? 1 : -1;
    for (auto& [d, k] : c.terms()) s.terms_[norm_degree(c.grading(), d - n)] = k;
    for (auto& [d, m] : c.diffs_) {
        ExactMatrix sm = (sign == 1) ? m : m.scaled(Scalar(-1));
        if (!sm.is_zero()) s.diffs_[norm_degree(c.grading(), d - n)] = sm;
    }
    return s;
}

ChainMap shift(const ChainMap& f, int n) {
    ChainMap s{shift(f.source, n), shift(f.target, n), {}};
    for (auto& [d, m] : f.comps) s.comps[norm_degree(f.source.grading(), d - n)] = m;
    return s;
}

namespace {
// offsets of each integer degree inside the even/odd folded terms
std::map<int, long> fold_offsets(const Complex& c, int parity, long& total) {
    std::map<int, long> off;
    total = 0;
    for (auto& [d, n] : c.terms()) {
        if (((d % 2) + 2) % 2 != parity) continue;
        off[d] = total;
        total += n;
    }
    return off;
}
}  // namespace

Complex fold(const Complex& c) {
    if (c.grading() == Grading::Mod2) return c;
    long even_total = 0, odd_total = 0;
    auto even_off = fold_offsets(c, 0, even_total);
    auto odd_off = fold_offsets(c, 1, odd_total);
    std::map<int, long> terms;
    if (even_total) terms[0] = even_total;
    if (odd_total) terms[1] = odd_total;
    ExactMatrix d0(odd_total, even_total), d1(even_total, odd_total);
    for (auto& [d, n] : c.terms()) {
        ExactMatrix m = c.diff(d);
        if (m.is_zero()) continue;
        if (((d % 2) + 2) % 2 == 0)
            d0.insert_block(odd_off[d + 1], even_off[d], m);
        else
            d1.insert_block(even_off[d + 1], odd_off[d], m);
    }
    std::map<int, ExactMatrix> diffs;
    if (!d0.is_zero()) diffs[0] = d0;
    if (!d1.is_zero()) diffs[1] = d1;
    return Complex::make(Grading::Mod2, terms, diffs);
}

ChainMap fold(const ChainMap& f) {
    ChainMap g{fold(f.source), fold(f.target), {}};
    for (int parity : {0, 1}) {
        long st = 0, tt = 0;
        auto soff = fold_offsets(f.source, parity, st);
        auto toff = fold_offsets(f.target, parity, tt);
        if (st == 0 || tt == 0) continue;
        ExactMatrix m(tt, st);
        for (auto& [d, o] : soff) {
            auto it = toff.find(d);
            if (it == toff.end()) continue;
            m.insert_block(it->second, o, f.comp(d));
        }
        if (!m.is_zero()) g.comps[parity] = m;
    }
    return g;
}

Complex unfurl_window(const Complex& c, int lo, int hi) {
    if (c.grading() != Grading::Mod2) throw GradingMismatch("unfurl expects a mod-2 complex");
    std::map<int, long> terms;
    std::map<int, ExactMatrix> diffs;
    for (int d = lo; d <= hi; ++d) {
        if (c.dim(d) > 0) terms[d] = c.dim(d);
        if (d < hi) {
            ExactMatrix m = c.diff(d);
            if (!m.is_zero()) diffs[d] = m;
        }
    }
    return Complex::make(Grading::Integer, terms, diffs);
}

std::vector<HomBlock> hom_blocks(const Complex& x, const Complex& y, int n) {
    std::vector<HomBlock> blocks;
    long off = 0;
    if (x.grading() == Grading::Integer) {
        std::vector<int> is;
        for (auto& [i, nx] : x.terms()) is.push_back(i);
        for (int i : is) {
            long r = y.dim(i + n), c = x.dim(i);
            if (r > 0 && c > 0) {
                blocks.push_back({i, r, c, off});
                off += r * c;
            }
        }
    } else {
        for (int i : {0, 1}) {
            long r = y.dim(i + n), c = x.dim(i);
            if (r > 0 && c > 0) {
                blocks.push_back({i, r, c, off});
                off += r * c;
            }
        }
    }
    return blocks;
}

namespace {
long hom_dim(const std::vector<HomBlock>& blocks) {
    if (blocks.empty()) return 0;
    return blocks.back().offset + blocks.back().rows * blocks.back().cols;
}
long block_index(const HomBlock& b, long r, long c) { return b.offset + r * b.cols + c; }
const HomBlock* find_block(const std::vector<HomBlock>& blocks, int i) {
    for (auto& b : blocks)
        if (b.i == i) return &b;
    return nullptr;
}
}  // namespace

Complex hom_complex(const Complex& x, const Complex& y) {
    if (x.grading() != y.grading()) throw GradingMismatch("hom_complex across gradings");
    const Grading g = x.grading();
    std::map<int, long> terms;
    std::map<int, ExactMatrix> diffs;
    std::vector<int> degrees;
    if (g == Grading::Integer) {
        if (x.has_terms() && y.has_terms()) {
            int lo = y.min_degree() - x.max_degree();
            int hi = y.max_degree() - x.min_degree();
            for (int n = lo; n <= hi; ++n) degrees.push_back(n);
        }
    } else {
        degrees = {0, 1};
    }
    for (int n : degrees) {
        long d = hom_dim(hom_blocks(x, y, n));
        if (d > 0) terms[norm_degree(g, n)] = d;
    }
    for (int n : degrees) {
        auto src = hom_blocks(x, y, n);
        auto tgt = hom_blocks(x, y, g == Grading::Integer ? n + 1 : norm_degree(g, n + 1));
        long rows = hom_dim(tgt), cols = hom_dim(src);
        if (rows == 0 || cols == 0) continue;
        ExactMatrix D(rows, cols);
        const Scalar sgn = (norm_degree(Grading::Mod2, n) == 0) ? Scalar(-1) : Scalar(1);
        for (auto& sb : src) {
            // d_y o f : block i -> block i of degree n+1
            ExactMatrix dy = y.diff(sb.i + n);
            if (const HomBlock* tb = find_block(tgt, sb.i); tb && !dy.is_zero()) {
                for (auto& [rc, v] : dy.entries()) {
                    // target basis (i, rc.first, c) <- source basis (i, rc.second, c)
                    for (long c = 0; c < sb.cols; ++c)
                        D.add_to(block_index(*tb, rc.first, c), block_index(sb, rc.second, c), v);
                }
            }
            // -(-1)^n f o d_x : source block i contributes to target block i-1
            ExactMatrix dx = x.diff(sb.i - 1);
            if (const HomBlock* tb = find_block(tgt, sb.i - 1); tb && !dx.is_zero()) {
                for (auto& [rc, v] : dx.entries()) {
                    // (f o d_x)[r, c] = sum_{c'} f[r, c'] dx[c', c]
                    for (long r = 0; r < sb.rows; ++r)
                        D.add_to(block_index(*tb, r, rc.second), block_index(sb, r, rc.first), v * sgn);
                }
            }
        }
        if (!D.is_zero()) diffs[norm_degree(g, n)] = D;
    }
    return Complex::make(g, terms, diffs);
}

ChainMap hom_element_to_map(const Complex& x, const Complex& y, int n,
                            const std::map<Index, Scalar>& coords) {
    auto blocks = hom_blocks(x, y, n);
    ChainMap f{x, y, {}};
    std::map<int, ExactMatrix> comps;
    for (auto& b : blocks) comps.emplace(b.i, ExactMatrix(b.rows, b.cols));
    for (auto& [idx, v] : coords) {
        for (auto& b : blocks) {
            if (idx >= b.offset && idx < b.offset + b.rows * b.cols) {
                long local = idx - b.offset;
                comps[b.i].add_to(local / b.cols, local % b.cols, v);
                break;
            }
        }
    }
    for (auto& [i, m] : comps)
        if (!m.is_zero()) f.comps[i] = m;
    return f;
}

Complex direct_sum(const Complex& a, const Complex& b) {
    if (a.grading() != b.grading()) throw GradingMismatch("direct sum across gradings");
    std::map<int, long> terms;
    std::map<int, ExactMatrix> diffs;
    auto degs = [&]() {
        std::vector<int> ds;
        if (a.grading() == Grading::Mod2) return std::vector<int>{0, 1};
        if (!a.has_terms() && !b.has_terms()) return ds;
        int lo = std::min(a.has_terms() ? a.min_degree() : 1 << 20, b.has_terms() ? b.min_degree() : 1 << 20);
        int hi = std::max(a.has_terms() ? a.max_degree() : -(1 << 20), b.has_terms() ? b.max_degree() : -(1 << 20));
        for (int d = lo; d <= hi; ++d) ds.push_back(d);
        return ds;
    }();
    for (int d : degs) {
        long n = a.dim(d) + b.dim(d);
        if (n) terms[d] = n;
        long rows = a.dim(d + 1) + b.dim(d + 1);
        if (n == 0 || rows == 0) continue;
        ExactMatrix D(rows, n);
        D.insert_block(0, 0, a.diff(d));
        D.insert_block(a.dim(d + 1), a.dim(d), b.diff(d));
        if (!D.is_zero()) diffs[d] = D;
    }
    return Complex::make(a.grading(), terms, diffs);
}

Complex tensor(const Complex& a, const Complex& b) {
    if (a.grading() != b.grading()) throw GradingMismatch("tensor across gradings");
    const Grading g = a.grading();
    // basis of (a(x)b)^k: blocks (i, j = k - i) ordered by i; element (p, q) -> p * dim b^j + q
    struct TBlock {
        int i, j;
        long da, db, offset;
    };
    auto blocks_of = [&](int k) {
        std::vector<TBlock> blocks;
        long off = 0;
        std::vector<std::pair<int, int>> ijs;
        if (g == Grading::Integer) {
            for (auto& [i, na] : a.terms())
                for (auto& [j, nb] : b.terms())
                    if (i + j == k) ijs.push_back({i, j});
        } else {
            for (int i : {0, 1}) {
                int j = norm_degree(g, k - i);
                if (a.dim(i) && b.dim(j)) ijs.push_back({i, j});
            }
        }
        std::sort(ijs.begin(), ijs.end());
        for (auto& [i, j] : ijs) {
            blocks.push_back({i, j, a.dim(i), b.dim(j), off});
            off += a.dim(i) * b.dim(j);
        }
        return blocks;
    };
    std::vector<int> degrees;
    if (g == Grading::Integer) {
        if (a.has_terms() && b.has_terms())
            for (int k = a.min_degree() + b.min_degree(); k <= a.max_degree() + b.max_degree(); ++k)
                degrees.push_back(k);
    } else {
        degrees = {0, 1};
    }
    std::map<int, long> terms;
    std::map<int, ExactMatrix> diffs;
    for (int k : degrees) {
        auto src = blocks_of(k);
        auto tgt = blocks_of(g == Grading::Integer ? k + 1 : norm_degree(g, k + 1));
        long cols = src.empty() ? 0 : src.back().offset + src.back().da * src.back().db;
        long rows = tgt.empty() ? 0 : tgt.back().offset + tgt.back().da * tgt.back().db;
        if (cols) terms[k] = cols;
        if (!cols || !rows) continue;
        ExactMatrix D(rows, cols);
        auto find_tgt = [&](int i, int j) -> const TBlock* {
            for (auto& t : tgt)
                if (t.i == i && t.j == j) return &t;
            return nullptr;
        };
        for (auto& sb : src) {
            ExactMatrix da = a.diff(sb.i);
            if (const TBlock* tb = find_tgt(g == Grading::Integer ? sb.i + 1 : norm_degree(g, sb.i + 1), sb.j);
                tb && !da.is_zero()) {
                for (auto& [rc, v] : da.entries())
                    for (long q = 0; q < sb.db; ++q)
                        D.add_to(tb->offset + rc.first * tb->db + q, sb.offset + rc.second * sb.db + q, v);
            }
            ExactMatrix db = b.diff(sb.j);
            if (const TBlock* tb = find_tgt(sb.i, g == Grading::Integer ? sb.j + 1 : norm_degree(g, sb.j + 1));
                tb && !db.is_zero()) {
                const Scalar sgn = (norm_degree(Grading::Mod2, sb.i) == 0) ? Scalar(1) : Scalar(-1);
                for (auto& [rc, v] : db.entries())
                    for (long p = 0; p < sb.da; ++p)
                        D.add_to(tb->offset + p * tb->db + rc.first, sb.offset + p * sb.db + rc.second, v * sgn);
            }
        }
        if (!D.is_zero()) diffs[k] = D;
    }
    return Complex::make(g, terms, diffs);
}

ChainMap post_compose_hom(const Complex& A, const ChainMap& g) {
    const Complex& B = g.source;
    const Complex& C = g.target;
    Complex HAB = hom_complex(A, B);
    Complex HAC = hom_complex(A, C);
    ChainMap out{HAB, HAC, {}};
    std::vector<int> degrees;
    if (A.grading() == Grading::Mod2) {
        degrees = {0, 1};
    } else {
        for (auto& [n, d] : HAB.terms()) degrees.push_back(n);
    }
    for (int n : degrees) {
        auto src = hom_blocks(A, B, n);
        auto tgt = hom_blocks(A, C, n);
        if (HAB.dim(n) == 0 || HAC.dim(n) == 0) continue;
        ExactMatrix M((exactlin::Index)HAC.dim(n), (exactlin::Index)HAB.dim(n));
        for (auto& sb : src) {
            const ExactMatrix gc = g.comp(sb.i + n);
            if (gc.is_zero()) continue;
            for (auto& tb : tgt) {
                if (tb.i != sb.i) continue;
                // (g o f)[r', c] = sum_r g[r', r] f[r, c]
                for (auto& [rc, v] : gc.entries())
                    for (long c = 0; c < sb.cols; ++c)
                        M.add_to((exactlin::Index)(tb.offset + rc.first * tb.cols + c),
                                 (exactlin::Index)(sb.offset + rc.second * sb.cols + c), v);
            }
        }
        if (!M.is_zero()) out.comps[norm_degree(A.grading(), n)] = M;
    }
    return out;
}

ChainMap pre_compose_hom(const ChainMap& f, const Complex& C) {
    const Complex& A = f.source;
    const Complex& B = f.target;
    Complex HBC = hom_complex(B, C);
    Complex HAC = hom_complex(A, C);
    ChainMap out{HBC, HAC, {}};
    std::vector<int> degrees;
    if (A.grading() == Grading::Mod2) {
        degrees = {0, 1};
    } else {
        for (auto& [n, d] : HBC.terms()) degrees.push_back(n);
    }
    for (int n : degrees) {
        auto src = hom_blocks(B, C, n);
        auto tgt = hom_blocks(A, C, n);
        if (HBC.dim(n) == 0 || HAC.dim(n) == 0) continue;
        ExactMatrix M((exactlin::Index)HAC.dim(n), (exactlin::Index)HBC.dim(n));
        for (auto& sb : src) {
            const ExactMatrix fc = f.comp(sb.i);
            if (fc.is_zero()) continue;
            for (auto& tb : tgt) {
                if (tb.i != sb.i) continue;
                // (h o f)[r, c'] = sum_c h[r, c] f[c, c']
                for (auto& [rc, v] : fc.entries())
                    for (long r = 0; r < sb.rows; ++r)
                        M.add_to((exactlin::Index)(tb.offset + r * tb.cols + rc.second),
                                 (exactlin::Index)(sb.offset + r * sb.cols + rc.first), v);
            }
        }
        if (!M.is_zero()) out.comps[norm_degree(A.grading(), n)] = M;
    }
    return out;
}

ChainMap fold_hom_iso(const Complex& A, const Complex& B) {
    if (A.grading() != Grading::Integer || B.grading() != Grading::Integer)
        throw GradingMismatch("fold_hom_iso expects integer-graded complexes");
    Complex H = hom_complex(A, B);
    Complex FH = fold(H);
    Complex fA = fold(A), fB = fold(B);
    Complex HF = hom_complex(fA, fB);
    auto offsets = [&](const Complex& z) {
        std::map<int, long> off;
        long tot[2] = {0, 0};
        for (auto& [d, nn] : z.terms()) {
            int par = ((d % 2) + 2) % 2;
            off[d] = tot[par];
            tot[par] += nn;
        }
        return off;
    };
    auto offA = offsets(A), offB = offsets(B);
    ChainMap f{FH, HF, {}};
    for (int par : {0, 1}) {
        if (FH.dim(par) == 0 || HF.dim(par) == 0) continue;
        ExactMatrix M((exactlin::Index)HF.dim(par), (exactlin::Index)FH.dim(par));
        auto tblocks = hom_blocks(fA, fB, par);
        long src_off = 0;
        // fold(H) orders the parity-par part by increasing hom degree n
        for (auto& [n, dim] : H.terms()) {
            if (((n % 2) + 2) % 2 != par) continue;
            for (auto& sb : hom_blocks(A, B, n)) {
                int ipar = ((sb.i % 2) + 2) % 2;
                const HomBlock* tb = nullptr;
                for (auto& t : tblocks)
                    if (t.i == ipar) tb = &t;
                if (!tb) continue;
                for (long r = 0; r < sb.rows; ++r)
                    for (long c = 0; c < sb.cols; ++c) {
                        long tr = offB[sb.i + n] + r;
                        long tc = offA[sb.i] + c;
                        M.set((exactlin::Index)(tb->offset + tr * tb->cols + tc),
                              (exactlin::Index)(src_off + sb.offset + r * sb.cols + c), Scalar(1));
                    }
            }
            src_off += dim;
        }
        if (!M.is_zero()) f.comps[par] = M;
    }
    return f;
}

bool is_quasi_iso(const ChainMap& f) { return cone(f).is_acyclic(); }

std::optional<ChainMap> find_quasi_iso(const Complex& x, const Complex& y, int max_attempts) {
    if (x.grading() != y.grading()) return std::nullopt;
    if (!(x.cohomology() == y.cohomology())) return std::nullopt;
    if (!x.has_terms() && !y.has_terms()) return identity_map(x);
    Complex H = hom_complex(x, y);
    ExactMatrix d0 = H.diff(0);
    if (H.dim(0) == 0) {
        // only possible when both are acyclic
        ChainMap f{x, y, {}};
        return is_quasi_iso(f) ? std::optional<ChainMap>(f) : std::nullopt;
    }
    auto cocycles = kernel_basis(d0);
    if (cocycles.empty()) return std::nullopt;
    auto attempt = [&](const std::map<Index, Scalar>& coords) -> std::optional<ChainMap> {
        ChainMap f = hom_element_to_map(x, y, 0, coords);
        f.validate();
        if (is_quasi_iso(f)) return f;
        return std::nullopt;
    };
    int tries = 0;
    // single cocycles
    for (auto& z : cocycles) {
        if (++tries > max_attempts) return std::nullopt;
        if (auto f = attempt(z)) return f;
    }
    // +/-1 combinations over all cocycles (bounded count)
    const size_t m = cocycles.size();
    if (m >= 2 && m <= 10) {
        for (unsigned mask = 0; mask < (1u << m) && tries <= max_attempts; ++mask) {
            std::map<Index, Scalar> coords;
            for (size_t j = 0; j < m; ++j) {
                Scalar c((mask >> j) & 1 ? -1 : 1);
                for (auto& [idx, v] : cocycles[j]) {
                    auto it = coords.find(idx);
                    Scalar nv = (it == coords.end() ? Scalar(0) : it->second) + v * c;
                    if (nv.is_zero())
                        coords.erase(idx);
                    else
                        coords[idx] = nv;
                }
            }
            ++tries;
            if (auto f = attempt(coords)) return f;
        }
    }
    // deterministic small-integer combinations
    unsigned long state = 0x9e3779b97f4a7c15ull ^ (m * 1000003ull);
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return (long)((state >> 33) % 7) - 3;  // in [-3, 3]
    };
    while (tries <= max_attempts) {
        std::map<Index, Scalar> coords;
        for (auto& z : cocycles) {
            long c = next();
            if (c == 0) continue;
            for (auto& [idx, v] : z) {
                auto it = coords.find(idx);
                Scalar nv = (it == coords.end() ? Scalar(0) : it->second) + v * Scalar(c);
                if (nv.is_zero())
                    coords.erase(idx);
                else
                    coords[idx] = nv;
            }
        }
        ++tries;
        if (coords.empty()) continue;
        if (auto f = attempt(coords)) return f;
    }
    return std::nullopt;
}

}  // namespace mirrorcalc::complexes
