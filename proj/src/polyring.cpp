#include "mirrorcalc/polyring.hpp"

#include <algorithm>

namespace mirrorcalc::polyring {

using complexes::norm_degree;

MultiMonomial MultiMonomial::var(int nvars, int i, int power) {
    MultiMonomial m = one(nvars);
    m.e.at(i) = power;
    return m;
}

bool MultiMonomial::divides(const MultiMonomial& m) const {
    if (e.size() != m.e.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

MultiMonomial MultiMonomial::operator*(const MultiMonomial& m) const {
    MultiMonomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
}

MultiMonomial MultiMonomial::operator/(const MultiMonomial& m) const {
    if (!m.divides(*this)) throw NotHomogeneous("monomial quotient is not a monomial");
    MultiMonomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
    return r;
}

MonomialIdeal::MonomialIdeal(int nv, std::vector<MultiMonomial> generators) : nvars(nv) {
    for (auto& g : generators)
        if (g.nvars() != nv) throw NotHomogeneous("ideal generator in wrong algebra");
    // reduce: drop any generator divisible by another
    for (size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < generators.size() && !redundant; ++j)
            if (i != j && generators[j].divides(generators[i]) &&
                !(generators[i] == generators[j] && j > i))
                redundant = true;
        if (!redundant) gens.push_back(generators[i]);
    }
}

bool MonomialIdeal::contains(const MultiMonomial& m) const {
    for (auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

namespace {
void enumerate_monomials(int nvars, int maxtotal, std::vector<int>& cur, int pos,
                         const std::function<void(const MultiMonomial&)>& visit) {
    if (pos == nvars) {
        visit(MultiMonomial(cur));
        return;
    }
    int used = 0;
    for (int i = 0; i < pos; ++i) used += cur[i];
    for (int k = 0; k + used <= maxtotal; ++k) {
        cur[pos] = k;
        enumerate_monomials(nvars, maxtotal, cur, pos + 1, visit);
    }
    cur[pos] = 0;
}
}  // namespace

std::vector<long> hilbert_function(const MonomialIdeal& i, int D) {
    std::vector<long> h(D + 1, 0);
    std::vector<int> cur(i.nvars, 0);
    enumerate_monomials(i.nvars, D, cur, 0, [&](const MultiMonomial& m) {
        if (!i.contains(m)) ++h[m.total()];
    });
    return h;
}

Poly Poly::monomial(const MultiMonomial& m, const Scalar& c) {
    Poly p(m.nvars());
    if (!c.is_zero()) p.terms[m.e] = c;
    return p;
}

Poly Poly::constant(int nvars, const Scalar& c) { return monomial(MultiMonomial::one(nvars), c); }

void Poly::add_term(const std::vector<int>& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms[e] = c;
        return;
    }
    Scalar s = it->second + c;
    if (s.is_zero())
        terms.erase(it);
    else
        it->second = s;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars);
    for (auto& [e, c] : terms) r.terms[e] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars);
    for (auto& [e1, c1] : terms)
        for (auto& [e2, c2] : o.terms) {
            std::vector<int> e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

FreeComplex FreeComplex::make(int nvars, Grading g, std::map<int, std::vector<FreeGen>> terms,
                              std::map<int, PolyMatrix> diffs, bool check_d2) {
    FreeComplex c(nvars, g);
    for (auto& [d, gens] : terms) {
        if (gens.empty()) continue;
        for (auto& gen : gens)
            if ((int)gen.shift.size() != nvars) throw NotHomogeneous("generator shift length mismatch");
        auto& slot = c.terms_[norm_degree(g, d)];
        slot.insert(slot.end(), gens.begin(), gens.end());
    }
    for (auto& [d, m] : diffs) {
        if (m.empty()) continue;
        auto& slot = c.diffs_[norm_degree(g, d)];
        for (auto& [rc, p] : m)
            if (!p.is_zero()) slot[rc] = p;
    }
    c.validate(check_d2);
    return c;
}

long FreeComplex::dim(int d) const {
    auto it = terms_.find(norm_degree(grading_, d));
    return it == terms_.end() ? 0 : (long)it->second.size();
}

const std::vector<FreeGen>& FreeComplex::gens(int d) const {
    static const std::vector<FreeGen> empty;
    auto it = terms_.find(norm_degree(grading_, d));
    return it == terms_.end() ? empty : it->second;
}

Poly FreeComplex::diff_entry(int d, int row, int col) const {
    auto it = diffs_.find(norm_degree(grading_, d));
    if (it == diffs_.end()) return Poly(nvars_);
    auto jt = it->second.find({row, col});
    return jt == it->second.end() ? Poly(nvars_) : jt->second;
}

bool FreeComplex::homogeneous() const {
    for (auto& [d, m] : diffs_) {
        const auto& src = gens(d);
        const auto& tgt = gens(norm_degree(grading_, d + 1));
        for (auto& [rc, p] : m) {
            std::vector<int> want(nvars_);
            for (int i = 0; i < nvars_; ++i) want[i] = src[rc.second].shift[i] - tgt[rc.first].shift[i];
            for (auto& [e, c] : p.terms)
                if (e != want) return false;
        }
    }
    return true;
}

void FreeComplex::validate(bool check_d2) const {
    for (auto& [d, m] : diffs_) {
        const auto& src = gens(d);
        const auto& tgt = gens(norm_degree(grading_, d + 1));
        for (auto& [rc, p] : m) {
            if (rc.first < 0 || rc.first >= (int)tgt.size() || rc.second < 0 || rc.second >= (int)src.size())
                throw exactlin::ShapeMismatch("differential entry out of range");
        }
    }
    if (!check_d2) return;
    auto compose_zero = [&](int d) {
        const PolyMatrix empty;
        const PolyMatrix& m1 = diffs_.count(norm_degree(grading_, d)) ? diffs_.at(norm_degree(grading_, d)) : empty;
        const PolyMatrix& m2 =
            diffs_.count(norm_degree(grading_, d + 1)) ? diffs_.at(norm_degree(grading_, d + 1)) : empty;
        std::map<std::pair<int, int>, Poly> prod;
        for (auto& [rc2, p2] : m2)
            for (auto& [rc1, p1] : m1)
                if (rc2.second == rc1.first) {
                    auto key = std::make_pair(rc2.first, rc1.second);
                    auto it = prod.find(key);
                    if (it == prod.end())
                        prod[key] = p2 * p1;
                    else
                        it->second = it->second + p2 * p1;
                }
        for (auto& [rc, p] : prod)
            if (!p.is_zero()) throw exactlin::NotAComplex("free complex: d o d != 0");
    };
    if (grading_ == Grading::Integer) {
        for (auto& [d, m] : diffs_) compose_zero(d);
    } else {
        compose_zero(0);
        compose_zero(1);
    }
}

Complex FreeComplex::slice(const std::vector<int>& m) const {
    if ((int)m.size() != nvars_) throw NotHomogeneous("slice multidegree length mismatch");
    if (!homogeneous()) throw NotHomogeneous("slice of an inhomogeneous complex");
    auto present = [&](const FreeGen& g) {
        for (int i = 0; i < nvars_; ++i)
            if (m[i] < g.shift[i]) return false;
        return true;
    };
    std::map<int, std::vector<int>> idx;
    std::map<int, long> dims;
    for (auto& [d, gens] : terms_) {
        std::vector<int> present_idx;
        for (int i = 0; i < (int)gens.size(); ++i)
            if (present(gens[i])) present_idx.push_back(i);
        if (!present_idx.empty()) {
            dims[d] = (long)present_idx.size();
            idx[d] = std::move(present_idx);
        }
    }
    std::map<int, ExactMatrix> diffs;
    for (auto& [d, mat] : diffs_) {
        int dn = norm_degree(grading_, d);
        int tn = norm_degree(grading_, dn + 1);
        if (!idx.count(dn) || !idx.count(tn)) continue;
        auto& src = idx[dn];
        auto& tgt = idx[tn];
        ExactMatrix D((int)tgt.size(), (int)src.size());
        const auto& tgens = gens(tn);
        const auto& sgens = gens(dn);
        for (int r = 0; r < (int)tgt.size(); ++r)
            for (int c = 0; c < (int)src.size(); ++c) {
                Poly p = diff_entry(dn, tgt[r], src[c]);
                if (p.is_zero()) continue;
                std::vector<int> want(nvars_);
                for (int i = 0; i < nvars_; ++i) want[i] = sgens[src[c]].shift[i] - tgens[tgt[r]].shift[i];
                auto it = p.terms.find(want);
                if (it != p.terms.end()) D.set(r, c, it->second);
            }
        if (!D.is_zero()) diffs[dn] = D;
    }
    return Complex::make(grading_, dims, diffs);
}

FreeComplex free_unit(int nvars, int degree) {
    return FreeComplex::make(nvars, Grading::Integer, {{degree, {FreeGen{std::vector<int>(nvars, 0)}}}}, {});
}

FreeComplex koszul_complex(int nvars, const std::vector<int>& vars) {
    const int k = (int)vars.size();
    std::vector<std::vector<int>> all{{}};
    for (int i = 0; i < k; ++i) {
        size_t cur = all.size();
        for (size_t j = 0; j < cur; ++j) {
            auto s = all[j];
            s.push_back(i);
            all.push_back(s);
        }
    }
    std::map<int, std::vector<std::vector<int>>> subsets;  // size -> sorted list of subsets
    for (auto& s : all) subsets[(int)s.size()].push_back(s);
    for (auto& [sz, list] : subsets) std::sort(list.begin(), list.end());
    std::map<int, std::vector<FreeGen>> terms;
    std::map<int, PolyMatrix> diffs;
    std::map<int, std::map<std::vector<int>, int>> index_of;
    for (auto& [sz, list] : subsets) {
        for (auto& s : list) {
            std::vector<int> shift(nvars, 0);
            for (int i : s) shift[vars[i]] = 1;
            index_of[sz][s] = (int)terms[-sz].size();
            terms[-sz].push_back(FreeGen{shift});
        }
    }
    for (auto& [sz, list] : subsets) {
        if (sz == 0) continue;
        PolyMatrix& m = diffs[-sz];
        for (auto& s : list) {
            int col = index_of[sz][s];
            for (int pos = 0; pos < sz; ++pos) {
                std::vector<int> t = s;
                t.erase(t.begin() + pos);
                int row = index_of[sz - 1][t];
                Scalar sign(pos % 2 == 0 ? 1 : -1);
                m[{row, col}] = Poly::monomial(MultiMonomial::var(nvars, vars[s[pos]]), sign);
            }
        }
    }
    return FreeComplex::make(nvars, Grading::Integer, terms, diffs);
}

FreeComplex shift(const FreeComplex& c, int n) {
    std::map<int, std::vector<FreeGen>> terms;
    std::map<int, PolyMatrix> diffs;
    for (auto& [d, gens] : c.terms()) terms[d - n] = gens;
    for (auto& [d, m] : c.diffs()) {
        PolyMatrix sm;
        for (auto& [rc, p] : m) sm[rc] = (n % 2 == 0) ? p : -p;
        diffs[d - n] = sm;
    }
    return FreeComplex::make(c.nvars(), c.grading(), terms, diffs, false);
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
    if (a.nvars() != b.nvars() || a.grading() != b.grading())
        throw NotHomogeneous("direct sum across algebras or gradings");
    std::map<int, std::vector<FreeGen>> terms;
    std::map<int, PolyMatrix> diffs;
    std::set<int> degrees;
    for (auto& [d, g] : a.terms()) degrees.insert(d);
    for (auto& [d, g] : b.terms()) degrees.insert(d);
    for (int d : degrees) {
        auto& slot = terms[d];
        for (auto& g : a.gens(d)) slot.push_back(g);
        for (auto& g : b.gens(d)) slot.push_back(g);
    }
    const PolyMatrix empty;
    for (int d : degrees) {
        PolyMatrix m;
        long ra = a.dim(d + 1), ca = a.dim(d);
        for (auto& [rc, p] : (a.diffs().count(d) ? a.diffs().at(d) : empty)) m[rc] = p;
        for (auto& [rc, p] : (b.diffs().count(d) ? b.diffs().at(d) : empty))
            m[{rc.first + (int)ra, rc.second + (int)ca}] = p;
        if (!m.empty()) diffs[d] = m;
    }
    return FreeComplex::make(a.nvars(), a.grading(), terms, diffs, false);
}

FreeComplex tensor(const FreeComplex& a, const FreeComplex& b) {
    if (a.nvars() != b.nvars() || a.grading() != b.grading())
        throw NotHomogeneous("tensor across algebras or gradings");
    if (a.grading() != Grading::Integer) throw NotHomogeneous("free tensor implemented for integer grading");
    const int nv = a.nvars();
    struct Block {
        int i, j;
        long da, db, offset;
    };
    auto blocks_of = [&](int k) {
        std::vector<Block> blocks;
        long off = 0;
        for (auto& [i, gens] : a.terms()) {
            int j = k - i;
            if (b.dim(j) == 0) continue;
            blocks.push_back({i, j, a.dim(i), b.dim(j), off});
            off += a.dim(i) * b.dim(j);
        }
        return blocks;
    };
    if (!a.has_terms() || !b.has_terms()) return FreeComplex::make(nv, a.grading(), {}, {});
    std::map<int, std::vector<FreeGen>> terms;
    std::map<int, PolyMatrix> diffs;
    int lo = a.min_degree() + b.min_degree(), hi = a.max_degree() + b.max_degree();
    for (int k = lo; k <= hi; ++k) {
        for (auto& blk : blocks_of(k))
            for (long p = 0; p < blk.da; ++p)
                for (long q = 0; q < blk.db; ++q) {
                    std::vector<int> s(nv);
                    for (int t = 0; t < nv; ++t)
                        s[t] = a.gens(blk.i)[p].shift[t] + b.gens(blk.j)[q].shift[t];
                    terms[k].push_back(FreeGen{s});
                }
    }
    const PolyMatrix empty;
    for (int k = lo; k < hi; ++k) {
        auto src = blocks_of(k), tgt = blocks_of(k + 1);
        PolyMatrix D;
        auto find_tgt = [&](int i, int j) -> const Block* {
            for (auto& t : tgt)
                if (t.i == i && t.j == j) return &t;
            return nullptr;
        };
        auto add = [&](int r, int c, const Poly& p) {
            auto key = std::make_pair(r, c);
            auto it = D.find(key);
            if (it == D.end())
                D[key] = p;
            else
                it->second = it->second + p;
        };
        for (auto& sb : src) {
            if (const Block* tb = find_tgt(sb.i + 1, sb.j)) {
                for (auto& [rc, poly] : (a.diffs().count(sb.i) ? a.diffs().at(sb.i) : empty))
                    for (long q = 0; q < sb.db; ++q)
                        add((int)(tb->offset + rc.first * tb->db + q), (int)(sb.offset + rc.second * sb.db + q),
                            poly);
            }
            if (const Block* tb = find_tgt(sb.i, sb.j + 1)) {
                const bool neg = ((sb.i % 2) + 2) % 2 == 1;
                for (auto& [rc, poly] : (b.diffs().count(sb.j) ? b.diffs().at(sb.j) : empty))
                    for (long p = 0; p < sb.da; ++p)
                        add((int)(tb->offset + p * tb->db + rc.first), (int)(sb.offset + p * sb.db + rc.second),
                            neg ? -poly : poly);
            }
        }
        if (!D.empty()) diffs[k] = D;
    }
    return FreeComplex::make(nv, a.grading(), terms, diffs);
}

FreeComplex fold(const FreeComplex& c) {
    if (c.grading() == Grading::Mod2) return c;
    std::map<int, std::vector<FreeGen>> terms;
    std::map<int, PolyMatrix> diffs;
    std::map<int, long> off;
    long tot[2] = {0, 0};
    for (auto& [d, gens] : c.terms()) {
        int par = ((d % 2) + 2) % 2;
        off[d] = tot[par];
        tot[par] += (long)gens.size();
        for (auto& g : gens) terms[par].push_back(g);
    }
    for (auto& [d, m] : c.diffs()) {
        int par = ((d % 2) + 2) % 2;
        long roff = off.count(d + 1) ? off[d + 1] : 0;
        for (auto& [rc, p] : m) diffs[par][{(int)(roff + rc.first), (int)(off[d] + rc.second)}] = p;
    }
    return FreeComplex::make(c.nvars(), Grading::Mod2, terms, diffs);
}

FreeComplex hom_free(const FreeComplex& x, const FreeComplex& y) {
    if (x.nvars() != y.nvars() || x.grading() != y.grading())
        throw NotHomogeneous("hom across algebras or gradings");
    const int nv = x.nvars();
    const Grading g = x.grading();
    struct Block {
        int i;
        long rows, cols, offset;
    };
    auto blocks_of = [&](int n) {
        std::vector<Block> blocks;
        long off = 0;
        if (g == Grading::Integer) {
            for (auto& [i, gens] : x.terms()) {
                if (y.dim(i + n) == 0) continue;
                blocks.push_back({i, y.dim(i + n), x.dim(i), off});
                off += y.dim(i + n) * x.dim(i);
            }
        } else {
            for (int i : {0, 1}) {
                if (x.dim(i) == 0 || y.dim(i + n) == 0) continue;
                blocks.push_back({i, y.dim(i + n), x.dim(i), off});
                off += y.dim(i + n) * x.dim(i);
            }
        }
        return blocks;
    };
    std::vector<int> degrees;
    if (g == Grading::Integer) {
        if (!x.has_terms() || !y.has_terms()) return FreeComplex::make(nv, g, {}, {});
        for (int n = y.min_degree() - x.max_degree(); n <= y.max_degree() - x.min_degree(); ++n)
            degrees.push_back(n);
    } else {
        degrees = {0, 1};
    }
    std::map<int, std::vector<FreeGen>> terms;
    std::map<int, PolyMatrix> diffs;
    for (int n : degrees) {
        for (auto& blk : blocks_of(n))
            for (long r = 0; r < blk.rows; ++r)
                for (long c = 0; c < blk.cols; ++c) {
                    std::vector<int> s(nv);
                    for (int t = 0; t < nv; ++t)
                        s[t] = y.gens(blk.i + n)[r].shift[t] - x.gens(blk.i)[c].shift[t];
                    terms[n].push_back(FreeGen{s});
                }
    }
    const PolyMatrix empty;
    for (int n : degrees) {
        auto src = blocks_of(n);
        auto tgt = blocks_of(g == Grading::Integer ? n + 1 : norm_degree(g, n + 1));
        PolyMatrix D;
        auto find_tgt = [&](int i) -> const Block* {
            for (auto& t : tgt)
                if (t.i == i) return &t;
            return nullptr;
        };
        auto add = [&](int r, int c, const Poly& p) {
            auto key = std::make_pair(r, c);
            auto it = D.find(key);
            if (it == D.end())
                D[key] = p;
            else
                it->second = it->second + p;
        };
        const bool neg = norm_degree(Grading::Mod2, n) == 0;  // the sign -(-1)^n
        for (auto& sb : src) {
            if (const Block* tb = find_tgt(sb.i)) {
                int yd = norm_degree(g, sb.i + n);
                for (auto& [rc, poly] : (y.diffs().count(yd) ? y.diffs().at(yd) : empty))
                    for (long c = 0; c < sb.cols; ++c)
                        add((int)(tb->offset + rc.first * tb->cols + c),
                            (int)(sb.offset + rc.second * sb.cols + c), poly);
            }
            int xd = g == Grading::Integer ? sb.i - 1 : norm_degree(g, sb.i - 1);
            if (const Block* tb = find_tgt(xd)) {
                for (auto& [rc, poly] : (x.diffs().count(norm_degree(g, xd)) ? x.diffs().at(norm_degree(g, xd)) : empty))
                    for (long r = 0; r < sb.rows; ++r)
                        add((int)(tb->offset + r * tb->cols + rc.second),
                            (int)(sb.offset + r * sb.cols + rc.first), neg ? -poly : poly);
            }
        }
        if (!D.empty()) diffs[n] = D;
    }
    return FreeComplex::make(nv, g, terms, diffs);
}

FreeComplex set_vars_zero(const FreeComplex& c, const std::vector<int>& drop) {
    std::set<int> dropped(drop.begin(), drop.end());
    std::map<int, PolyMatrix> diffs;
    for (auto& [d, m] : c.diffs()) {
        PolyMatrix nm;
        for (auto& [rc, p] : m) {
            Poly np(c.nvars());
            for (auto& [e, coeff] : p.terms) {
                bool kill = false;
                for (int v : dropped)
                    if (e[v] > 0) kill = true;
                if (!kill) np.add_term(e, coeff);
            }
            if (!np.is_zero()) nm[rc] = np;
        }
        if (!nm.empty()) diffs[d] = nm;
    }
    return FreeComplex::make(c.nvars(), c.grading(), c.terms(), diffs, false);
}

FreeComplex koszul_restrict(const FreeComplex& c, const std::vector<int>& keep) {
    std::set<int> kept(keep.begin(), keep.end());
    std::vector<int> drop;
    for (int v = 0; v < c.nvars(); ++v)
        if (!kept.count(v)) drop.push_back(v);
    FreeComplex z = set_vars_zero(c, drop);
    std::vector<int> order(kept.begin(), kept.end());
    auto project = [&](const std::vector<int>& e) {
        std::vector<int> r(order.size());
        for (size_t i = 0; i < order.size(); ++i) r[i] = e[order[i]];
        return r;
    };
    std::map<int, std::vector<FreeGen>> terms;
    for (auto& [d, gens] : z.terms())
        for (auto& g : gens) terms[d].push_back(FreeGen{project(g.shift)});
    std::map<int, PolyMatrix> diffs;
    for (auto& [d, m] : z.diffs()) {
        PolyMatrix nm;
        for (auto& [rc, p] : m) {
            Poly np((int)order.size());
            for (auto& [e, coeff] : p.terms) np.add_term(project(e), coeff);
            if (!np.is_zero()) nm[rc] = np;
        }
        if (!nm.empty()) diffs[d] = nm;
    }
    return FreeComplex::make((int)order.size(), z.grading(), terms, diffs, false);
}

std::set<std::vector<int>> relevant_multidegrees(const FreeComplex& c, int D) {
    std::set<std::vector<int>> out;
    for (auto& [d, gens] : c.terms())
        for (auto& g : gens) {
            long base = 0;
            for (int x : g.shift) base += x;
            if (base > D) continue;
            std::vector<int> cur(c.nvars(), 0);
            enumerate_monomials(c.nvars(), (int)(D - base), cur, 0, [&](const MultiMonomial& m) {
                std::vector<int> md = g.shift;
                for (int i = 0; i < c.nvars(); ++i) md[i] += m.e[i];
                out.insert(md);
            });
        }
    return out;
}

std::map<std::pair<int, std::vector<int>>, long> sliced_cohomology(const FreeComplex& c, int D) {
    std::map<std::pair<int, std::vector<int>>, long> table;
    for (auto& m : relevant_multidegrees(c, D)) {
        auto h = c.slice(m).cohomology();
        for (auto& [deg, n] : h.dims) table[{deg, m}] = n;
    }
    return table;
}

std::map<std::pair<int, long>, long> truncated_cohomology(const FreeComplex& c, int D) {
    std::map<std::pair<int, long>, long> table;
    for (auto& [key, n] : sliced_cohomology(c, D)) {
        long total = 0;
        for (int x : key.second) total += x;
        table[{key.first, total}] += n;
    }
    return table;
}

}  // namespace mirrorcalc::polyring
