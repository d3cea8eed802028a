#include "mirrorcalc/bmodels.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace mirrorcalc::bmodels {

using complexes::cone;
using complexes::identity_map;
using exactlin::ExactMatrix;
using exactlin::Index;
using polyring::FreeGen;
using polyring::hilbert_function;
using polyring::MonomialIdeal;

namespace {

MultiMonomial product_monomial(int nvars) { return MultiMonomial(std::vector<int>(nvars, 1)); }

PolyMatrix poly_product(const PolyMatrix& a, const PolyMatrix& b, int nvars) {
    PolyMatrix prod;
    for (auto& [rc2, p2] : a)
        for (auto& [rc1, p1] : b)
            if (rc2.second == rc1.first) {
                auto key = std::make_pair(rc2.first, rc1.second);
                auto it = prod.find(key);
                Poly val = p2 * p1;
                if (it == prod.end())
                    prod[key] = val;
                else
                    it->second = it->second + val;
            }
    (void)nvars;
    return prod;
}

bool is_w_identity(const PolyMatrix& m, size_t rank, const MultiMonomial& w) {
    for (size_t i = 0; i < rank; ++i) {
        auto it = m.find({(int)i, (int)i});
        if (it == m.end()) return false;
        Poly expect = Poly::monomial(w);
        if (!(it->second == expect)) return false;
    }
    for (auto& [rc, p] : m)
        if (rc.first != rc.second && !p.is_zero()) return false;
    return true;
}

}  // namespace

void MatrixFactorization::validate() const {
    if ((int)w.e.size() != nvars) throw AlgebraMismatch("superpotential in wrong algebra");
    PolyMatrix p10 = poly_product(d1, d0, nvars);
    PolyMatrix p01 = poly_product(d0, d1, nvars);
    if (!is_w_identity(p10, shifts0.size(), w) || !is_w_identity(p01, shifts1.size(), w))
        throw AlgebraMismatch("factorization identity d^2 = w id fails");
}

MatrixFactorization mf_generator(int n, int a) {
    const int nvars = n + 1;
    if (a < 1 || a > nvars) throw IndexOutOfRange("factorization index out of range");
    MatrixFactorization m;
    m.nvars = nvars;
    m.w = product_monomial(nvars);
    m.shifts0 = {std::vector<int>(nvars, 0)};
    MultiMonomial wa = m.w;
    wa.e[a - 1] = 0;  // w / z_a
    std::vector<int> s1(nvars, 0);
    for (int i = 0; i < nvars; ++i) s1[i] = -wa.e[i];  // s0 - s1 = deg d0
    m.shifts1 = {s1};
    m.d0[{0, 0}] = Poly::monomial(wa);
    m.d1[{0, 0}] = Poly::monomial(MultiMonomial::var(nvars, a - 1));
    m.validate();
    return m;
}

namespace {

// the generator shifts of the 2-periodic levels of a factorization
std::vector<std::vector<int>> level_shifts(const MatrixFactorization& m, int level) {
    int par = ((level % 2) + 2) % 2;
    // floor division for negative levels
    int j = (level - par) / 2;
    const auto& base = (par == 0) ? m.shifts0 : m.shifts1;
    std::vector<std::vector<int>> out = base;
    for (auto& s : out)
        for (int i = 0; i < m.nvars; ++i) s[i] -= j * m.w.e[i];
    return out;
}

const PolyMatrix& level_diff(const MatrixFactorization& m, int level) {
    return (((level % 2) + 2) % 2 == 0) ? m.d0 : m.d1;
}

}  // namespace

FreeComplex mf_hom_complex(const MatrixFactorization& x, const MatrixFactorization& y, int lo, int hi) {
    if (x.nvars != y.nvars || !(x.w == y.w)) throw AlgebraMismatch("factorizations over different data");
    const int nv = x.nvars;
    std::map<int, std::vector<FreeGen>> terms;
    std::map<int, PolyMatrix> diffs;
    // per spot: block G1 = Hom(V^0, V'^k) then block G2 = Hom(V^1, V'^{k+1})
    auto block_sizes = [&](int k) {
        auto t0 = level_shifts(y, k);
        auto t1 = level_shifts(y, k + 1);
        return std::make_pair(t0.size() * x.shifts0.size(), t1.size() * x.shifts1.size());
    };
    for (int k = lo; k <= hi; ++k) {
        std::vector<FreeGen> gens;
        auto ty_k = level_shifts(y, k);
        auto tx_0 = level_shifts(x, 0);
        for (auto& r : ty_k)
            for (auto& c : tx_0) {
                std::vector<int> s(nv);
                for (int i = 0; i < nv; ++i) s[i] = r[i] - c[i];
                gens.push_back(FreeGen{s});
            }
        auto ty_k1 = level_shifts(y, k + 1);
        auto tx_1 = level_shifts(x, 1);
        for (auto& r : ty_k1)
            for (auto& c : tx_1) {
                std::vector<int> s(nv);
                for (int i = 0; i < nv; ++i) s[i] = r[i] - c[i];
                gens.push_back(FreeGen{s});
            }
        terms[k] = gens;
    }
    const long x0 = (long)x.shifts0.size(), x1 = (long)x.shifts1.size();
    for (int k = lo; k < hi; ++k) {
        PolyMatrix D;
        auto [g1_src, g2_src] = block_sizes(k);
        auto [g1_tgt, g2_tgt] = block_sizes(k + 1);
        (void)g2_tgt;
        const long y_k = (long)level_shifts(y, k).size();
        const long y_k1 = (long)level_shifts(y, k + 1).size();
        const Scalar pre_sign(((k % 2) + 2) % 2 == 0 ? -1 : 1);  // -(-1)^k
        auto add = [&](long r, long c, const Poly& p) {
            auto key = std::make_pair((int)r, (int)c);
            auto it = D.find(key);
            if (it == D.end())
                D[key] = p;
            else
                it->second = it->second + p;
        };
        // G1(k) -> G1(k+1): post-compose with d' at level k
        for (auto& [rc, p] : level_diff(y, k))
            for (long c = 0; c < x0; ++c) add(rc.first * x0 + c, rc.second * x0 + c, p);
        // G2(k) -> G2(k+1): post-compose with d' at level k+1
        for (auto& [rc, p] : level_diff(y, k + 1))
            for (long c = 0; c < x1; ++c)
                add(g1_tgt + rc.first * x1 + c, g1_src + rc.second * x1 + c, p);
        // G2(k) -> G1(k+1): pre-compose with d at level 0 (d0 of x)
        for (auto& [rc, p] : x.d0)
            for (long r = 0; r < y_k1; ++r)
                add(r * x0 + rc.second, g1_src + r * x1 + rc.first, p * Poly::constant(nv, pre_sign));
        // G1(k) -> G2(k+1): pre-compose with d at level 1 (d1 of x)
        for (auto& [rc, p] : x.d1)
            for (long r = 0; r < y_k; ++r)
                add(g1_tgt + r * x1 + rc.second, r * x0 + rc.first, p * Poly::constant(nv, pre_sign));
        diffs[k] = D;
    }
    return FreeComplex::make(nv, Grading::Integer, terms, diffs);
}

namespace {

// raw (parity, total multidegree) histogram of the middle-spot cohomology
std::map<std::pair<int, long>, long> mf_raw_table(const MatrixFactorization& x, const MatrixFactorization& y,
                                                  int bound) {
    FreeComplex H = mf_hom_complex(x, y);
    std::map<std::pair<int, long>, long> raw;
    for (auto& m : polyring::relevant_multidegrees(H, bound)) {
        Complex s = H.slice(m);
        long total = 0;
        for (int v : m) total += v;
        auto h = s.cohomology();
        for (int spot : {0, 1}) {
            long d = h.dim(spot);
            if (d) raw[{spot, total}] += d;
        }
    }
    return raw;
}

ParityTable normalize_to_table(const std::map<std::pair<int, long>, long>& raw, int D) {
    long min_total = 0;
    bool any = false;
    for (auto& [key, d] : raw)
        if (d > 0 && (!any || key.second < min_total)) {
            min_total = key.second;
            any = true;
        }
    ParityTable t(D);
    if (!any) return t;
    for (auto& [key, d] : raw) {
        long s = key.second - min_total;
        if (s >= 0 && s <= D) t.dims[key.first][s] += d;
    }
    return t;
}

}  // namespace

ParityTable mf_hom_cohomology(const MatrixFactorization& x, const MatrixFactorization& y, int D) {
    long wtotal = 0;
    for (int v : x.w.e) wtotal += v;
    return normalize_to_table(mf_raw_table(x, y, D + (int)wtotal), D);
}

// ---------------------------------------------------------------------------

std::vector<long>& CohTable::row(int d) {
    auto it = rows.find(d);
    if (it == rows.end()) it = rows.emplace(d, std::vector<long>(D_poly + 1, 0)).first;
    return it->second;
}

long CohTable::at(int d, int t) const {
    auto it = rows.find(d);
    if (it == rows.end() || t < 0 || t > D_poly) return 0;
    return it->second[t];
}

CohTable coh_ext_table(int n, int a, int b, int D_poly, int D_u) {
    if (a < 1 || a > n || b < 1 || b > n) throw IndexOutOfRange("hyperplane index out of range");
    if (D_u < 0 || D_poly < 0) throw TruncationTooSmall("negative truncation bound");
    const int L = 2 * D_u + 2;  // resolution length; degrees <= L-1 are exact
    // resolution shifts: s_{2j} = j*w, s_{2j+1} = j*w + e_a
    std::vector<std::vector<int>> s(L + 1, std::vector<int>(n, 0));
    for (int k = 0; k <= L; ++k) {
        int j = k / 2;
        for (int i = 0; i < n; ++i) s[k][i] = j;
        if (k % 2 == 1) s[k][a - 1] += 1;
    }
    // Hom(F_k, O^b) slice data at multidegree m: basis present iff
    // mu_k := m + s_k is a monomial not divisible by z_b
    auto present = [&](const std::vector<int>& m, int k) {
        for (int i = 0; i < n; ++i)
            if (m[i] + s[k][i] < 0) return false;
        return m[b - 1] + s[k][b - 1] == 0;
    };
    CohTable out;
    out.D_poly = D_poly;
    out.max_cohdeg = L - 1;
    // enumerate candidate multidegrees: m = nu - j*w with nu >= 0
    std::set<std::vector<int>> candidates;
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> enumerate = [&](int pos, int left) {
        if (pos == n) {
            for (int j = 0; j <= D_u + 1; ++j) {
                std::vector<int> m = cur;
                for (int i = 0; i < n; ++i) m[i] -= j;
                candidates.insert(m);
                std::vector<int> ma = m;
                ma[a - 1] -= 1;
                candidates.insert(ma);
            }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            enumerate(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    enumerate(0, D_poly + 1);
    std::map<std::pair<int, long>, long> raw;  // (cohdeg, untwisted total) -> dim
    for (auto& m : candidates) {
        // assemble the sliced complex over spots 0..L
        std::map<int, long> dims;
        std::map<int, ExactMatrix> diffs;
        for (int k = 0; k <= L; ++k)
            if (present(m, k)) dims[k] = 1;
        for (int k = 0; k < L; ++k) {
            if (!dims.count(k) || !dims.count(k + 1)) continue;
            // diagonal steps multiply by z_a (k even) or w/z_a (k odd); the
            // entry survives in the quotient by z_b only via presence checks
            ExactMatrix D1(1, 1);
            D1.set(0, 0, Scalar(1));
            diffs[k] = D1;
        }
        Complex slice = Complex::make(Grading::Integer, dims, diffs);
        auto h = slice.cohomology();
        for (auto& [k, d] : h.dims) {
            if (k > L - 1) continue;  // truncation boundary
            long untwisted = 0;
            for (int i = 0; i < n; ++i) untwisted += m[i] + (k / 2) * 1;
            raw[{k, untwisted}] += d;
        }
    }
    // normalize so the lowest class sits at polynomial degree zero
    long min_total = 0;
    bool any = false;
    for (auto& [key, d] : raw)
        if (d > 0 && (!any || key.second < min_total)) {
            min_total = key.second;
            any = true;
        }
    for (auto& [key, d] : raw) {
        long t = key.second - (any ? min_total : 0);
        if (t >= 0 && t <= D_poly) out.row(key.first)[t] += d;
    }
    return out;
}

CohTable coh_ext_oracle(int n, int a, int b, int D_poly, int D_u) {
    if (a < 1 || a > n || b < 1 || b > n) throw IndexOutOfRange("hyperplane index out of range");
    CohTable out;
    out.D_poly = D_poly;
    out.max_cohdeg = 2 * D_u + 1;
    auto var = [&](int i) { return MultiMonomial::var(n, i - 1); };
    MultiMonomial wa = product_monomial(n);
    wa.e[a - 1] = 0;
    if (a == b) {
        out.row(0) = hilbert_function(MonomialIdeal(n, {var(a)}), D_poly);
        auto tower = hilbert_function(MonomialIdeal(n, {var(a), wa}), D_poly);
        for (int j = 1; j <= D_u; ++j) out.row(2 * j) = tower;
    } else {
        auto tower = hilbert_function(MonomialIdeal(n, {var(a), var(b)}), D_poly);
        for (int j = 0; j <= D_u; ++j) out.row(2 * j + 1) = tower;
    }
    return out;
}

namespace {

ParityTable fold_coh_table(const CohTable& t, int D) {
    ParityTable out(D);
    for (auto& [k, row] : t.rows) {
        int par = ((k % 2) + 2) % 2;
        int j = k / 2;  // tower level counts as one unit of the extra variable
        for (int s = 0; s < (int)row.size(); ++s) {
            long v = row[s];
            if (!v) continue;
            int total = s + j;
            if (total <= D) out.dims[par][total] += v;
        }
    }
    return out;
}

}  // namespace

bool fold_compare_pair(int n, int a, int b, int D) {
    if (a < 1 || a > n || b < 1 || b > n) throw IndexOutOfRange("index out of range");
    CohTable coh = coh_ext_table(n, a, b, D, D);
    ParityTable folded = fold_coh_table(coh, D);
    ParityTable mf = mf_hom_cohomology(mf_generator(n, a), mf_generator(n, b), D);
    return folded == mf;
}

bool fold_compare(int n, int a, int D) { return fold_compare_pair(n, a, a, D); }

// ---------------------------------------------------------------------------

void KroneckerModel::validate() const {
    x.validate();
    y.validate();
    if (!(x.source == ca) || !(x.target == cb) || !(y.source == ca) || !(y.target == cb))
        throw AlgebraMismatch("arrow endpoints do not match the stored complexes");
}

bool KroneckerModel::x_invertible() const {
    if (ca.terms() != cb.terms()) return false;
    for (auto& [d, n] : ca.terms()) {
        ExactMatrix m = x.comp(d);
        if (m.rows() != m.cols()) return false;
        if (exactlin::rank(m) != m.rows()) return false;
    }
    return true;
}

KroneckerModel kronecker_model(const Complex& ca, const Complex& cb, const ChainMap& x, const ChainMap& y) {
    KroneckerModel m{ca, cb, x, y};
    m.validate();
    return m;
}

KroneckerModel kronecker_structure_sheaf() {
    Complex zero = Complex::zero(Grading::Integer);
    Complex k0 = Complex::single(0, 1);
    ChainMap none{zero, k0, {}};
    return kronecker_model(zero, k0, none, none);
}

KroneckerModel kronecker_twisted_sheaf() {
    Complex km1 = Complex::single(-1, 1);  // k[1]
    Complex zero = Complex::zero(Grading::Integer);
    ChainMap none{km1, zero, {}};
    return kronecker_model(km1, zero, none, none);
}

KroneckerModel kronecker_point(const Scalar& lambda) {
    Complex k0 = Complex::single(0, 1);
    ExactMatrix one = ExactMatrix::identity(1);
    ChainMap x{k0, k0, {{0, one}}};
    ChainMap y{k0, k0, {}};
    if (!lambda.is_zero()) y.comps[0] = one.scaled(lambda);
    return kronecker_model(k0, k0, x, y);
}

Complex kronecker_hom(const KroneckerModel& m1, const KroneckerModel& m2) {
    using complexes::hom_blocks;
    using complexes::hom_complex;
    using complexes::post_compose_hom;
    using complexes::pre_compose_hom;
    Complex Ha = hom_complex(m1.ca, m2.ca);
    Complex Hb = hom_complex(m1.cb, m2.cb);
    Complex Hx = hom_complex(m1.ca, m2.cb);
    ChainMap post_x = post_compose_hom(m1.ca, m2.x);
    ChainMap post_y = post_compose_hom(m1.ca, m2.y);
    ChainMap pre_x = pre_compose_hom(m1.x, m2.cb);
    ChainMap pre_y = pre_compose_hom(m1.y, m2.cb);
    // Tot over degrees: layer0 = Ha (+) Hb, layer1 = Hx (+) Hx at degree +1
    std::set<int> degrees;
    for (auto& [d, n] : Ha.terms()) degrees.insert(d);
    for (auto& [d, n] : Hb.terms()) degrees.insert(d);
    for (auto& [d, n] : Hx.terms()) {
        degrees.insert(d);
        degrees.insert(d + 1);
    }
    if (degrees.empty()) return Complex::zero(Grading::Integer);
    int lo = *degrees.begin(), hi = *degrees.rbegin();
    std::map<int, long> dims;
    std::map<int, ExactMatrix> diffs;
    auto dim_at = [&](int d) { return Ha.dim(d) + Hb.dim(d) + 2 * Hx.dim(d - 1); };
    for (int d = lo; d <= hi; ++d)
        if (dim_at(d) > 0) dims[d] = dim_at(d);
    for (int d = lo; d < hi; ++d) {
        long rows = dim_at(d + 1), cols = dim_at(d);
        if (!rows || !cols) continue;
        ExactMatrix D((Index)rows, (Index)cols);
        // offsets: [Ha | Hb | Hx1 | Hx2]
        long src_b = Ha.dim(d), src_x1 = src_b + Hb.dim(d), src_x2 = src_x1 + Hx.dim(d - 1);
        long tgt_b = Ha.dim(d + 1), tgt_x1 = tgt_b + Hb.dim(d + 1), tgt_x2 = tgt_x1 + Hx.dim(d);
        D.insert_block(0, 0, Ha.diff(d));
        D.insert_block((Index)tgt_b, (Index)src_b, Hb.diff(d));
        D.insert_block((Index)tgt_x1, (Index)src_x1, Hx.diff(d - 1).scaled(Scalar(-1)));
        D.insert_block((Index)tgt_x2, (Index)src_x2, Hx.diff(d - 1).scaled(Scalar(-1)));
        // transports (x'.f - f.x, y'.f - f.y)
        D.insert_block((Index)tgt_x1, 0, post_x.comp(d));
        D.insert_block((Index)tgt_x1, (Index)src_b, pre_x.comp(d).scaled(Scalar(-1)));
        D.insert_block((Index)tgt_x2, 0, post_y.comp(d));
        D.insert_block((Index)tgt_x2, (Index)src_b, pre_y.comp(d).scaled(Scalar(-1)));
        if (!D.is_zero()) diffs[d] = D;
    }
    return Complex::make(Grading::Integer, dims, diffs);
}

Complex eta_plus(const KroneckerModel& m) { return cone(m.y); }
Complex eta_minus(const KroneckerModel& m) { return cone(m.x); }

FreeComplex kronecker_dictionary(const KroneckerModel& m) {
    if (!m.x_invertible()) throw NotXInvertible("transport requires a strictly invertible first arrow");
    // Tot[ k[t] (x) ca --(tX - Y)--> k[t] (x) cb ] with the source in column -1
    std::map<int, std::vector<FreeGen>> terms;
    std::map<int, PolyMatrix> diffs;
    // generator layout per absolute degree d: first cb^d (column 0), then ca^{d+1} (column -1)
    auto gens_at = [&](int d) {
        long nb = m.cb.dim(d), na = m.ca.dim(d + 1);
        return std::make_pair(nb, na);
    };
    std::set<int> degrees;
    for (auto& [d, n] : m.cb.terms()) degrees.insert(d);
    for (auto& [d, n] : m.ca.terms()) degrees.insert(d - 1);
    if (degrees.empty()) return FreeComplex::make(1, Grading::Integer, {}, {});
    int lo = *degrees.begin(), hi = *degrees.rbegin();
    for (int d = lo; d <= hi; ++d) {
        auto [nb, na] = gens_at(d);
        std::vector<FreeGen> g;
        for (long i = 0; i < nb; ++i) g.push_back(FreeGen{{0}});
        for (long i = 0; i < na; ++i) g.push_back(FreeGen{{1}});  // the t X part raises t-degree
        if (!g.empty()) terms[d] = g;
    }
    Poly t = Poly::monomial(MultiMonomial::var(1, 0));
    for (int d = lo; d < hi; ++d) {
        auto [nb_s, na_s] = gens_at(d);
        auto [nb_t, na_t] = gens_at(d + 1);
        PolyMatrix D;
        auto add = [&](long r, long c, const Poly& p) {
            if (p.is_zero()) return;
            auto key = std::make_pair((int)r, (int)c);
            auto it = D.find(key);
            if (it == D.end())
                D[key] = p;
            else
                it->second = it->second + p;
        };
        const ExactMatrix db = m.cb.diff(d);
        for (auto& [rc, v] : db.entries()) add(rc.first, rc.second, Poly::constant(1, v));
        const ExactMatrix da = m.ca.diff(d + 1);
        for (auto& [rc, v] : da.entries()) add(nb_t + rc.first, nb_s + rc.second, Poly::constant(1, -v));
        const ExactMatrix X = m.x.comp(d + 1);
        for (auto& [rc, v] : X.entries()) add(rc.first, nb_s + rc.second, t * Poly::constant(1, v));
        const ExactMatrix Y = m.y.comp(d + 1);
        for (auto& [rc, v] : Y.entries()) add(rc.first, nb_s + rc.second, Poly::constant(1, -v));
        if (!D.empty()) diffs[d] = D;
    }
    return FreeComplex::make(1, Grading::Integer, terms, diffs);
}

GradedSpace p1_hom_oracle(int a, int b) {
    GradedSpace g;
    g.grading = Grading::Integer;
    long h0 = std::max<long>(b - a + 1, 0);
    long h1 = std::max<long>(a - b - 1, 0);
    g.add(0, h0);
    g.add(1, h1);
    return g;
}

GradedSpace a1_point_ext(const Scalar& lambda, const Scalar& mu) {
    ExactMatrix m(1, 1);
    m.set(0, 0, mu - lambda);
    Complex c = Complex::make(Grading::Integer, {{0, 1}, {1, 1}}, {{0, m}});
    return c.cohomology();
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> complement_of(int nvars, const std::vector<int>& subset) {
    std::set<int> in(subset.begin(), subset.end());
    std::vector<int> out;
    for (int v = 0; v < nvars; ++v)
        if (!in.count(v)) out.push_back(v);
    return out;
}

// slice of a free complex with an extra predicate on the monomial nu = m - shift
Complex constrained_slice(const FreeComplex& c, const std::vector<int>& m,
                          const std::function<bool(const std::vector<int>&)>& keep) {
    std::map<int, std::vector<int>> idx;
    std::map<int, long> dims;
    for (auto& [d, gens] : c.terms()) {
        std::vector<int> pres;
        for (int i = 0; i < (int)gens.size(); ++i) {
            std::vector<int> nu(c.nvars());
            bool ok = true;
            for (int v = 0; v < c.nvars(); ++v) {
                nu[v] = m[v] - gens[i].shift[v];
                if (nu[v] < 0) ok = false;
            }
            if (ok && keep(nu)) pres.push_back(i);
        }
        if (!pres.empty()) {
            dims[d] = (long)pres.size();
            idx[d] = pres;
        }
    }
    std::map<int, ExactMatrix> diffs;
    for (auto& [d, mat] : c.diffs()) {
        if (!idx.count(d) || !idx.count(d + 1)) continue;
        auto& src = idx[d];
        auto& tgt = idx[d + 1];
        ExactMatrix D((Index)tgt.size(), (Index)src.size());
        const auto& sgens = c.gens(d);
        const auto& tgens = c.gens(d + 1);
        for (int r = 0; r < (int)tgt.size(); ++r)
            for (int cc = 0; cc < (int)src.size(); ++cc) {
                Poly p = c.diff_entry(d, tgt[r], src[cc]);
                if (p.is_zero()) continue;
                std::vector<int> want(c.nvars());
                for (int v = 0; v < c.nvars(); ++v)
                    want[v] = sgens[src[cc]].shift[v] - tgens[tgt[r]].shift[v];
                auto it = p.terms.find(want);
                if (it != p.terms.end()) D.set(r, cc, it->second);
            }
        if (!D.is_zero()) diffs[d] = D;
    }
    return Complex::make(Grading::Integer, dims, diffs);
}

}  // namespace

FreeComplex DescentObject::at(const std::vector<int>& subset) const {
    return polyring::set_vars_zero(tmpl, complement_of(tmpl.nvars(), subset));
}

void DescentObject::check_certificates() const {
    const int nv = tmpl.nvars();
    std::vector<std::vector<int>> subsets{{}};
    for (int v = 0; v < nv; ++v) {
        size_t cur = subsets.size();
        for (size_t i = 0; i < cur; ++i) {
            auto s = subsets[i];
            s.push_back(v);
            subsets.push_back(s);
        }
    }
    for (auto& big : subsets) {
        if ((int)big.size() == nv) continue;
        FreeComplex at_big = at(big);
        for (int drop = 0; drop < (int)big.size(); ++drop) {
            auto small = big;
            small.erase(small.begin() + drop);
            FreeComplex restricted = polyring::set_vars_zero(at_big, {big[drop]});
            if (!(restricted == at(small)))
                throw AlgebraMismatch("descent family is not strictly compatible");
        }
    }
}

std::map<std::pair<int, long>, long> glued_cube_ext(const DescentObject& x, const DescentObject& y, int D) {
    if (x.tmpl.nvars() != y.tmpl.nvars()) throw AlgebraMismatch("descent data over different algebras");
    x.check_certificates();
    y.check_certificates();
    const int nv = x.tmpl.nvars();
    // proper subsets of the coordinates
    std::vector<std::vector<int>> subsets{{}};
    for (int v = 0; v < nv; ++v) {
        size_t cur = subsets.size();
        for (size_t i = 0; i < cur; ++i) {
            auto s = subsets[i];
            s.push_back(v);
            subsets.push_back(s);
        }
    }
    subsets.pop_back();  // remove the full set: it is not a node
    std::sort(subsets.begin(), subsets.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    auto subset_index = [&](const std::vector<int>& s) {
        for (size_t i = 0; i < subsets.size(); ++i)
            if (subsets[i] == s) return (int)i;
        return -1;
    };
    // chains in the subset poset, grouped by length
    struct Chain {
        std::vector<int> nodes;  // indices into subsets, strictly increasing sets
    };
    std::vector<std::vector<Chain>> chains(nv + 1);
    for (size_t i = 0; i < subsets.size(); ++i) chains[0].push_back({{(int)i}});
    for (int len = 1; len <= nv; ++len) {
        for (auto& c : chains[len - 1]) {
            const auto& top = subsets[c.nodes.back()];
            for (size_t j = 0; j < subsets.size(); ++j) {
                const auto& cand = subsets[j];
                if (cand.size() <= top.size()) continue;
                if (!std::includes(cand.begin(), cand.end(), top.begin(), top.end())) continue;
                Chain ext = c;
                ext.nodes.push_back((int)j);
                chains[len].push_back(ext);
            }
        }
    }
    // per-node Hom complexes; generators coincide across nodes by strictness
    std::vector<FreeComplex> node_hom;
    for (auto& s : subsets) node_hom.push_back(polyring::hom_free(x.at(s), y.at(s)));
    // all multidegrees worth visiting
    std::set<std::vector<int>> degrees = polyring::relevant_multidegrees(node_hom.back(), D);
    for (auto& h : node_hom)
        for (auto& m : polyring::relevant_multidegrees(h, D)) degrees.insert(m);
    std::map<std::pair<int, long>, long> table;
    for (auto& m : degrees) {
        long total = 0;
        for (int v : m) total += v;
        if (total > D) continue;
        // per node: the supported slice (nu supported inside the subset)
        std::vector<Complex> slices;
        slices.reserve(subsets.size());
        for (size_t i = 0; i < subsets.size(); ++i) {
            std::set<int> allowed(subsets[i].begin(), subsets[i].end());
            slices.push_back(constrained_slice(node_hom[i], m, [&](const std::vector<int>& nu) {
                for (int v = 0; v < nv; ++v)
                    if (nu[v] > 0 && !allowed.count(v)) return false;
                return true;
            }));
        }
        // basis bookkeeping per node: positions of surviving generators, so the
        // nerve faces become projection matrices between node slices
        auto proj = [&](int from, int to, int deg) {
            // from-node slice -> to-node slice (to is a subset of from)
            std::set<int> allowed_from(subsets[from].begin(), subsets[from].end());
            std::set<int> allowed_to(subsets[to].begin(), subsets[to].end());
            const FreeComplex& H = node_hom[from];
            std::vector<int> keep_from, keep_to;
            const auto& gens = H.gens(deg);
            for (int i = 0; i < (int)gens.size(); ++i) {
                std::vector<int> nu(nv);
                bool ok = true;
                for (int v = 0; v < nv; ++v) {
                    nu[v] = m[v] - gens[i].shift[v];
                    if (nu[v] < 0) ok = false;
                }
                if (!ok) continue;
                bool in_from = true, in_to = true;
                for (int v = 0; v < nv; ++v) {
                    if (nu[v] > 0 && !allowed_from.count(v)) in_from = false;
                    if (nu[v] > 0 && !allowed_to.count(v)) in_to = false;
                }
                if (in_from) keep_from.push_back(i);
                if (in_to) keep_to.push_back(i);
            }
            ExactMatrix P((Index)keep_to.size(), (Index)keep_from.size());
            for (int r = 0; r < (int)keep_to.size(); ++r)
                for (int c = 0; c < (int)keep_from.size(); ++c)
                    if (keep_to[r] == keep_from[c]) P.set(r, c, Scalar(1));
            return P;
        };
        // totalization: degree t part = (+)_{k} (+)_{chains of length k} slice^{t-k}
        std::vector<std::vector<Chain>*> layers;
        for (int len = 0; len <= nv; ++len)
            if (!chains[len].empty()) layers.push_back(&chains[len]);
        int dmin = 1 << 20, dmax = -(1 << 20);
        for (auto& s : slices)
            if (s.has_terms()) {
                dmin = std::min(dmin, s.min_degree());
                dmax = std::max(dmax, s.max_degree());
            }
        if (dmin > dmax) continue;
        std::map<int, long> tot_dims;
        std::map<std::pair<int, std::pair<int, int>>, long> offset;  // (totdeg, (len, chain idx)) -> offset
        for (int t = dmin; t <= dmax + nv; ++t) {
            long dim = 0;
            for (int len = 0; len <= nv; ++len)
                for (size_t ci = 0; ci < chains[len].size(); ++ci) {
                    const Chain& c = chains[len][ci];
                    long d = slices[c.nodes.front()].dim(t - len);
                    offset[{t, {len, (int)ci}}] = dim;
                    dim += d;
                }
            if (dim) tot_dims[t] = dim;
        }
        std::map<int, ExactMatrix> tot_diffs;
        for (int t = dmin; t <= dmax + nv - 1; ++t) {
            long rows = tot_dims.count(t + 1) ? tot_dims[t + 1] : 0;
            long cols = tot_dims.count(t) ? tot_dims[t] : 0;
            if (!rows || !cols) continue;
            ExactMatrix Dm((Index)rows, (Index)cols);
            for (int len = 0; len <= nv; ++len)
                for (size_t ci = 0; ci < chains[len].size(); ++ci) {
                    const Chain& c = chains[len][ci];
                    int base = c.nodes.front();
                    long coff = offset[{t, {len, (int)ci}}];
                    // internal differential with the sign (-1)^len
                    ExactMatrix dint = slices[base].diff(t - len);
                    if (!dint.is_zero()) {
                        long roff = offset[{t + 1, {len, (int)ci}}];
                        Dm.insert_block((Index)roff, (Index)coff,
                                        len % 2 == 0 ? dint : dint.scaled(Scalar(-1)));
                    }
                    // nerve faces: this chain slot maps into every extension of
                    // the chain by one node (matching each face deletion)
                    for (size_t cj = 0; cj < chains[len + 1 <= nv ? len + 1 : nv].size() && len + 1 <= nv;
                         ++cj) {
                        const Chain& e = chains[len + 1][cj];
                        // which face of e gives c?
                        for (int drop = 0; drop <= len + 1; ++drop) {
                            Chain face;
                            for (int k = 0; k <= len + 1; ++k)
                                if (k != drop) face.nodes.push_back(e.nodes[k]);
                            if (!(face.nodes == c.nodes)) continue;
                            long roff = offset[{t + 1, {len + 1, (int)cj}}];
                            Scalar sgn(drop % 2 == 0 ? 1 : -1);
                            if (drop == 0) {
                                // restriction from the deeper front node
                                ExactMatrix P = proj(e.nodes[1], e.nodes[0], t - len);
                                if (!P.is_zero()) {
                                    // the source slot lives at the chain c whose front is e.nodes[1]
                                    Dm.insert_block((Index)roff, (Index)coff, P.scaled(sgn));
                                }
                            } else {
                                // identity between equal slices (front node unchanged)
                                ExactMatrix P = proj(e.nodes[0], e.nodes[0], t - len);
                                if (!P.is_zero()) Dm.insert_block((Index)roff, (Index)coff, P.scaled(sgn));
                            }
                        }
                    }
                }
            if (!Dm.is_zero()) tot_diffs[t] = Dm;
        }
        Complex tot = Complex::make(Grading::Integer, tot_dims, tot_diffs);
        for (auto& [deg, dcount] : tot.cohomology().dims) table[{deg, total}] += dcount;
    }
    return table;
}

std::map<std::pair<int, long>, long> direct_hypersurface_ext(const FreeComplex& x, const FreeComplex& y,
                                                             int D) {
    if (x.nvars() != y.nvars()) throw AlgebraMismatch("templates over different algebras");
    const int nv = x.nvars();
    MultiMonomial w = product_monomial(nv);
    FreeComplex H = polyring::hom_free(x, y);
    std::map<std::pair<int, long>, long> table;
    for (auto& m : polyring::relevant_multidegrees(H, D)) {
        long total = 0;
        for (int v : m) total += v;
        if (total > D) continue;
        Complex s = constrained_slice(H, m, [&](const std::vector<int>& nu) {
            for (int v = 0; v < nv; ++v)
                if (nu[v] == 0) return true;
            return false;  // divisible by the product of all variables
        });
        for (auto& [deg, d] : s.cohomology().dims) table[{deg, total}] += d;
    }
    return table;
}

// ---------------------------------------------------------------------------

CohTable node_sky_ext(int D_poly, int D_u) {
    // the germ resolution of the node point over k[z1,z2]/(z1 z2):
    // alternating diagonal matrices; all Hom-differentials into the point
    // vanish, so Ext ranks equal the resolution ranks
    CohTable out;
    out.D_poly = D_poly;
    out.max_cohdeg = 2 * D_u + 1;
    out.row(0)[0] = 1;
    for (int k = 1; k <= 2 * D_u + 1; ++k) out.row(k)[0] = 2;
    return out;
}

namespace {

bool adjacent_node(int components, const ChainGenerator& g, int node) {
    // node j joins components j-1 and j
    if (g.kind == ChainGenerator::NodeSky) return g.index == node;
    return g.index == node - 1 || g.index == node;
}

}  // namespace

CohTable nodal_chain_ext(int components, ChainGenerator g1, ChainGenerator g2, int D_poly, int D_u) {
    if (components < 2) throw IndexOutOfRange("a chain needs at least two components");
    auto check = [&](const ChainGenerator& g) {
        if (g.kind == ChainGenerator::ComponentSheaf && (g.index < 0 || g.index >= components))
            throw IndexOutOfRange("component index out of range");
        if (g.kind == ChainGenerator::NodeSky && (g.index < 1 || g.index >= components))
            throw IndexOutOfRange("node index out of range");
    };
    check(g1);
    check(g2);
    CohTable out;
    out.D_poly = D_poly;
    out.max_cohdeg = 2 * D_u + 1;
    const bool sheaf1 = g1.kind == ChainGenerator::ComponentSheaf;
    const bool sheaf2 = g2.kind == ChainGenerator::ComponentSheaf;
    if (sheaf1 && sheaf2) {
        if (g1.index == g2.index) {
            const bool end = g1.index == 0 || g1.index == components - 1;
            // global sections of the component
            if (end)
                for (int t = 0; t <= D_poly; ++t) out.row(0)[t] = 1;
            else
                out.row(0)[0] = 1;
            // even towers at each adjacent node (the germ rows of the
            // hyperplane self-Ext beyond degree zero)
            int nodes = 0;
            for (int nd = 1; nd < components; ++nd)
                if (adjacent_node(components, g1, nd)) ++nodes;
            for (int j = 1; j <= D_u; ++j) out.row(2 * j)[0] += nodes;
        } else if (std::abs(g1.index - g2.index) == 1) {
            // one shared node: the odd local tower
            for (int j = 0; j <= D_u; ++j) out.row(2 * j + 1)[0] = 1;
        }
        return out;
    }
    if (!sheaf1 && !sheaf2) {
        if (g1.index == g2.index) return node_sky_ext(D_poly, D_u);
        return out;
    }
    // sheaf versus node sky: supported computations at the shared germ
    const ChainGenerator& sky = sheaf1 ? g2 : g1;
    const ChainGenerator& sheaf = sheaf1 ? g1 : g2;
    if (!adjacent_node(components, sheaf, sky.index)) return out;
    if (sheaf1) {
        // Hom(O_branch, k_node) at the germ: the branch resolution maps to the
        // point with vanishing differentials
        for (int k = 0; k <= 2 * D_u + 1; ++k) out.row(k)[0] = 1;
    } else {
        // Hom(k_node, O_branch): slice the node resolution against the branch
        // germ; degree 0 vanishes, odd degrees carry one class each
        for (int j = 0; j <= D_u; ++j) out.row(2 * j + 1)[0] = 1;
    }
    return out;
}

}  // namespace mirrorcalc::bmodels
