#include "mirrorcalc/pantsgeom.hpp"

#include "mirrorcalc/matrix.hpp"

namespace mirrorcalc::pantsgeom {

namespace {
int popcount(uint32_t x) {
    int c = 0;
    while (x) {
        c += x & 1;
        x >>= 1;
    }
    return c;
}
}  // namespace

bool StrataTable::incident(uint32_t i, uint32_t j) const { return (i & j) == i; }

StrataTable strata(int n) {
    if (n < 1 || n > 30) throw PantsRangeError("dimension out of range");
    StrataTable t;
    t.n = n;
    const uint32_t full = (1u << (n + 1)) - 1;
    for (uint32_t s = 0; s < full; ++s) {  // proper subsets only
        int rank = popcount(s);
        t.strata.push_back({s, rank, n - rank});
    }
    return t;
}

long euler_char_c(int n) {
    StrataTable t = strata(n);
    long total = 0;
    for (auto& s : t.strata) {
        // chi_c of a rank-r torus vanishes unless r = 0
        long torus = (s.torus_rank == 0) ? 1 : 0;
        // chi_c of an open d-simplex is (-1)^d
        long simplex = (s.simplex_dim % 2 == 0) ? 1 : -1;
        total += torus * simplex;
    }
    return total;
}

SignPattern cover_meet(const SignPattern& p, const SignPattern& q) {
    if (p.n != q.n) throw PantsRangeError("sign patterns of different dimensions");
    return SignPattern{p.n, p.subset & q.subset, p.sum_positive && q.sum_positive};
}

CubeDiagram cube_diagram(int n) {
    if (n < 1 || n > 20) throw PantsRangeError("dimension out of range");
    CubeDiagram d;
    d.n = n;
    const uint32_t full = (1u << (n + 1)) - 1;
    std::vector<uint32_t> masks;
    for (uint32_t s = 0; s < full; ++s) masks.push_back(s);
    for (uint32_t s : masks) {
        std::vector<int> vars;
        for (int i = 0; i <= n; ++i)
            if (s & (1u << i)) vars.push_back(i);
        d.nodes.push_back(vars);
    }
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = 0; j < masks.size(); ++j)
            if (i != j && (masks[i] & masks[j]) == masks[i]) d.edges.push_back({(int)i, (int)j});
    return d;
}

long contact_cover_degree(int n) {
    if (n < 1) throw PantsRangeError("dimension out of range");
    // index of the image of the angle lattice under (quotient by the
    // diagonal, angle sum): columns are the images of the standard basis in
    // the quotient basis e_1..e_n followed by the sum coordinate
    const int m = n + 1;
    std::vector<std::vector<mpz_class>> mat(m, std::vector<mpz_class>(m, 0));
    for (int col = 0; col < n; ++col) {
        mat[col][col] = 1;   // e_col mod diagonal
        mat[n][col] = 1;     // angle sum
    }
    for (int row = 0; row < n; ++row) mat[row][n] = -1;  // e_{n+1} = -(e_1+...+e_n) mod diagonal
    mat[n][n] = 1;
    mpz_class det = exactlin::det_integer(mat);
    mpz_class a = det >= 0 ? det : mpz_class(-det);
    return a.get_si();
}

}  // namespace mirrorcalc::pantsgeom
