#include "cmg/cohomology/torsion.hpp"

#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cmg::coh
{

namespace
{

using Mat = std::array<long, 4>;

Mat mul(const Mat &x, const Mat &y)
{
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

Mat letter(char c)
{
    switch (c) {
    case 'S': return {0, -1, 1, 0};
    case 's': return {0, 1, -1, 0};
    case 'T': return {1, 1, 0, 1};
    case 't': return {1, -1, 0, 1};
    }
    throw std::invalid_argument(std::string("unknown generator '") + c + "'");
}

// Matrix of p -> g p on the basis {1, X, X^2} (columns are images).
IntMatrix action_matrix(const Mat &g)
{
    IntMatrix m(3, std::vector<long>(3, 0));
    for (int j = 0; j < 3; ++j) {
        IntV2 e;
        e.p[j] = 1;
        IntV2 img = act(g, e);
        for (int i = 0; i < 3; ++i) m[i][j] = img[i];
    }
    return m;
}

IntMatrix identity(size_t n)
{
    IntMatrix m(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix add(const IntMatrix &x, const IntMatrix &y)
{
    IntMatrix r = x;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] += y[i][j];
    return r;
}

IntV2 mat_apply(const IntMatrix &m, const IntV2 &v)
{
    IntV2 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.p[i] += m[i][j] * v[j];
    return r;
}

long mod(long x, long L) { return ((x % L) + L) % L; }

IntV2 reduce(const IntV2 &v, long L) { return {mod(v[0], L), mod(v[1], L), mod(v[2], L)}; }

} // namespace

std::string IntV2::str() const
{
    std::ostringstream os;
    os << "(" << p[0] << ", " << p[1] << ", " << p[2] << ")";
    return os.str();
}

std::array<long, 4> GroupWord::matrix() const
{
    Mat m{1, 0, 0, 1};
    for (char c : letters) m = mul(m, letter(c));
    return m;
}

IntV2 act(const std::array<long, 4> &g, const IntV2 &p)
{
    long a = g[0], b = g[1], c = g[2], d = g[3];
    // (a - cX)^2, (dX - b)(a - cX), (dX - b)^2
    IntV2 e0(a * a, -2 * a * c, c * c);
    IntV2 e1(-a * b, a * d + b * c, -c * d);
    IntV2 e2(b * b, -2 * b * d, d * d);
    return e0 * p[0] + e1 * p[1] + e2 * p[2];
}

IntV2 act(const GroupWord &w, const IntV2 &p) { return act(w.matrix(), p); }

Rational pairing(const IntV2 &p, const IntV2 &q)
{
    return Rational(p[0] * q[2] + p[2] * q[0]) - Rational(p[1] * q[1], 2);
}

SmithForm smith_normal_form(const IntMatrix &A)
{
    size_t m = A.size(), n = m ? A[0].size() : 0;
    SmithForm s{A, identity(m), identity(n), {}};
    IntMatrix &D = s.D, &U = s.U, &V = s.V;
    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(D[i], D[j]);
        std::swap(U[i], U[j]);
    };
    auto swap_cols = [&](size_t i, size_t j) {
        for (auto &row : D) std::swap(row[i], row[j]);
        for (auto &row : V) std::swap(row[i], row[j]);
    };
    // row_i -= q row_j
    auto row_op = [&](size_t i, size_t j, long q) {
        for (size_t k = 0; k < n; ++k) D[i][k] -= q * D[j][k];
        for (size_t k = 0; k < m; ++k) U[i][k] -= q * U[j][k];
    };
    auto col_op = [&](size_t i, size_t j, long q) {
        for (size_t k = 0; k < m; ++k) D[k][i] -= q * D[k][j];
        for (size_t k = 0; k < n; ++k) V[k][i] -= q * V[k][j];
    };

    for (size_t t = 0; t < std::min(m, n); ++t) {
        // pivot: smallest nonzero entry in the remaining block
        for (;;) {
            long best = 0;
            size_t bi = t, bj = t;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j)
                    if (D[i][j] && (!best || std::labs(D[i][j]) < best)) {
                        best = std::labs(D[i][j]);
                        bi = i;
                        bj = j;
                    }
            if (!best) return s;
            swap_rows(t, bi);
            swap_cols(t, bj);
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                row_op(i, t, D[i][t] / D[t][t]);
                if (D[i][t]) clean = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                col_op(j, t, D[t][j] / D[t][t]);
                if (D[t][j]) clean = false;
            }
            if (!clean) continue;
            // divisibility of the rest by the pivot
            bool divides = true;
            for (size_t i = t + 1; i < m && divides; ++i)
                for (size_t j = t + 1; j < n; ++j)
                    if (D[i][j] % D[t][t]) {
                        row_op(t, i, -1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D[t][t] < 0) {
            for (size_t k = 0; k < n; ++k) D[t][k] = -D[t][k];
            for (size_t k = 0; k < m; ++k) U[t][k] = -U[t][k];
        }
        s.invariant_factors.push_back(D[t][t]);
    }
    return s;
}

IntMatrix boundary_matrix()
{
    IntMatrix S = action_matrix(letter('S')), T = action_matrix(letter('T'));
    IntMatrix B(3, std::vector<long>(6, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            B[i][j] = S[i][j] - (i == j);
            B[i][j + 3] = T[i][j] - (i == j);
        }
    return B;
}

H0Result h0_coinvariants()
{
    SmithForm s = smith_normal_form(boundary_matrix());
    H0Result r{s.invariant_factors, 1, IntV2()};
    for (long d : s.invariant_factors) r.torsion_order *= d;
    // rank 3, so the cokernel is finite; its generator is the basis vector whose
    // class has the largest order
    for (int k = 0; k < 3; ++k) {
        IntV2 e;
        e.p[k] = 1;
        if (!in_boundary_lattice(e)) r.generator = e;
    }
    return r;
}

bool in_boundary_lattice(const IntV2 &p)
{
    SmithForm s = smith_normal_form(boundary_matrix());
    // U p must lie in D Z^6
    for (size_t i = 0; i < 3; ++i) {
        long y = 0;
        for (size_t k = 0; k < 3; ++k) y += s.U[i][k] * p[k];
        long d = i < s.invariant_factors.size() ? s.invariant_factors[i] : 0;
        if (d == 0 ? y != 0 : y % d != 0) return false;
    }
    return true;
}

H1Result h1_parabolic(long max_level)
{
    IntMatrix S = action_matrix(letter('S'));
    IntMatrix ST = action_matrix(mul(letter('S'), letter('T')));
    IntMatrix ST2 = action_matrix(mul(mul(letter('S'), letter('T')), mul(letter('S'), letter('T'))));
    IntMatrix T = action_matrix(letter('T'));
    H1Result r;
    r.relation_S = add(identity(3), S);
    r.relation_ST = add(add(identity(3), ST), ST2);
    r.order = 1;

    // A parabolic cocycle normalized by c(T) = 0 is fixed by v = c(S) = c(ST);
    // the relations S^2 = (ST)^3 = 1 of the free product Z/2 * Z/3 give
    // (1 + S) v = 0 and (1 + ST + (ST)^2) v = 0. Coboundaries keeping c(T) = 0
    // come from w with T w = w, and give v = S w - w.
    for (long L = 1; L <= max_level; ++L) {
        std::set<std::array<long, 3>> cocycles, coboundaries;
        for (long a = 0; a < L; ++a)
            for (long b = 0; b < L; ++b)
                for (long c = 0; c < L; ++c) {
                    IntV2 v(a, b, c);
                    if (reduce(mat_apply(r.relation_S, v), L).is_zero() && reduce(mat_apply(r.relation_ST, v), L).is_zero())
                        cocycles.insert(v.p);
                    if (reduce(mat_apply(T, v) - v, L).is_zero()) coboundaries.insert(reduce(mat_apply(S, v) - v, L).p);
                }
        for (const auto &b : coboundaries)
            if (!cocycles.count(b)) throw std::logic_error("coboundary fails the cocycle relations");
        long level_order = static_cast<long>(cocycles.size() / coboundaries.size());
        r.levels.push_back({L, static_cast<long>(cocycles.size()), static_cast<long>(coboundaries.size())});
        if (level_order > r.order) r.order = level_order;
    }
    return r;
}

TorsionConstants torsion_constants()
{
    long NA = h1_parabolic().order;
    long NB = h0_coinvariants().torsion_order;
    return {NA, NB, NA * NB};
}

} // namespace cmg::coh
