#include "isobaric/companion.hpp"

#include <algorithm>
#include <numeric>

namespace isobaric {

CorePolynomial CorePolynomial::parse(std::string_view text) { return CorePolynomial{parse_rational_list(text)}; }

namespace {

void require_k(int k) {
    if (k < 1) throw Error("core polynomial needs k >= 1");
}

// row * A_k for a numeric core
std::vector<Rational> step_forward(const std::vector<Rational>& row, const CorePolynomial& core) {
    const int k = core.k();
    const Rational& last = row.back();
    std::vector<Rational> next(static_cast<std::size_t>(k));
    next[0] = last * core.t[static_cast<std::size_t>(k - 1)];
    for (int j = 2; j <= k; ++j)
        next[j - 1] = row[j - 2] + last * core.t[static_cast<std::size_t>(k - j)];
    return next;
}

// row * A_k^{-1}; needs tk != 0
std::vector<Rational> step_backward(const std::vector<Rational>& row, const CorePolynomial& core) {
    const int k = core.k();
    std::vector<Rational> prev(static_cast<std::size_t>(k));
    prev[k - 1] = row[0] / core.t[static_cast<std::size_t>(k - 1)];
    for (int j = 2; j <= k; ++j)
        prev[j - 2] = row[j - 1] - prev[k - 1] * core.t[static_cast<std::size_t>(k - j)];
    return prev;
}

// row * A_k for the generic core: entries of row n have degree n + k - j
std::vector<IsobaricPoly> step_forward(const std::vector<IsobaricPoly>& row, int k) {
    const IsobaricPoly& last = row.back();
    std::vector<IsobaricPoly> next;
    next.reserve(static_cast<std::size_t>(k));
    next.push_back(monomial_mul(last, k));
    for (int j = 2; j <= k; ++j) next.push_back(row[j - 2] + monomial_mul(last, k - j + 1));
    return next;
}

// Extends a seed row at index `seed_row` forward to n_hi and backward to n_lo.
CompanionWindow numeric_window(const CorePolynomial& core, int seed_row, Matrix<Rational> seed_rows, int n_lo,
                               int n_hi) {
    if (n_lo > n_hi) throw Error("window needs n_lo <= n_hi");
    const int seed_last = seed_row + static_cast<int>(seed_rows.size()) - 1;
    if (n_lo < seed_row && !core.invertible())
        throw Error("singular core: t_k = 0, rows before " + std::to_string(seed_row) + " do not exist");

    std::vector<std::vector<Rational>> rows = std::move(seed_rows);
    int first = seed_row;
    while (first > n_lo) {
        rows.insert(rows.begin(), step_backward(rows.front(), core));
        --first;
    }
    for (int n = seed_last + 1; n <= n_hi; ++n) rows.push_back(step_forward(rows.back(), core));

    const auto begin = rows.begin() + (n_lo - first);
    return CompanionWindow(core.k(), n_lo, Matrix<Rational>(begin, begin + (n_hi - n_lo + 1)));
}

SymbolicWindow symbolic_window(int k, int seed_row, Matrix<IsobaricPoly> seed_rows, int n_lo, int n_hi) {
    if (n_lo > n_hi) throw Error("window needs n_lo <= n_hi");
    if (n_lo < seed_row)
        throw Error("rows before " + std::to_string(seed_row) +
                    " need the inverse companion matrix; use a numeric core with t_k != 0");
    std::vector<std::vector<IsobaricPoly>> rows = std::move(seed_rows);
    const int seed_last = seed_row + static_cast<int>(rows.size()) - 1;
    for (int n = seed_last + 1; n <= n_hi; ++n) rows.push_back(step_forward(rows.back(), k));
    const auto begin = rows.begin() + (n_lo - seed_row);
    return SymbolicWindow(k, n_lo, Matrix<IsobaricPoly>(begin, begin + (n_hi - n_lo + 1)));
}

Matrix<Rational> identity_rows(int k) {
    Matrix<Rational> rows(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i) rows[i][i] = 1;
    return rows;
}

// Identity block at rows 1-k..0 with entry (n, j) of degree n + k - j.
Matrix<IsobaricPoly> symbolic_identity_rows(int k) {
    Matrix<IsobaricPoly> rows;
    for (int i = 1; i <= k; ++i) {
        const int n = i - k;
        std::vector<IsobaricPoly> row;
        for (int j = 1; j <= k; ++j)
            row.push_back(j == i ? IsobaricPoly::constant(k, 1) : IsobaricPoly(k, n + k - j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Rational> different_seed(const CorePolynomial& core) {
    const int k = core.k();
    std::vector<Rational> row;
    for (int j = 1; j < k; ++j) row.push_back(-j * core.t[static_cast<std::size_t>(k - j - 1)]);
    row.emplace_back(k);
    return row;
}

std::vector<IsobaricPoly> different_seed(int k) {
    std::vector<IsobaricPoly> row;
    for (int j = 1; j < k; ++j) row.push_back(IsobaricPoly::monomial(k, k - j, -j));
    row.push_back(IsobaricPoly::constant(k, k));
    return row;
}

void require_hook(int k, int r) {
    if (r < 0 || r > k - 1)
        throw Error("hook leg length r = " + std::to_string(r) + " out of range 0.." + std::to_string(k - 1));
}

} // namespace

NumericMatrix companion_matrix(const CorePolynomial& core) {
    require_k(core.k());
    const int k = core.k();
    NumericMatrix a(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i + 1 < k; ++i) a[i][i + 1] = 1;
    for (int j = 0; j < k; ++j) a[k - 1][j] = core.t[static_cast<std::size_t>(k - 1 - j)];
    return a;
}

SymbolicMatrix companion_matrix(int k) {
    require_k(k);
    return companion_window(k, 2 - k, 1).rows();
}

CompanionWindow companion_window(const CorePolynomial& core, int n_lo, int n_hi) {
    require_k(core.k());
    return numeric_window(core, 1 - core.k(), identity_rows(core.k()), n_lo, n_hi);
}

SymbolicWindow companion_window(int k, int n_lo, int n_hi) {
    require_k(k);
    return symbolic_window(k, 1 - k, symbolic_identity_rows(k), n_lo, n_hi);
}

NumericMatrix companion_power(const CorePolynomial& core, int p) {
    require_k(core.k());
    return companion_window(core, p - core.k() + 1, p).block_ending_at(p);
}

Rational schur_hook(const CorePolynomial& core, int n, int r) {
    require_k(core.k());
    require_hook(core.k(), r);
    const Rational v = companion_window(core, n, n).entry(n, core.k() - r);
    return r % 2 == 0 ? v : Rational(-v);
}

IsobaricPoly schur_hook(int k, int n, int r) {
    require_k(k);
    require_hook(k, r);
    IsobaricPoly v = companion_window(k, n, n).entry(n, k - r);
    return r % 2 == 0 ? v : v * Rational(-1);
}

NumericMatrix different_matrix(const CorePolynomial& core) {
    require_k(core.k());
    return different_window(core, 0, core.k() - 1).rows();
}

SymbolicMatrix different_matrix(int k) {
    require_k(k);
    return different_window(k, 0, k - 1).rows();
}

CompanionWindow different_window(const CorePolynomial& core, int n_lo, int n_hi) {
    require_k(core.k());
    return numeric_window(core, 0, {different_seed(core)}, n_lo, n_hi);
}

SymbolicWindow different_window(int k, int n_lo, int n_hi) {
    require_k(k);
    return symbolic_window(k, 0, {different_seed(k)}, n_lo, n_hi);
}

Rational determinant(const NumericMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error("determinant needs a square matrix");
    NumericMatrix a = m;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && is_zero(a[pivot][c])) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(a[r][c])) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

IsobaricPoly determinant(const SymbolicMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw Error("determinant needs a non-empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw Error("determinant needs a square matrix");
    const int k = m[0][0].k();

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<IsobaricPoly> sum;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        IsobaricPoly term = IsobaricPoly::constant(k, inversions % 2 == 0 ? 1 : -1);
        for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
        if (sum)
            *sum += term;
        else
            sum = std::move(term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *sum;
}

std::vector<Rational> glp_from_gfp(const CorePolynomial& core, int count) {
    require_k(core.k());
    if (count < 1) throw Error("glp_from_gfp: need at least one value");
    const std::vector<Rational> f = companion_window(core, 0, count).column(core.k());
    std::vector<Rational> g(static_cast<std::size_t>(count + 1), 0);
    for (int n = 1; n <= count; ++n) {
        Rational v = n * f[static_cast<std::size_t>(n)];
        for (int i = 1; i < n; ++i) v -= g[i] * f[static_cast<std::size_t>(n - i)];
        g[n] = v;
    }
    return {g.begin() + 1, g.end()};
}

std::vector<IsobaricPoly> glp_from_gfp(int k, int count) {
    require_k(k);
    if (count < 1) throw Error("glp_from_gfp: need at least one value");
    const std::vector<IsobaricPoly> f = companion_window(k, 0, count).column(k);
    std::vector<IsobaricPoly> g;
    for (int n = 1; n <= count; ++n) {
        IsobaricPoly v = f[static_cast<std::size_t>(n)] * Rational(n);
        for (int i = 1; i < n; ++i) v -= g[static_cast<std::size_t>(i - 1)] * f[static_cast<std::size_t>(n - i)];
        g.push_back(std::move(v));
    }
    return g;
}

} // namespace isobaric
