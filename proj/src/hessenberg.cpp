#include "isobaric/hessenberg.hpp"

#include <algorithm>
#include <sstream>

namespace isobaric {

std::string to_string(const Cell& cell) {
    if (cell.is_zero()) return "0";
    if (cell.var == 0) return to_string(cell.coeff);
    const std::string t = "t" + std::to_string(cell.var);
    if (cell.coeff == 1) return t;
    if (cell.coeff == -1) return "-" + t;
    return to_string(cell.coeff) + " " + t;
}

HessenbergMatrix::HessenbergMatrix(int n, int super)
    : n_(n), super_(super), lower_(static_cast<std::size_t>(n * (n + 1) / 2)) {
    if (n < 1) throw Error("Hessenberg matrix needs size >= 1");
    if (super != 1 && super != -1) throw Error("Hessenberg superdiagonal must be +1 or -1");
}

Cell HessenbergMatrix::cell(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw Error("Hessenberg index out of range");
    if (j <= i) return lower_[index(i, j)];
    if (j == i + 1) return Cell::constant(super_);
    return {};
}

void HessenbergMatrix::set(int i, int j, Cell c) {
    if (i < 1 || j < 1 || i > n_ || j > i) throw Error("only cells on or below the diagonal can be set");
    if (c.var < 0) throw Error("cell variable index must be >= 0");
    lower_[index(i, j)] = std::move(c);
}

namespace {

HessenbergMatrix build(const WeightVector& omega, int k, int n, int super) {
    if (k < 1) throw Error("Hessenberg build: k must be >= 1");
    if (n < 1) throw Error("Hessenberg build: n must be >= 1");
    HessenbergMatrix m(n, super);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            const int var = i - j + 1;
            if (var > k) continue;
            m.set(i, j, Cell::term(i == n ? omega(var) : Rational(1), var));
        }
    }
    return m;
}

// Cofactor expansion along the last column, applied to every leading
// principal minor. Valid because the superdiagonal has magnitude 1 and the
// matrix is zero above it: for the determinant (super -1) the signs cancel,
// for the permanent (super +1) there are none.
template <class T, class CellValue>
std::vector<T> minors(const HessenbergMatrix& m, T one, CellValue value) {
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(m.size() + 1));
    out.push_back(std::move(one));
    for (int i = 1; i <= m.size(); ++i) {
        T acc = value(i, 1) * out[0];
        for (int j = 2; j <= i; ++j) acc += value(i, j) * out[static_cast<std::size_t>(j - 1)];
        out.push_back(std::move(acc));
    }
    return out;
}

} // namespace

HessenbergMatrix build_plus(const WeightVector& omega, int k, int n) { return build(omega, k, n, +1); }

HessenbergMatrix build_minus(const WeightVector& omega, int k, int n) { return build(omega, k, n, -1); }

std::vector<IsobaricPoly> principal_minors(const HessenbergMatrix& m, int k) {
    auto value = [&](int i, int j) {
        const Cell c = m.cell(i, j);
        const int expected = i - j + 1;
        if (c.is_zero()) return IsobaricPoly(k, expected);
        if (c.var != expected)
            throw Error("cell (" + std::to_string(i) + "," + std::to_string(j) + ") must be a multiple of t" +
                        std::to_string(expected) + " for symbolic evaluation");
        return IsobaricPoly::monomial(k, c.var, c.coeff);
    };
    return minors<IsobaricPoly>(m, IsobaricPoly::constant(k, 1), value);
}

IsobaricPoly hessenberg_value(const HessenbergMatrix& m, int k) { return principal_minors(m, k).back(); }

Rational hessenberg_value_at(const HessenbergMatrix& m, std::span<const Rational> t) {
    auto value = [&](int i, int j) -> Rational {
        const Cell c = m.cell(i, j);
        if (c.var == 0) return c.coeff;
        if (static_cast<std::size_t>(c.var) > t.size()) return 0;
        return c.coeff * t[static_cast<std::size_t>(c.var - 1)];
    };
    return minors<Rational>(m, Rational(1), value).back();
}

bool rep_check(const WeightVector& omega, int k, int n) {
    const IsobaricPoly expected = wip_closed(omega, k, n);
    return hessenberg_value(build_plus(omega, k, n), k) == expected &&
           hessenberg_value(build_minus(omega, k, n), k) == expected;
}

std::string to_text(const HessenbergMatrix& m) {
    const int n = m.size();
    std::vector<std::vector<std::string>> text(static_cast<std::size_t>(n));
    std::vector<std::size_t> width(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            text[i - 1].push_back(to_string(m.cell(i, j)));
            width[j - 1] = std::max(width[j - 1], text[i - 1].back().size());
        }
    std::ostringstream out;
    for (int i = 0; i < n; ++i) {
        out << "[ ";
        for (int j = 0; j < n; ++j) {
            const auto& s = text[i][j];
            out << std::string(width[j] - s.size(), ' ') << s << (j + 1 < n ? "  " : " ");
        }
        out << "]\n";
    }
    return out.str();
}

} // namespace isobaric
