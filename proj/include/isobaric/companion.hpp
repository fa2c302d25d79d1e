#pragma once

#include "isobaric/isopoly.hpp"

#include <string>
#include <vector>

namespace isobaric {

/// Numerical core [t1, ..., tk] = X^k - t1 X^{k-1} - ... - tk.
struct CorePolynomial {
    std::vector<Rational> t;

    int k() const { return static_cast<int>(t.size()); }
    bool invertible() const { return !t.empty() && !is_zero(t.back()); }

    /// "1,1" -> [1, 1]. Throws on an empty list.
    static CorePolynomial parse(std::string_view text);
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

using NumericMatrix = Matrix<Rational>;
using SymbolicMatrix = Matrix<IsobaricPoly>;

/// Rows n_lo..n_hi of a k-column matrix whose consecutive rows are related by
/// right multiplication with the companion matrix A_k.
template <class T>
class Window {
public:
    Window(int k, int n_lo, Matrix<T> rows) : k_(k), n_lo_(n_lo), rows_(std::move(rows)) {}

    int k() const { return k_; }
    int first_row() const { return n_lo_; }
    int last_row() const { return n_lo_ + static_cast<int>(rows_.size()) - 1; }

    const std::vector<T>& row(int n) const {
        if (n < first_row() || n > last_row()) throw Error("row " + std::to_string(n) + " is outside the window");
        return rows_[static_cast<std::size_t>(n - n_lo_)];
    }

    /// Column j is 1-based, counted from the left.
    const T& entry(int n, int j) const {
        if (j < 1 || j > k_) throw Error("column index out of range");
        return row(n)[static_cast<std::size_t>(j - 1)];
    }

    /// The k x k block made of rows last-k+1 .. last.
    Matrix<T> block_ending_at(int last) const {
        Matrix<T> out;
        for (int n = last - k_ + 1; n <= last; ++n) out.push_back(row(n));
        return out;
    }

    std::vector<T> column(int j) const {
        std::vector<T> out;
        for (int n = first_row(); n <= last_row(); ++n) out.push_back(entry(n, j));
        return out;
    }

    const Matrix<T>& rows() const { return rows_; }

private:
    int k_;
    int n_lo_;
    Matrix<T> rows_;
};

/// Row indexing: the identity block occupies rows 1-k..0, so the rightmost
/// entry of row n is F_{k,n} and the block ending at row p equals A_k^p.
using CompanionWindow = Window<Rational>;
using SymbolicWindow = Window<IsobaricPoly>;

/// A_k: ones on the superdiagonal, last row (tk, ..., t1).
NumericMatrix companion_matrix(const CorePolynomial& core);
SymbolicMatrix companion_matrix(int k);

/// Rows n_lo..n_hi of the infinite companion matrix. Rows below 1-k are
/// reached through A_k^{-1} and throw Error ("singular core") when tk == 0.
CompanionWindow companion_window(const CorePolynomial& core, int n_lo, int n_hi);

/// Generic-core window; requires n_lo >= 1-k (no backward rows).
SymbolicWindow companion_window(int k, int n_lo, int n_hi);

/// A_k^p for any integer p, read off the window.
NumericMatrix companion_power(const CorePolynomial& core, int p);

/// Schur hook S_{(n,1^r)}: the window entry in column k-r with the sign
/// (-1)^r removed. Requires 0 <= r <= k-1.
Rational schur_hook(const CorePolynomial& core, int n, int r);
IsobaricPoly schur_hook(int k, int n, int r);

/// Different matrix D: first row (-t_{k-1}, -2 t_{k-2}, ..., -(k-1) t1, k),
/// the coefficients of the derivative of the core polynomial; each further row
/// the previous one times A_k.
NumericMatrix different_matrix(const CorePolynomial& core);
SymbolicMatrix different_matrix(int k);

/// Infinite different matrix; row 0 is the first row of D, so the
/// rightmost column holds G_{k,n}.
CompanionWindow different_window(const CorePolynomial& core, int n_lo, int n_hi);
SymbolicWindow different_window(int k, int n_lo, int n_hi);

Rational determinant(const NumericMatrix& m);

/// Leibniz expansion; entries must multiply to a common degree.
IsobaricPoly determinant(const SymbolicMatrix& m);

/// G_1..G_N from the F values through n F_n = sum_{i=1}^n G_i F_{n-i}.
std::vector<Rational> glp_from_gfp(const CorePolynomial& core, int count);
std::vector<IsobaricPoly> glp_from_gfp(int k, int count);

} // namespace isobaric
