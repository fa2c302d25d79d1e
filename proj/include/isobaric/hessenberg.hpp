#pragma once

#include "isobaric/isopoly.hpp"

#include <span>
#include <string>
#include <vector>

namespace isobaric {

/// A matrix cell: coeff * t_var, or the plain constant coeff when var == 0.
struct Cell {
    Rational coeff = 0;
    int var = 0;

    static Cell constant(const Rational& c) { return {c, 0}; }
    static Cell term(const Rational& c, int var) { return {c, var}; }

    bool is_zero() const { return isobaric::is_zero(coeff); }
    friend bool operator==(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);

/// Lower Hessenberg matrix with a constant +1 or -1 superdiagonal.
///
/// Only cells (i, j) with j <= i are stored; everything above the
/// superdiagonal is zero. With superdiagonal -1 the principal-minor
/// recursion computes the determinant, with +1 the permanent. Indices are
/// 1-based to match the usual matrix notation.
class HessenbergMatrix {
public:
    HessenbergMatrix(int n, int super);

    int size() const { return n_; }
    int super() const { return super_; }
    bool is_determinant_form() const { return super_ == -1; }

    /// Any cell of the full n x n matrix.
    Cell cell(int i, int j) const;

    /// Sets a lower-triangular cell (j <= i).
    void set(int i, int j, Cell c);

    friend bool operator==(const HessenbergMatrix&, const HessenbergMatrix&) = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * i / 2 + (j - 1)); }

    int n_;
    int super_;
    std::vector<Cell> lower_;
};

/// H+ (permanent form) of the weighted family: row i < n holds t_{i-j+1} in
/// column j, the last row holds w_{n-j+1} t_{n-j+1}; t_m = 0 for m > k.
HessenbergMatrix build_plus(const WeightVector& omega, int k, int n);

/// H- (determinant form); same cells as build_plus with superdiagonal -1.
HessenbergMatrix build_minus(const WeightVector& omega, int k, int n);

/// M_0 = 1, ..., M_n via M_i = sum_j m_{i,j} M_{j-1}.
///
/// Every nonzero cell (i, j) must be a multiple of t_{i-j+1}, which makes
/// M_i isobaric of degree i.
std::vector<IsobaricPoly> principal_minors(const HessenbergMatrix& m, int k);

/// det (super -1) or perm (super +1) as a degree-n polynomial in t1..tk.
IsobaricPoly hessenberg_value(const HessenbergMatrix& m, int k);

/// det or perm after substituting t_j = t[j-1] (t_j = 0 past the end of t).
/// Purely constant matrices can pass an empty t.
Rational hessenberg_value_at(const HessenbergMatrix& m, std::span<const Rational> t);

/// perm H+ == P_{w,k,n} == det H-, compared exactly.
bool rep_check(const WeightVector& omega, int k, int n);

/// Aligned text grid, one matrix row per line.
std::string to_text(const HessenbergMatrix& m);

} // namespace isobaric
