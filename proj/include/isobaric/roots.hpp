#pragma once

#include "isobaric/hessenberg.hpp"
#include "isobaric/isopoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace isobaric {

/// Stirling operator: q(q+1)...(q+j) for j >= 0 and q(q-1)...(q-|j|) for
/// j < 0. B_0 = q.
Rational stirling_B(int j, const Rational& q);

/// Unsigned Stirling numbers of the first kind c(m,1..m), i.e. the
/// coefficients of B_{m-1}(q) = sum_i c(m,i) q^i. Requires m >= 1.
std::vector<Integer> stirling1_expand(int m);

/// q-th convolution root of the Fibonacci family: the t^alpha coefficient is
/// B_{|alpha|-1}(q) / (a1! ... ak!). Degree 0 is 1 for every q.
IsobaricPoly gfp_root_closed(const Rational& q, int k, int n);

/// Coefficient (1/n)(jq + n - j) of t_j in the n-th root recursion
/// F^q_n = sum_j s_j F^q_{n-j}.
Rational root_recursion_coefficient(const Rational& q, int n, int j);

/// F^q_{k,n} built from F^q_{k,0} = 1 and the recursion above.
IsobaricPoly gfp_root_recursive(const Rational& q, int k, int n);

/// Root matrix with cell (i,j) = (1/i)((i-j+1)q + j-1) t_{i-j+1}.
/// sign = -1 gives the determinant form, +1 the permanent form.
HessenbergMatrix gfp_root_matrix(const Rational& q, int k, int n, int sign);

/// The same root written through ratios of Stirling operators: row i holds
/// (1/i)(j B_{i-j}/B_{i-j-1} - (i-j)(j-1)) t_j in column i-j+1 and B_0 t_i in
/// column 1; superdiagonal -1.
///
/// Throws Error ("degenerate q") when some B_m(q), 0 <= m <= n-2, vanishes,
/// i.e. q is one of 0, -1, ..., -(n-2).
HessenbergMatrix gfp_root_stirling_matrix(const Rational& q, int k, int n);

/// Polynomial in the weight variables w1..wk, keyed by exponent lists.
class OmegaPoly {
public:
    using Terms = std::map<std::vector<int>, Rational>;

    OmegaPoly() = default;
    static OmegaPoly monomial(std::vector<int> exponents, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    void add_term(const std::vector<int>& exponents, const Rational& c);

    /// Substitutes w_i = omega(i).
    Rational evaluate(const WeightVector& omega) const;

    friend bool operator==(const OmegaPoly&, const OmegaPoly&) = default;

private:
    Terms terms_;
};

std::string to_string(const OmegaPoly& p);

/// D_j: j-fold application of D_1 = sum_i d/dw_i. D_0 is the identity.
OmegaPoly total_derivative(const OmegaPoly& p, int j);

/// Coefficient of t^alpha in the q-th root of P_{w,k,n}:
///
///   sum_{j=0}^{|alpha|-1} C(|alpha|-1, j) B_{-j}(q) D_{|alpha|-j-1}(w^alpha)
///
/// divided by the factorial product a1! ... ak!. Requires |alpha| >= 1.
Rational wip_root_coeff(const WeightVector& omega, const ExponentVector& alpha, const Rational& q);

/// q-th convolution root of P_{w,k,n}; degree 0 is 1.
IsobaricPoly wip_root(const WeightVector& omega, int k, int n, const Rational& q);

} // namespace isobaric
