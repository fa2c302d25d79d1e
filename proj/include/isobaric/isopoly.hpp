#pragma once

#include "isobaric/partition.hpp"
#include "isobaric/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isobaric {

/// Weight sequence (w1, w2, ...) selecting a WIP family.
///
/// Either rule-given (all ones, or w_j = j) or an explicit finite list that
/// repeats its final entry for every later index.
class WeightVector {
public:
    static WeightVector ones();
    static WeightVector identity();
    static WeightVector from_list(std::vector<Rational> entries);

    /// "id", "ones", or a comma separated list such as "1,1,1" or "3,-1,1/2".
    static WeightVector parse(std::string_view text);

    /// w_j for j >= 1.
    Rational operator()(int j) const;

    std::string describe() const;

private:
    enum class Rule { Ones, Identity, List };
    WeightVector(Rule rule, std::vector<Rational> entries) : rule_(rule), entries_(std::move(entries)) {}

    Rule rule_;
    std::vector<Rational> entries_;
};

/// One isobaric polynomial of degree n in t1..tk with exact coefficients.
///
/// Terms with a zero coefficient are never stored. The zero polynomial may
/// carry any integer degree (negative degrees show up as the empty entries of
/// companion windows); every nonzero term has sum j*a_j == degree().
class IsobaricPoly {
public:
    using Terms = std::map<ExponentVector, Rational, TermOrder>;

    IsobaricPoly(int k, int degree);

    static IsobaricPoly constant(int k, const Rational& c);

    /// c * t_j, of degree j. Zero when j > k.
    static IsobaricPoly monomial(int k, int j, const Rational& c = 1);

    int k() const { return k_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const ExponentVector& alpha) const;

    /// Adds c to the coefficient of t^alpha; drops the term if it cancels.
    void add_term(const ExponentVector& alpha, const Rational& c);

    IsobaricPoly& operator+=(const IsobaricPoly& other);
    IsobaricPoly& operator-=(const IsobaricPoly& other);
    IsobaricPoly& operator*=(const Rational& c);

    friend IsobaricPoly operator+(IsobaricPoly a, const IsobaricPoly& b) { return a += b; }
    friend IsobaricPoly operator-(IsobaricPoly a, const IsobaricPoly& b) { return a -= b; }
    friend IsobaricPoly operator*(IsobaricPoly a, const Rational& c) { return a *= c; }
    friend IsobaricPoly operator*(const Rational& c, IsobaricPoly a) { return a *= c; }

    /// Product of a degree-i and a degree-j polynomial, of degree i + j.
    friend IsobaricPoly operator*(const IsobaricPoly& a, const IsobaricPoly& b);

    friend bool operator==(const IsobaricPoly& a, const IsobaricPoly& b) {
        return a.k_ == b.k_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    int k_;
    int degree_;
    Terms terms_;
};

IsobaricPoly poly_add(const IsobaricPoly& a, const IsobaricPoly& b);
IsobaricPoly poly_scale(const IsobaricPoly& a, const Rational& c);

/// Multiplies by t_j, raising the degree by j.
IsobaricPoly monomial_mul(const IsobaricPoly& a, int j);

/// Substitutes t_j = t[j-1]. Requires t.size() >= k.
Rational evaluate(const IsobaricPoly& p, std::span<const Rational> t);

/// "t1^3 + 2 t1 t2 + t3": TermOrder, unit coefficients elided, "0" if empty.
std::string to_string(const IsobaricPoly& p);

/// P_{w,k,n}: coefficient of t^alpha is multinomial(alpha) * (alpha . w) / |alpha|.
///
/// At n = 0 the value is `degree0` when given, otherwise w_k (which is 1 for
/// the Fibonacci weights and k for the Lucas weights).
IsobaricPoly wip_closed(const WeightVector& omega, int k, int n, std::optional<Rational> degree0 = std::nullopt);

/// Generalized Fibonacci polynomial F_{k,n}; F_{k,0} = 1.
IsobaricPoly gfp(int k, int n);

/// Generalized Lucas polynomial G_{k,n}; G_{k,0} = k.
IsobaricPoly glp(int k, int n);

/// Same family as wip_closed, built from the linear recursion
/// P_n = t1 P_{n-1} + ... + tk P_{n-k} seeded with degrees 0..k-1.
IsobaricPoly wip_recursive(const WeightVector& omega, int k, int n, std::optional<Rational> degree0 = std::nullopt);

/// A sequence n -> polynomial of degree n, memoized by degree.
///
/// The cache is not synchronized: confine each instance to one thread.
class PolySequence {
public:
    using Generator = std::function<IsobaricPoly(int)>;

    PolySequence(int k, Generator generator) : k_(k), generator_(std::move(generator)) {}

    int k() const { return k_; }
    const IsobaricPoly& operator()(int n);

private:
    int k_;
    Generator generator_;
    std::map<int, IsobaricPoly> cache_;
};

/// Degree-n term of the convolution product: sum_j A_j B_{n-j}.
IsobaricPoly convolve(PolySequence& a, PolySequence& b, int n);

/// Truncated sequence (P_0, ..., P_N).
using PolySeries = std::vector<IsobaricPoly>;

PolySeries take(PolySequence& seq, int max_degree);

/// Convolution of two truncated sequences, truncated to the shorter length.
PolySeries convolve(const PolySeries& a, const PolySeries& b);

/// m-fold self convolution (m >= 1).
PolySeries convolve_power(const PolySeries& a, int m);

} // namespace isobaric
