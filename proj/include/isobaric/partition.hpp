#pragma once

#include "isobaric/rational.hpp"

#include <compare>
#include <vector>

namespace isobaric {

class WeightVector;

/// A partition (1^a1, 2^a2, ..., k^ak) of n stored by multiplicities.
///
/// The vector always has exactly k entries (explicit zeros) and caches its
/// isobaric degree n = sum j*a_j, so the invariant is checked once at
/// construction.
class ExponentVector {
public:
    ExponentVector() = default;

    /// Throws Error on negative entries or an empty multiplicity list.
    explicit ExponentVector(std::vector<int> multiplicities);

    /// The all-zero vector of length k (the empty partition of 0).
    static ExponentVector zero(int k);

    int k() const { return static_cast<int>(mult_.size()); }
    int degree() const { return degree_; }

    /// |alpha|, the number of parts.
    int norm() const { return norm_; }

    /// Multiplicity of the part j, 1-based. Parts beyond k have multiplicity 0.
    int operator[](int j) const { return j >= 1 && j <= k() ? mult_[j - 1] : 0; }

    const std::vector<int>& multiplicities() const { return mult_; }

    /// alpha + e_j (one more part of size j). Degree rises by j.
    ExponentVector bumped(int j) const;

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.mult_ == b.mult_; }
    friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.mult_ <=> b.mult_; }

private:
    std::vector<int> mult_;
    int degree_ = 0;
    int norm_ = 0;
};

/// Term order used for printing and JSON: lexicographically descending on
/// (a1, ..., ak), so t1^n comes first and t_n last.
struct TermOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const { return b < a; }
};

/// Every alpha with sum j*a_j = n and parts at most k, in TermOrder.
std::vector<ExponentVector> enumerate(int n, int k);

/// |alpha|! / (a1! ... ak!)
Integer multinomial(const ExponentVector& alpha);

/// a1! a2! ... ak!
Integer factorial_product(const ExponentVector& alpha);

/// sum a_i * w_i
Rational weight_dot(const ExponentVector& alpha, const WeightVector& omega);

} // namespace isobaric
