#include "isobaric/partition.hpp"

#include "isobaric/isopoly.hpp"

#include <algorithm>

namespace isobaric {

ExponentVector::ExponentVector(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
    if (mult_.empty()) throw Error("exponent vector needs k >= 1");
    for (std::size_t j = 0; j < mult_.size(); ++j) {
        if (mult_[j] < 0) throw Error("negative multiplicity in exponent vector");
        degree_ += static_cast<int>(j + 1) * mult_[j];
        norm_ += mult_[j];
    }
}

ExponentVector ExponentVector::zero(int k) {
    if (k < 1) throw Error("exponent vector needs k >= 1");
    return ExponentVector(std::vector<int>(static_cast<std::size_t>(k), 0));
}

ExponentVector ExponentVector::bumped(int j) const {
    if (j < 1 || j > k()) throw Error("part index out of range for exponent vector");
    ExponentVector out = *this;
    ++out.mult_[j - 1];
    out.degree_ += j;
    ++out.norm_;
    return out;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    if (a.k() != b.k()) throw Error("exponent vectors with different k");
    std::vector<int> m(a.mult_);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += b.mult_[i];
    return ExponentVector(std::move(m));
}

namespace {

// Fills multiplicities for parts j..1 (largest first) so that the leading
// part count a1 varies slowest in reverse, then sorts into TermOrder.
void fill(int remaining, int j, std::vector<int>& m, std::vector<ExponentVector>& out) {
    if (j == 1) {
        m[0] = remaining;
        out.emplace_back(m);
        return;
    }
    for (int c = 0; c * j <= remaining; ++c) {
        m[j - 1] = c;
        fill(remaining - c * j, j - 1, m, out);
    }
    m[j - 1] = 0;
}

} // namespace

std::vector<ExponentVector> enumerate(int n, int k) {
    if (n < 0) throw Error("enumerate: n must be non-negative");
    if (k < 1) throw Error("enumerate: k must be positive");
    std::vector<ExponentVector> out;
    std::vector<int> m(static_cast<std::size_t>(k), 0);
    fill(n, k, m, out);
    std::sort(out.begin(), out.end(), TermOrder{});
    return out;
}

Integer factorial_product(const ExponentVector& alpha) {
    Integer p = 1;
    for (int a : alpha.multiplicities()) p *= factorial(static_cast<unsigned>(a));
    return p;
}

Integer multinomial(const ExponentVector& alpha) {
    return factorial(static_cast<unsigned>(alpha.norm())) / factorial_product(alpha);
}

Rational weight_dot(const ExponentVector& alpha, const WeightVector& omega) {
    Rational s = 0;
    for (int j = 1; j <= alpha.k(); ++j)
        if (alpha[j] != 0) s += alpha[j] * omega(j);
    return s;
}

} // namespace isobaric
