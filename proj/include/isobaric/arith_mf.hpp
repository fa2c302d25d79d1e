#pragma once

#include "isobaric/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace isobaric {

/// A multiplicative arithmetic function at the powers of one prime:
/// values[n] = f(p^n) for n = 0..N, with f(1) = 1.
class LocalMF {
public:
    /// Throws Error when values is empty or values[0] != 1.
    LocalMF(std::string label, std::vector<Rational> values);

    const std::string& label() const { return label_; }
    const std::vector<Rational>& values() const { return values_; }
    int truncation() const { return static_cast<int>(values_.size()) - 1; }

    friend bool operator==(const LocalMF& a, const LocalMF& b) { return a.values_ == b.values_; }

private:
    std::string label_;
    std::vector<Rational> values_;
};

/// (a*b)(p^n) = sum_i a(p^i) b(p^{n-i}). Requires equal truncation.
LocalMF dirichlet_convolve_local(const LocalMF& a, const LocalMF& b);

/// Core values t_1..t_N such that F_{N,n}(t) = f(p^n) for every n.
std::vector<Rational> recover_core(const LocalMF& f);

/// The q-th Dirichlet power of f: F^q_{N,n} evaluated at the recovered core.
LocalMF local_power(const LocalMF& f, const Rational& q);

/// zeta, epsilon, mobius, phi, sigma, tau or id at p^0..p^N.
LocalMF known_function(std::string_view name, long p, int max_power);

/// True iff the m-fold self convolution of local_power(f, 1/m) equals f.
bool root_verify(const LocalMF& f, int m);

/// "1,1/2,3/8"
std::string to_string(const LocalMF& f);

} // namespace isobaric
