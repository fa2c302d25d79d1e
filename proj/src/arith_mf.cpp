#include "isobaric/arith_mf.hpp"

#include "isobaric/isopoly.hpp"
#include "isobaric/roots.hpp"

namespace isobaric {

LocalMF::LocalMF(std::string label, std::vector<Rational> values) : label_(std::move(label)), values_(std::move(values)) {
    if (values_.empty()) throw Error("local function needs at least the value at p^0");
    if (values_[0] != 1) throw Error("local function must satisfy f(1) = 1, got " + to_string(values_[0]));
}

LocalMF dirichlet_convolve_local(const LocalMF& a, const LocalMF& b) {
    if (a.values().size() != b.values().size())
        throw Error("Dirichlet product needs equal truncation (" + std::to_string(a.truncation()) + " vs " +
                    std::to_string(b.truncation()) + ")");
    const auto& x = a.values();
    const auto& y = b.values();
    std::vector<Rational> out(x.size(), 0);
    for (std::size_t n = 0; n < x.size(); ++n)
        for (std::size_t i = 0; i <= n; ++i) out[n] += x[i] * y[n - i];
    return LocalMF(a.label() + "*" + b.label(), std::move(out));
}

std::vector<Rational> recover_core(const LocalMF& f) {
    // F_n = t_n + sum_{i<n} t_i F_{n-i}, solved for t_n in turn
    const auto& v = f.values();
    std::vector<Rational> t;
    for (std::size_t n = 1; n < v.size(); ++n) {
        Rational tn = v[n];
        for (std::size_t i = 1; i < n; ++i) tn -= t[i - 1] * v[n - i];
        t.push_back(tn);
    }
    return t;
}

LocalMF local_power(const LocalMF& f, const Rational& q) {
    const int big_n = f.truncation();
    std::vector<Rational> out{Rational(1)};
    if (big_n > 0) {
        const std::vector<Rational> t = recover_core(f);
        for (int n = 1; n <= big_n; ++n) out.push_back(evaluate(gfp_root_closed(q, big_n, n), t));
    }
    return LocalMF(f.label() + "^(" + to_string(q) + ")", std::move(out));
}

LocalMF known_function(std::string_view name, long p, int max_power) {
    if (max_power < 0) throw Error("truncation N must be >= 0");
    if (p < 2) throw Error("p must be a prime >= 2");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error(std::to_string(p) + " is not prime");

    const auto n_values = static_cast<std::size_t>(max_power + 1);
    std::vector<Rational> v(n_values, 0);
    auto power = [&](int n) {
        Integer r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
        return r;
    };
    for (int n = 0; n <= max_power; ++n) {
        Rational& x = v[static_cast<std::size_t>(n)];
        if (name == "zeta")
            x = 1;
        else if (name == "epsilon")
            x = n == 0 ? 1 : 0;
        else if (name == "mobius" || name == "mu")
            x = n == 0 ? 1 : (n == 1 ? -1 : 0);
        else if (name == "phi")
            x = n == 0 ? Integer(1) : Integer(power(n) - power(n - 1));
        else if (name == "sigma")
            x = Integer((power(n + 1) - 1) / (p - 1));
        else if (name == "tau")
            x = n + 1;
        else if (name == "id")
            x = power(n);
        else
            throw Error("unknown arithmetic function '" + std::string(name) +
                        "' (expected zeta, epsilon, mobius, phi, sigma, tau, id)");
    }
    return LocalMF(std::string(name), std::move(v));
}

bool root_verify(const LocalMF& f, int m) {
    if (m < 1) throw Error("root_verify: m must be >= 1");
    const LocalMF root = local_power(f, Rational(1, m));
    LocalMF acc = root;
    for (int i = 1; i < m; ++i) acc = dirichlet_convolve_local(acc, root);
    return acc == f;
}

std::string to_string(const LocalMF& f) { return join(f.values()); }

} // namespace isobaric
