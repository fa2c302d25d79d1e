#include "isobaric/isopoly.hpp"

#include <sstream>

namespace isobaric {

// ---------------------------------------------------------------- weights

WeightVector WeightVector::ones() { return WeightVector(Rule::Ones, {}); }

WeightVector WeightVector::identity() { return WeightVector(Rule::Identity, {}); }

WeightVector WeightVector::from_list(std::vector<Rational> entries) {
    if (entries.empty()) throw Error("weight list must not be empty");
    return WeightVector(Rule::List, std::move(entries));
}

WeightVector WeightVector::parse(std::string_view text) {
    if (text == "id" || text == "identity") return identity();
    if (text == "ones") return ones();
    return from_list(parse_rational_list(text));
}

Rational WeightVector::operator()(int j) const {
    if (j < 1) throw Error("weight index must be >= 1");
    switch (rule_) {
    case Rule::Ones:
        return 1;
    case Rule::Identity:
        return j;
    case Rule::List:
        break;
    }
    const auto idx = std::min<std::size_t>(static_cast<std::size_t>(j - 1), entries_.size() - 1);
    return entries_[idx];
}

std::string WeightVector::describe() const {
    switch (rule_) {
    case Rule::Ones:
        return "ones";
    case Rule::Identity:
        return "id";
    case Rule::List:
        break;
    }
    return join(entries_);
}

// ------------------------------------------------------------- polynomial

IsobaricPoly::IsobaricPoly(int k, int degree) : k_(k), degree_(degree) {
    if (k < 1) throw Error("isobaric polynomial needs k >= 1");
}

IsobaricPoly IsobaricPoly::constant(int k, const Rational& c) {
    IsobaricPoly p(k, 0);
    p.add_term(ExponentVector::zero(k), c);
    return p;
}

IsobaricPoly IsobaricPoly::monomial(int k, int j, const Rational& c) {
    if (j < 1) throw Error("monomial: part index must be >= 1");
    IsobaricPoly p(k, j);
    if (j <= k) p.add_term(ExponentVector::zero(k).bumped(j), c);
    return p;
}

Rational IsobaricPoly::coeff(const ExponentVector& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void IsobaricPoly::add_term(const ExponentVector& alpha, const Rational& c) {
    if (alpha.k() != k_ || alpha.degree() != degree_)
        throw Error("term does not match polynomial degree/k");
    if (isobaric::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (isobaric::is_zero(it->second)) terms_.erase(it);
    }
}

IsobaricPoly& IsobaricPoly::operator+=(const IsobaricPoly& other) {
    if (k_ != other.k_ || degree_ != other.degree_)
        throw Error("poly_add: degree or k mismatch (" + std::to_string(degree_) + "," + std::to_string(k_) +
                    ") vs (" + std::to_string(other.degree_) + "," + std::to_string(other.k_) + ")");
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
}

IsobaricPoly& IsobaricPoly::operator-=(const IsobaricPoly& other) {
    if (k_ != other.k_ || degree_ != other.degree_) throw Error("poly_sub: degree or k mismatch");
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
    return *this;
}

IsobaricPoly& IsobaricPoly::operator*=(const Rational& c) {
    if (isobaric::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, coeff] : terms_) coeff *= c;
    return *this;
}

IsobaricPoly operator*(const IsobaricPoly& a, const IsobaricPoly& b) {
    if (a.k_ != b.k_) throw Error("poly_mul: k mismatch");
    IsobaricPoly out(a.k_, a.degree_ + b.degree_);
    for (const auto& [x, cx] : a.terms_)
        for (const auto& [y, cy] : b.terms_) out.add_term(x + y, cx * cy);
    return out;
}

IsobaricPoly poly_add(const IsobaricPoly& a, const IsobaricPoly& b) { return a + b; }

IsobaricPoly poly_scale(const IsobaricPoly& a, const Rational& c) { return a * c; }

IsobaricPoly monomial_mul(const IsobaricPoly& a, int j) {
    if (j < 1) throw Error("monomial_mul: part index must be >= 1");
    IsobaricPoly out(a.k(), a.degree() + j);
    if (j > a.k()) return out;
    for (const auto& [alpha, c] : a.terms()) out.add_term(alpha.bumped(j), c);
    return out;
}

Rational evaluate(const IsobaricPoly& p, std::span<const Rational> t) {
    if (t.size() < static_cast<std::size_t>(p.k()))
        throw Error("evaluate: need " + std::to_string(p.k()) + " values for t, got " + std::to_string(t.size()));
    Rational sum = 0;
    for (const auto& [alpha, c] : p.terms()) {
        Rational term = c;
        for (int j = 1; j <= alpha.k(); ++j) {
            if (alpha[j] == 0) continue;
            Rational power;
            mpz_pow_ui(power.get_num_mpz_t(), t[j - 1].get_num_mpz_t(), static_cast<unsigned long>(alpha[j]));
            mpz_pow_ui(power.get_den_mpz_t(), t[j - 1].get_den_mpz_t(), static_cast<unsigned long>(alpha[j]));
            term *= power;
        }
        sum += term;
    }
    return sum;
}

std::string to_string(const IsobaricPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [alpha, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;

        std::ostringstream mono;
        for (int j = 1; j <= alpha.k(); ++j) {
            if (alpha[j] == 0) continue;
            if (mono.tellp() > 0) mono << ' ';
            mono << 't' << j;
            if (alpha[j] > 1) mono << '^' << alpha[j];
        }
        const Rational magnitude = abs(c);
        const std::string m = mono.str();
        if (m.empty())
            out << to_string(magnitude);
        else if (magnitude == 1)
            out << m;
        else
            out << to_string(magnitude) << ' ' << m;
    }
    return out.str();
}

// --------------------------------------------------------------- families

IsobaricPoly wip_closed(const WeightVector& omega, int k, int n, std::optional<Rational> degree0) {
    if (k < 1) throw Error("wip: k must be >= 1");
    if (n < 0) throw Error("wip: n must be >= 0");
    if (n == 0) return IsobaricPoly::constant(k, degree0.value_or(omega(k)));

    IsobaricPoly p(k, n);
    for (const auto& alpha : enumerate(n, k)) {
        Rational c(multinomial(alpha));
        c *= weight_dot(alpha, omega);
        c /= alpha.norm();
        p.add_term(alpha, c);
    }
    return p;
}

IsobaricPoly gfp(int k, int n) { return wip_closed(WeightVector::ones(), k, n, Rational(1)); }

IsobaricPoly glp(int k, int n) { return wip_closed(WeightVector::identity(), k, n, Rational(k)); }

IsobaricPoly wip_recursive(const WeightVector& omega, int k, int n, std::optional<Rational> degree0) {
    if (k < 1) throw Error("wip: k must be >= 1");
    if (n < 0) throw Error("wip: n must be >= 0");
    if (n < k) return wip_closed(omega, k, n, degree0);

    std::vector<IsobaricPoly> seq;
    seq.reserve(static_cast<std::size_t>(n + 1));
    for (int d = 0; d < k; ++d) seq.push_back(wip_closed(omega, k, d, degree0));
    for (int d = k; d <= n; ++d) {
        IsobaricPoly next(k, d);
        for (int j = 1; j <= k; ++j) next += monomial_mul(seq[static_cast<std::size_t>(d - j)], j);
        seq.push_back(std::move(next));
    }
    return seq.back();
}

// ------------------------------------------------------------ convolution

const IsobaricPoly& PolySequence::operator()(int n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    IsobaricPoly p = generator_(n);
    if (p.k() != k_ || p.degree() != n) throw Error("sequence generator produced wrong degree or k");
    return cache_.emplace(n, std::move(p)).first->second;
}

IsobaricPoly convolve(PolySequence& a, PolySequence& b, int n) {
    if (a.k() != b.k()) throw Error("convolve: k mismatch");
    if (n < 0) throw Error("convolve: n must be >= 0");
    IsobaricPoly out(a.k(), n);
    for (int j = 0; j <= n; ++j) out += a(j) * b(n - j);
    return out;
}

PolySeries take(PolySequence& seq, int max_degree) {
    PolySeries out;
    for (int n = 0; n <= max_degree; ++n) out.push_back(seq(n));
    return out;
}

PolySeries convolve(const PolySeries& a, const PolySeries& b) {
    const std::size_t len = std::min(a.size(), b.size());
    PolySeries out;
    if (len == 0) return out;
    if (a[0].k() != b[0].k()) throw Error("convolve: k mismatch");
    for (std::size_t n = 0; n < len; ++n) {
        IsobaricPoly term(a[0].k(), static_cast<int>(n));
        for (std::size_t j = 0; j <= n; ++j) term += a[j] * b[n - j];
        out.push_back(std::move(term));
    }
    return out;
}

PolySeries convolve_power(const PolySeries& a, int m) {
    if (m < 1) throw Error("convolve_power: m must be >= 1");
    PolySeries out = a;
    for (int i = 1; i < m; ++i) out = convolve(out, a);
    return out;
}

} // namespace isobaric
