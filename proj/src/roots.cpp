#include "isobaric/roots.hpp"

#include <sstream>

namespace isobaric {

Rational stirling_B(int j, const Rational& q) {
    Rational b = q;
    const int step = j >= 0 ? 1 : -1;
    for (int i = 1; i <= (j >= 0 ? j : -j); ++i) b *= q + step * i;
    return b;
}

std::vector<Integer> stirling1_expand(int m) {
    if (m < 1) throw Error("stirling1_expand: m must be >= 1");
    // coefficients of q(q+1)...(q+r) in powers q^1..q^{r+1}
    std::vector<Integer> c{1};
    for (int r = 1; r < m; ++r) {
        std::vector<Integer> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += r * c[i];
            next[i + 1] += c[i];
        }
        c = std::move(next);
    }
    return c;
}

IsobaricPoly gfp_root_closed(const Rational& q, int k, int n) {
    if (k < 1) throw Error("root: k must be >= 1");
    if (n < 0) throw Error("root: n must be >= 0");
    if (n == 0) return IsobaricPoly::constant(k, 1);
    IsobaricPoly p(k, n);
    for (const auto& alpha : enumerate(n, k)) {
        Rational c = stirling_B(alpha.norm() - 1, q);
        c /= factorial_product(alpha);
        p.add_term(alpha, c);
    }
    return p;
}

Rational root_recursion_coefficient(const Rational& q, int n, int j) {
    if (n < 1 || j < 1 || j > n) throw Error("root recursion coefficient needs 1 <= j <= n");
    Rational s = j * q + (n - j);
    s /= n;
    return s;
}

IsobaricPoly gfp_root_recursive(const Rational& q, int k, int n) {
    if (k < 1) throw Error("root: k must be >= 1");
    if (n < 0) throw Error("root: n must be >= 0");
    std::vector<IsobaricPoly> seq{IsobaricPoly::constant(k, 1)};
    for (int d = 1; d <= n; ++d) {
        IsobaricPoly next(k, d);
        for (int j = 1; j <= std::min(d, k); ++j)
            next += monomial_mul(seq[static_cast<std::size_t>(d - j)], j) * root_recursion_coefficient(q, d, j);
        seq.push_back(std::move(next));
    }
    return seq.back();
}

HessenbergMatrix gfp_root_matrix(const Rational& q, int k, int n, int sign) {
    if (k < 1) throw Error("root matrix: k must be >= 1");
    if (n < 1) throw Error("root matrix: n must be >= 1");
    if (sign != 1 && sign != -1) throw Error("root matrix: sign must be +1 or -1");
    HessenbergMatrix m(n, sign);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            const int var = i - j + 1;
            if (var > k) continue;
            Rational c = var * q + (j - 1);
            c /= i;
            m.set(i, j, Cell::term(c, var));
        }
    }
    return m;
}

HessenbergMatrix gfp_root_stirling_matrix(const Rational& q, int k, int n) {
    if (k < 1) throw Error("Stirling root matrix: k must be >= 1");
    if (n < 1) throw Error("Stirling root matrix: n must be >= 1");
    std::vector<Rational> b;
    for (int m = 0; m <= n - 1; ++m) b.push_back(stirling_B(m, q));
    for (int m = 0; m <= n - 2; ++m)
        if (is_zero(b[static_cast<std::size_t>(m)]))
            throw Error("degenerate q = " + to_string(q) + ": B_" + std::to_string(m) +
                        "(q) = 0, the Stirling ratio form is undefined for n = " + std::to_string(n));

    HessenbergMatrix mat(n, -1);
    for (int i = 1; i <= n; ++i) {
        if (i <= k) mat.set(i, 1, Cell::term(b[0], i));
        for (int j = 1; j <= std::min(i - 1, k); ++j) {
            Rational ratio = b[static_cast<std::size_t>(i - j)] / b[static_cast<std::size_t>(i - j - 1)];
            Rational c = j * ratio - (i - j) * (j - 1);
            c /= i;
            mat.set(i, i - j + 1, Cell::term(c, j));
        }
    }
    return mat;
}

// ------------------------------------------------------------- omega poly

OmegaPoly OmegaPoly::monomial(std::vector<int> exponents, const Rational& c) {
    OmegaPoly p;
    p.add_term(exponents, c);
    return p;
}

void OmegaPoly::add_term(const std::vector<int>& exponents, const Rational& c) {
    for (int a : exponents)
        if (a < 0) throw Error("negative exponent in weight monomial");
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

Rational OmegaPoly::evaluate(const WeightVector& omega) const {
    Rational sum = 0;
    for (const auto& [exps, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            const Rational w = omega(static_cast<int>(i + 1));
            for (int e = 0; e < exps[i]; ++e) term *= w;
        }
        sum += term;
    }
    return sum;
}

std::string to_string(const OmegaPoly& p) {
    if (p.terms().empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest total degree first reads closest to the usual notation
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [exps, c] = *it;
        const bool negative = sgn(c) < 0;
        out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (mono.tellp() > 0) mono << ' ';
            mono << 'w' << i + 1;
            if (exps[i] > 1) mono << '^' << exps[i];
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

OmegaPoly total_derivative(const OmegaPoly& p, int j) {
    if (j < 0) throw Error("total_derivative: order must be >= 0");
    OmegaPoly cur = p;
    for (int step = 0; step < j; ++step) {
        OmegaPoly next;
        for (const auto& [exps, c] : cur.terms()) {
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                std::vector<int> lowered = exps;
                --lowered[i];
                next.add_term(lowered, c * exps[i]);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

Rational wip_root_coeff(const WeightVector& omega, const ExponentVector& alpha, const Rational& q) {
    const int m = alpha.norm();
    if (m < 1) throw Error("wip_root_coeff: alpha must have at least one part");

    // derivatives[d] = D_d(w^alpha) evaluated at omega, d = 0..m-1
    std::vector<Rational> derivatives;
    OmegaPoly d = OmegaPoly::monomial(alpha.multiplicities());
    for (int order = 0; order < m; ++order) {
        derivatives.push_back(d.evaluate(omega));
        d = total_derivative(d, 1);
    }

    Rational sum = 0;
    Integer binom;
    for (int j = 0; j <= m - 1; ++j) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m - 1), static_cast<unsigned long>(j));
        sum += Rational(binom) * stirling_B(-j, q) * derivatives[static_cast<std::size_t>(m - j - 1)];
    }
    sum /= factorial_product(alpha);
    return sum;
}

IsobaricPoly wip_root(const WeightVector& omega, int k, int n, const Rational& q) {
    if (k < 1) throw Error("wip_root: k must be >= 1");
    if (n < 0) throw Error("wip_root: n must be >= 0");
    if (n == 0) return IsobaricPoly::constant(k, 1);
    IsobaricPoly p(k, n);
    for (const auto& alpha : enumerate(n, k)) p.add_term(alpha, wip_root_coeff(omega, alpha, q));
    return p;
}

} // namespace isobaric
