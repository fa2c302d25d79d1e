#include "isobaric/verify.hpp"

#include "isobaric/arith_mf.hpp"
#include "isobaric/companion.hpp"
#include "isobaric/hessenberg.hpp"
#include "isobaric/roots.hpp"

#include <functional>

namespace isobaric {

namespace {

class Recorder {
public:
    explicit Recorder(SuiteReport& r) : report_(r) {}

    void check(bool ok, const std::function<std::string()>& what) {
        ++report_.checks;
        if (!ok) report_.failures.push_back(what());
    }

private:
    SuiteReport& report_;
};

std::string at(int k, int n) { return "k=" + std::to_string(k) + " n=" + std::to_string(n); }

long count_partitions(int n, int max_part) {
    if (n == 0) return 1;
    if (max_part == 0) return 0;
    long total = 0;
    for (int part = std::min(n, max_part); part >= 1; --part) total += count_partitions(n - part, part);
    return total;
}

std::vector<WeightVector> weight_families() {
    return {WeightVector::ones(), WeightVector::identity(),
            WeightVector::from_list({Rational(3), Rational(-1), Rational(4), Rational(1), Rational(-5), Rational(9),
                                     Rational(2), Rational(-6), Rational(5)})};
}

std::vector<Rational> q_grid() {
    return {Rational(1, 2), Rational(-1), Rational(2, 3), Rational(3), Rational(-5, 2)};
}

void partitions_suite(Recorder& rec, int max_n) {
    for (int n = 0; n <= max_n; ++n)
        for (int k = 1; k <= 6; ++k) {
            const auto parts = enumerate(n, k);
            rec.check(static_cast<long>(parts.size()) == count_partitions(n, k), [&] { return "count " + at(k, n); });
            for (const auto& alpha : parts)
                rec.check(multinomial(alpha) * factorial_product(alpha) == factorial(static_cast<unsigned>(alpha.norm())),
                          [&] { return "multinomial " + at(k, n); });
        }
}

void hessenberg_suite(Recorder& rec, int max_n) {
    for (const auto& omega : weight_families())
        for (int k = 2; k <= 4; ++k)
            for (int n = 1; n <= max_n; ++n)
                rec.check(rep_check(omega, k, n), [&] { return "rep_check w=" + omega.describe() + " " + at(k, n); });
}

void roots_suite(Recorder& rec, int max_n) {
    for (const Rational& q : q_grid())
        for (int k = 2; k <= 3; ++k) {
            PolySeries closed;
            for (int n = 0; n <= max_n; ++n) closed.push_back(gfp_root_closed(q, k, n));
            for (int n = 1; n <= max_n; ++n) {
                const auto& expected = closed[static_cast<std::size_t>(n)];
                const std::string where = "q=" + to_string(q) + " " + at(k, n);
                rec.check(hessenberg_value(gfp_root_matrix(q, k, n, -1), k) == expected, [&] { return "det " + where; });
                rec.check(hessenberg_value(gfp_root_matrix(q, k, n, +1), k) == expected, [&] { return "perm " + where; });
                rec.check(gfp_root_recursive(q, k, n) == expected, [&] { return "recursion " + where; });
                rec.check(wip_root(WeightVector::ones(), k, n, q) == expected, [&] { return "wip_root " + where; });
                bool degenerate = false;
                for (int m = 0; m <= n - 2; ++m) degenerate = degenerate || is_zero(stirling_B(m, q));
                if (!degenerate)
                    rec.check(hessenberg_value(gfp_root_stirling_matrix(q, k, n), k) == expected,
                              [&] { return "stirling " + where; });
            }
        }
    for (int k = 2; k <= 3; ++k)
        for (int m = 2; m <= 3; ++m) {
            PolySeries root;
            for (int n = 0; n <= max_n; ++n) root.push_back(gfp_root_closed(Rational(1, m), k, n));
            const PolySeries power = convolve_power(root, m);
            for (int n = 0; n <= max_n; ++n)
                rec.check(power[static_cast<std::size_t>(n)] == gfp(k, n),
                          [&] { return "m-fold root m=" + std::to_string(m) + " " + at(k, n); });
        }
}

void companion_suite(Recorder& rec, int max_n) {
    const std::vector<CorePolynomial> cores = {
        {{Rational(1), Rational(1)}},
        {{Rational(2), Rational(-1), Rational(3)}},
        {{Rational(1, 2), Rational(0), Rational(-2)}},
    };
    for (const auto& core : cores) {
        const int k = core.k();
        const auto window = companion_window(core, -2 * k, max_n + k);
        NumericMatrix a = companion_matrix(core);
        NumericMatrix acc = companion_power(core, 0);
        for (int p = 1; p <= max_n; ++p) {
            NumericMatrix next(acc.size(), std::vector<Rational>(acc.size(), 0));
            for (std::size_t i = 0; i < acc.size(); ++i)
                for (std::size_t j = 0; j < acc.size(); ++j)
                    for (std::size_t l = 0; l < acc.size(); ++l) next[i][j] += acc[i][l] * a[l][j];
            acc = std::move(next);
            rec.check(window.block_ending_at(p) == acc, [&] { return "block power p=" + std::to_string(p); });
        }
        for (int n = 0; n <= max_n; ++n) {
            rec.check(window.entry(n, k) == evaluate(gfp(k, n), core.t), [&] { return "rightmost column " + at(k, n); });
            if (n >= 1) {
                const auto block = window.block_ending_at(n);
                Rational trace = 0;
                for (int i = 0; i < k; ++i) trace += block[i][i];
                rec.check(trace == evaluate(glp(k, n), core.t), [&] { return "trace " + at(k, n); });
            }
        }
        if (max_n >= 1) {
            const auto g = glp_from_gfp(core, max_n);
            for (int n = 1; n <= max_n; ++n)
                rec.check(g[static_cast<std::size_t>(n - 1)] == evaluate(glp(k, n), core.t),
                          [&] { return "glp_from_gfp " + at(k, n); });
        }
        const auto d = different_window(core, 0, max_n);
        for (int n = 0; n <= max_n; ++n)
            rec.check(d.entry(n, k) == evaluate(glp(k, n), core.t), [&] { return "different column " + at(k, n); });
    }
}

void mf_suite(Recorder& rec, int max_n) {
    const std::vector<LocalMF> fixtures = {
        known_function("zeta", 2, max_n),  known_function("phi", 2, max_n),   known_function("phi", 3, max_n),
        known_function("sigma", 2, max_n), known_function("tau", 2, max_n),   known_function("mobius", 2, max_n),
    };
    const LocalMF epsilon = known_function("epsilon", 2, max_n);
    for (const auto& f : fixtures) {
        for (int m = 2; m <= 3; ++m)
            rec.check(root_verify(f, m), [&] { return "root_verify " + f.label() + " m=" + std::to_string(m); });
        rec.check(dirichlet_convolve_local(f, local_power(f, -1)) == epsilon, [&] { return "inverse " + f.label(); });
    }
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"partitions", "hessenberg", "roots", "companion", "mf"};
    return names;
}

SuiteReport run_suite(std::string_view suite, int max_n) {
    if (max_n < 1) throw Error("verify: max-n must be >= 1");
    SuiteReport report{std::string(suite), 0, {}};
    Recorder rec(report);
    if (suite == "partitions")
        partitions_suite(rec, max_n);
    else if (suite == "hessenberg")
        hessenberg_suite(rec, max_n);
    else if (suite == "roots")
        roots_suite(rec, max_n);
    else if (suite == "companion")
        companion_suite(rec, max_n);
    else if (suite == "mf")
        mf_suite(rec, max_n);
    else
        throw Error("unknown verification suite '" + std::string(suite) + "'");
    return report;
}

} // namespace isobaric
