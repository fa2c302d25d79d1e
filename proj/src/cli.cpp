#include "isobaric/cli.hpp"

#include "isobaric/arith_mf.hpp"
#include "isobaric/companion.hpp"
#include "isobaric/hessenberg.hpp"
#include "isobaric/json.hpp"
#include "isobaric/roots.hpp"
#include "isobaric/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace isobaric::cli {

namespace {

using nlohmann::json;

const CLI::Range kPositive(1, std::numeric_limits<int>::max());
const CLI::Range kNonNegative(0, std::numeric_limits<int>::max());

struct Options {
    std::string format = "text";
    std::string weights;
    std::string q;
    std::string eval;
    std::string degree0;
    std::string sign = "minus";
    std::string method = "formula";
    std::string left;
    std::string right;
    std::string core;
    std::string rows;
    std::string fn;
    std::string values;
    std::string suite = "all";
    int k = 0;
    int n = 0;
    long p = 2;
    int big_n = 0;
    int verify_m = 0;
    int max_n = 6;
    bool show_matrix = false;
};

struct Rows {
    int lo;
    int hi;
};

Rows parse_rows(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw Error("rows must look like a..b, got '" + text + "'");
    try {
        std::size_t used_lo = 0, used_hi = 0;
        const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        Rows r{std::stoi(lo, &used_lo), std::stoi(hi, &used_hi)};
        if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument(text);
        if (r.lo > r.hi) throw Error("rows a..b need a <= b");
        return r;
    } catch (const std::logic_error&) {
        throw Error("rows must look like a..b, got '" + text + "'");
    }
}

std::string grid(const std::vector<std::string>& labels, const std::vector<std::vector<std::string>>& cells) {
    std::size_t label_width = 0;
    for (const auto& l : labels) label_width = std::max(label_width, l.size());
    std::vector<std::size_t> width;
    for (const auto& row : cells) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!labels.empty()) out << std::string(label_width - labels[i].size(), ' ') << labels[i] << ": ";
        out << "[ ";
        for (std::size_t j = 0; j < cells[i].size(); ++j)
            out << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j] << "  ";
        out.seekp(-1, std::ios_base::cur);
        out << "]\n";
    }
    return out.str();
}

template <class T>
std::string window_text(const Window<T>& w) {
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> cells;
    for (int n = w.first_row(); n <= w.last_row(); ++n) {
        labels.push_back("n=" + std::to_string(n));
        std::vector<std::string> row;
        for (const auto& v : w.row(n)) row.push_back(to_string(v));
        cells.push_back(std::move(row));
    }
    return grid(labels, cells);
}

template <class T>
std::string matrix_text(const Matrix<T>& m) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : m) {
        std::vector<std::string> row;
        for (const auto& v : r) row.push_back(to_string(v));
        cells.push_back(std::move(row));
    }
    return grid({}, cells);
}

json matrix_json(const NumericMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& v : r) row.push_back(to_string(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_json(const SymbolicMatrix& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& v : r) row.push_back(to_json(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out), json_(o.format == "json") {}

    // Prints a polynomial, or its value when --eval is present.
    void emit(const IsobaricPoly& p, json extra = json::object()) {
        if (!o_.eval.empty()) {
            const Rational v = evaluate(p, parse_rational_list(o_.eval));
            if (json_) {
                extra["value"] = to_string(v);
                out_ << extra.dump() << '\n';
            } else {
                out_ << to_string(v) << '\n';
            }
            return;
        }
        if (json_) {
            if (extra.empty()) {
                out_ << to_json(p).dump() << '\n';
            } else {
                extra["value"] = to_json(p);
                out_ << extra.dump() << '\n';
            }
        } else {
            out_ << to_string(p) << '\n';
        }
    }

    int wip() {
        std::optional<Rational> d0;
        if (!o_.degree0.empty()) d0 = parse_rational(o_.degree0);
        emit(wip_closed(WeightVector::parse(o_.weights), o_.k, o_.n, d0));
        return kSuccess;
    }

    int gfp_verb() {
        emit(gfp(o_.k, o_.n));
        return kSuccess;
    }

    int glp_verb() {
        emit(glp(o_.k, o_.n));
        return kSuccess;
    }

    int hessenberg() {
        const WeightVector omega = WeightVector::parse(o_.weights);
        const HessenbergMatrix m = o_.sign == "plus" ? build_plus(omega, o_.k, o_.n) : build_minus(omega, o_.k, o_.n);
        const IsobaricPoly value = hessenberg_value(m, o_.k);
        if (json_) {
            emit(value, {{"matrix", to_json(m)}});
            return kSuccess;
        }
        out_ << to_text(m);
        out_ << (m.is_determinant_form() ? "det = " : "perm = ");
        emit(value);
        return kSuccess;
    }

    int root_gfp() {
        const Rational q = parse_rational(o_.q);
        std::optional<HessenbergMatrix> m;
        if (o_.method == "det")
            m = gfp_root_matrix(q, o_.k, o_.n, -1);
        else if (o_.method == "perm")
            m = gfp_root_matrix(q, o_.k, o_.n, +1);
        else if (o_.method == "stirling")
            m = gfp_root_stirling_matrix(q, o_.k, o_.n);

        const IsobaricPoly value = m ? hessenberg_value(*m, o_.k) : gfp_root_closed(q, o_.k, o_.n);
        if (m && o_.show_matrix) {
            if (json_) {
                emit(value, {{"matrix", to_json(*m)}});
                return kSuccess;
            }
            out_ << to_text(*m);
        }
        emit(value);
        return kSuccess;
    }

    int root_wip() {
        emit(wip_root(WeightVector::parse(o_.weights), o_.k, o_.n, parse_rational(o_.q)));
        return kSuccess;
    }

    int conv() {
        PolySequence a = sequence(o_.left);
        PolySequence b = sequence(o_.right);
        emit(convolve(a, b, o_.n));
        return kSuccess;
    }

    int companion() {
        const Rows r = parse_rows(o_.rows.empty() ? "0..5" : o_.rows);
        if (!o_.core.empty()) {
            const auto w = companion_window(CorePolynomial::parse(o_.core), r.lo, r.hi);
            out_ << (json_ ? to_json(w).dump() + "\n" : window_text(w));
        } else {
            const auto w = companion_window(require_k(), r.lo, r.hi);
            out_ << (json_ ? to_json(w).dump() + "\n" : window_text(w));
        }
        return kSuccess;
    }

    int different() {
        if (!o_.rows.empty()) {
            const Rows r = parse_rows(o_.rows);
            if (!o_.core.empty()) {
                const auto w = different_window(CorePolynomial::parse(o_.core), r.lo, r.hi);
                out_ << (json_ ? to_json(w).dump() + "\n" : window_text(w));
            } else {
                const auto w = different_window(require_k(), r.lo, r.hi);
                out_ << (json_ ? to_json(w).dump() + "\n" : window_text(w));
            }
            return kSuccess;
        }
        if (!o_.core.empty()) {
            const auto d = different_matrix(CorePolynomial::parse(o_.core));
            const Rational det = determinant(d);
            if (json_)
                out_ << json{{"matrix", matrix_json(d)}, {"det", to_string(det)}}.dump() << '\n';
            else
                out_ << matrix_text(d) << "det = " << to_string(det) << '\n';
        } else {
            const auto d = different_matrix(require_k());
            const IsobaricPoly det = determinant(d);
            if (json_)
                out_ << json{{"matrix", matrix_json(d)}, {"det", to_json(det)}}.dump() << '\n';
            else
                out_ << matrix_text(d) << "det = " << to_string(det) << '\n';
        }
        return kSuccess;
    }

    int mf() {
        print_mf(local_function());
        return kSuccess;
    }

    int mf_root() {
        if (o_.q.empty() && o_.verify_m == 0) throw Error("mf-root needs --q and/or --verify");
        const LocalMF f = local_function();
        if (!o_.q.empty()) print_mf(local_power(f, parse_rational(o_.q)));
        if (o_.verify_m != 0) {
            const bool ok = root_verify(f, o_.verify_m);
            if (json_)
                out_ << json{{"root_verify", ok}, {"m", o_.verify_m}}.dump() << '\n';
            else
                out_ << (ok ? "PASS" : "FAIL") << " root_verify " << f.label() << " m=" << o_.verify_m << '\n';
            if (!ok) return kVerification;
        }
        return kSuccess;
    }

    int verify() {
        std::vector<std::string> suites;
        if (o_.suite == "all")
            suites = suite_names();
        else
            suites.push_back(o_.suite);
        bool all_ok = true;
        json report = json::array();
        for (const auto& name : suites) {
            const SuiteReport r = run_suite(name, o_.max_n);
            all_ok = all_ok && r.passed();
            if (json_) {
                report.push_back({{"suite", r.suite}, {"checks", r.checks}, {"passed", r.passed()}, {"failures", r.failures}});
                continue;
            }
            out_ << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (" << r.checks << " checks)\n";
            for (const auto& f : r.failures) out_ << "  failed: " << f << '\n';
        }
        if (json_) out_ << json{{"suites", report}, {"passed", all_ok}}.dump() << '\n';
        return all_ok ? kSuccess : kVerification;
    }

private:
    int require_k() const {
        if (o_.k < 1) throw Error("give either --core t1,...,tk or --k k");
        return o_.k;
    }

    // gfp | glp | one | root:<q> | wip:<weights> | wiproot:<q>:<weights>
    PolySequence sequence(const std::string& text) const {
        const int k = o_.k;
        if (text == "gfp") return PolySequence(k, [k](int n) { return gfp(k, n); });
        if (text == "glp") return PolySequence(k, [k](int n) { return glp(k, n); });
        if (text == "one") return PolySequence(k, [k](int n) { return gfp_root_closed(Rational(0), k, n); });
        if (text.rfind("root:", 0) == 0) {
            const Rational q = parse_rational(text.substr(5));
            return PolySequence(k, [k, q](int n) { return gfp_root_closed(q, k, n); });
        }
        if (text.rfind("wip:", 0) == 0) {
            const WeightVector w = WeightVector::parse(text.substr(4));
            return PolySequence(k, [k, w](int n) { return wip_closed(w, k, n); });
        }
        if (text.rfind("wiproot:", 0) == 0) {
            const auto rest = text.substr(8);
            const auto colon = rest.find(':');
            if (colon == std::string::npos) throw Error("wiproot sequence needs wiproot:<q>:<weights>");
            const Rational q = parse_rational(rest.substr(0, colon));
            const WeightVector w = WeightVector::parse(rest.substr(colon + 1));
            return PolySequence(k, [k, q, w](int n) { return wip_root(w, k, n, q); });
        }
        throw Error("unknown sequence '" + text + "' (gfp, glp, one, root:<q>, wip:<w>, wiproot:<q>:<w>)");
    }

    LocalMF local_function() const {
        if (!o_.values.empty()) return LocalMF("f", parse_rational_list(o_.values));
        if (o_.fn.empty()) throw Error("give --fn name or --values v0,v1,...");
        return known_function(o_.fn, o_.p, o_.big_n);
    }

    void print_mf(const LocalMF& f) {
        if (json_)
            out_ << json{{"label", f.label()}, {"values", [&] {
                              json v = json::array();
                              for (const auto& x : f.values()) v.push_back(to_string(x));
                              return v;
                          }()}}
                        .dump()
                 << '\n';
        else
            out_ << to_string(f) << '\n';
    }

    const Options& o_;
    std::ostream& out_;
    bool json_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Isobaric polynomials, Hessenberg representations and convolution roots", "iso"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto add_kn = [&](CLI::App* sub) {
        sub->add_option("--k", o.k, "Number of variables t1..tk")->required()->check(kPositive);
        sub->add_option("--n", o.n, "Isobaric degree")->required()->check(kNonNegative);
    };
    auto add_eval = [&](CLI::App* sub) { sub->add_option("--eval", o.eval, "Evaluate at t1,...,tk"); };

    auto* wip = app.add_subcommand("wip", "Weighted isobaric polynomial P_{w,k,n}");
    wip->add_option("--weights", o.weights, "w1,w2,... (last entry repeats), 'ones' or 'id'")->required();
    add_kn(wip);
    add_eval(wip);
    wip->add_option("--degree0", o.degree0, "Value used at n = 0 (default w_k)");

    auto* gfp_cmd = app.add_subcommand("gfp", "Generalized Fibonacci polynomial F_{k,n}");
    add_kn(gfp_cmd);
    add_eval(gfp_cmd);

    auto* glp_cmd = app.add_subcommand("glp", "Generalized Lucas polynomial G_{k,n}");
    add_kn(glp_cmd);
    add_eval(glp_cmd);

    auto* hess = app.add_subcommand("hessenberg", "Hessenberg matrix of a WIP and its value");
    hess->add_option("--weights", o.weights, "Weight vector")->required();
    hess->add_option("--sign", o.sign, "plus (permanent) or minus (determinant)")
        ->check(CLI::IsMember({"plus", "minus"}));
    add_kn(hess);
    hess->get_option("--n")->check(kPositive);
    add_eval(hess);

    auto* root_gfp = app.add_subcommand("root-gfp", "q-th convolution root of the Fibonacci family");
    root_gfp->add_option("--q", o.q, "Rational exponent")->required();
    root_gfp->add_option("--method", o.method, "formula, det, perm or stirling")
        ->check(CLI::IsMember({"formula", "det", "perm", "stirling"}));
    root_gfp->add_flag("--show-matrix", o.show_matrix, "Print the matrix for det/perm/stirling");
    add_kn(root_gfp);
    add_eval(root_gfp);

    auto* root_wip = app.add_subcommand("root-wip", "q-th convolution root of a WIP");
    root_wip->add_option("--weights", o.weights, "Weight vector")->required();
    root_wip->add_option("--q", o.q, "Rational exponent")->required();
    add_kn(root_wip);
    add_eval(root_wip);

    auto* conv = app.add_subcommand("conv", "Degree-n term of a convolution product");
    conv->add_option("--left", o.left, "gfp, glp, one, root:<q>, wip:<w>, wiproot:<q>:<w>")->required();
    conv->add_option("--right", o.right, "Same grammar as --left")->required();
    add_kn(conv);
    add_eval(conv);

    auto* comp = app.add_subcommand("companion", "Window of the infinite companion matrix");
    comp->add_option("--core", o.core, "Numeric core t1,...,tk");
    comp->add_option("--k", o.k, "Generic core with k variables")->check(kPositive);
    comp->add_option("--rows", o.rows, "Row range a..b (default 0..5)");

    auto* diff = app.add_subcommand("different", "Different matrix D (or a window of it)");
    diff->add_option("--core", o.core, "Numeric core t1,...,tk");
    diff->add_option("--k", o.k, "Generic core with k variables")->check(kPositive);
    diff->add_option("--rows", o.rows, "Row range a..b of the infinite different matrix");

    auto add_mf = [&](CLI::App* sub) {
        sub->add_option("--fn", o.fn, "zeta, epsilon, mobius, phi, sigma, tau, id");
        sub->add_option("--p", o.p, "Prime");
        sub->add_option("--N", o.big_n, "Largest prime power exponent")->check(kNonNegative);
        sub->add_option("--values", o.values, "Explicit values f(1),f(p),...,f(p^N)");
    };
    auto* mf = app.add_subcommand("mf", "Local values of a multiplicative function");
    add_mf(mf);
    auto* mf_root = app.add_subcommand("mf-root", "q-th Dirichlet power of a multiplicative function");
    add_mf(mf_root);
    mf_root->add_option("--q", o.q, "Rational exponent");
    mf_root->add_option("--verify", o.verify_m, "Check the m-th root reproduces f")->check(kPositive);

    auto* verify = app.add_subcommand("verify", "Run the built-in identity checks");
    verify->add_option("--suite", o.suite, "partitions, hessenberg, roots, companion, mf or all")
        ->check(CLI::IsMember({"partitions", "hessenberg", "roots", "companion", "mf", "all"}));
    verify->add_option("--max-n", o.max_n, "Largest degree checked")->check(kPositive);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        Runner r(o, out);
        if (wip->parsed()) return r.wip();
        if (gfp_cmd->parsed()) return r.gfp_verb();
        if (glp_cmd->parsed()) return r.glp_verb();
        if (hess->parsed()) return r.hessenberg();
        if (root_gfp->parsed()) return r.root_gfp();
        if (root_wip->parsed()) return r.root_wip();
        if (conv->parsed()) return r.conv();
        if (comp->parsed()) return r.companion();
        if (diff->parsed()) return r.different();
        if (mf->parsed()) return r.mf();
        if (mf_root->parsed()) return r.mf_root();
        if (verify->parsed()) return r.verify();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}

} // namespace isobaric::cli
