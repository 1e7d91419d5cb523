#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "genocchi/divided_differences.hpp"
#include "genocchi/expression.hpp"
#include "genocchi/hermite_genocchi.hpp"
#include "genocchi/interpolation.hpp"
#include "genocchi/proof_replay.hpp"
#include "genocchi/quadrature.hpp"
#include "genocchi/version.hpp"

namespace {

using namespace genocchi;

// Exit codes: 0 success, 1 failed replay checks, 2 usage/parse errors,
// 3 numerical failures.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Machine-readable record: ordered key=value lines, floats at 17
// significant digits so doubles round-trip exactly.
class Record {
public:
    explicit Record(bool enabled) : enabled_(enabled) {
        add("record", "genocchi/1");
        add("tool.version", std::string(kToolName) + " " + kToolVersion);
    }

    bool enabled() const { return enabled_; }

    void add(const std::string& key, const std::string& value) {
        if (enabled_) std::cout << key << "=" << value << "\n";
    }
    void add(const std::string& key, const char* value) {
        add(key, std::string(value));
    }
    void add(const std::string& key, double value) { add(key, fmt17(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) {
        add(key, std::string(value ? "true" : "false"));
    }

private:
    bool enabled_;
};

std::vector<double> parse_node_list(const std::string& text) {
    std::vector<double> nodes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string token = text.substr(pos, comma - pos);
        // trim
        while (!token.empty() && (token.front() == ' ' || token.front() == '\t'))
            token.erase(token.begin());
        while (!token.empty() && (token.back() == ' ' || token.back() == '\t'))
            token.pop_back();
        double v = 0.0;
        const char* begin = token.data();
        const char* end = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc{} || ptr != end || token.empty())
            throw CLI::ValidationError("--nodes",
                                       "'" + token + "' is not a decimal number");
        nodes.push_back(v);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return nodes;
}

std::string join_csv(const std::vector<double>& nodes) {
    std::string out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i) out += ",";
        out += fmt17(nodes[i]);
    }
    return out;
}

std::size_t max_multiplicity(const NodeList& nodes) {
    const NodeList sorted = nodes.sorted();
    std::size_t best = 1, run = 1;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        run = bit_equal(sorted[i], sorted[i - 1]) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

double default_tolerance() {
    if (const char* env = std::getenv("GENOCCHI_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0) return v;
        throw CLI::ValidationError("GENOCCHI_TOL",
                                   "environment override is not a positive number");
    }
    return 1e-9;
}

void emit_certificate(Record& rec, const ErrorCertificate& cert) {
    rec.add("certificate.bound", cert.bound);
    rec.add("certificate.constant", cert.constant_name);
    rec.add("certificate.M", cert.sup_m);
    rec.add("certificate.rigor", std::string(to_string(cert.rigor)));
}

void print_certificate_human(const ErrorCertificate& cert) {
    std::cout << "certificate: |error| <= " << fmt12(cert.bound) << "  ["
              << cert.constant_name << ", M=" << fmt12(cert.sup_m) << ", "
              << to_string(cert.rigor) << "]\n";
}

// ---------------------------------------------------------------------------

struct CommonOptions {
    std::string expression;
    double tol = 1e-9;
    int max_depth = 40;
    bool machine = false;

    QuadratureConfig config() const { return QuadratureConfig{tol, max_depth}; }
};

int run_divdiff(const CommonOptions& opt, const std::string& nodes_text, bool use_hg) {
    const std::vector<double> raw = parse_node_list(nodes_text);
    const NodeList nodes(raw);
    const int needed_order =
        use_hg ? static_cast<int>(nodes.order())
               : static_cast<int>(max_multiplicity(nodes)) - 1;
    const FunctionOracle oracle =
        expr::to_oracle(expr::parse(opt.expression), needed_order);

    Record rec(opt.machine);
    rec.add("command", use_hg ? "divdiff.hg" : "divdiff");
    rec.add("input.f", opt.expression);
    rec.add("input.nodes", join_csv(raw));
    rec.add("input.tol", opt.tol);
    rec.add("input.max_depth", opt.max_depth);

    if (use_hg) {
        const double value = hg_divided_difference(oracle, nodes, opt.config());
        rec.add("result.hg_divided_difference", value);
        if (!opt.machine)
            std::cout << "order-" << nodes.order()
                      << " divided difference (simplex integral) = " << fmt12(value)
                      << "\n";
        return kExitOk;
    }

    const DividedDifferenceTable table = build_table(oracle, nodes);
    rec.add("result.order", static_cast<int>(table.order()));
    rec.add("result.nodes.sorted", join_csv(table.nodes().values()));
    for (std::size_t k = 0; k <= table.order(); ++k)
        for (std::size_t i = 0; i + k <= table.order(); ++i)
            rec.add("result.table." + std::to_string(k) + "." + std::to_string(i),
                    table.entry(k, i));
    rec.add("result.top", table.top());

    if (!opt.machine) {
        std::cout << "nodes (ascending):";
        for (std::size_t i = 0; i <= table.order(); ++i)
            std::cout << " " << fmt12(table.nodes()[i]);
        std::cout << "\n";
        for (std::size_t k = 0; k <= table.order(); ++k) {
            std::cout << "k=" << k << ":";
            for (std::size_t i = 0; i + k <= table.order(); ++i)
                std::cout << " " << fmt12(table.entry(k, i));
            std::cout << "\n";
        }
        std::cout << "top divided difference = " << fmt12(table.top()) << "\n";
    }
    return kExitOk;
}

int run_interp(const CommonOptions& opt, const std::string& nodes_text, double at,
               std::optional<double> sup_m) {
    const std::vector<double> raw = parse_node_list(nodes_text);
    const NodeList nodes(raw);
    const int n = static_cast<int>(nodes.size());
    const int max_order =
        sup_m ? static_cast<int>(max_multiplicity(nodes)) - 1 : n;
    const FunctionOracle oracle =
        expr::to_oracle(expr::parse(opt.expression), max_order);

    const NewtonPolynomial p = newton_fit(oracle, nodes);
    const double p_at = newton_eval(p, at);
    const double f_at = oracle.value(at);

    SupBound sup;
    if (sup_m) {
        sup = SupBound{*sup_m, Rigor::rigorous};
    } else {
        const double lo = std::min(nodes.min(), at);
        const double hi = std::max(nodes.max(), at);
        sup = resolve_sup_bound(oracle, n, lo, hi);
    }
    const ErrorCertificate cert = lagrange_bound(nodes, at, sup.value, sup.rigor);

    Record rec(opt.machine);
    rec.add("command", "interp");
    rec.add("input.f", opt.expression);
    rec.add("input.nodes", join_csv(raw));
    rec.add("input.at", at);
    rec.add("input.M", sup_m ? fmt17(*sup_m) : std::string("auto"));
    rec.add("result.newton_coefficients", join_csv(p.coeffs));
    rec.add("result.p_at", p_at);
    rec.add("result.f_at", f_at);
    rec.add("result.residual", f_at - p_at);
    emit_certificate(rec, cert);

    if (!opt.machine) {
        std::cout << "P(" << fmt12(at) << ")  = " << fmt12(p_at) << "\n";
        std::cout << "f(" << fmt12(at) << ")  = " << fmt12(f_at) << "\n";
        std::cout << "f - P     = " << fmt12(f_at - p_at) << "\n";
        print_certificate_human(cert);
    }
    return kExitOk;
}

int run_quad(const CommonOptions& opt, const std::string& kind, double a, double b,
             int panels, int levels, std::optional<double> sup_m) {
    const FunctionOracle oracle = expr::to_oracle(expr::parse(opt.expression), 4);
    std::optional<SupBound> sup_override;
    if (sup_m) sup_override = SupBound{*sup_m, Rigor::rigorous};

    Record rec(opt.machine);
    rec.add("command", "quad." + kind);
    rec.add("input.f", opt.expression);
    rec.add("input.a", a);
    rec.add("input.b", b);

    if (kind == "romberg") {
        rec.add("input.levels", levels);
        const RombergTable table = romberg(oracle, a, b, levels);
        for (int k = 0; k < table.levels(); ++k)
            for (int j = 0; j <= k; ++j)
                rec.add("result.table." + std::to_string(k) + "." + std::to_string(j),
                        table.entry(k, j));
        rec.add("result.best", table.best());
        if (!opt.machine) {
            for (int k = 0; k < table.levels(); ++k) {
                std::cout << "T[" << k << "]:";
                for (int j = 0; j <= k; ++j)
                    std::cout << " " << fmt12(table.entry(k, j));
                std::cout << "\n";
            }
            std::cout << "best = " << fmt12(table.best()) << "\n";
        }
        return kExitOk;
    }

    QuadResult result;
    if (kind == "simpson") {
        result = simpson(oracle, a, b, sup_override);
    } else {
        rec.add("input.m", panels);
        result = composite_simpson(oracle, a, b, panels, sup_override);
    }
    rec.add("input.M4", sup_m ? fmt17(*sup_m) : std::string("auto"));
    rec.add("result.value", result.value);
    rec.add("result.panels", result.panels);
    if (result.certificate) emit_certificate(rec, *result.certificate);

    if (!opt.machine) {
        std::cout << kind << " value = " << fmt12(result.value)
                  << "  (panels=" << result.panels << ")\n";
        if (result.certificate) print_certificate_human(*result.certificate);
    }
    return kExitOk;
}

int run_hg_volume(const CommonOptions& opt, int n) {
    const SimplexIntegrand one{n, [](std::span<const double>) { return 1.0; }};
    const double value = integrate_simplex(one, opt.config());
    double factorial = 1.0;
    for (int i = 2; i <= n; ++i) factorial *= static_cast<double>(i);
    const double exact = 1.0 / factorial;

    Record rec(opt.machine);
    rec.add("command", "hg-volume");
    rec.add("input.n", n);
    rec.add("input.tol", opt.tol);
    rec.add("input.max_depth", opt.max_depth);
    rec.add("result.value", value);
    rec.add("result.exact", exact);
    rec.add("result.abs_error", std::abs(value - exact));

    if (!opt.machine)
        std::cout << "simplex volume, n=" << n << ": computed = " << fmt12(value)
                  << ", exact 1/n! = " << fmt12(exact) << "\n";
    return kExitOk;
}

int run_replay(const CommonOptions& opt, double a, double b) {
    const FunctionOracle oracle = expr::to_oracle(expr::parse(opt.expression), 4);
    const ReplayReport report = replay(oracle, a, b, opt.config(), opt.expression);

    Record rec(opt.machine);
    rec.add("command", "replay");
    rec.add("input.f", opt.expression);
    rec.add("input.a", a);
    rec.add("input.b", b);
    rec.add("input.tol", opt.tol);
    rec.add("input.max_depth", opt.max_depth);
    rec.add("result.sup_d4", report.sup_d4);
    rec.add("result.sup_rigor", std::string(to_string(report.sup_rigor)));
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const ReplayCheck& c = report.checks[i];
        const std::string prefix = "result.check." + std::to_string(i);
        rec.add(prefix + ".name", c.name);
        rec.add(prefix + ".kind", std::string(c.is_upper_bound ? "le" : "eq"));
        rec.add(prefix + ".lhs", c.lhs);
        rec.add(prefix + ".rhs", c.rhs);
        rec.add(prefix + ".tol", c.tolerance);
        rec.add(prefix + ".pass", c.pass);
    }
    rec.add("result.overall", std::string(report.overall ? "pass" : "fail"));

    if (!opt.machine) {
        std::cout << "replay: " << report.function_label << " on ["
                  << fmt12(report.a) << ", " << fmt12(report.b) << "]\n";
        std::cout << "sup |g''''| = " << fmt12(report.sup_d4) << " ("
                  << to_string(report.sup_rigor) << ")\n";
        for (const ReplayCheck& c : report.checks) {
            std::printf("  [%s] %-55s lhs=%-22.12g rhs=%-22.12g tol=%g\n",
                        c.pass ? "pass" : "FAIL", c.name.c_str(), c.lhs, c.rhs,
                        c.tolerance);
        }
        std::cout << "overall: " << (report.overall ? "PASS" : "FAIL") << "\n";
    }
    return report.overall ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Divided differences, Newton interpolation with Lagrange "
                 "certificates, certified Simpson/Romberg quadrature, and a "
                 "numerical replay of the constructive Simpson error bound."};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string nodes_text;
    double at = 0.0, a = 0.0, b = 1.0;
    int panels = 1, levels = 1, simplex_n = 0;
    bool use_hg = false;
    std::optional<double> sup_m, sup_m4;

    try {
        opt.tol = default_tolerance();
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto add_common = [&](CLI::App* cmd, bool with_expr = true) {
        if (with_expr)
            cmd->add_option("--f", opt.expression, "expression in x")->required();
        cmd->add_option("--tol", opt.tol,
                        "absolute tolerance per 1-D quadrature level");
        cmd->add_option("--max-depth", opt.max_depth, "adaptive bisection limit");
        cmd->add_flag("--json", opt.machine,
                      "machine-readable key=value record on stdout");
    };

    CLI::App* divdiff = app.add_subcommand(
        "divdiff", "divided-difference table (or simplex-integral value with --hg)");
    add_common(divdiff);
    divdiff->add_option("--nodes", nodes_text, "comma-separated nodes; repeats allowed")
        ->required();
    divdiff->add_flag("--hg", use_hg,
                      "evaluate via the Hermite-Genocchi simplex integral");

    CLI::App* interp = app.add_subcommand(
        "interp", "Newton interpolation value, residual, and Lagrange certificate");
    add_common(interp);
    interp->add_option("--nodes", nodes_text, "comma-separated interpolation nodes")
        ->required();
    interp->add_option("--at", at, "evaluation point")->required();
    interp->add_option("--M", sup_m, "sup of |f^(n)| (else sampled, flagged)");

    CLI::App* quad = app.add_subcommand("quad", "certified quadrature");
    quad->require_subcommand(1);
    CLI::App* quad_simpson = quad->add_subcommand("simpson", "three-point Simpson");
    CLI::App* quad_composite =
        quad->add_subcommand("composite", "composite Simpson on m panels");
    CLI::App* quad_romberg = quad->add_subcommand("romberg", "Romberg table");
    for (CLI::App* cmd : {quad_simpson, quad_composite, quad_romberg}) {
        add_common(cmd);
        cmd->add_option("--a", a, "lower endpoint")->required();
        cmd->add_option("--b", b, "upper endpoint")->required();
    }
    quad_composite->add_option("--m", panels, "panel count")->required();
    quad_romberg->add_option("--levels", levels, "table levels")->required();
    quad_simpson->add_option("--M4", sup_m4, "sup of |f''''| (else sampled, flagged)");
    quad_composite->add_option("--M4", sup_m4,
                               "sup of |f''''| (else sampled, flagged)");

    CLI::App* hg_volume =
        app.add_subcommand("hg-volume", "simplex volume check: integral of 1 vs 1/n!");
    add_common(hg_volume, /*with_expr=*/false);
    hg_volume->add_option("--n", simplex_n, "simplex order")->required();

    CLI::App* replay_cmd = app.add_subcommand(
        "replay", "re-run the constructive Simpson-bound derivation numerically");
    add_common(replay_cmd);
    replay_cmd->add_option("--a", a, "lower endpoint")->required();
    replay_cmd->add_option("--b", b, "upper endpoint")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (divdiff->parsed()) return run_divdiff(opt, nodes_text, use_hg);
        if (interp->parsed()) return run_interp(opt, nodes_text, at, sup_m);
        if (quad->parsed()) {
            const std::string kind = quad_simpson->parsed()    ? "simpson"
                                     : quad_composite->parsed() ? "composite"
                                                                : "romberg";
            return run_quad(opt, kind, a, b, panels, levels, sup_m4);
        }
        if (hg_volume->parsed()) return run_hg_volume(opt, simplex_n);
        if (replay_cmd->parsed()) return run_replay(opt, a, b);
    } catch (const expr::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EmptyInterval& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        // MaxDepthExceeded, EvaluationDomainError, InsufficientDerivativeOrder,
        // ConfluentNodes: the computation itself failed.
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
