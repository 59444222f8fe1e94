#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperphf/checks.hpp"
#include "hyperphf/circulant.hpp"
#include "hyperphf/crystallo.hpp"
#include "hyperphf/hermite.hpp"
#include "hyperphf/phf.hpp"
#include "hyperphf/scan.hpp"
#include "hyperphf/tricomplex.hpp"

namespace {

using namespace hyperphf;

enum class Format { text, csv, json };

struct GlobalOpts {
    std::string format = "text";
    double tol = 1e-12;
    std::uint64_t seed = 0;
    std::string out;

    Format fmt() const {
        if (format == "csv") return Format::csv;
        if (format == "json") return Format::json;
        return Format::text;
    }
};

// 17 significant digits: enough for doubles to round-trip exactly.
std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Ordered flat list of named numeric fields, rendered per output format.
class FieldList {
public:
    void add(std::string key, double value) { fields_.emplace_back(std::move(key), value); }

    std::string render(Format f) const {
        std::ostringstream os;
        switch (f) {
            case Format::text:
                for (const auto& [k, v] : fields_) os << k << " = " << g17(v) << "\n";
                break;
            case Format::csv: {
                for (std::size_t i = 0; i < fields_.size(); ++i) {
                    os << (i ? "," : "") << fields_[i].first;
                }
                os << "\n";
                for (std::size_t i = 0; i < fields_.size(); ++i) {
                    os << (i ? "," : "") << g17(fields_[i].second);
                }
                os << "\n";
                break;
            }
            case Format::json: {
                os << "{";
                for (std::size_t i = 0; i < fields_.size(); ++i) {
                    os << (i ? ", " : "") << "\"" << fields_[i].first << "\": "
                       << g17(fields_[i].second);
                }
                os << "}\n";
                break;
            }
        }
        return os.str();
    }

private:
    std::vector<std::pair<std::string, double>> fields_;
};

int emit(const GlobalOpts& g, const std::string& content) {
    if (!g.out.empty()) {
        std::ofstream f(g.out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open output path: " << g.out << "\n";
            return 1;
        }
        f << content;
        f.flush();
        if (!f.good()) {
            std::cerr << "write failed: " << g.out << "\n";
            return 1;
        }
        return 0;
    }
    std::cout << content;
    return 0;
}

int usage_error(const std::string& msg) {
    std::cerr << "usage error: " << msg << "\n";
    return 2;
}

// ---- eval ---------------------------------------------------------------

struct EvalArgs {
    int order = 0;
    double alpha = 0.0;
    double eta = 0.0;
    double delta = 0.0;
    bool has_eta = false;
    bool has_delta = false;
};

int run_eval(const GlobalOpts& g, const EvalArgs& a) {
    if (a.has_eta && a.order != 3 && a.order != 4) {
        return usage_error("--eta requires --order 3 or 4");
    }
    if (a.has_delta && a.order != 4) {
        return usage_error("--delta requires --order 4");
    }

    const PhfVector e = [&] {
        if (a.order == 3 && a.has_eta) return hphf3(a.alpha, a.eta);
        if (a.order == 4 && (a.has_eta || a.has_delta)) {
            return hphf4(a.alpha, a.has_eta ? a.eta : 0.0, a.has_delta ? a.delta : 0.0);
        }
        return phf_eval(PhfOrder(a.order), a.alpha);
    }();

    double exponent = a.alpha;
    if (a.has_eta) exponent += a.eta;
    if (a.has_delta) exponent += a.delta;
    const double residual =
        std::abs(e.sum() - std::exp(exponent)) / std::exp(std::abs(exponent));

    FieldList fields;
    fields.add("alpha", a.alpha);
    if (a.has_eta) fields.add("eta", a.eta);
    if (a.has_delta) fields.add("delta", a.delta);
    for (int s = 0; s < e.order(); ++s) {
        fields.add("e_" + std::to_string(s), e[static_cast<std::size_t>(s)]);
    }
    fields.add("sum_residual", residual);
    return emit(g, fields.render(g.fmt()));
}

// ---- decompose ------------------------------------------------------------

int run_decompose(const GlobalOpts& g, double x, double y, double z) {
    const TriComplex zeta{x, y, z};
    const Decomposition d = decompose(zeta);  // throws on the excluded domain
    const PolarForm p = polar(zeta);
    FieldList fields;
    fields.add("beta", d.beta);
    fields.add("gamma", d.gamma);
    fields.add("modulus", p.modulus);
    fields.add("phase", p.phase);
    fields.add("trace_sum", p.trace_sum);
    fields.add("det_norm", det_norm(zeta));
    return emit(g, fields.render(g.fmt()));
}

// ---- rotate --------------------------------------------------------------

struct RotateArgs {
    double x = 0.0, y = 0.0, z = 0.0;
    double alpha = 0.0;
    double eta = 0.0;
    bool has_eta = false;
    bool invariant = false;
};

int run_rotate(const GlobalOpts& g, const RotateArgs& a) {
    if (a.invariant && a.has_eta) {
        return usage_error("--invariant cannot be combined with --eta");
    }
    const TriComplex zeta{a.x, a.y, a.z};
    const TriComplex r = a.has_eta     ? hermite_rotate(zeta, a.alpha, a.eta)
                         : a.invariant ? invariant_rotate(zeta, a.alpha)
                                       : rotate(zeta, a.alpha);
    FieldList fields;
    fields.add("x", r.x);
    fields.add("y", r.y);
    fields.add("z", r.z);
    fields.add("modulus_in", polar(zeta).modulus);
    fields.add("modulus_out", polar(r).modulus);
    return emit(g, fields.render(g.fmt()));
}

// ---- hermite --------------------------------------------------------------

int run_hermite(const GlobalOpts& g, int n, double x, double y, bool has_z, double z) {
    const double value = has_z ? hermite3(n, x, y, z) : hermite2(n, x, y);
    FieldList fields;
    fields.add("n", static_cast<double>(n));
    fields.add("value", value);
    return emit(g, fields.render(g.fmt()));
}

// ---- crystallo -------------------------------------------------------------

int run_crystallo(const GlobalOpts& g, const std::string& action) {
    const auto& tab = table();

    if (action == "table") {
        std::ostringstream os;
        if (g.fmt() == Format::text) {
            for (const PointOperator& op : tab) {
                os << op.label() << ":\n";
                for (const auto& row : op.entries()) {
                    os << "  " << row[0] << " " << row[1] << " " << row[2] << "\n";
                }
            }
        } else if (g.fmt() == Format::csv) {
            os << "label,e00,e01,e02,e10,e11,e12,e20,e21,e22\n";
            for (const PointOperator& op : tab) {
                os << op.label();
                for (const auto& row : op.entries()) {
                    for (int v : row) os << "," << v;
                }
                os << "\n";
            }
        } else {
            os << "{";
            bool first = true;
            for (const PointOperator& op : tab) {
                for (int r = 0; r < 3; ++r) {
                    for (int c = 0; c < 3; ++c) {
                        os << (first ? "" : ", ") << "\"" << op.label() << "_" << r << c
                           << "\": "
                           << op.entries()[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                        first = false;
                    }
                }
            }
            os << "}\n";
        }
        return emit(g, os.str());
    }

    if (action == "orders") {
        std::ostringstream os;
        if (g.fmt() == Format::csv) os << "label,order\n";
        if (g.fmt() == Format::json) os << "{";
        bool first = true;
        for (const PointOperator& op : tab) {
            const int n = order_of(op);
            switch (g.fmt()) {
                case Format::text: os << op.label() << " order " << n << "\n"; break;
                case Format::csv: os << op.label() << "," << n << "\n"; break;
                case Format::json:
                    os << (first ? "" : ", ") << "\"" << op.label() << "\": " << n;
                    break;
            }
            first = false;
        }
        if (g.fmt() == Format::json) os << "}\n";
        return emit(g, os.str());
    }

    if (action == "closure") {
        const ClosureReport r = closure_report();
        FieldList fields;
        fields.add("closed", r.closed ? 1.0 : 0.0);
        fields.add("product_count", static_cast<double>(r.product_count));
        return emit(g, fields.render(g.fmt()));
    }

    if (action == "verify") {
        const checks::SuiteOptions opt{g.tol, g.seed};
        const auto results = checks::run_crystallo_checks(opt);
        std::ostringstream os;
        int failures = 0;
        for (const auto& r : results) {
            if (!r.pass) ++failures;
            os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  violations "
               << static_cast<int>(r.max_residual) << "\n";
        }
        os << (failures == 0 ? "crystallo: all checks passed\n"
                             : "crystallo: " + std::to_string(failures) + " check(s) failed\n");
        const int rc = emit(g, os.str());
        return rc != 0 ? rc : (failures == 0 ? 0 : 1);
    }

    return usage_error("unknown crystallo action: " + action);
}

// ---- verify ---------------------------------------------------------------

int run_verify(const GlobalOpts& g, const std::string& suite) {
    const checks::SuiteOptions opt{g.tol, g.seed};
    std::vector<std::pair<std::string, std::vector<checks::CheckResult>>> suites;
    if (suite == "phf" || suite == "all") {
        suites.emplace_back("phf", checks::run_phf_checks(opt));
    }
    if (suite == "tricomplex" || suite == "all") {
        suites.emplace_back("tricomplex", checks::run_tricomplex_checks(opt));
    }
    if (suite == "hermite" || suite == "all") {
        suites.emplace_back("hermite", checks::run_hermite_checks(opt));
    }
    if (suite == "crystallo" || suite == "all") {
        suites.emplace_back("crystallo", checks::run_crystallo_checks(opt));
    }
    if (suites.empty()) {
        return usage_error("unknown suite: " + suite +
                           " (expected phf|tricomplex|hermite|crystallo|all)");
    }

    std::ostringstream os;
    int failures = 0;
    if (g.fmt() == Format::csv) os << "suite,identity,max_residual,tolerance,pass\n";
    if (g.fmt() == Format::json) os << "{";
    bool first = true;
    for (const auto& [name, results] : suites) {
        for (const auto& r : results) {
            if (!r.pass) ++failures;
            switch (g.fmt()) {
                case Format::text: {
                    char line[160];
                    std::snprintf(line, sizeof line,
                                  "%-4s  %-10s  %-26s  max residual %-12.3g tol %.3g\n",
                                  r.pass ? "PASS" : "FAIL", name.c_str(), r.name.c_str(),
                                  r.max_residual, r.tolerance);
                    os << line;
                    break;
                }
                case Format::csv:
                    os << name << "," << r.name << "," << g17(r.max_residual) << ","
                       << g17(r.tolerance) << "," << (r.pass ? 1 : 0) << "\n";
                    break;
                case Format::json:
                    os << (first ? "" : ", ") << "\"" << name << "_" << r.name
                       << "\": " << g17(r.max_residual);
                    break;
            }
            first = false;
        }
    }
    if (g.fmt() == Format::json) {
        os << (first ? "" : ", ") << "\"failures\": " << failures << "}\n";
    } else if (g.fmt() == Format::text) {
        os << (failures == 0 ? "all checks passed\n"
                             : std::to_string(failures) + " check(s) failed\n");
    }
    const int rc = emit(g, os.str());
    return rc != 0 ? rc : (failures == 0 ? 0 : 1);
}

// ---- sample ---------------------------------------------------------------

int run_sample(const GlobalOpts& g, int order, double from, double to, double step) {
    const auto rows = scan::sample_grid(order, from, to, step);
    std::ostringstream os;
    os << "alpha";
    for (int s = 0; s < order; ++s) os << ",e_" << s;
    os << ",sum_residual\n";
    for (const auto& row : rows) {
        os << g17(row.alpha);
        for (double v : row.values) os << "," << g17(v);
        os << "," << g17(row.sum_residual) << "\n";
    }
    return emit(g, os.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperphf: pseudo-hyperbolic function families, circulant algebra, "
                 "tri-complex numbers, Hermite extensions, crystallographic point operators"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--tol", g.tol, "Base tolerance, scaled per check")->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for the random verification samples")
        ->capture_default_str();
    app.add_option("--out", g.out, "Write output to this path instead of stdout");

    EvalArgs eval_args;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a PHF family at one argument");
    eval_cmd->add_option("--order", eval_args.order, "Family order m >= 2")->required();
    eval_cmd->add_option("--alpha", eval_args.alpha, "Argument")->required();
    CLI::Option* eta_opt =
        eval_cmd->add_option("--eta", eval_args.eta, "Second generator weight (order 3 or 4)");
    CLI::Option* delta_opt =
        eval_cmd->add_option("--delta", eval_args.delta, "Third generator weight (order 4)");

    double dx = 0.0, dy = 0.0, dz = 0.0;
    CLI::App* dec_cmd =
        app.add_subcommand("decompose", "Exponential decomposition of a tri-complex number");
    dec_cmd->add_option("--x", dx)->required();
    dec_cmd->add_option("--y", dy)->required();
    dec_cmd->add_option("--z", dz)->required();

    RotateArgs rot_args;
    CLI::App* rot_cmd = app.add_subcommand("rotate", "Apply a rotation to a tri-complex number");
    rot_cmd->add_option("--x", rot_args.x)->required();
    rot_cmd->add_option("--y", rot_args.y)->required();
    rot_cmd->add_option("--z", rot_args.z)->required();
    rot_cmd->add_option("--alpha", rot_args.alpha, "Rotation argument")->required();
    CLI::Option* rot_eta =
        rot_cmd->add_option("--eta", rot_args.eta, "Combined-generator weight");
    rot_cmd->add_flag("--invariant", rot_args.invariant, "Use the modulus-preserving transform");

    int hn = 0;
    double hx = 0.0, hy = 0.0, hz = 0.0;
    CLI::App* her_cmd = app.add_subcommand("hermite", "Evaluate a Hermite polynomial");
    her_cmd->add_option("--n", hn, "Degree")->required();
    her_cmd->add_option("--x", hx)->required();
    her_cmd->add_option("--y", hy)->required();
    CLI::Option* hz_opt = her_cmd->add_option("--z", hz, "Third variable");

    std::string crys_action;
    CLI::App* crys_cmd = app.add_subcommand("crystallo", "Crystallographic point operators");
    crys_cmd->add_option("action", crys_action, "table|orders|verify|closure")->required();

    std::string suite;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a module verification suite");
    verify_cmd->add_option("suite", suite, "phf|tricomplex|hermite|crystallo|all")->required();

    int s_order = 0;
    double s_from = 0.0, s_to = 0.0, s_step = 0.0;
    CLI::App* sample_cmd = app.add_subcommand("sample", "Tabulate a PHF family as CSV");
    sample_cmd->add_option("--order", s_order, "Family order m >= 2")->required();
    sample_cmd->add_option("--from", s_from, "Grid start")->required();
    sample_cmd->add_option("--to", s_to, "Grid end")->required();
    sample_cmd->add_option("--step", s_step, "Grid step")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    eval_args.has_eta = eta_opt->count() > 0;
    eval_args.has_delta = delta_opt->count() > 0;
    rot_args.has_eta = rot_eta->count() > 0;

    try {
        if (eval_cmd->parsed()) return run_eval(g, eval_args);
        if (dec_cmd->parsed()) return run_decompose(g, dx, dy, dz);
        if (rot_cmd->parsed()) return run_rotate(g, rot_args);
        if (her_cmd->parsed()) return run_hermite(g, hn, hx, hy, hz_opt->count() > 0, hz);
        if (crys_cmd->parsed()) return run_crystallo(g, crys_action);
        if (verify_cmd->parsed()) return run_verify(g, suite);
        if (sample_cmd->parsed()) return run_sample(g, s_order, s_from, s_to, s_step);
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
