// Command-line front end: volume-polynomial coefficients, roots, bound
// verification, the planar chain, and aspect-ratio sweeps, as CSV or JSON
// lines. All numeric output is deterministic: fixed seeds, fixed reduction
// shapes, 17-significant-digit printing.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "steiner/body_io.hpp"
#include "steiner/bounds.hpp"
#include "steiner/errors.hpp"
#include "steiner/minkowski.hpp"
#include "steiner/roots.hpp"
#include "steiner/steiner_polynomial.hpp"

namespace {

using nlohmann::json;
using namespace steiner;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// CSV cell: empty for NaN (the "not applicable" marker in tables).
std::string csv_cell(double v) { return std::isnan(v) ? std::string() : fmt(v); }

json json_number(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

struct OutputSink {
    std::ofstream file;
    std::ostream* out = &std::cout;

    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw ParseError("cannot open output file: " + path);
            out = &file;
        }
    }
    std::ostream& stream() { return *out; }
};

struct CommonOpts {
    std::string body_path;
    std::string format = "csv";
    std::string output;
    int quad_level = 0;
    double tol = 1e-4;
    double cluster_tol = 1e-5;
};

QuadratureRule rule_for(const ConvexBody& body, int quad_level) {
    const int dim = body.dimension();
    const int level = quad_level > 0 ? quad_level : QuadratureRule::default_level(dim);
    return QuadratureRule::build(dim, level);
}

int run_coeffs(const CommonOpts& opt) {
    const ConvexBody body = load_body_file(opt.body_path, opt.quad_level);
    const QuadratureRule rule = rule_for(body, opt.quad_level);
    const auto [poly, table] = steiner_polynomial(body, rule);

    OutputSink sink(opt.output);
    if (opt.format == "csv") {
        sink.stream() << "index,coefficient,mixed_volume,discrepancy\n";
        for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
            sink.stream() << i << ',' << fmt(poly.coeffs[i]) << ',' << fmt(table.values[i])
                          << ',' << csv_cell(table.discrepancy[i]) << '\n';
        }
    } else {
        for (std::size_t i = 0; i < poly.coeffs.size(); ++i) {
            json row;
            row["index"] = i;
            row["coefficient"] = poly.coeffs[i];
            row["mixed_volume"] = table.values[i];
            row["discrepancy"] = json_number(table.discrepancy[i]);
            sink.stream() << row.dump() << '\n';
        }
    }
    return 0;
}

int run_roots(const CommonOpts& opt) {
    const ConvexBody body = load_body_file(opt.body_path, opt.quad_level);
    const QuadratureRule rule = rule_for(body, opt.quad_level);
    const SteinerPolynomial poly = steiner_polynomial(body, rule).first;
    const RootSet roots = polynomial_roots(poly, opt.cluster_tol);
    const StabilityReport stab = hurwitz_stable(poly);

    OutputSink sink(opt.output);
    if (opt.format == "csv") {
        sink.stream() << "re,im,hurwitz_stable,stability_margin\n";
        for (const auto& z : roots.roots) {
            sink.stream() << fmt(z.real()) << ',' << fmt(z.imag()) << ','
                          << (stab.stable ? 1 : 0) << ',' << fmt(stab.margin) << '\n';
        }
    } else {
        for (const auto& z : roots.roots) {
            json row;
            row["re"] = z.real();
            row["im"] = z.imag();
            row["hurwitz_stable"] = stab.stable;
            row["stability_margin"] = stab.margin;
            sink.stream() << row.dump() << '\n';
        }
    }
    return 0;
}

// verify: one row per check; `value` is the signed margin or error the
// check measures, `threshold` what it is compared against.
int run_verify(const CommonOpts& opt) {
    const ConvexBody body = load_body_file(opt.body_path, opt.quad_level);
    const QuadratureRule rule = rule_for(body, opt.quad_level);
    const auto [poly, table] = steiner_polynomial(body, rule);
    const BoundsReport bounds = root_bounds_check(body, rule, opt.tol);

    struct Row {
        const char* check;
        bool pass;
        double value;
        double threshold;
    };
    std::vector<Row> rows;

    rows.push_back({"root_bounds", bounds.pass,
                    std::min(bounds.lower_margin, bounds.upper_margin), -opt.tol});

    double worst_slack = 0.0;
    const bool concave = table.log_concave(1e-9, &worst_slack);
    rows.push_back({"log_concavity", concave, worst_slack, -1e-9});

    double worst_disc = 0.0;
    for (int i = 1; i < body.dimension(); ++i)
        worst_disc = std::max(worst_disc, table.discrepancy[static_cast<std::size_t>(i)]);
    rows.push_back({"dual_formula_agreement", worst_disc <= 1e-6, worst_disc, 1e-6});

    const double kappa = unit_ball_volume(body.dimension());
    const double lead_err = std::abs(poly.coeffs.back() - kappa) / kappa;
    rows.push_back({"leading_coefficient", lead_err <= 1e-8, lead_err, 1e-8});

    rows.push_back({"hurwitz_stable", bounds.stability.stable, bounds.stability.margin, 0.0});

    OutputSink sink(opt.output);
    bool all_pass = true;
    if (opt.format == "csv") {
        sink.stream() << "check,pass,value,threshold\n";
        for (const Row& r : rows) {
            all_pass = all_pass && r.pass;
            sink.stream() << r.check << ',' << (r.pass ? 1 : 0) << ',' << fmt(r.value) << ','
                          << fmt(r.threshold) << '\n';
        }
    } else {
        for (const Row& r : rows) {
            all_pass = all_pass && r.pass;
            json row;
            row["check"] = r.check;
            row["pass"] = r.pass;
            row["value"] = r.value;
            row["threshold"] = r.threshold;
            if (std::string(r.check) == "root_bounds")
                row["stability_hypothesis_unverified"] = bounds.stability_hypothesis_unverified;
            sink.stream() << row.dump() << '\n';
        }
    }
    return all_pass ? 0 : 1;
}

void chain_to_csv(std::ostream& os, const PlanarChainReport& rep,
                  const InradiusRootReport& p2, const std::optional<double>& aspect) {
    if (aspect) os << fmt(*aspect) << ',';
    for (const double v : rep.values) os << fmt(v) << ',';
    os << (rep.strict ? 1 : 0) << ',' << (rep.equality_mode ? 1 : 0) << ',' << fmt(rep.min_gap)
       << ',' << (rep.pass ? 1 : 0) << ',' << fmt(p2.slack) << ',' << (p2.holds ? 1 : 0) << '\n';
}

json chain_to_json(const PlanarChainReport& rep, const InradiusRootReport& p2) {
    json row;
    row["neg_rho_max"] = rep.values[0];
    row["t1"] = rep.values[1];
    row["neg_outradius"] = rep.values[2];
    row["neg_perimeter_over_2pi"] = rep.values[3];
    row["neg_inradius"] = rep.values[4];
    row["t2"] = rep.values[5];
    row["neg_rho_min"] = rep.values[6];
    row["strict"] = rep.strict;
    row["equality_mode"] = rep.equality_mode;
    row["min_gap"] = rep.min_gap;
    row["pass"] = rep.pass;
    row["inradius_root_slack"] = p2.slack;
    row["inradius_root_holds"] = p2.holds;
    return row;
}

constexpr const char* kChainHeader =
    "neg_rho_max,t1,neg_outradius,neg_perimeter_over_2pi,neg_inradius,t2,neg_rho_min,"
    "strict,equality_mode,min_gap,pass,inradius_root_slack,inradius_root_holds";

int run_chain(const CommonOpts& opt) {
    const ConvexBody body = load_body_file(opt.body_path, opt.quad_level);
    if (body.dimension() != 2)
        throw ParseError("chain: the planar chain is defined for dimension 2 only");
    const QuadratureRule rule = rule_for(body, opt.quad_level);
    const PlanarChainReport rep = planar_chain_check(body, rule, opt.tol);
    const InradiusRootReport p2 = inradius_root_check(body, rule);

    OutputSink sink(opt.output);
    if (opt.format == "csv") {
        sink.stream() << kChainHeader << '\n';
        chain_to_csv(sink.stream(), rep, p2, std::nullopt);
    } else {
        sink.stream() << chain_to_json(rep, p2).dump() << '\n';
    }
    return rep.pass && p2.holds ? 0 : 1;
}

struct SweepOpts {
    double aspect_min = 1.1;
    double aspect_max = 4.0;
    int steps = 10;
};

int run_sweep(const CommonOpts& opt, const SweepOpts& sweep) {
    if (sweep.steps < 1) throw ParseError("sweep: steps must be >= 1");
    if (!(sweep.aspect_min >= 1.0) || !(sweep.aspect_max >= sweep.aspect_min))
        throw ParseError("sweep: need 1 <= aspect-min <= aspect-max");

    const int level = opt.quad_level > 0 ? opt.quad_level : QuadratureRule::default_level(2);
    const QuadratureRule rule = QuadratureRule::build(2, level);

    OutputSink sink(opt.output);
    if (opt.format == "csv") sink.stream() << "aspect," << kChainHeader << '\n';

    bool all_pass = true;
    for (int i = 0; i < sweep.steps; ++i) {
        const double s = sweep.steps == 1
                             ? 0.0
                             : static_cast<double>(i) / static_cast<double>(sweep.steps - 1);
        const double aspect = sweep.aspect_min + s * (sweep.aspect_max - sweep.aspect_min);
        const ConvexBody body = ConvexBody::ellipsoid({aspect, 1.0});
        const PlanarChainReport rep = planar_chain_check(body, rule, opt.tol);
        const InradiusRootReport p2 = inradius_root_check(body, rule);
        all_pass = all_pass && rep.pass && p2.holds;
        if (opt.format == "csv") {
            chain_to_csv(sink.stream(), rep, p2, aspect);
        } else {
            json row = chain_to_json(rep, p2);
            row["aspect"] = aspect;
            sink.stream() << row.dump() << '\n';
        }
    }
    return all_pass ? 0 : 1;
}

void add_common(CLI::App* cmd, CommonOpts& opt, bool needs_body) {
    if (needs_body)
        cmd->add_option("body", opt.body_path, "path to a JSON body description")->required();
    cmd->add_option("--quad-level", opt.quad_level,
                    "quadrature level (0 = per-dimension default)");
    cmd->add_option("--format", opt.format, "output format: csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    cmd->add_option("--output", opt.output, "write output to this file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner polynomial engine: coefficients, roots, and root-location bounds"};
    app.require_subcommand(1);

    CommonOpts opt;
    SweepOpts sweep;

    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "volume-polynomial coefficients and mixed volumes");
    add_common(coeffs, opt, true);

    CLI::App* roots = app.add_subcommand("roots", "polynomial roots and stability verdict");
    add_common(roots, opt, true);
    roots->add_option("--cluster-tol", opt.cluster_tol, "root clustering tolerance floor");

    CLI::App* verify =
        app.add_subcommand("verify", "root bounds, log-concavity, and consistency checks");
    add_common(verify, opt, true);
    verify->add_option("--tol", opt.tol, "verification tolerance");

    CLI::App* chain = app.add_subcommand("chain", "planar root/radius chain (dimension 2)");
    add_common(chain, opt, true);
    chain->add_option("--tol", opt.tol, "strictness tolerance for the chain gaps");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "planar chain across an ellipse aspect-ratio family");
    add_common(sweep_cmd, opt, false);
    sweep_cmd->add_option("--tol", opt.tol, "strictness tolerance for the chain gaps");
    sweep_cmd->add_option("--aspect-min", sweep.aspect_min, "smallest aspect ratio");
    sweep_cmd->add_option("--aspect-max", sweep.aspect_max, "largest aspect ratio");
    sweep_cmd->add_option("--steps", sweep.steps, "number of aspect samples");

    try {
        app.parse(argc, argv);
        if (coeffs->parsed()) return run_coeffs(opt);
        if (roots->parsed()) return run_roots(opt);
        if (verify->parsed()) return run_verify(opt);
        if (chain->parsed()) return run_chain(opt);
        if (sweep_cmd->parsed()) return run_sweep(opt, sweep);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const SummandViolationError& e) {
        std::cerr << "summand violation: " << e.what() << " (margin " << fmt(e.margin())
                  << ")\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const InvalidBodyError& e) {
        std::cerr << "invalid body: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "invalid request: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}
