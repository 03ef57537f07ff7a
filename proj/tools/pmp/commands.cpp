#include "pmp/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmp/pmp.hpp"

namespace pmp::cli {

namespace {

/// Thrown for user mistakes that CLI11 cannot see (inconsistent flag combinations).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == separator) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

std::vector<Complex> parse_point_list(const std::string& text) {
    std::vector<Complex> points;
    for (const auto& part : split(text, ',')) points.push_back(parse_complex(part));
    return points;
}

MultiIndex parse_index_list(const std::string& text) {
    std::vector<int> entries;
    for (const auto& part : split(text, ',')) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            entries.push_back(value);
        } catch (const std::exception&) {
            throw UsageError("'" + part + "' is not an integer order");
        }
    }
    return MultiIndex(std::move(entries));
}

int single_index(const std::string& text, const char* name) {
    const MultiIndex index = parse_index_list(text);
    if (index.size() != 1) throw UsageError(std::string(name) + " must be a single integer here");
    return index[0];
}

/// Quadrature and domain settings shared by every numerical command.
struct CommonArgs {
    std::string config_path;
    std::optional<double> radius;
    std::optional<int> n_radial;
    std::optional<int> n_angular;
    std::optional<int> contour_n;

    void add_to(CLI::App* app) {
        app->add_option("--config", config_path, "RunConfig JSON file");
        app->add_option("--R", radius, "Disk radius");
        app->add_option("--nr", n_radial, "Radial quadrature nodes per ray");
        app->add_option("--ntheta", n_angular, "Rays of the area rule");
        app->add_option("--contour-n", contour_n, "Nodes of the boundary rule");
    }

    RunConfig resolve() const {
        RunConfig config = config_path.empty() ? RunConfig{} : RunConfig::load(config_path);
        if (radius) config.radius = *radius;
        if (n_radial) config.n_radial = *n_radial;
        if (n_angular) config.n_angular = *n_angular;
        if (contour_n) config.contour_n = *contour_n;
        config.validate();
        return config;
    }
};

struct KernelArgs {
    std::string kind = "c3";
    std::string mu = "1";
    std::string nu = "1";
    std::string a = "0";
    std::string b = "0.5";
    int k = 1;
    int l = 1;
    double radius = 1.0;
    double epsilon = kCoincidenceEpsilon;
};

Complex evaluate_kernel(const KernelArgs& args) {
    const Complex a = parse_complex(args.a);
    const Complex b = parse_complex(args.b);
    const double R = args.radius;
    if (args.kind == "c1") return c1(a, b, args.k);
    if (args.kind == "c2") return c2(a, b, args.l, single_index(args.nu, "--nu"), R);
    if (args.kind == "c3") return c3(a, b, single_index(args.mu, "--mu"), single_index(args.nu, "--nu"), R, args.epsilon);
    if (args.kind == "c8") return c8(parse_index_list(args.mu), parse_index_list(args.nu));
    if (args.kind == "log") return log_kernel(a, b, R);
    if (args.kind == "g") return g_diag(a, b, args.l, R, args.epsilon);
    if (args.kind == "gbar") return g_diag_bar(a, b, args.l, R, args.epsilon);
    if (args.kind == "gmixed") {
        return g_mixed(a, b, single_index(args.mu, "--mu"), single_index(args.nu, "--nu"), R, args.epsilon);
    }
    throw UsageError("unknown kernel kind '" + args.kind + "'");
}

struct OpArgs {
    std::string op = "T";
    std::string f;
    std::string z = "0";
    int k = 1;
    std::string mu = "1";
    std::string nu = "1";
    int factors = 1;
    CommonArgs common;

    void add_to(CLI::App* app, bool with_point) {
        app->add_option("--op", op, "T, Tbar, S, Sbar, 2T, 2Tbar, Tpow, Tbarpow, mixed, dual or polydisc")
            ->capture_default_str();
        app->add_option("--f", f, "Field expression in z, zbar (z1, z2bar, ... on a polydisc)")->required();
        if (with_point) app->add_option("--z", z, "Evaluation point (comma-separated list on a polydisc)");
        app->add_option("--k", k, "Power for Tpow / Tbarpow")->capture_default_str();
        app->add_option("--mu", mu, "T order (comma list for polydisc)")->capture_default_str();
        app->add_option("--nu", nu, "Tbar order (comma list for polydisc)")->capture_default_str();
        app->add_option("--n", factors, "Polydisc factor count")->capture_default_str();
        common.add_to(app);
    }
};

/// Pointwise evaluator for a disk operator.
std::function<Complex(Complex)> disk_operator(const OpArgs& args, const RunConfig& config) {
    if (args.op == "polydisc") throw UsageError("polydisc operators cannot be evaluated on a disk grid");
    if (args.factors != 1) throw UsageError("--n applies only to --op polydisc");
    const ScalarField f = make_field(args.f, config.radius);
    const OperatorOptions options = config.operator_options();
    const std::string& op = args.op;
    if (op == "T") return [=](Complex z) { return apply_T(f, z, options); };
    if (op == "Tbar") return [=](Complex z) { return apply_Tbar(f, z, options); };
    if (op == "S") return [=](Complex z) { return apply_S(f, z, options); };
    if (op == "Sbar") return [=](Complex z) { return apply_Sbar(f, z, options); };
    if (op == "2T") return [=](Complex z) { return apply_2T(f, z, options); };
    if (op == "2Tbar") return [=](Complex z) { return apply_2Tbar(f, z, options); };
    const int k = args.k;
    if (op == "Tpow") return [=](Complex z) { return apply_T_power(f, z, k, options); };
    if (op == "Tbarpow") return [=](Complex z) { return apply_Tbar_power(f, z, k, options); };
    const int mu = single_index(args.mu, "--mu");
    const int nu = single_index(args.nu, "--nu");
    if (op == "mixed") return [=](Complex z) { return apply_mixed(f, z, mu, nu, options); };
    if (op == "dual") return [=](Complex z) { return apply_conjugate_dual(f, z, mu, nu, options); };
    throw UsageError("unknown operator '" + op + "'");
}

Complex evaluate_operator(const OpArgs& args) {
    const RunConfig config = args.common.resolve();
    if (args.op == "polydisc") {
        const ScalarField f = make_field(args.f, config.radius, args.factors);
        const auto z = parse_point_list(args.z);
        return apply_polydisc(f, z, parse_index_list(args.mu), parse_index_list(args.nu), config.operator_options());
    }
    return disk_operator(args, config)(parse_complex(args.z));
}

struct SolveArgs {
    int mu = 1;
    int nu = 1;
    std::string rhs = "0";
    std::string g;
    std::string f;
    bool biharmonic = false;
    std::string h1 = "0";
    std::string h2 = "0";
    std::string z = "0";
    CommonArgs common;

    void add_to(CLI::App* app, bool with_point) {
        app->add_option("--mu", mu, "Order of d")->capture_default_str();
        app->add_option("--nu", nu, "Order of dbar")->capture_default_str();
        app->add_option("--A", rhs, "Right-hand side expression")->capture_default_str();
        app->add_option("--g", g, "nu holomorphic polynomials g_0;...;g_{nu-1} (default all zero)");
        app->add_option("--f", f, "mu holomorphic polynomials f_0;...;f_{mu-1} (default all zero)");
        app->add_flag("--biharmonic", biharmonic, "Solve Delta^2 u = A with real A");
        app->add_option("--h1", h1, "Holomorphic h1 (biharmonic: u includes Re(|z|^2 h1))")->capture_default_str();
        app->add_option("--h2", h2, "Holomorphic h2 (biharmonic: u includes Re h2)")->capture_default_str();
        if (with_point) app->add_option("--z", z, "Evaluation point")->capture_default_str();
        common.add_to(app);
    }
};

std::vector<HolomorphicPolynomial> parse_holomorphic_list(const std::string& text, int count, const char* name) {
    if (text.empty()) return std::vector<HolomorphicPolynomial>(count, HolomorphicPolynomial::zero());
    std::vector<HolomorphicPolynomial> list;
    for (const auto& part : split(text, ';')) list.push_back(make_holomorphic(part));
    if (static_cast<int>(list.size()) != count) {
        throw UsageError(std::string(name) + " needs exactly " + std::to_string(count) + " ';'-separated entries");
    }
    return list;
}

Solution build_solution(const SolveArgs& args, const RunConfig& config) {
    const OperatorOptions options = config.operator_options();
    const ScalarField rhs = make_field(args.rhs, config.radius);
    if (args.biharmonic) return solve_biharmonic(rhs, make_holomorphic(args.h1), make_holomorphic(args.h2), options);
    SolutionSpec spec;
    spec.mu = args.mu;
    spec.nu = args.nu;
    spec.domain = DiskDomain(config.radius);
    spec.rhs = rhs;
    spec.g_list = parse_holomorphic_list(args.g, args.nu, "--g");
    spec.f_list = parse_holomorphic_list(args.f, args.mu, "--f");
    return solve_pde(spec, options);
}

struct GridArgs {
    std::string kind = "cartesian";
    int rows = 11;
    int cols = 11;
    double extent = 0.9;
    std::string format = "csv";
    std::string output;

    void add_to(CLI::App* app) {
        app->add_option("--grid", kind, "cartesian or polar")->capture_default_str();
        app->add_option("--rows", rows, "Grid rows")->capture_default_str();
        app->add_option("--cols", cols, "Grid columns")->capture_default_str();
        app->add_option("--extent", extent, "Fraction of R covered by the grid")->capture_default_str();
        app->add_option("--format", format, "csv or json")->capture_default_str();
        app->add_option("--output", output, "Output file (default: config output, else stdout)");
    }

    GridGeometry geometry(double radius) const {
        GridGeometry g;
        g.kind = parse_grid_kind(kind);
        g.rows = rows;
        g.cols = cols;
        g.radius = radius;
        g.extent = extent;
        g.validate();
        return g;
    }
};

void write_grid(const GridField& field, const GridArgs& grid, const RunConfig& config,
                const nlohmann::ordered_json& command, std::ostream& out) {
    std::ostringstream buffer;
    if (grid.format == "csv") {
        field.write_csv(buffer);
    } else if (grid.format == "json") {
        nlohmann::ordered_json doc;
        doc["config"] = nlohmann::ordered_json::parse(config.to_json());
        doc["command"] = command;
        doc["grid"] = {{"kind", grid_kind_name(field.geometry.kind)},
                       {"rows", field.geometry.rows},
                       {"cols", field.geometry.cols},
                       {"radius", field.geometry.radius},
                       {"extent", field.geometry.extent}};
        auto samples = nlohmann::ordered_json::array();
        const auto points = field.points();
        for (std::size_t k = 0; k < points.size(); ++k) {
            samples.push_back({{"x", points[k].real()},
                               {"y", points[k].imag()},
                               {"re", field.values[k].real()},
                               {"im", field.values[k].imag()}});
        }
        doc["samples"] = std::move(samples);
        buffer << doc.dump(2) << '\n';
    } else {
        throw UsageError("unknown format '" + grid.format + "' (expected csv or json)");
    }

    const std::string path = grid.output.empty() ? config.output : grid.output;
    if (path.empty()) {
        out << buffer.str();
        return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot open output file '" + path + "'");
    file << buffer.str();
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
        dynamic_cast<const DomainError*>(&e) || dynamic_cast<const ResolutionTooLow*>(&e) ||
        dynamic_cast<const DimensionCap*>(&e) || dynamic_cast<const DepthCap*>(&e) ||
        dynamic_cast<const NonRealRHS*>(&e)) {
        return kUsageError;
    }
    return kNumericFailure;
}

}  // namespace

std::string format_complex(double re, double im) {
    char buffer[64];
    if (re == 0.0) re = 0.0;  // drop the sign of negative zero
    if (im == 0.0) {
        std::snprintf(buffer, sizeof buffer, "%.15g+0i", re);
    } else {
        std::snprintf(buffer, sizeof buffer, "%.15g%+.15gi", re, im);
    }
    return buffer;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"High-order Cauchy-Pompeiu operators on the disk and polydisc", "pmp"};
    app.require_subcommand(1);

    auto* kernel = app.add_subcommand("kernel", "Closed-form kernels");
    kernel->require_subcommand(1);
    auto* kernel_eval = kernel->add_subcommand("eval", "Evaluate one kernel value");
    KernelArgs kernel_args;
    kernel_eval->add_option("--kind", kernel_args.kind, "c1, c2, c3, c8, log, g, gbar or gmixed")
        ->capture_default_str();
    kernel_eval->add_option("--mu", kernel_args.mu, "mu (comma list for c8)")->capture_default_str();
    kernel_eval->add_option("--nu", kernel_args.nu, "nu (comma list for c8)")->capture_default_str();
    kernel_eval->add_option("--a", kernel_args.a, "Target point a (or z)")->capture_default_str();
    kernel_eval->add_option("--b", kernel_args.b, "Source point b (or zeta)")->capture_default_str();
    kernel_eval->add_option("--k", kernel_args.k, "Index k of c1")->capture_default_str();
    kernel_eval->add_option("--l", kernel_args.l, "Index l of c2, g, gbar")->capture_default_str();
    kernel_eval->add_option("--R", kernel_args.radius, "Disk radius")->capture_default_str();
    kernel_eval->add_option("--epsilon", kernel_args.epsilon, "Coincidence threshold relative to R");

    auto* op = app.add_subcommand("op", "Operators");
    op->require_subcommand(1);
    auto* op_apply = op->add_subcommand("apply", "Apply an operator at one point");
    OpArgs op_args;
    op_args.add_to(op_apply, true);

    auto* solve = app.add_subcommand("solve", "Evaluate a solution of d^mu dbar^nu u = A at one point");
    SolveArgs solve_args;
    solve_args.add_to(solve, true);

    auto* verify = app.add_subcommand("verify", "Run a seeded verification suite");
    std::string suite;
    std::uint64_t seed = 0;
    verify->add_option("--suite", suite, "kernels, operators, pde or norms")
        ->required()
        ->check(CLI::IsMember({"kernels", "operators", "pde", "norms"}));
    verify->add_option("--seed", seed, "Seed of the random test data")->capture_default_str();

    auto* export_cmd = app.add_subcommand("export", "Sample a field, operator or solution on a grid");
    export_cmd->require_subcommand(1);
    auto* export_field = export_cmd->add_subcommand("field", "Sample a field expression");
    std::string field_expr;
    CommonArgs field_common;
    GridArgs field_grid;
    export_field->add_option("--f", field_expr, "Field expression")->required();
    field_common.add_to(export_field);
    field_grid.add_to(export_field);
    auto* export_op = export_cmd->add_subcommand("op", "Sample an operator output");
    OpArgs export_op_args;
    GridArgs op_grid;
    export_op_args.add_to(export_op, false);
    op_grid.add_to(export_op);
    auto* export_solve = export_cmd->add_subcommand("solve", "Sample a PDE solution");
    SolveArgs export_solve_args;
    GridArgs solve_grid;
    export_solve_args.add_to(export_solve, false);
    solve_grid.add_to(export_solve);

    std::vector<std::string> argv_storage{"pmp"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (kernel_eval->parsed()) {
            const Complex v = evaluate_kernel(kernel_args);
            out << format_complex(v.real(), v.imag()) << '\n';
        } else if (op_apply->parsed()) {
            const Complex v = evaluate_operator(op_args);
            out << format_complex(v.real(), v.imag()) << '\n';
        } else if (solve->parsed()) {
            const RunConfig config = solve_args.common.resolve();
            const Complex v = build_solution(solve_args, config)(parse_complex(solve_args.z));
            out << format_complex(v.real(), v.imag()) << '\n';
        } else if (verify->parsed()) {
            const auto results = run_suite(suite, seed);
            bool all = true;
            for (const auto& r : results) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
                all = all && r.passed;
            }
            out << (all ? "suite " + suite + ": all properties hold\n" : "suite " + suite + ": FAILED\n");
            return all ? kSuccess : kNumericFailure;
        } else if (export_field->parsed()) {
            const RunConfig config = field_common.resolve();
            const ScalarField f = make_field(field_expr, config.radius);
            const GridField grid = evaluate_grid(field_grid.geometry(config.radius), [&](Complex z) { return f(z); });
            write_grid(grid, field_grid, config, {{"export", "field"}, {"f", field_expr}}, out);
        } else if (export_op->parsed()) {
            const RunConfig config = export_op_args.common.resolve();
            const auto fn = disk_operator(export_op_args, config);
            const GridField grid = evaluate_grid(op_grid.geometry(config.radius), fn);
            write_grid(grid, op_grid, config,
                       {{"export", "op"},
                        {"op", export_op_args.op},
                        {"f", export_op_args.f},
                        {"k", export_op_args.k},
                        {"mu", export_op_args.mu},
                        {"nu", export_op_args.nu}},
                       out);
        } else if (export_solve->parsed()) {
            const RunConfig config = export_solve_args.common.resolve();
            const Solution u = build_solution(export_solve_args, config);
            const GridField grid = u.evaluate(solve_grid.geometry(config.radius));
            write_grid(grid, solve_grid, config,
                       {{"export", "solve"},
                        {"mu", export_solve_args.mu},
                        {"nu", export_solve_args.nu},
                        {"A", export_solve_args.rhs},
                        {"g", export_solve_args.g},
                        {"f", export_solve_args.f},
                        {"biharmonic", export_solve_args.biharmonic},
                        {"h1", export_solve_args.h1},
                        {"h2", export_solve_args.h2}},
                       out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kSuccess;
}

}  // namespace pmp::cli
