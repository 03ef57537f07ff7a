/// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
/// every gating criterion passes. All random data comes from fixed seeds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pmp/pmp.hpp"

namespace {

using namespace pmp;

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string format(const char* fmt, auto... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, fmt, args...);
    return buffer;
}

double relative(Complex value, Complex reference) {
    return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

double strict_relative(Complex value, Complex reference) {
    return std::abs(value - reference) / std::max(1e-300, std::abs(reference));
}

PolynomialField reflect(const PolynomialField& p) {
    PolynomialField r;
    for (int i = 0; i <= PolynomialField::kMaxDegree; ++i) {
        for (int j = 0; j <= PolynomialField::kMaxDegree; ++j) r.set_coefficient(i, j, std::conj(p.coefficient(i, j)));
    }
    return r;
}

HolomorphicPolynomial random_holomorphic(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    std::vector<Complex> coefficients;
    for (int k = 0; k <= degree; ++k) {
        const double re = c(rng);
        const double im = c(rng);
        coefficients.emplace_back(re, im);
    }
    return HolomorphicPolynomial(std::move(coefficients));
}

const DiskDomain kUnit(1.0);

Outcome kernel_oracle() {
    std::mt19937_64 rng(1001);
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    int pairs = 0;
    while (pairs < 20) {
        const Complex a = random_disk_point(rng, 0.95);
        const Complex b = random_disk_point(rng, 0.95);
        if (std::abs(a - b) < 0.05) continue;
        ++pairs;
        for (int mu = 1; mu <= 3; ++mu) {
            for (int nu = 1; nu <= 3; ++nu) {
                const Complex closed = kTwoPiI * c3(a, b, mu, nu, 1.0);
                const Complex quadrature = mixed_kernel_integral(a, b, mu, nu, 1.0, {64, 128});
                worst = std::max(worst, relative(closed, quadrature));
            }
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst <= 1e-4 && seconds < 120.0,
            format("20 pairs x 9 orders, max rel error %.2e (tol 1e-4), %.1f s (limit 120 s)", worst, seconds)};
}

Outcome contour_lemma() {
    std::mt19937_64 rng(1002);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Complex a = random_disk_point(rng, 0.8);
        const Complex b = random_disk_point(rng, 0.8);
        for (int l = 1; l <= 4; ++l) {
            for (int nu = 1; nu <= 4; ++nu) {
                worst = std::max(worst,
                                 std::abs(kTwoPiI * c2(a, b, l, nu, 1.0) - contour_kernel_integral(a, b, l, nu, 1.0, 256)));
            }
        }
    }
    return {worst <= 1e-10, format("10 pairs, l, nu <= 4, max abs error %.2e (tol 1e-10)", worst)};
}

Outcome exact_golden() {
    std::mt19937_64 rng(1003);
    double worst = 0.0;
    std::vector<Complex> points;
    for (int k = 0; k < 10; ++k) points.push_back(random_disk_point(rng, 0.95));
    for (int l = 0; l <= 5; ++l) {
        const ScalarField f = ScalarField::from_polynomial(kUnit, PolynomialField::monomial(0, l));
        for (const Complex z : points) {
            const Complex exact = ipow(std::conj(z), l + 1) / static_cast<double>(l + 1);
            worst = std::max(worst, strict_relative(apply_T(f, z), exact));
        }
    }
    return {worst <= 1e-8, format("l = 0..5 at 10 points, max rel error %.2e (tol 1e-8)", worst)};
}

Outcome closed_vs_nested() {
    std::mt19937_64 rng(1004);
    double worst = 0.0;
    int cases = 0;
    for (int trial = 0; trial < 2; ++trial) {
        const ScalarField f = ScalarField::from_polynomial(kUnit, random_polynomial(rng, 3));
        const Complex z = random_disk_point(rng, 0.8);
        for (int k = 1; k <= 3; ++k) {
            const std::vector<NestedOp> t(k, NestedOp::T);
            const std::vector<NestedOp> tb(k, NestedOp::Tbar);
            worst = std::max(worst, relative(apply_T_power(f, z, k), nested_apply(f, z, t)));
            worst = std::max(worst, relative(apply_Tbar_power(f, z, k), nested_apply(f, z, tb)));
            cases += 2;
        }
        for (int mu = 1; mu <= 3; ++mu) {
            for (int nu = 1; mu + nu <= 4; ++nu) {
                worst = std::max(worst, relative(apply_mixed(f, z, mu, nu), nested_apply(f, z, mixed_program(mu, nu))));
                ++cases;
            }
        }
    }
    return {worst <= 1e-5, format("%d operator/field cases, max rel error %.2e (tol 1e-5)", cases, worst)};
}

Outcome inversion() {
    std::mt19937_64 rng(1005);
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        const PolynomialField p = random_polynomial(rng, 3);
        const ScalarField f = ScalarField::from_polynomial(kUnit, p);
        const PointFunction Tf = [&f](Complex w) { return apply_T(f, w); };
        for (int k = 0; k < 3; ++k) {
            const Complex z = random_disk_point(rng, 0.7);
            const Complex derivative = wirtinger_derivative(Tf, z, 0, 1, default_fd_step(1, 1.0));
            worst = std::max(worst, relative(derivative, p(z)));
        }
    }
    return {worst <= 1e-3, format("4 fields x 3 points, max rel error %.2e (tol 1e-3)", worst)};
}

Outcome interior_identity() {
    std::mt19937_64 rng(1006);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const PolynomialField p = random_polynomial(rng, 4);
        const ScalarField f = ScalarField::from_polynomial(kUnit, p);
        const ScalarField dbar_f = ScalarField::from_polynomial(kUnit, p.dbar());
        for (int k = 0; k < 3; ++k) {
            const Complex z = random_disk_point(rng, 0.9);
            worst = std::max(worst, relative(apply_T(dbar_f, z) + apply_S(f, z), p(z)));
        }
    }
    return {worst <= 1e-8, format("5 fields x 3 points, max error %.2e (tol 1e-8)", worst)};
}

double residual_ratio(const std::function<Complex(Complex)>& u, int mu, int nu, const ScalarField& rhs,
                      std::span<const Complex> points) {
    const auto residual = fd_residual(u, mu, nu, rhs, points);
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        worst = std::max(worst, residual[k]);
        scale = std::max(scale, std::abs(rhs(points[k])));
    }
    return worst / std::max(scale, 1e-300);
}

Outcome pde_residual() {
    std::mt19937_64 rng(1007);
    std::vector<Complex> points;
    for (int k = 0; k < 4; ++k) points.push_back(random_disk_point(rng, 0.6));
    const ScalarField rhs =
        ScalarField::from_polynomial(kUnit, random_polynomial(rng, 2) + PolynomialField::constant(Complex{1.5, 0.5}));

    double first = 0.0;
    double second = 0.0;
    std::vector<double> trend;
    for (const auto& [mu, nu] : {std::pair{1, 1}, std::pair{2, 2}}) {
        SolutionSpec spec;
        spec.mu = mu;
        spec.nu = nu;
        spec.rhs = rhs;
        for (int j = 0; j < nu; ++j) spec.g_list.push_back(random_holomorphic(rng, 2));
        for (int i = 0; i < mu; ++i) spec.f_list.push_back(random_holomorphic(rng, 2));
        const double r = residual_ratio(solve_pde(spec).evaluator(), mu, nu, rhs, points);
        (mu == 1 ? first : second) = r;
        if (mu == 2) {
            for (const Resolution res : {Resolution{4, 8}, Resolution{8, 16}, Resolution{16, 32}}) {
                OperatorOptions options;
                options.area = res;
                trend.push_back(residual_ratio(solve_pde(spec, options).evaluator(), mu, nu, rhs, points));
            }
        }
    }

    // Delta^2 T^2 Tbar^2 A = 16 A, i.e. d^2 dbar^2 T^2 Tbar^2 A = A.
    const auto biharmonic = [&rhs](Complex z) { return apply_mixed(rhs, z, 2, 2); };
    const double bih = residual_ratio(biharmonic, 2, 2, rhs, points);

    // Residual must halve under each doubling until it reaches the finite-difference floor.
    constexpr double kFloor = 1e-6;
    bool converges = true;
    for (std::size_t k = 1; k < trend.size(); ++k) converges = converges && trend[k] <= std::max(trend[k - 1] / 2.0, kFloor);

    const bool passed = first <= 1e-2 && second <= 5e-2 && bih <= 5e-2 && converges;
    return {passed, format("mu=nu=1 %.2e (tol 1e-2); mu=nu=2 %.2e, Delta^2 identity %.2e (tol 5e-2); "
                           "trend at (4,8)/(8,16)/(16,32): %.2e, %.2e, %.2e (halving or below %.0e)",
                           first, second, bih, trend[0], trend[1], trend[2], kFloor)};
}

Outcome polydisc_separable() {
    std::mt19937_64 rng(1008);
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const PolynomialField p = random_polynomial(rng, 2);
        const PolynomialField q = random_polynomial(rng, 2);
        const ScalarField f(PolydiscDomain(2, 1.0), [&](std::span<const Complex> z) { return p(z[0]) * q(z[1]); });
        const Complex z[] = {random_disk_point(rng, 0.8), random_disk_point(rng, 0.8)};
        std::uniform_int_distribution<int> order(1, 2);
        const MultiIndex mu{order(rng), order(rng)};
        const MultiIndex nu{order(rng), order(rng)};
        const Complex product = apply_mixed(ScalarField::from_polynomial(kUnit, p), z[0], mu[0], nu[0]) *
                                apply_mixed(ScalarField::from_polynomial(kUnit, q), z[1], mu[1], nu[1]);
        worst = std::max(worst, relative(apply_polydisc(f, z, mu, nu), product));
    }
    return {worst <= 1e-3, format("3 separable fields, n = 2, max rel error %.2e (tol 1e-3)", worst)};
}

Outcome conjugation_symmetry() {
    std::mt19937_64 rng(1009);
    double dual = 0.0;
    double mirror = 0.0;
    double nested = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const PolynomialField p = random_polynomial(rng, 3);
        const ScalarField f = ScalarField::from_polynomial(kUnit, p);
        const ScalarField reflected = ScalarField::from_polynomial(kUnit, reflect(p));
        const Complex z = random_disk_point(rng, 0.8);
        for (const auto& [mu, nu] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
            const Complex value = apply_mixed(f, z, mu, nu);
            dual = std::max(dual, std::abs(apply_conjugate_dual(f.conjugated(), z, mu, nu) - std::conj(value)));
            // The quadrature centred at conj(z) is the mirror image of the one centred at z.
            mirror = std::max(mirror, std::abs(apply_mixed(reflected, std::conj(z), mu, nu) - std::conj(value)));
            if (trial == 0 && mu + nu <= 3) {
                // Tbar^mu T^nu f by literal composition, outermost operator first.
                std::vector<NestedOp> program(mu, NestedOp::Tbar);
                program.insert(program.end(), nu, NestedOp::T);
                nested = std::max(nested, relative(apply_conjugate_dual(f, z, mu, nu), nested_apply(f, z, program)));
            }
        }
    }
    return {dual <= 1e-10 && mirror <= 1e-10 && nested <= 1e-5,
            format("dual %.2e, mirror %.2e (tol 1e-10); dual vs nested composition %.2e (tol 1e-5)", dual, mirror,
                   nested)};
}

Outcome explicit_kernels_table(bool uncorrected_form) {
    std::mt19937_64 rng(1010);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const double R = k % 2 == 0 ? 1.0 : 2.0;
        const Complex z = random_disk_point(rng, 0.95 * R);
        const Complex eta = random_disk_point(rng, 0.95 * R);
        if (uncorrected_form) {
            worst = std::max(worst, strict_relative(uncorrected::table_1_1(z, eta, R), uncorrected::c3(z, eta, 1, 1, R)));
            worst = std::max(worst, strict_relative(uncorrected::table_1_2(z, eta, R), uncorrected::c3(z, eta, 1, 2, R)));
            worst = std::max(worst, strict_relative(uncorrected::table_2_1(z, eta, R), uncorrected::c3(z, eta, 2, 1, R)));
            worst = std::max(worst, strict_relative(uncorrected::table_2_2(z, eta, R), uncorrected::c3(z, eta, 2, 2, R)));
        } else {
            worst = std::max(worst, strict_relative(explicit_kernels::c3_1_1(z, eta, R), c3(z, eta, 1, 1, R)));
            worst = std::max(worst, strict_relative(explicit_kernels::c3_1_2(z, eta, R), c3(z, eta, 1, 2, R)));
            worst = std::max(worst, strict_relative(explicit_kernels::c3_2_1(z, eta, R), c3(z, eta, 2, 1, R)));
            worst = std::max(worst, strict_relative(explicit_kernels::c3_2_2(z, eta, R), c3(z, eta, 2, 2, R)));
        }
    }
    return {worst <= 1e-12, format("4 kernels at 50 points, max rel error %.2e (tol 1e-12)", worst)};
}

Outcome norm_bound() {
    std::mt19937_64 rng(1011);
    const double alphas[] = {0.25, 0.5, 0.75};
    int held = 0;
    double tightest = 0.0;
    std::string failures;
    for (int trial = 0; trial < 10; ++trial) {
        const double alpha = alphas[trial % 3];
        std::uniform_int_distribution<int> order(1, 2);
        const int mu = order(rng);
        const int nu = order(rng);
        const ScalarField f = ScalarField::from_polynomial(kUnit, random_polynomial(rng, 3), alpha);
        const NormBoundResult r = check_norm_bound(f, mu, nu, alpha);
        tightest = std::max(tightest, r.lhs / r.rhs);
        if (r.holds) {
            ++held;
        } else {
            failures += format(" [field %d: lhs %.3e > rhs %.3e]", trial, r.lhs, r.rhs);
        }
    }
    return {held == 10, format("%d/10 fields satisfy the bound, largest lhs/rhs %.2e%s", held, tightest, failures.c_str())};
}

struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
    bool gating = true;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1", "kernel matches two-centre quadrature oracle", kernel_oracle},
        {"2", "contour kernel matches boundary quadrature", contour_lemma},
        {"3", "T of conj(z)^l matches exact antiderivative", exact_golden},
        {"4", "closed-form powers match nested application", closed_vs_nested},
        {"5", "dbar inverts T", inversion},
        {"6", "T dbar f + S f = f", interior_identity},
        {"7", "PDE residual and convergence", pde_residual},
        {"8", "polydisc operator factorises on separable fields", polydisc_separable},
        {"9", "conjugation and mirror symmetry", conjugation_symmetry},
        {"10a", "explicit low-order kernels match c3", [] { return explicit_kernels_table(false); }},
        {"10b", "uncorrected low-order table matches uncorrected general kernel (informational)",
         [] { return explicit_kernels_table(true); }, false},
        {"11", "operator norm bound", norm_bound},
    };

    bool all = true;
    for (const auto& c : criteria) {
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const char* status = outcome.passed ? "PASS" : (c.gating ? "FAIL" : "INFO-FAIL");
        std::printf("%s %s %s: %s\n", status, c.id, c.name, outcome.detail.c_str());
        std::fflush(stdout);
        if (c.gating) all = all && outcome.passed;
    }
    std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILED");
    return all ? 0 : 1;
}
