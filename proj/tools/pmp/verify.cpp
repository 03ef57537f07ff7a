#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "pmp/commands.hpp"
#include "pmp/pmp.hpp"

namespace pmp::cli {

namespace {

std::string describe(double error, double tolerance) {
    char buffer[96];
    std::snprintf(buffer, sizeof buffer, "max error %.3e (tolerance %.1e)", error, tolerance);
    return buffer;
}

CheckResult check(std::string name, double error, double tolerance) {
    return {std::move(name), error <= tolerance, describe(error, tolerance)};
}

double relative(Complex value, Complex reference) {
    return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

std::pair<Complex, Complex> separated_pair(std::mt19937_64& rng, double max_radius, double min_distance) {
    for (;;) {
        const Complex a = random_disk_point(rng, max_radius);
        const Complex b = random_disk_point(rng, max_radius);
        if (std::abs(a - b) >= min_distance) return {a, b};
    }
}

std::vector<CheckResult> kernel_suite(std::mt19937_64& rng) {
    std::vector<CheckResult> results;
    double c3_error = 0.0;
    double c2_error = 0.0;
    double c1_error = 0.0;
    double explicit_error = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const auto [a, b] = separated_pair(rng, 0.9, 0.05);
        for (int mu = 1; mu <= 2; ++mu) {
            for (int nu = 1; nu <= 2; ++nu) {
                const Complex closed = kTwoPiI * c3(a, b, mu, nu, 1.0);
                c3_error = std::max(c3_error, relative(mixed_kernel_integral(a, b, mu, nu, 1.0), closed));
            }
        }
        for (int l = 1; l <= 3; ++l) {
            for (int nu = 1; nu <= 3; ++nu) {
                const Complex closed = kTwoPiI * c2(a, b, l, nu, 1.0);
                c2_error = std::max(c2_error, std::abs(contour_kernel_integral(a, b, l, nu, 1.0, 256) - closed));
            }
        }
        for (int k = 1; k <= 3; ++k) {
            const Complex closed = kTwoPiI * (c1(a, b, k) + ipow(a - b, k - 1) * log_kernel(a, b, 1.0));
            c1_error = std::max(c1_error, relative(log_kernel_integral(a, b, k, 1.0), closed));
        }
        const std::pair<Complex (*)(Complex, Complex, double), std::pair<int, int>> table[] = {
            {explicit_kernels::c3_1_1, {1, 1}},
            {explicit_kernels::c3_1_2, {1, 2}},
            {explicit_kernels::c3_2_1, {2, 1}},
            {explicit_kernels::c3_2_2, {2, 2}}};
        for (const auto& [fn, index] : table) {
            const Complex general = c3(a, b, index.first, index.second, 1.0);
            explicit_error = std::max(explicit_error, std::abs(fn(a, b, 1.0) - general) / std::max(1e-300, std::abs(general)));
        }
    }
    results.push_back(check("c3 matches two-centre quadrature", c3_error, 1e-6));
    results.push_back(check("c2 matches contour quadrature", c2_error, 1e-10));
    results.push_back(check("c1 + log term matches two-centre quadrature", c1_error, 1e-6));
    results.push_back(check("explicit low-order kernels match c3", explicit_error, 1e-12));
    return results;
}

std::vector<CheckResult> operator_suite(std::mt19937_64& rng) {
    const DiskDomain disk(1.0);
    std::vector<CheckResult> results;

    double golden = 0.0;
    for (int l = 0; l <= 3; ++l) {
        const ScalarField f = ScalarField::from_polynomial(disk, PolynomialField::monomial(0, l));
        for (int trial = 0; trial < 3; ++trial) {
            const Complex z = random_disk_point(rng, 0.9);
            const Complex exact = ipow(std::conj(z), l + 1) / static_cast<double>(l + 1);
            golden = std::max(golden, std::abs(apply_T(f, z) - exact) / std::max(1e-300, std::abs(exact)));
        }
    }
    results.push_back(check("T(conj(z)^l) = conj(z)^(l+1)/(l+1)", golden, 1e-8));

    double identity = 0.0;
    {
        const PolynomialField p = random_polynomial(rng, 3);
        const ScalarField f = ScalarField::from_polynomial(disk, p);
        const ScalarField fbar_derivative = ScalarField::from_polynomial(disk, p.dbar());
        for (int trial = 0; trial < 3; ++trial) {
            const Complex z = random_disk_point(rng, 0.8);
            identity = std::max(identity, relative(apply_T(fbar_derivative, z) + apply_S(f, z), p(z)));
        }
    }
    results.push_back(check("T(dbar f) + S f = f", identity, 1e-8));

    double nested = 0.0;
    {
        const ScalarField f = ScalarField::from_polynomial(disk, random_polynomial(rng, 2));
        const Complex z = random_disk_point(rng, 0.7);
        for (const auto& [mu, nu] : {std::pair{1, 2}, std::pair{2, 1}}) {
            nested = std::max(nested, relative(apply_mixed(f, z, mu, nu), nested_apply(f, z, mixed_program(mu, nu))));
        }
    }
    results.push_back(check("closed-form T^mu Tbar^nu matches nested application", nested, 1e-5));

    double mirror = 0.0;
    {
        const PolynomialField p = random_polynomial(rng, 3);
        const ScalarField f = ScalarField::from_polynomial(disk, p);
        // The reflected field conj(f(conj z)) has coefficients conj(c_pq).
        PolynomialField reflected;
        for (int i = 0; i <= PolynomialField::kMaxDegree; ++i) {
            for (int j = 0; j <= PolynomialField::kMaxDegree; ++j) reflected.set_coefficient(i, j, std::conj(p.coefficient(i, j)));
        }
        const ScalarField g = ScalarField::from_polynomial(disk, reflected);
        const Complex z = random_disk_point(rng, 0.8);
        const Complex dual = apply_conjugate_dual(f, z, 2, 1);
        mirror = std::max(mirror, std::abs(dual - std::conj(apply_mixed(f.conjugated(), z, 2, 1))));
        mirror = std::max(mirror, std::abs(apply_mixed(g, std::conj(z), 2, 1) - std::conj(apply_mixed(f, z, 2, 1))));
    }
    results.push_back(check("conjugation and mirror symmetry", mirror, 1e-10));
    return results;
}

double relative_residual(const Solution& u, int mu, int nu, const ScalarField& rhs, std::span<const Complex> points) {
    const auto residual = fd_residual(u.evaluator(), mu, nu, rhs, points);
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        worst = std::max(worst, residual[k]);
        scale = std::max(scale, std::abs(rhs(points[k])));
    }
    return worst / std::max(scale, 1e-300);
}

std::vector<CheckResult> pde_suite(std::mt19937_64& rng) {
    const DiskDomain disk(1.0);
    std::vector<CheckResult> results;
    std::vector<Complex> points;
    for (int k = 0; k < 3; ++k) points.push_back(random_disk_point(rng, 0.6));

    auto random_holomorphic = [&rng](int degree) {
        std::uniform_real_distribution<double> c(-1.0, 1.0);
        std::vector<Complex> coefficients;
        for (int k = 0; k <= degree; ++k) {
            const double re = c(rng);
            const double im = c(rng);
            coefficients.emplace_back(re, im);
        }
        return HolomorphicPolynomial(std::move(coefficients));
    };

    for (const auto& [mu, nu, tolerance] : {std::tuple{1, 1, 1e-2}, std::tuple{2, 2, 5e-2}}) {
        SolutionSpec spec;
        spec.mu = mu;
        spec.nu = nu;
        spec.rhs = ScalarField::from_polynomial(disk, random_polynomial(rng, 2) + PolynomialField::constant(2.0));
        for (int j = 0; j < nu; ++j) spec.g_list.push_back(random_holomorphic(2));
        for (int i = 0; i < mu; ++i) spec.f_list.push_back(random_holomorphic(2));
        const double error = relative_residual(solve_pde(spec), mu, nu, *spec.rhs, points);
        results.push_back(check("finite-difference residual, mu=" + std::to_string(mu) + " nu=" + std::to_string(nu),
                                error, tolerance));
    }

    const ScalarField sixteen = ScalarField::constant(disk, 16.0);
    const Solution u = solve_biharmonic(sixteen, HolomorphicPolynomial::zero(), HolomorphicPolynomial::zero());
    // Delta^2 = 16 d^2 dbar^2, so d^2 dbar^2 u must equal A / 16 = 1.
    const double error = relative_residual(u, 2, 2, ScalarField::constant(disk, 1.0), points);
    results.push_back(check("biharmonic solution satisfies Delta^2 u = 16", error, 5e-2));
    return results;
}

std::vector<CheckResult> norm_suite(std::mt19937_64& rng) {
    const DiskDomain disk(1.0);
    std::vector<CheckResult> results;
    const double alphas[] = {0.25, 0.5, 0.75};
    for (int trial = 0; trial < 3; ++trial) {
        const double alpha = alphas[trial];
        std::uniform_int_distribution<int> order(1, 2);
        const int mu = order(rng);
        const int nu = order(rng);
        const ScalarField f = ScalarField::from_polynomial(disk, random_polynomial(rng, 3), alpha);
        const NormBoundResult r = check_norm_bound(f, mu, nu, alpha);
        char detail[128];
        std::snprintf(detail, sizeof detail, "alpha=%.2f mu=%d nu=%d lhs %.3e <= rhs %.3e", alpha, mu, nu, r.lhs,
                      r.rhs);
        results.push_back({"operator norm bound, field " + std::to_string(trial), r.holds, detail});
    }
    return results;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (suite == "kernels") return kernel_suite(rng);
    if (suite == "operators") return operator_suite(rng);
    if (suite == "pde") return pde_suite(rng);
    if (suite == "norms") return norm_suite(rng);
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace pmp::cli
