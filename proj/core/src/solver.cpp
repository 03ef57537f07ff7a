#include "pmp/solver.hpp"

#include <cmath>
#include <string>

#include "pmp/errors.hpp"
#include "pmp/kernels.hpp"
#include "pmp/parallel.hpp"

namespace pmp {

namespace {

constexpr double kRealTolerance = 1e-12;

/// Integrand of the free-function and right-hand-side groups at a single
/// source point; shared by solve_pde and solve_homogeneous.
struct KernelSum {
    const SolutionSpec* spec;
    bool include_rhs;
    double epsilon;

    Complex operator()(Complex z, Complex zeta) const {
        const double radius = spec->domain.radius();
        const int mu = spec->mu;
        const int nu = spec->nu;
        Complex total{};
        for (int j = 1; j < nu; ++j) total += g_diag(z, zeta, j, radius, epsilon) * spec->g_list[j](zeta);
        total += g_diag(z, zeta, nu, radius, epsilon) * std::conj(spec->f_list[0](zeta));
        for (int i = 1; i < mu; ++i) total += g_mixed(z, zeta, nu, i, radius, epsilon) * std::conj(spec->f_list[i](zeta));
        if (include_rhs) total += g_mixed(z, zeta, nu, mu, radius, epsilon) * (*spec->rhs)(zeta);
        return total;
    }
};

Solution assemble(const SolutionSpec& spec, const OperatorOptions& options, bool include_rhs) {
    spec.validate();
    options.validate();
    auto shared = std::make_shared<const SolutionSpec>(spec);
    return Solution([shared, options, include_rhs](Complex z) {
        const SolutionSpec& s = *shared;
        s.domain.require_inside(z, "solution evaluation point");
        const KernelSum kernel{&s, include_rhs && s.rhs.has_value(), options.epsilon};
        const AreaRule rule = build_area_rule(s.domain, z, options.area);
        return s.g_list[0](z) + integrate(rule, [&](Complex zeta) { return kernel(z, zeta); });
    });
}

}  // namespace

void SolutionSpec::validate() const {
    check_order(mu, "mu");
    check_order(nu, "nu");
    if (static_cast<int>(g_list.size()) != nu) {
        throw DomainError("expected " + std::to_string(nu) + " g functions, got " + std::to_string(g_list.size()));
    }
    if (static_cast<int>(f_list.size()) != mu) {
        throw DomainError("expected " + std::to_string(mu) + " f functions, got " + std::to_string(f_list.size()));
    }
    if (rhs) {
        if (rhs->factors() != 1) throw DomainError("right-hand side must be a disk field");
        if (rhs->radius() != domain.radius()) throw DomainError("right-hand side radius differs from the domain radius");
    }
}

std::vector<Complex> Solution::evaluate(std::span<const Complex> points) const {
    std::vector<Complex> values(points.size());
    parallel_for(points.size(), [&](std::size_t k) { values[k] = evaluator_(points[k]); });
    return values;
}

GridField Solution::evaluate(const GridGeometry& grid) const { return evaluate_grid(grid, evaluator_); }

Solution solve_homogeneous(const SolutionSpec& spec, const OperatorOptions& options) {
    return assemble(spec, options, false);
}

Solution solve_pde(const SolutionSpec& spec, const OperatorOptions& options) { return assemble(spec, options, true); }

Solution solve_biharmonic(const ScalarField& rhs, const HolomorphicPolynomial& h1, const HolomorphicPolynomial& h2,
                          const OperatorOptions& options) {
    if (rhs.factors() != 1) throw DomainError("biharmonic right-hand side must be a disk field");
    options.validate();
    const DiskDomain domain = rhs.disk();
    const AreaRule probe = build_area_rule(domain, Complex{}, options.area);
    for (const Complex& node : probe.nodes()) {
        if (std::abs(rhs(node).imag()) > kRealTolerance) throw NonRealRHS("biharmonic right-hand side is not real");
    }

    const Complex prefactor = 1.0 / (16.0 * kTwoPiI);
    return Solution([rhs, h1, h2, options, domain, prefactor](Complex z) {
        domain.require_inside(z, "biharmonic evaluation point");
        const double radius = domain.radius();
        const AreaRule rule = build_area_rule(domain, z, options.area);
        const Complex particular = prefactor * integrate(rule, [&](Complex eta) {
                                       const Complex a = rhs(eta);
                                       if (std::abs(a.imag()) > kRealTolerance) {
                                           throw NonRealRHS("biharmonic right-hand side is not real");
                                       }
                                       return c3(z, eta, 2, 2, radius, options.epsilon) * a.real();
                                   });
        const Complex harmonic = std::norm(z) * h1(z) + h2(z);
        return Complex{particular.real() + harmonic.real(), 0.0};
    });
}

std::vector<double> fd_residual(const std::function<Complex(Complex)>& u, int mu, int nu, const ScalarField& rhs,
                                std::span<const Complex> points, double step) {
    check_order(mu, "mu", true);
    check_order(nu, "nu", true);
    if (rhs.factors() != 1) throw DomainError("residual right-hand side must be a disk field");
    const double radius = rhs.radius();
    const double h = step > 0.0 ? step : default_fd_step(mu + nu, radius);
    const double reach = wirtinger_split(mu, nu).reach() * h;
    for (const Complex& z : points) {
        if (!is_finite(z) || std::abs(z) + reach > radius * (1.0 + kDomainTolerance)) {
            throw StencilOutOfDomain("finite-difference stencil around a residual point leaves the disk");
        }
    }
    std::vector<double> residual(points.size());
    parallel_for(points.size(), [&](std::size_t k) {
        residual[k] = std::abs(wirtinger_derivative(u, points[k], mu, nu, h) - rhs(points[k]));
    });
    return residual;
}

}  // namespace pmp
