#include "pmp/operators.hpp"

#include <string>
#include <vector>

#include "pmp/errors.hpp"
#include "pmp/parallel.hpp"

namespace pmp {

namespace {

const Complex kMinusInvTwoPiI = -1.0 / kTwoPiI;

Complex require_interior(const ScalarField& f, Complex z, const char* what) {
    const DiskDomain disk = f.disk();
    disk.require_inside(z, what);
    if (!disk.contains_interior(z)) throw DomainError(std::string(what) + " must lie in the open disk");
    return z;
}

void require_disk_field(const ScalarField& f) {
    if (f.factors() != 1) throw DomainError("disk operator applied to a polydisc field");
}

template <typename Kernel>
Complex area_integral(const ScalarField& f, Complex z, const OperatorOptions& options, Kernel&& kernel) {
    require_disk_field(f);
    options.validate();
    const AreaRule rule = build_area_rule(f.disk(), z, options.area);
    return integrate(rule, [&](Complex zeta) { return kernel(zeta) * f(zeta); });
}

/// (-1)^k / ((k-1)! 2 pi i)
Complex power_prefactor(int k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign / (factorial(k - 1) * kTwoPiI);
}

}  // namespace

void OperatorOptions::validate() const {
    area.validate();
    polydisc.validate();
    if (contour_count < 8) throw ResolutionTooLow("contour rule needs at least 8 nodes");
    if (!(epsilon > 0.0)) throw DomainError("coincidence epsilon must be positive");
}

Complex apply_T(const ScalarField& f, Complex z, const OperatorOptions& options) {
    f.disk().require_inside(z, "T evaluation point");
    return kMinusInvTwoPiI * area_integral(f, z, options, [z](Complex zeta) { return 1.0 / (zeta - z); });
}

Complex apply_Tbar(const ScalarField& f, Complex z, const OperatorOptions& options) {
    f.disk().require_inside(z, "Tbar evaluation point");
    return kMinusInvTwoPiI *
           area_integral(f, z, options, [z](Complex zeta) { return 1.0 / std::conj(zeta - z); });
}

Complex apply_S(const ScalarField& f, Complex z, const OperatorOptions& options) {
    require_disk_field(f);
    options.validate();
    require_interior(f, z, "S evaluation point");
    const ContourRule rule = build_contour_rule(f.radius(), options.contour_count);
    return integrate(rule, [&](Complex zeta) { return f(zeta) / (zeta - z); }) / kTwoPiI;
}

Complex apply_Sbar(const ScalarField& f, Complex z, const OperatorOptions& options) {
    require_disk_field(f);
    options.validate();
    require_interior(f, z, "Sbar evaluation point");
    const ContourRule rule = build_contour_rule(f.radius(), options.contour_count);
    // d(conj zeta) is the conjugate of the d(zeta) weight; integrate the
    // conjugated measure by summing conj(w) * g directly.
    const auto nodes = rule.nodes();
    const auto weights = rule.weights();
    std::vector<Complex> terms(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const Complex sample = f(nodes[k]) / std::conj(nodes[k] - z);
        if (!is_finite(sample)) detail::throw_non_finite(nodes[k]);
        terms[k] = std::conj(weights[k]) * sample;
    }
    return kMinusInvTwoPiI * pairwise_sum(terms);
}

Complex apply_2T(const ScalarField& f, Complex z, const OperatorOptions& options) {
    require_disk_field(f);
    require_interior(f, z, "2T evaluation point");
    options.validate();
    const Complex fz = f(z);
    const AreaRule rule = build_area_rule(f.disk(), z, options.area);
    return kMinusInvTwoPiI * integrate(rule, [&](Complex zeta) {
               const Complex d = zeta - z;
               return (f(zeta) - fz) / (d * d);
           });
}

Complex apply_2Tbar(const ScalarField& f, Complex z, const OperatorOptions& options) {
    require_disk_field(f);
    require_interior(f, z, "2Tbar evaluation point");
    options.validate();
    const Complex fz = f(z);
    const AreaRule rule = build_area_rule(f.disk(), z, options.area);
    return kMinusInvTwoPiI * integrate(rule, [&](Complex zeta) {
               const Complex d = std::conj(zeta - z);
               return (f(zeta) - fz) / (d * d);
           });
}

Complex apply_T_power(const ScalarField& f, Complex z, int k, const OperatorOptions& options) {
    check_order(k, "T power");
    f.disk().require_inside(z, "T^k evaluation point");
    return power_prefactor(k) * area_integral(f, z, options, [z, k](Complex zeta) {
               const Complex d = zeta - z;
               return ipow(std::conj(d), k - 1) / d;
           });
}

Complex apply_Tbar_power(const ScalarField& f, Complex z, int k, const OperatorOptions& options) {
    check_order(k, "Tbar power");
    f.disk().require_inside(z, "Tbar^k evaluation point");
    return power_prefactor(k) * area_integral(f, z, options, [z, k](Complex zeta) {
               const Complex d = zeta - z;
               return ipow(d, k - 1) / std::conj(d);
           });
}

Complex apply_mixed(const ScalarField& f, Complex z, int mu, int nu, const OperatorOptions& options) {
    check_order(mu, "mu");
    check_order(nu, "nu");
    f.disk().require_inside(z, "T^mu Tbar^nu evaluation point");
    const double radius = f.radius();
    const Complex prefactor = power_prefactor(mu) / factorial(nu - 1);
    return prefactor * area_integral(f, z, options, [&](Complex eta) {
               return c3(z, eta, mu, nu, radius, options.epsilon);
           });
}

Complex apply_conjugate_dual(const ScalarField& f, Complex z, int mu, int nu, const OperatorOptions& options) {
    return std::conj(apply_mixed(f.conjugated(), z, mu, nu, options));
}

Complex apply_polydisc(const ScalarField& f, std::span<const Complex> z, const MultiIndex& mu, const MultiIndex& nu,
                       const OperatorOptions& options) {
    const int n = f.factors();
    if (n > kMaxPolydiscFactors) {
        throw DimensionCap("polydisc operator supports at most " + std::to_string(kMaxPolydiscFactors) +
                           " factors, got " + std::to_string(n));
    }
    if (static_cast<int>(z.size()) != n || static_cast<int>(mu.size()) != n || static_cast<int>(nu.size()) != n) {
        throw DomainError("polydisc point and multi-indices must have one entry per factor");
    }
    if (!mu.all_at_least(1) || !nu.all_at_least(1)) throw DomainError("polydisc orders must all be >= 1");
    for (int j = 0; j < n; ++j) {
        check_order(mu[j], "mu_j");
        check_order(nu[j], "nu_j");
    }
    options.validate();
    if (n == 1) return apply_mixed(f, z[0], mu[0], nu[0], options);

    const DiskDomain disk = f.disk();
    const double radius = f.radius();
    struct Factor {
        std::vector<Complex> nodes;
        std::vector<Complex> weights;  // w_k * c3(z_j, eta_k, mu_j, nu_j)
    };
    std::vector<Factor> factors(n);
    for (int j = 0; j < n; ++j) {
        disk.require_inside(z[j], "polydisc evaluation point");
        const AreaRule rule = build_area_rule(disk, z[j], options.polydisc);
        Factor& fac = factors[j];
        fac.nodes.assign(rule.nodes().begin(), rule.nodes().end());
        fac.weights.resize(rule.size());
        for (std::size_t k = 0; k < rule.size(); ++k) {
            fac.weights[k] = rule.weights()[k] * c3(z[j], fac.nodes[k], mu[j], nu[j], radius, options.epsilon);
        }
    }

    // Innermost sums run over the last factor; the outermost index is
    // distributed across workers, one output slot per index.
    const std::size_t outer = factors[0].nodes.size();
    std::vector<Complex> partial(outer);
    parallel_for(outer, [&](std::size_t k0) {
        std::vector<Complex> point(n);
        point[0] = factors[0].nodes[k0];
        std::vector<std::vector<Complex>> scratch(n);
        for (int j = 1; j < n; ++j) scratch[j].resize(factors[j].nodes.size());

        auto reduce = [&](auto&& self, int level) -> Complex {
            const Factor& fac = factors[level];
            std::vector<Complex>& terms = scratch[level];
            for (std::size_t k = 0; k < fac.nodes.size(); ++k) {
                point[level] = fac.nodes[k];
                Complex value;
                if (level + 1 == n) {
                    value = f(std::span<const Complex>(point));
                    if (!is_finite(value)) detail::throw_non_finite(point[level]);
                } else {
                    value = self(self, level + 1);
                }
                terms[k] = fac.weights[k] * value;
            }
            return pairwise_sum(terms);
        };
        partial[k0] = factors[0].weights[k0] * reduce(reduce, 1);
    });
    return c8(mu, nu) * pairwise_sum(partial);
}

}  // namespace pmp
