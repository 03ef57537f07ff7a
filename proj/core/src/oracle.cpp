#include "pmp/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "pmp/errors.hpp"
#include "pmp/kernels.hpp"
#include "pmp/parallel.hpp"

namespace pmp {

namespace {

double radical_inverse(std::size_t index, unsigned base) {
    double result = 0.0;
    double scale = 1.0 / base;
    while (index > 0) {
        result += static_cast<double>(index % base) * scale;
        index /= base;
        scale /= base;
    }
    return result;
}

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

/// Point in the disk from two uniform coordinates (area-uniform map).
Complex disk_point(double u, double v, double radius) {
    return std::polar(radius * std::sqrt(u), 2.0 * kPi * v);
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("Hoelder exponent must lie strictly inside (0, 1)");
}

Complex apply_single(NestedOp op, const ScalarField& f, Complex z, const OperatorOptions& options) {
    return op == NestedOp::T ? apply_T(f, z, options) : apply_Tbar(f, z, options);
}

}  // namespace

PolynomialField random_polynomial(std::mt19937_64& rng, int max_degree) {
    if (max_degree < 0 || max_degree > PolynomialField::kMaxDegree) throw DomainError("degree outside [0, 8]");
    std::uniform_real_distribution<double> coefficient(-1.0, 1.0);
    std::bernoulli_distribution present(0.5);
    PolynomialField field;
    for (int p = 0; p <= max_degree; ++p) {
        for (int q = 0; p + q <= max_degree; ++q) {
            const double re = coefficient(rng);
            const double im = coefficient(rng);
            if (present(rng)) field.set_coefficient(p, q, Complex{re, im});
        }
    }
    std::uniform_int_distribution<int> top(0, max_degree);
    const int p = top(rng);
    const double re = coefficient(rng);
    const double im = coefficient(rng);
    field.set_coefficient(p, max_degree - p, Complex{re, im});
    return field;
}

Complex random_disk_point(std::mt19937_64& rng, double max_radius) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    const double v = unit(rng);
    return disk_point(u, v, max_radius);
}

std::vector<NestedOp> mixed_program(int mu, int nu) {
    check_order(mu, "mu", true);
    check_order(nu, "nu", true);
    std::vector<NestedOp> program(static_cast<std::size_t>(mu), NestedOp::T);
    program.insert(program.end(), static_cast<std::size_t>(nu), NestedOp::Tbar);
    return program;
}

PolynomialField fit_polynomial_surrogate(const std::function<Complex(Complex)>& samples, double radius, int degree,
                                         int radii, int angles, double extent) {
    if (degree < 0 || degree > PolynomialField::kMaxDegree) throw DomainError("surrogate degree outside [0, 8]");
    if (!(radius > 0.0) || !(extent > 0.0 && extent <= 1.0)) throw DomainError("bad surrogate sampling geometry");

    std::vector<std::pair<int, int>> basis;
    for (int p = 0; p <= degree; ++p) {
        for (int q = 0; p + q <= degree; ++q) basis.emplace_back(p, q);
    }
    if (static_cast<std::size_t>(radii) * angles < 2 * basis.size()) {
        throw ResolutionTooLow("surrogate sample grid too small for the requested degree");
    }

    std::vector<Complex> points;
    for (int i = 0; i < radii; ++i) {
        const double r = extent * radius * std::sqrt((i + 0.5) / radii);
        for (int j = 0; j < angles; ++j) points.push_back(std::polar(r, 2.0 * kPi * (j + 0.25 * (i % 4)) / angles));
    }
    std::vector<Complex> values(points.size());
    parallel_for(points.size(), [&](std::size_t k) { values[k] = samples(points[k]); });

    // Basis functions are scaled by R so the design matrix stays well conditioned for any radius.
    Eigen::MatrixXcd design(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(basis.size()));
    Eigen::VectorXcd rhs(static_cast<Eigen::Index>(points.size()));
    for (std::size_t k = 0; k < points.size(); ++k) {
        const Complex w = points[k] / radius;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            design(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(b)) =
                ipow(w, basis[b].first) * ipow(std::conj(w), basis[b].second);
        }
        rhs(static_cast<Eigen::Index>(k)) = values[k];
    }
    const Eigen::VectorXcd coefficients = design.colPivHouseholderQr().solve(rhs);

    PolynomialField field;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const auto [p, q] = basis[b];
        field.set_coefficient(p, q, coefficients(static_cast<Eigen::Index>(b)) / ipow(radius, p + q));
    }
    return field;
}

std::vector<Complex> nested_apply(const ScalarField& f, std::span<const Complex> points,
                                  std::span<const NestedOp> program, const NestedOptions& options) {
    if (program.empty()) throw DomainError("nested program must contain at least one operator");
    if (static_cast<int>(program.size()) > kMaxNestedDepth) {
        throw DepthCap("nested program length " + std::to_string(program.size()) + " exceeds " +
                       std::to_string(kMaxNestedDepth));
    }
    if (f.factors() != 1) throw DomainError("nested programs act on disk fields");
    options.operators.validate();

    const DiskDomain disk = f.disk();
    ScalarField current = f;
    for (std::size_t level = program.size() - 1; level >= 1; --level) {
        const NestedOp op = program[level];
        const ScalarField input = current;
        const PolynomialField surrogate = fit_polynomial_surrogate(
            [&](Complex z) { return apply_single(op, input, z, options.operators); }, disk.radius(),
            options.surrogate_degree, options.sample_radii, options.sample_angles, options.sample_extent);
        current = ScalarField::from_polynomial(disk, surrogate, f.hoelder_alpha());
    }

    std::vector<Complex> values(points.size());
    parallel_for(points.size(),
                 [&](std::size_t k) { values[k] = apply_single(program[0], current, points[k], options.operators); });
    return values;
}

Complex nested_apply(const ScalarField& f, Complex z, std::span<const NestedOp> program,
                     const NestedOptions& options) {
    return nested_apply(f, std::span<const Complex>(&z, 1), program, options)[0];
}

Complex two_center_integral(const DiskDomain& domain, Complex a, Complex b, Resolution resolution,
                            const std::function<Complex(Complex)>& integrand) {
    if (std::abs(a - b) < kCoincidenceEpsilon * domain.radius()) {
        throw CoincidentPoints("two-centre integral: singular points coincide");
    }
    const AreaRule near_a = build_half_disk_rule(domain, a, b, resolution);
    const AreaRule near_b = build_half_disk_rule(domain, b, a, resolution);
    const Complex parts[] = {integrate(near_a, integrand), integrate(near_b, integrand)};
    return pairwise_sum(parts);
}

Complex log_kernel_integral(Complex a, Complex b, int k, double radius, Resolution resolution) {
    check_order(k, "k");
    const Complex bb = std::conj(b);
    return two_center_integral(DiskDomain(radius), a, b, resolution, [&](Complex zeta) {
        return ipow(zeta - b, k - 1) / ((zeta - a) * (std::conj(zeta) - bb));
    });
}

Complex contour_kernel_integral(Complex a, Complex b, int l, int nu, double radius, int count) {
    check_order(l, "l");
    check_order(nu, "nu");
    const DiskDomain disk(radius);
    disk.require_inside(a, "contour integral pole");
    if (!disk.contains_interior(a)) throw DomainError("contour integral pole must lie in the open disk");
    const ContourRule rule = build_contour_rule(radius, count);
    const Complex bb = std::conj(b);
    return integrate(rule, [&](Complex zeta) {
        return ipow(std::conj(zeta) - bb, l) * ipow(zeta - b, nu - 1) / (zeta - a);
    });
}

Complex mixed_kernel_integral(Complex a, Complex b, int mu, int nu, double radius, Resolution resolution) {
    check_order(mu, "mu");
    check_order(nu, "nu");
    const Complex ab = std::conj(a);
    const Complex bb = std::conj(b);
    return two_center_integral(DiskDomain(radius), a, b, resolution, [&](Complex zeta) {
        const Complex zb = std::conj(zeta);
        return ipow(zb - ab, mu - 1) * ipow(zeta - b, nu - 1) / ((zeta - a) * (zb - bb));
    });
}

std::vector<Complex> halton_disk_points(std::size_t count, double radius, std::size_t skip) {
    std::vector<Complex> points;
    points.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t index = skip + k + 1;
        points.push_back(disk_point(radical_inverse(index, 2), radical_inverse(index, 3), radius));
    }
    return points;
}

HoelderEstimate hoelder_seminorm(const ScalarField& f, double alpha, int order, std::size_t sample_budget) {
    check_alpha(alpha);
    const int n = f.factors();
    if (order < 0 || order > n) throw DomainError("Hoelder order must lie in [0, factor count]");
    const double radius = f.radius();
    const double min_separation = 1e-6 * radius;
    HoelderEstimate estimate{alpha, order, 0.0, sample_budget};

    if (n == 1) {
        const auto points = halton_disk_points(sample_budget, radius);
        std::vector<Complex> values(points.size());
        parallel_for(points.size(), [&](std::size_t k) { values[k] = f(points[k]); });
        if (order == 0) {
            for (const Complex& v : values) estimate.value = std::max(estimate.value, std::abs(v));
            return estimate;
        }
        std::vector<double> row_max(points.size(), 0.0);
        parallel_for(points.size(), [&](std::size_t i) {
            for (std::size_t j = 0; j < i; ++j) {
                const double distance = std::abs(points[i] - points[j]);
                if (distance < min_separation) continue;
                row_max[i] = std::max(row_max[i], std::abs(values[i] - values[j]) / std::pow(distance, alpha));
            }
        });
        estimate.value = *std::max_element(row_max.begin(), row_max.end());
        return estimate;
    }

    // Polydisc: each sample is a pair of tuples (Z, Z') drawn from a Halton
    // sequence in 4n dimensions; every set of `order` distinct factors is tried.
    if (static_cast<std::size_t>(4 * n) > std::size(kPrimes)) throw DimensionCap("too many factors for Halton sampling");
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != order) continue;
        std::vector<int> members;
        for (int j = 0; j < n; ++j) {
            if (mask & (1u << j)) members.push_back(j);
        }
        subsets.push_back(std::move(members));
    }
    std::vector<double> sample_max(sample_budget, 0.0);
    parallel_for(sample_budget, [&](std::size_t s) {
        std::vector<Complex> z(n), zp(n);
        for (int j = 0; j < n; ++j) {
            z[j] = disk_point(radical_inverse(s + 1, kPrimes[4 * j]), radical_inverse(s + 1, kPrimes[4 * j + 1]), radius);
            zp[j] = disk_point(radical_inverse(s + 1, kPrimes[4 * j + 2]), radical_inverse(s + 1, kPrimes[4 * j + 3]),
                               radius);
        }
        for (const auto& members : subsets) {
            double denominator = 1.0;
            bool separated = true;
            for (int j : members) {
                const double distance = std::abs(z[j] - zp[j]);
                if (distance < min_separation) separated = false;
                denominator *= std::pow(distance, alpha);
            }
            if (!separated) continue;
            // Mixed difference: sum over subsets S of members of (-1)^{k-|S|} f(Z with z_j -> z'_j for j in S).
            Complex difference{};
            const unsigned k = static_cast<unsigned>(members.size());
            for (unsigned sel = 0; sel < (1u << k); ++sel) {
                std::vector<Complex> point = z;
                for (unsigned t = 0; t < k; ++t) {
                    if (sel & (1u << t)) point[members[t]] = zp[members[t]];
                }
                const double sign = ((k - std::popcount(sel)) % 2 == 0) ? 1.0 : -1.0;
                difference += sign * f(std::span<const Complex>(point));
            }
            sample_max[s] = std::max(sample_max[s], std::abs(difference) / denominator);
        }
    });
    if (!sample_max.empty()) estimate.value = *std::max_element(sample_max.begin(), sample_max.end());
    return estimate;
}

double hoelder_norm_estimate(const ScalarField& f, double alpha, std::size_t sample_budget) {
    if (f.factors() != 1) throw DomainError("hoelder_norm_estimate expects a disk field");
    const double sup = hoelder_seminorm(f, alpha, 0, sample_budget).value;
    const double quotient = hoelder_seminorm(f, alpha, 1, sample_budget).value;
    return sup + std::pow(2.0 * f.radius(), alpha) * quotient;
}

double polydisc_norm_estimate(const ScalarField& f, double alpha, std::size_t sample_budget) {
    double norm = 0.0;
    for (int k = 0; k <= f.factors(); ++k) {
        norm += std::pow(2.0 * f.radius(), k * alpha) / factorial(k) * hoelder_seminorm(f, alpha, k, sample_budget).value;
    }
    return norm;
}

double norm_bound_constant(int m, double alpha) {
    check_alpha(alpha);
    if (m < 1) throw DomainError("norm bound order must be positive");
    const double c0 = 12.0 / (alpha * (1.0 - alpha));
    const double c4 = std::pow(2.0, alpha + 1.0) / alpha;
    const double c5 = 4.0 / (alpha * (1.0 - alpha));
    return std::pow(2.0, 0.5 * (m - 1) * m) * std::pow(c4 * m + c0 + (m - 1) * c5, m);
}

NormBoundResult check_norm_bound(const ScalarField& f, int mu, int nu, double alpha, const NormBoundOptions& options) {
    check_alpha(alpha);
    check_order(mu, "mu");
    check_order(nu, "nu");
    const int m = mu + nu;
    if (m > 4) throw DomainError("norm bound check supports mu + nu <= 4");
    if (f.factors() != 1) throw DomainError("norm bound check expects a disk field");
    options.operators.validate();

    const double radius = f.radius();
    const double h = options.fd_step > 0.0 ? options.fd_step : default_fd_step(m, radius);
    const auto points = halton_disk_points(options.derivative_points, options.derivative_extent * radius);

    // Every derivative d^i dbar^j with i + j = m samples the same tap lattice
    // around a point, so operator values are cached per point.
    std::vector<std::vector<Complex>> derivatives(m + 1, std::vector<Complex>(points.size()));
    parallel_for(points.size(), [&](std::size_t k) {
        std::map<std::pair<double, double>, Complex> cache;
        const PointFunction u = [&](Complex z) {
            const auto key = std::make_pair(z.real(), z.imag());
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
            const Complex value = apply_mixed(f, z, mu, nu, options.operators);
            cache.emplace(key, value);
            return value;
        };
        for (int i = 0; i <= m; ++i) derivatives[i][k] = wirtinger_derivative(u, points[k], i, m - i, h);
    });

    const double scale = std::pow(2.0 * radius, alpha);
    double lhs = 0.0;
    for (int i = 0; i <= m; ++i) {
        const auto& g = derivatives[i];
        double sup = 0.0;
        double quotient = 0.0;
        for (std::size_t a = 0; a < g.size(); ++a) {
            sup = std::max(sup, std::abs(g[a]));
            for (std::size_t b = 0; b < a; ++b) {
                const double distance = std::abs(points[a] - points[b]);
                if (distance < 1e-6 * radius) continue;
                quotient = std::max(quotient, std::abs(g[a] - g[b]) / std::pow(distance, alpha));
            }
        }
        lhs = std::max(lhs, sup + scale * quotient);
    }

    NormBoundResult result;
    result.lhs = lhs;
    result.field_norm = hoelder_norm_estimate(f, alpha, options.field_budget);
    result.constant = norm_bound_constant(m, alpha);
    result.rhs = result.constant * result.field_norm;
    result.holds = result.lhs <= result.rhs;
    return result;
}

}  // namespace pmp
