#include "pmp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace pmp {

namespace {

constexpr double kGradingRatio = 0.2;
constexpr int kPanelPoints = 8;

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

GaussLegendre compute_gauss_legendre(int n) {
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double dp = legendre(n, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Map [-1, 1] -> [0, 1] in increasing order.
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = 0.5 * w;
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.5;
    return rule;
}

double boundary_distance(Complex center, Complex direction, double radius) {
    // Positive root of |center + rho * direction| = R, |direction| = 1.
    const double pr = center.real() * direction.real() + center.imag() * direction.imag();
    const double c = std::max(radius * radius - std::norm(center), 0.0);
    const double disc = std::sqrt(pr * pr + c);
    return pr > 0.0 ? c / (pr + disc) : disc - pr;
}

// Unit directions at phi_k = (k + 1/2) 2 pi / n, built so that the second half
// is the exact conjugate of the first (mirror-symmetric rules).
std::vector<Complex> symmetric_directions(int n) {
    std::vector<Complex> dirs(n);
    for (int k = 0; k < (n + 1) / 2; ++k) {
        const double phi = (k + 0.5) * 2.0 * kPi / n;
        dirs[k] = Complex{std::cos(phi), std::sin(phi)};
        dirs[n - 1 - k] = std::conj(dirs[k]);
    }
    return dirs;
}

void append_ray(std::vector<Complex>& nodes, std::vector<Complex>& weights, const GaussLegendre& radial,
                Complex center, Complex direction, double rho_max, double angular_weight) {
    for (std::size_t j = 0; j < radial.nodes.size(); ++j) {
        const double rho = rho_max * radial.nodes[j];
        nodes.push_back(center + rho * direction);
        // d(conj zeta) ^ d(zeta) = 2i rho drho dphi
        weights.push_back(Complex{0.0, 2.0 * rho * rho_max * radial.weights[j] * angular_weight});
    }
}

}  // namespace

void Resolution::validate() const {
    if (n_radial < 4 || n_angular < 8) {
        std::ostringstream msg;
        msg << "quadrature resolution (" << n_radial << ", " << n_angular << ") below minimum (4, 8)";
        throw ResolutionTooLow(msg.str());
    }
}

const GaussLegendre& gauss_legendre(int n) {
    if (n < 1 || n > 4096) throw DomainError("Gauss-Legendre order out of range");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendre>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussLegendre>(compute_gauss_legendre(n));
    return *slot;
}

GaussLegendre graded_radial_rule(int n_radial) {
    if (n_radial < 1) throw DomainError("radial rule needs at least one node");
    const int panels = std::max(1, n_radial / kPanelPoints);
    const int base = n_radial / panels;
    const int extra = n_radial % panels;

    std::vector<double> breaks(panels + 1);
    breaks[0] = 0.0;
    for (int k = 1; k <= panels; ++k) breaks[k] = std::pow(kGradingRatio, panels - k);

    GaussLegendre rule;
    rule.nodes.reserve(n_radial);
    rule.weights.reserve(n_radial);
    for (int k = 0; k < panels; ++k) {
        // Outer panels are the widest; they receive the leftover points.
        const int points = base + (k >= panels - extra ? 1 : 0);
        const GaussLegendre& gl = gauss_legendre(points);
        const double lo = breaks[k];
        const double width = breaks[k + 1] - lo;
        for (int j = 0; j < points; ++j) {
            rule.nodes.push_back(lo + width * gl.nodes[j]);
            rule.weights.push_back(width * gl.weights[j]);
        }
    }
    return rule;
}

AreaRule::AreaRule(std::vector<Complex> nodes, std::vector<Complex> weights, Complex center, Resolution resolution)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), center_(center), resolution_(resolution) {
    if (nodes_.size() != weights_.size()) throw DomainError("area rule: node/weight count mismatch");
}

AreaRule build_area_rule(const DiskDomain& domain, Complex singularity, Resolution resolution) {
    resolution.validate();
    domain.require_inside(singularity, "area rule centre");
    const GaussLegendre radial = graded_radial_rule(resolution.n_radial);
    const auto directions = symmetric_directions(resolution.n_angular);
    const double angular_weight = 2.0 * kPi / resolution.n_angular;

    std::vector<Complex> nodes;
    std::vector<Complex> weights;
    nodes.reserve(static_cast<std::size_t>(resolution.n_radial) * resolution.n_angular);
    weights.reserve(nodes.capacity());
    for (const Complex& dir : directions) {
        const double rho_max = boundary_distance(singularity, dir, domain.radius());
        append_ray(nodes, weights, radial, singularity, dir, rho_max, angular_weight);
    }
    return AreaRule(std::move(nodes), std::move(weights), singularity, resolution);
}

AreaRule build_half_disk_rule(const DiskDomain& domain, Complex center, Complex other, Resolution resolution) {
    resolution.validate();
    domain.require_inside(center, "half-disk rule centre");
    domain.require_inside(other, "half-disk rule partner");
    const double separation = std::abs(other - center);
    if (separation == 0.0) throw CoincidentPoints("half-disk rule: centre and partner coincide");

    const double radius = domain.radius();
    const Complex normal = (other - center) / separation;
    const Complex midpoint = 0.5 * (center + other);
    const double line_distance = 0.5 * separation;

    // Chord of the bisector inside the disk: midpoint + t * (i normal).
    const Complex tangent = Complex{0.0, 1.0} * normal;
    const double half_b = midpoint.real() * tangent.real() + midpoint.imag() * tangent.imag();
    const double disc = std::sqrt(std::max(half_b * half_b - (std::norm(midpoint) - radius * radius), 0.0));
    const Complex p1 = midpoint + (-half_b - disc) * tangent;
    const Complex p2 = midpoint + (-half_b + disc) * tangent;

    // Angles of the chord ends relative to the normal, both in (-pi/2, pi/2).
    const double normal_angle = std::arg(normal);
    double d1 = std::arg((p1 - center) / normal);
    double d2 = std::arg((p2 - center) / normal);
    if (d1 > d2) std::swap(d1, d2);

    auto rho_max = [&](Complex dir) {
        const double to_circle = boundary_distance(center, dir, radius);
        const double cos_angle = dir.real() * normal.real() + dir.imag() * normal.imag();
        if (cos_angle <= 0.0) return to_circle;
        return std::min(to_circle, line_distance / cos_angle);
    };

    const GaussLegendre radial = graded_radial_rule(resolution.n_radial);
    const int line_points = std::max(4, resolution.n_angular / 2);
    const int arc_points = std::max(4, resolution.n_angular - line_points);

    std::vector<Complex> nodes;
    std::vector<Complex> weights;
    auto sector = [&](double start, double length, int count) {
        const GaussLegendre& gl = gauss_legendre(count);
        for (int k = 0; k < count; ++k) {
            const double phi = normal_angle + start + length * gl.nodes[k];
            const Complex dir{std::cos(phi), std::sin(phi)};
            append_ray(nodes, weights, radial, center, dir, rho_max(dir), length * gl.weights[k]);
        }
    };
    sector(d1, d2 - d1, line_points);
    sector(d2, 2.0 * kPi - (d2 - d1), arc_points);
    return AreaRule(std::move(nodes), std::move(weights), center, resolution);
}

ContourRule::ContourRule(std::vector<Complex> nodes, std::vector<Complex> weights, double radius)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), radius_(radius) {
    if (nodes_.size() != weights_.size()) throw DomainError("contour rule: node/weight count mismatch");
}

ContourRule build_contour_rule(double radius, int count) {
    if (!(radius > 0.0)) throw DomainError("contour radius must be positive");
    if (count < 8) throw DomainError("contour rule needs at least 8 nodes");
    std::vector<Complex> unit(count);
    unit[0] = Complex{1.0, 0.0};
    for (int k = 1; k <= count / 2; ++k) {
        const double theta = 2.0 * kPi * k / count;
        unit[k] = Complex{std::cos(theta), std::sin(theta)};
        unit[count - k] = std::conj(unit[k]);
    }
    std::vector<Complex> nodes(count);
    std::vector<Complex> weights(count);
    const double dtheta = 2.0 * kPi / count;
    for (int k = 0; k < count; ++k) {
        nodes[k] = radius * unit[k];
        weights[k] = Complex{0.0, 1.0} * nodes[k] * dtheta;
    }
    return ContourRule(std::move(nodes), std::move(weights), radius);
}

Complex pairwise_sum(std::span<const Complex> values) {
    constexpr std::size_t kBlock = 16;
    if (values.size() <= kBlock) {
        Complex sum{};
        for (const Complex& v : values) sum += v;
        return sum;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace detail {

void throw_non_finite(Complex node) {
    std::ostringstream msg;
    msg << "integrand is not finite at node (" << node.real() << ", " << node.imag() << ")";
    throw NonFiniteSample(msg.str());
}

}  // namespace detail

}  // namespace pmp
