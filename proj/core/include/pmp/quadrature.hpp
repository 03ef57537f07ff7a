#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmp/errors.hpp"
#include "pmp/geometry.hpp"

namespace pmp {

/// Quadrature resolution for area rules: radial nodes per ray and rays.
struct Resolution {
    int n_radial = 64;
    int n_angular = 128;

    /// Throws ResolutionTooLow if n_radial < 4 or n_angular < 8.
    void validate() const;

    Resolution doubled() const { return {2 * n_radial, 2 * n_angular}; }

    friend bool operator==(const Resolution&, const Resolution&) = default;
};

/// Gauss-Legendre nodes and weights mapped to [0, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached n-point rule; thread-safe.
const GaussLegendre& gauss_legendre(int n);

/// Radial fractions s in (0, 1) with weights summing to 1. Nodes sit on
/// geometrically graded Gauss-Legendre panels clustered toward s = 0 so that
/// rho * log(rho) integrands keep spectral-like convergence.
GaussLegendre graded_radial_rule(int n_radial);

/// Discretises integral over a disk of g(zeta) d(conj zeta) ^ d(zeta). The
/// weights carry the 2i area factor (d(conj zeta) ^ d(zeta) = 2i dx dy), so an
/// operator formula can be transcribed literally as sum_k w_k g(zeta_k).
class AreaRule {
public:
    AreaRule(std::vector<Complex> nodes, std::vector<Complex> weights, Complex center, Resolution resolution);

    std::span<const Complex> nodes() const noexcept { return nodes_; }
    std::span<const Complex> weights() const noexcept { return weights_; }
    Complex center() const noexcept { return center_; }
    Resolution resolution() const noexcept { return resolution_; }
    std::size_t size() const noexcept { return nodes_.size(); }

private:
    std::vector<Complex> nodes_;
    std::vector<Complex> weights_;
    Complex center_;
    Resolution resolution_;
};

/// Polar rule centred at `singularity` covering the whole disk. Along each ray
/// the radius runs from 0 to the boundary distance rho_max(phi), which is
/// smooth and periodic in phi for interior centres, so the trapezoid rule in
/// phi and graded Gauss-Legendre in rho are both spectrally accurate on
/// integrands that are smooth apart from 1/|zeta - z| and log|zeta - z|
/// behaviour at the centre.
AreaRule build_area_rule(const DiskDomain& domain, Complex singularity, Resolution resolution);

/// Rule for the part of the disk closer to `center` than to `other`
/// (the half cut off by the perpendicular bisector), polar-centred at
/// `center`. The angular range is split where rays switch from hitting the
/// bisector to hitting the circle; each sector uses Gauss-Legendre in phi.
AreaRule build_half_disk_rule(const DiskDomain& domain, Complex center, Complex other, Resolution resolution);

/// Equispaced trapezoid rule on the counterclockwise circle |zeta| = R with
/// weights i R e^{i theta} dtheta, i.e. it discretises d(zeta).
class ContourRule {
public:
    ContourRule(std::vector<Complex> nodes, std::vector<Complex> weights, double radius);

    std::span<const Complex> nodes() const noexcept { return nodes_; }
    std::span<const Complex> weights() const noexcept { return weights_; }
    double radius() const noexcept { return radius_; }
    std::size_t size() const noexcept { return nodes_.size(); }

private:
    std::vector<Complex> nodes_;
    std::vector<Complex> weights_;
    double radius_;
};

/// Throws DomainError if count < 8.
ContourRule build_contour_rule(double radius, int count);

/// Sum of `values` in a fixed pairwise order (reproducible, O(log n) error growth).
Complex pairwise_sum(std::span<const Complex> values);

namespace detail {
[[noreturn]] void throw_non_finite(Complex node);
}

/// sum_k w_k f(node_k) with pairwise reduction. Throws NonFiniteSample if the
/// integrand is not finite at some node.
template <typename Rule, typename Integrand>
Complex integrate(const Rule& rule, Integrand&& integrand) {
    const auto nodes = rule.nodes();
    const auto weights = rule.weights();
    std::vector<Complex> terms(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const Complex sample = integrand(nodes[k]);
        if (!is_finite(sample)) detail::throw_non_finite(nodes[k]);
        terms[k] = weights[k] * sample;
    }
    return pairwise_sum(terms);
}

}  // namespace pmp
