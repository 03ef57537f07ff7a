#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "pmp/field.hpp"
#include "pmp/operators.hpp"
#include "pmp/polynomial.hpp"
#include "pmp/quadrature.hpp"

namespace pmp {

// ---------------------------------------------------------------------------
// Seeded test data
// ---------------------------------------------------------------------------

/// Polynomial field with total degree <= max_degree and coefficients whose
/// real and imaginary parts are uniform in [-1, 1]; each monomial is present
/// with probability 1/2 and at least one top-degree term is always set.
PolynomialField random_polynomial(std::mt19937_64& rng, int max_degree);

/// Point uniformly distributed (by area) in the disk |z| <= max_radius.
Complex random_disk_point(std::mt19937_64& rng, double max_radius);

// ---------------------------------------------------------------------------
// Nested operator application
// ---------------------------------------------------------------------------

enum class NestedOp { T, Tbar };

/// Longest program accepted by nested_apply.
inline constexpr int kMaxNestedDepth = 4;

struct NestedOptions {
    OperatorOptions operators{};
    /// Total degree of the least-squares surrogate for intermediate fields.
    int surrogate_degree = PolynomialField::kMaxDegree;
    int sample_radii = 10;
    int sample_angles = 24;
    /// Sample circles stay inside |z| <= extent * R.
    double sample_extent = 0.95;
};

/// Program for T^mu Tbar^nu, outermost operator first: mu T's then nu Tbar's.
std::vector<NestedOp> mixed_program(int mu, int nu);

/// Least-squares fit of `samples` by sum c_pq z^p conj(z)^q, p + q <= degree,
/// on a polar grid of `radii` circles and `angles` rays inside extent * R.
/// Exact (to rounding) when the sampled function is such a polynomial.
PolynomialField fit_polynomial_surrogate(const std::function<Complex(Complex)>& samples, double radius, int degree,
                                         int radii, int angles, double extent);

/// Literal composition program[0](program[1](...program[last](f))) by
/// repeated single-operator quadrature. Every intermediate field is sampled by
/// quadrature on a polar grid and replaced by its polynomial surrogate; the
/// outermost operator is applied directly at each target point. Throws
/// DepthCap for programs longer than kMaxNestedDepth.
std::vector<Complex> nested_apply(const ScalarField& f, std::span<const Complex> points,
                                  std::span<const NestedOp> program, const NestedOptions& options = {});
Complex nested_apply(const ScalarField& f, Complex z, std::span<const NestedOp> program,
                     const NestedOptions& options = {});

// ---------------------------------------------------------------------------
// Direct quadrature of the kernel integrals
// ---------------------------------------------------------------------------

/// int g(zeta) d(conj zeta) ^ d(zeta) over the disk for integrands singular at
/// both a and b: the disk is split by the perpendicular bisector of [a, b] and
/// each half gets a polar rule centred on its own singular point.
Complex two_center_integral(const DiskDomain& domain, Complex a, Complex b, Resolution resolution,
                            const std::function<Complex(Complex)>& integrand);

/// int (zeta - b)^{k-1} / ((zeta - a)(conj zeta - conj b)) d(conj zeta) ^ d(zeta);
/// the closed form is 2 pi i (c1(a, b, k) + (a - b)^{k-1} log_kernel(a, b, R)).
Complex log_kernel_integral(Complex a, Complex b, int k, double radius, Resolution resolution = {});

/// Contour integral over |zeta| = R of (conj zeta - conj b)^l (zeta - b)^{nu-1} / (zeta - a) d(zeta);
/// the closed form is 2 pi i c2(a, b, l, nu, R).
Complex contour_kernel_integral(Complex a, Complex b, int l, int nu, double radius, int count = 256);

/// int (conj zeta - conj a)^{mu-1} (zeta - b)^{nu-1} / ((zeta - a)(conj zeta - conj b)) d(conj zeta) ^ d(zeta);
/// the closed form is 2 pi i c3(a, b, mu, nu, R).
Complex mixed_kernel_integral(Complex a, Complex b, int mu, int nu, double radius, Resolution resolution = {});

// ---------------------------------------------------------------------------
// Discrete Hoelder estimators
// ---------------------------------------------------------------------------

/// Discrete lower bound of a Hoelder semi-norm. For disk fields order 0 is the
/// sup norm and order 1 is sup |f(z) - f(w)| / |z - w|^alpha. For polydisc
/// fields order k is the largest k-th order mixed difference quotient over
/// distinct factor sets.
struct HoelderEstimate {
    double alpha = 0.5;
    int order = 1;
    double value = 0.0;
    std::size_t samples = 0;
};

/// Halton points (bases 2 and 3) mapped area-uniformly onto the disk,
/// starting at index `skip`.
std::vector<Complex> halton_disk_points(std::size_t count, double radius, std::size_t skip = 0);

/// Sup of the quotient over the first `sample_budget` quasi-random samples;
/// pairs closer than 1e-6 R in a varied factor are skipped. Nondecreasing in
/// the budget, since a larger budget only adds samples.
HoelderEstimate hoelder_seminorm(const ScalarField& f, double alpha, int order, std::size_t sample_budget);

/// |f| + (2R)^alpha H_alpha[f] for a disk field, both terms estimated from samples.
double hoelder_norm_estimate(const ScalarField& f, double alpha, std::size_t sample_budget);

/// sum_{k=0}^{n} (2R)^{k alpha} / k! H^{(k)}_alpha[f] for a polydisc field.
double polydisc_norm_estimate(const ScalarField& f, double alpha, std::size_t sample_budget);

// ---------------------------------------------------------------------------
// Operator norm bound
// ---------------------------------------------------------------------------

/// 2^{(m-1)m/2} (C4 m + C0 + (m-1) C5)^m with C0 = 12/(alpha(1-alpha)),
/// C4 = 2^{alpha+1}/alpha and C5 = 4/(alpha(1-alpha)).
double norm_bound_constant(int m, double alpha);

struct NormBoundOptions {
    OperatorOptions operators{{32, 64}, 256, {16, 32}};
    /// Points (|z| <= extent * R) where derivatives of T^mu Tbar^nu f are sampled.
    std::size_t derivative_points = 24;
    double derivative_extent = 0.6;
    /// Samples for the Hoelder estimate of f itself.
    std::size_t field_budget = 400;
    /// Finite-difference step; <= 0 selects default_fd_step(m, R).
    double fd_step = 0.0;
};

struct NormBoundResult {
    bool holds = false;
    /// Estimate of max_{i+j=m} ||d^i dbar^j T^mu Tbar^nu f||.
    double lhs = 0.0;
    /// norm_bound_constant(m, alpha) times the sampled ||f||.
    double rhs = 0.0;
    double field_norm = 0.0;
    double constant = 0.0;
};

/// One-sided check of ||T^mu Tbar^nu f||^{(m)} <= norm_bound_constant(m, alpha) ||f||
/// with m = mu + nu <= 4. Both norms are replaced by discrete estimates; the
/// left side uses finite-difference derivatives of apply_mixed.
NormBoundResult check_norm_bound(const ScalarField& f, int mu, int nu, double alpha,
                                 const NormBoundOptions& options = {});

}  // namespace pmp
