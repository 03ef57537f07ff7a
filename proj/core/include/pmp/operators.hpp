#pragma once

#include <span>

#include "pmp/field.hpp"
#include "pmp/geometry.hpp"
#include "pmp/kernels.hpp"
#include "pmp/quadrature.hpp"

namespace pmp {

/// Quadrature settings shared by every operator.
struct OperatorOptions {
    /// Area rule for disk operators (centred at the evaluation point).
    Resolution area{};
    /// Nodes of the boundary trapezoid rule used by S and Sbar.
    int contour_count = 256;
    /// Per-factor area rule for polydisc operators with two or more factors.
    Resolution polydisc{16, 32};
    double epsilon = kCoincidenceEpsilon;

    void validate() const;
};

/// Largest factor count accepted by apply_polydisc.
inline constexpr int kMaxPolydiscFactors = 3;

/// Tf(z) = -1/(2 pi i) int f(zeta) / (zeta - z) d(conj zeta) ^ d(zeta).
Complex apply_T(const ScalarField& f, Complex z, const OperatorOptions& options = {});
/// Tbar f(z) = -1/(2 pi i) int f(zeta) / (conj zeta - conj z) d(conj zeta) ^ d(zeta) = conj(T conj f).
Complex apply_Tbar(const ScalarField& f, Complex z, const OperatorOptions& options = {});
/// Sf(z) = 1/(2 pi i) contour integral of f(zeta) / (zeta - z) d(zeta); z interior.
Complex apply_S(const ScalarField& f, Complex z, const OperatorOptions& options = {});
/// Sbar f(z) = -1/(2 pi i) contour integral of f(zeta) / (conj zeta - conj z) d(conj zeta).
Complex apply_Sbar(const ScalarField& f, Complex z, const OperatorOptions& options = {});
/// Principal value -1/(2 pi i) int (f(zeta) - f(z)) / (zeta - z)^2 d(conj zeta) ^ d(zeta), equal to d(Tf); z interior.
Complex apply_2T(const ScalarField& f, Complex z, const OperatorOptions& options = {});
/// Conjugate counterpart of apply_2T, equal to dbar(Tbar f); z interior.
Complex apply_2Tbar(const ScalarField& f, Complex z, const OperatorOptions& options = {});

/// T^k f(z) as one integral: (-1)^k / ((k-1)! 2 pi i) int (conj zeta - conj z)^{k-1} f(zeta) / (zeta - z).
Complex apply_T_power(const ScalarField& f, Complex z, int k, const OperatorOptions& options = {});
/// Tbar^k f(z): (-1)^k / ((k-1)! 2 pi i) int (zeta - z)^{k-1} f(zeta) / (conj zeta - conj z).
Complex apply_Tbar_power(const ScalarField& f, Complex z, int k, const OperatorOptions& options = {});

/// T^mu Tbar^nu f(z) = (-1)^mu / ((mu-1)! (nu-1)! 2 pi i) int c3(z, eta, mu, nu) f(eta) d(conj eta) ^ d(eta).
Complex apply_mixed(const ScalarField& f, Complex z, int mu, int nu, const OperatorOptions& options = {});

/// Tbar^mu T^nu f(z), obtained from the conjugation identity
/// Tbar^mu T^nu g = conj(T^mu Tbar^nu conj g) with g = f.
Complex apply_conjugate_dual(const ScalarField& f, Complex z, int mu, int nu, const OperatorOptions& options = {});

/// Polydisc operator prod_j T_j^{mu_j} Tbar_j^{nu_j} as a tensor-product
/// quadrature of c8(mu, nu) prod_j c3(z_j, eta_j, mu_j, nu_j) f(eta). A single
/// factor uses options.area (and so matches apply_mixed); more factors use
/// options.polydisc per factor. Throws DimensionCap for more than three factors.
Complex apply_polydisc(const ScalarField& f, std::span<const Complex> z, const MultiIndex& mu, const MultiIndex& nu,
                       const OperatorOptions& options = {});

}  // namespace pmp
