#pragma once

#include "pmp/geometry.hpp"

namespace pmp {

/// Default coincidence threshold for |a - b|, relative to R.
inline constexpr double kCoincidenceEpsilon = 1e-14;

/// Target/source pair for the kernel functions. `a` plays the role of the
/// evaluation point z, `b` the integration variable eta.
struct KernelQuery {
    Complex a;
    Complex b;
    int mu = 1;
    int nu = 1;
    double radius = 1.0;
    double epsilon = kCoincidenceEpsilon;

    /// Throws DomainError / CoincidentPoints when the query is not admissible.
    void validate() const;
};

/// ln((R^2 - a conj(b)) / |a - b|^2) evaluated as
/// ln R^2 + Log(1 - a conj(b) / R^2) - 2 ln|a - b| (principal Log).
Complex log_kernel(Complex a, Complex b, double radius);

/// Polynomial part of the area integral of (zeta - b)^{k-1} / ((zeta - a)(conj zeta - conj b)):
/// sum_{l=1}^{k-1} (-b^l / l) sum_{j=0}^{k-1-l} C(k-1, j) a^{k-1-l-j} (-b)^j.
/// Zero for k = 1.
Complex c1(Complex a, Complex b, int k);

/// Contour kernel: (1 / 2 pi i) * contour integral over |zeta| = R of
/// (conj zeta - conj b)^l (zeta - b)^{nu-1} / (zeta - a).
Complex c2(Complex a, Complex b, int l, int nu, double radius);

/// Kernel of T^mu Tbar^nu: (1 / 2 pi i) * integral over the disk of
/// (conj zeta - conj a)^{mu-1} (zeta - b)^{nu-1} / ((zeta - a)(conj zeta - conj b)).
/// Throws CoincidentPoints when |a - b| < epsilon * R.
Complex c3(Complex a, Complex b, int mu, int nu, double radius, double epsilon = kCoincidenceEpsilon);
Complex c3(const KernelQuery& query);

/// Polydisc prefactor (-1)^{|mu|} / ((mu - 1)! (nu - 1)! (2 pi i)^n).
Complex c8(const MultiIndex& mu, const MultiIndex& nu);

/// Kernel of T^l: (-1)^l (conj zeta - conj z)^{l-1} / (2 pi i (l-1)! (zeta - z)).
Complex g_diag(Complex z, Complex zeta, int l, double radius = 1.0, double epsilon = kCoincidenceEpsilon);

/// Kernel of Tbar^l, the conjugate-variable counterpart of g_diag:
/// (-1)^l (zeta - z)^{l-1} / (2 pi i (l-1)! (conj zeta - conj z)).
Complex g_diag_bar(Complex z, Complex zeta, int l, double radius = 1.0, double epsilon = kCoincidenceEpsilon);

/// Kernel of T^mu Tbar^nu: (-1)^mu / (2 pi i (mu-1)! (nu-1)!) * c3(z, zeta, mu, nu).
Complex g_mixed(Complex z, Complex zeta, int mu, int nu, double radius, double epsilon = kCoincidenceEpsilon);

/// Hand-expanded low-order kernels, independent of the general c3 code path.
namespace explicit_kernels {

Complex c3_1_1(Complex z, Complex eta, double radius);
Complex c3_1_2(Complex z, Complex eta, double radius);
Complex c3_2_1(Complex z, Complex eta, double radius);
Complex c3_2_2(Complex z, Complex eta, double radius);

}  // namespace explicit_kernels

/// Uncorrected kernel formulas with an extra a^l factor in C1 and the opposite
/// sign on the C2 term. They disagree with the integrals they are meant to
/// evaluate whenever nu >= 2 or mu >= 2 and are kept only so the discrepancy
/// stays reproducible. No operator uses them.
namespace uncorrected {

Complex c1(Complex a, Complex b, int k);
Complex c3(Complex a, Complex b, int mu, int nu, double radius);

Complex table_1_1(Complex z, Complex eta, double radius);
Complex table_1_2(Complex z, Complex eta, double radius);
Complex table_2_1(Complex z, Complex eta, double radius);
Complex table_2_2(Complex z, Complex eta, double radius);

}  // namespace uncorrected

}  // namespace pmp
