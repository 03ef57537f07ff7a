#include "pmp/kernels.hpp"

#include <cmath>
#include <string>

#include "pmp/errors.hpp"

namespace pmp {

namespace {

void check_radius(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("kernel radius must be positive and finite");
}

void check_separated(Complex a, Complex b, double radius, double epsilon) {
    if (std::abs(a - b) < epsilon * radius) {
        throw CoincidentPoints("kernel evaluated at coincident points (|a - b| < " + std::to_string(epsilon) + " R)");
    }
}

double sign_power(int n) noexcept { return (n % 2 == 0) ? 1.0 : -1.0; }

// Shared skeleton of c3; `c1_fn` and `c2_sign` select the corrected or the
// uncorrected variant.
template <typename C1Fn>
Complex c3_impl(Complex a, Complex b, int mu, int nu, double radius, C1Fn c1_fn, double c2_sign) {
    const Complex ab = std::conj(a);
    const Complex bb = std::conj(b);
    const Complex bb_minus_ab = bb - ab;
    const Complex a_minus_b_pow = ipow(a - b, nu - 1);

    Complex value = ipow(bb_minus_ab, mu - 1) * (c1_fn(a, b, nu) + a_minus_b_pow * log_kernel(a, b, radius));
    for (int l = 1; l <= mu - 1; ++l) {
        const double inv_l = 1.0 / l;
        const Complex bracket = -inv_l * ipow(ab - bb, l) * a_minus_b_pow + c2_sign * inv_l * c2(a, b, l, nu, radius);
        value += static_cast<double>(binomial(mu - 1, l)) * ipow(bb_minus_ab, mu - 1 - l) * bracket;
    }
    return value;
}

}  // namespace

void KernelQuery::validate() const {
    check_radius(radius);
    check_order(mu, "mu");
    check_order(nu, "nu");
    const DiskDomain disk(radius);
    disk.require_inside(a, "kernel target a");
    disk.require_inside(b, "kernel source b");
    check_separated(a, b, radius, epsilon);
}

Complex log_kernel(Complex a, Complex b, double radius) {
    const double r2 = radius * radius;
    return Complex{std::log(r2), 0.0} + std::log(1.0 - a * std::conj(b) / r2) - 2.0 * std::log(std::abs(a - b));
}

Complex c1(Complex a, Complex b, int k) {
    check_order(k, "k");
    Complex total{};
    for (int l = 1; l <= k - 1; ++l) {
        Complex inner{};
        for (int j = 0; j <= k - 1 - l; ++j) {
            inner += static_cast<double>(binomial(k - 1, j)) * ipow(a, k - 1 - l - j) * ipow(-b, j);
        }
        total += (-ipow(b, l) / static_cast<double>(l)) * inner;
    }
    return total;
}

Complex c2(Complex a, Complex b, int l, int nu, double radius) {
    check_order(l, "l");
    check_order(nu, "nu");
    check_radius(radius);
    const double r2 = radius * radius;
    const Complex minus_bb = -std::conj(b);
    Complex total{};
    for (int p = 0; p <= l; ++p) {
        for (int q = p; q <= nu - 1; ++q) {
            const auto coeff = static_cast<double>(binomial(l, p) * binomial(nu - 1, q));
            total += coeff * ipow(r2, p) * ipow(minus_bb, l - p) * ipow(-b, nu - 1 - q) * ipow(a, q - p);
        }
    }
    return total;
}

Complex c3(Complex a, Complex b, int mu, int nu, double radius, double epsilon) {
    check_order(mu, "mu");
    check_order(nu, "nu");
    check_radius(radius);
    check_separated(a, b, radius, epsilon);
    return c3_impl(a, b, mu, nu, radius, [](Complex x, Complex y, int k) { return c1(x, y, k); }, +1.0);
}

Complex c3(const KernelQuery& query) {
    query.validate();
    return c3(query.a, query.b, query.mu, query.nu, query.radius, query.epsilon);
}

Complex c8(const MultiIndex& mu, const MultiIndex& nu) {
    if (mu.size() != nu.size() || mu.size() == 0) throw DomainError("c8: mu and nu must have the same non-zero length");
    if (!mu.all_at_least(1) || !nu.all_at_least(1)) throw DomainError("c8: every entry of mu and nu must be >= 1");
    const auto n = static_cast<int>(mu.size());
    const double magnitude = mu.factorial_minus_one() * nu.factorial_minus_one();
    return sign_power(mu.total()) / (magnitude * ipow(kTwoPiI, n));
}

Complex g_diag(Complex z, Complex zeta, int l, double radius, double epsilon) {
    check_order(l, "l");
    check_separated(z, zeta, radius, epsilon);
    return sign_power(l) * ipow(std::conj(zeta - z), l - 1) / (kTwoPiI * factorial(l - 1) * (zeta - z));
}

Complex g_diag_bar(Complex z, Complex zeta, int l, double radius, double epsilon) {
    check_order(l, "l");
    check_separated(z, zeta, radius, epsilon);
    return sign_power(l) * ipow(zeta - z, l - 1) / (kTwoPiI * factorial(l - 1) * std::conj(zeta - z));
}

Complex g_mixed(Complex z, Complex zeta, int mu, int nu, double radius, double epsilon) {
    const Complex kernel = c3(z, zeta, mu, nu, radius, epsilon);
    return sign_power(mu) / (kTwoPiI * factorial(mu - 1) * factorial(nu - 1)) * kernel;
}

namespace explicit_kernels {

Complex c3_1_1(Complex z, Complex eta, double radius) { return log_kernel(z, eta, radius); }

Complex c3_1_2(Complex z, Complex eta, double radius) { return -eta + (z - eta) * log_kernel(z, eta, radius); }

Complex c3_2_1(Complex z, Complex eta, double radius) {
    return (std::conj(eta) - std::conj(z)) * log_kernel(z, eta, radius) - std::conj(z);
}

Complex c3_2_2(Complex z, Complex eta, double radius) {
    const Complex L = log_kernel(z, eta, radius);
    const double dist2 = std::norm(z - eta);
    return (std::conj(eta) - std::conj(z)) * (-eta + (z - eta) * L) - dist2 + std::norm(eta) - z * std::conj(eta) +
           radius * radius;
}

}  // namespace explicit_kernels

namespace uncorrected {

Complex c1(Complex a, Complex b, int k) {
    check_order(k, "k");
    Complex total{};
    for (int l = 1; l <= k - 1; ++l) {
        Complex inner{};
        for (int j = 0; j <= k - 1 - l; ++j) {
            inner += static_cast<double>(binomial(k - 1, j)) * ipow(a, k - 1 - j) * ipow(-b, j);
        }
        total += (-ipow(b, l) / static_cast<double>(l)) * inner;
    }
    return total;
}

Complex c3(Complex a, Complex b, int mu, int nu, double radius) {
    check_order(mu, "mu");
    check_order(nu, "nu");
    check_radius(radius);
    check_separated(a, b, radius, kCoincidenceEpsilon);
    return c3_impl(a, b, mu, nu, radius, [](Complex x, Complex y, int k) { return uncorrected::c1(x, y, k); }, -1.0);
}

Complex table_1_1(Complex z, Complex eta, double radius) { return log_kernel(z, eta, radius); }

Complex table_1_2(Complex z, Complex eta, double radius) { return -z * eta + (z - eta) * log_kernel(z, eta, radius); }

Complex table_2_1(Complex z, Complex eta, double radius) {
    return (std::conj(eta) - std::conj(z)) * log_kernel(z, eta, radius) + 2.0 * std::conj(eta) - std::conj(z);
}

Complex table_2_2(Complex z, Complex eta, double radius) {
    const Complex L = log_kernel(z, eta, radius);
    return (std::conj(eta) - std::conj(z)) * (-z * eta + (z - eta) * L) - std::norm(z - eta) - std::norm(eta) +
           std::conj(eta) * z - radius * radius;
}

}  // namespace uncorrected

}  // namespace pmp
