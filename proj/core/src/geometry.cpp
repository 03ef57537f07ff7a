#include "pmp/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "pmp/errors.hpp"

namespace pmp {

namespace {

using PascalTable = std::array<std::array<std::int64_t, kMaxOrder + 1>, kMaxOrder + 1>;

const PascalTable& pascal() {
    static const PascalTable table = [] {
        PascalTable t{};
        for (int n = 0; n <= kMaxOrder; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

}  // namespace

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex require_finite(Complex z, const char* what) {
    if (!is_finite(z)) throw DomainError(std::string(what) + " is not finite");
    return z;
}

Complex ipow(Complex z, int n) noexcept {
    Complex result{1.0, 0.0};
    Complex base = z;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

double ipow(double x, int n) noexcept {
    double result = 1.0;
    while (n > 0) {
        if (n & 1) result *= x;
        x *= x;
        n >>= 1;
    }
    return result;
}

std::int64_t binomial(int n, int k) {
    if (n < 0 || n > kMaxOrder) throw DomainError("binomial: n out of range [0, 20]: " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    return pascal()[n][k];
}

double factorial(int n) {
    if (n < 0 || n > kMaxOrder) throw DomainError("factorial: n out of range [0, 20]: " + std::to_string(n));
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

void check_order(int order, const char* what, bool allow_zero) {
    const int lower = allow_zero ? 0 : 1;
    if (order < lower || order > kMaxOrder) {
        throw DomainError(std::string(what) + " must lie in [" + std::to_string(lower) + ", " +
                          std::to_string(kMaxOrder) + "], got " + std::to_string(order));
    }
}

DiskDomain::DiskDomain(double radius) : radius_(radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("disk radius must be positive and finite");
}

bool DiskDomain::contains(Complex z) const noexcept {
    return is_finite(z) && std::abs(z) <= radius_ * (1.0 + kDomainTolerance);
}

bool DiskDomain::contains_interior(Complex z) const noexcept {
    return is_finite(z) && std::abs(z) < radius_ * (1.0 - kDomainTolerance);
}

Complex DiskDomain::require_inside(Complex z, const char* what) const {
    require_finite(z, what);
    if (!contains(z)) {
        throw DomainError(std::string(what) + " lies outside the closed disk of radius " + std::to_string(radius_));
    }
    return z;
}

PolydiscDomain::PolydiscDomain(int factors, double radius) : factors_(factors), radius_(radius) {
    if (factors < 1) throw DomainError("polydisc needs at least one factor");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("polydisc radius must be positive and finite");
}

bool PolydiscDomain::contains(std::span<const Complex> z) const noexcept {
    if (static_cast<int>(z.size()) != factors_) return false;
    const DiskDomain disk(radius_);
    return std::all_of(z.begin(), z.end(), [&](Complex w) { return disk.contains(w); });
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : entries_(entries) {
    for (int e : entries_) {
        if (e < 0) throw DomainError("multi-index entries must be non-negative");
    }
}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) throw DomainError("multi-index entries must be non-negative");
    }
}

int MultiIndex::total() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

double MultiIndex::factorial() const {
    double f = 1.0;
    for (int e : entries_) f *= pmp::factorial(e);
    return f;
}

double MultiIndex::factorial_minus_one() const {
    double f = 1.0;
    for (int e : entries_) {
        if (e < 1) throw DomainError("(mu - 1)! needs every entry >= 1");
        f *= pmp::factorial(e - 1);
    }
    return f;
}

bool MultiIndex::all_at_least(int lower) const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [&](int e) { return e >= lower; });
}

double WirtingerStencil::reach() const noexcept {
    double r = 0.0;
    for (const auto& tap : taps) r = std::max(r, std::abs(tap.offset));
    return r;
}

WirtingerStencil wirtinger_split(int order_d, int order_dbar) {
    check_order(order_d, "order_d", true);
    check_order(order_dbar, "order_dbar", true);
    const int order = order_d + order_dbar;
    if (order > kMaxOrder) throw DomainError("total derivative order exceeds 20");

    // (X - iY)^order_d (X + iY)^order_dbar / 2^order, stored by power of X.
    std::vector<Complex> poly{1.0};
    auto multiply = [&poly](Complex y_coefficient) {
        std::vector<Complex> next(poly.size() + 1, 0.0);
        for (std::size_t a = 0; a < poly.size(); ++a) {
            next[a + 1] += poly[a];
            next[a] += poly[a] * y_coefficient;
        }
        poly = std::move(next);
    };
    for (int k = 0; k < order_d; ++k) multiply(Complex{0.0, -1.0});
    for (int k = 0; k < order_dbar; ++k) multiply(Complex{0.0, 1.0});
    const double scale = 1.0 / ipow(2.0, order);

    // Offsets are multiples of 1/2; key them by doubled integer coordinates.
    std::map<std::pair<int, int>, Complex> merged;
    for (int a = 0; a <= order; ++a) {
        const Complex c = poly[a] * scale;
        if (c == Complex{}) continue;
        const int b = order - a;
        for (int j = 0; j <= a; ++j) {
            for (int k = 0; k <= b; ++k) {
                const double sign = ((j + k) % 2 == 0) ? 1.0 : -1.0;
                const auto weight = static_cast<double>(binomial(a, j) * binomial(b, k));
                merged[{a - 2 * j, b - 2 * k}] += c * (sign * weight);
            }
        }
    }

    WirtingerStencil stencil;
    stencil.order_d = order_d;
    stencil.order_dbar = order_dbar;
    for (const auto& [key, coefficient] : merged) {
        if (std::abs(coefficient) == 0.0) continue;
        stencil.taps.push_back({Complex{0.5 * key.first, 0.5 * key.second}, coefficient});
    }
    return stencil;
}

Complex apply_stencil(const WirtingerStencil& stencil, const PointFunction& u, Complex z, double h) {
    Complex sum{};
    for (const auto& tap : stencil.taps) sum += tap.coefficient * u(z + h * tap.offset);
    return sum / ipow(h, stencil.order());
}

Complex wirtinger_derivative(const PointFunction& u, Complex z, int order_d, int order_dbar, double h) {
    const WirtingerStencil stencil = wirtinger_split(order_d, order_dbar);
    if (stencil.order() == 0) return u(z);
    const Complex coarse = apply_stencil(stencil, u, z, h);
    const Complex fine = apply_stencil(stencil, u, z, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

double default_fd_step(int order, double radius) noexcept {
    return std::pow(1e-12, 1.0 / (order + 2)) * radius;
}

}  // namespace pmp
