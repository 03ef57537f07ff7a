#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace pmp {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline const Complex kTwoPiI{0.0, 2.0 * kPi};

/// Largest operator / polynomial order accepted anywhere in the library.
inline constexpr int kMaxOrder = 20;

/// Relative tolerance used when deciding whether a point lies in the closed disk.
inline constexpr double kDomainTolerance = 1e-12;

bool is_finite(Complex z) noexcept;

/// Throws DomainError if either component of `z` is NaN or infinite.
Complex require_finite(Complex z, const char* what);

/// z^n for n >= 0 by repeated squaring (exact for small integer powers,
/// unlike std::pow which goes through exp/log).
Complex ipow(Complex z, int n) noexcept;
double ipow(double x, int n) noexcept;

/// Binomial coefficient from a Pascal table; 0 <= k <= n <= kMaxOrder.
std::int64_t binomial(int n, int k);
/// n! for 0 <= n <= kMaxOrder.
double factorial(int n);

/// Throws DomainError unless 1 <= order <= kMaxOrder (or 0 <= order when
/// `allow_zero`).
void check_order(int order, const char* what, bool allow_zero = false);

class DiskDomain {
public:
    explicit DiskDomain(double radius = 1.0);

    double radius() const noexcept { return radius_; }
    double area() const noexcept { return kPi * radius_ * radius_; }

    /// |z| <= R up to the relative domain tolerance.
    bool contains(Complex z) const noexcept;
    bool contains_interior(Complex z) const noexcept;

    /// Throws DomainError if `z` is non-finite or outside the closed disk.
    Complex require_inside(Complex z, const char* what) const;

private:
    double radius_;
};

class PolydiscDomain {
public:
    PolydiscDomain(int factors, double radius);

    int factors() const noexcept { return factors_; }
    double radius() const noexcept { return radius_; }
    DiskDomain factor() const { return DiskDomain(radius_); }

    bool contains(std::span<const Complex> z) const noexcept;

private:
    int factors_;
    double radius_;
};

/// Per-factor operator orders for the polydisc.
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::initializer_list<int> entries);
    explicit MultiIndex(std::vector<int> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t j) const { return entries_.at(j); }
    std::span<const int> entries() const noexcept { return entries_; }

    /// |mu| = sum of entries.
    int total() const noexcept;
    /// mu! = product of entry factorials.
    double factorial() const;
    /// (mu - 1)! = product of (entry - 1)!; requires every entry >= 1.
    double factorial_minus_one() const;

    bool all_at_least(int lower) const noexcept;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> entries_;
};

/// One sample of a finite-difference stencil: u(z + h * offset) * coefficient.
struct StencilTap {
    Complex offset;
    Complex coefficient;
};

/// Finite-difference realisation of d^mu dbar^nu in real coordinates,
/// with d = (d_x - i d_y)/2 and dbar = (d_x + i d_y)/2. Each pure derivative
/// d_x^a d_y^b is a tensor product of second-order central differences, so the
/// stencil is O(h^2) accurate and exact on polynomials of total degree
/// <= order + 1.
struct WirtingerStencil {
    int order_d = 0;
    int order_dbar = 0;
    std::vector<StencilTap> taps;

    int order() const noexcept { return order_d + order_dbar; }
    /// Largest |offset| over the taps, in units of h.
    double reach() const noexcept;
};

WirtingerStencil wirtinger_split(int order_d, int order_dbar);

using PointFunction = std::function<Complex(Complex)>;

/// h^{-order} * sum_k c_k u(z + h * offset_k).
Complex apply_stencil(const WirtingerStencil& stencil, const PointFunction& u, Complex z, double h);

/// Richardson-refined (4 D(h/2) - D(h)) / 3 estimate of d^mu dbar^nu u at z.
Complex wirtinger_derivative(const PointFunction& u, Complex z, int order_d, int order_dbar, double h);

/// Step heuristic h = (1e-12)^{1/(order+2)} * R balancing truncation against
/// quadrature noise.
double default_fd_step(int order, double radius) noexcept;

}  // namespace pmp
