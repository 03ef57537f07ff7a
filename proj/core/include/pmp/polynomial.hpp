#pragma once

#include <array>
#include <span>
#include <vector>

#include "pmp/geometry.hpp"

namespace pmp {

/// p(z, conj z) = sum c[p][q] z^p conj(z)^q with 0 <= p, q <= kMaxDegree.
/// Closed under the Wirtinger derivatives, which act by degree shifts, so
/// it doubles as an exact reference for every derivative identity.
class PolynomialField {
public:
    static constexpr int kMaxDegree = 8;
    using Coefficients = std::array<std::array<Complex, kMaxDegree + 1>, kMaxDegree + 1>;

    PolynomialField() : c_{} {}

    static PolynomialField constant(Complex value);
    /// c * z^p conj(z)^q.
    static PolynomialField monomial(int p, int q, Complex c = 1.0);

    Complex coefficient(int p, int q) const;
    void set_coefficient(int p, int q, Complex value);
    void add_to_coefficient(int p, int q, Complex value);

    /// Largest p + q with a non-zero coefficient; -1 for the zero polynomial.
    int total_degree() const noexcept;
    bool is_zero() const noexcept { return total_degree() < 0; }

    Complex operator()(Complex z) const noexcept;

    /// Exact d and dbar.
    PolynomialField d() const;
    PolynomialField dbar() const;
    /// Complex conjugate as a function: conj(p(z)) = sum conj(c[p][q]) z^q conj(z)^p.
    PolynomialField conjugate() const;

    /// Throws DomainError when the product exceeds kMaxDegree in either variable.
    PolynomialField operator*(const PolynomialField& other) const;
    PolynomialField operator+(const PolynomialField& other) const;
    PolynomialField operator-(const PolynomialField& other) const;
    PolynomialField operator*(Complex scale) const;
    PolynomialField operator-() const { return *this * Complex{-1.0, 0.0}; }

    /// Upper bound for sup |p| over |z| <= R: sum |c| R^{p+q}.
    double sup_bound(double radius) const noexcept;
    /// Upper bound for the Lipschitz constant on |z| <= R:
    /// sum |c| (p + q) R^{p+q-1}.
    double lipschitz_bound(double radius) const noexcept;

    friend bool operator==(const PolynomialField&, const PolynomialField&) = default;

private:
    Coefficients c_;
};

/// Exact d^mu dbar^nu of `p`.
PolynomialField wirtinger_exact(const PolynomialField& p, int order_d, int order_dbar);

/// Finite Taylor series sum a_k z^k; the free holomorphic data of the solver.
class HolomorphicPolynomial {
public:
    static constexpr int kMaxDegree = kMaxOrder;

    HolomorphicPolynomial() = default;
    /// Throws DomainError if more than kMaxDegree + 1 coefficients are given.
    explicit HolomorphicPolynomial(std::vector<Complex> coefficients);

    static HolomorphicPolynomial zero() { return HolomorphicPolynomial(); }

    std::span<const Complex> coefficients() const noexcept { return coefficients_; }
    int degree() const noexcept;
    bool is_zero() const noexcept { return degree() < 0; }

    /// Horner evaluation.
    Complex operator()(Complex z) const noexcept;
    HolomorphicPolynomial derivative() const;

    PolynomialField as_field() const;

private:
    std::vector<Complex> coefficients_;
};

}  // namespace pmp
