#include "pmp/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pmp/errors.hpp"

namespace pmp {

namespace {

void check_degree(int p, int q) {
    if (p < 0 || q < 0 || p > PolynomialField::kMaxDegree || q > PolynomialField::kMaxDegree) {
        throw DomainError("polynomial field degree (" + std::to_string(p) + ", " + std::to_string(q) +
                          ") outside [0, 8]");
    }
}

}  // namespace

PolynomialField PolynomialField::constant(Complex value) { return monomial(0, 0, value); }

PolynomialField PolynomialField::monomial(int p, int q, Complex c) {
    check_degree(p, q);
    PolynomialField field;
    field.c_[p][q] = c;
    return field;
}

Complex PolynomialField::coefficient(int p, int q) const {
    check_degree(p, q);
    return c_[p][q];
}

void PolynomialField::set_coefficient(int p, int q, Complex value) {
    check_degree(p, q);
    c_[p][q] = value;
}

void PolynomialField::add_to_coefficient(int p, int q, Complex value) {
    check_degree(p, q);
    c_[p][q] += value;
}

int PolynomialField::total_degree() const noexcept {
    int degree = -1;
    for (int p = 0; p <= kMaxDegree; ++p) {
        for (int q = 0; q <= kMaxDegree; ++q) {
            if (c_[p][q] != Complex{}) degree = std::max(degree, p + q);
        }
    }
    return degree;
}

Complex PolynomialField::operator()(Complex z) const noexcept {
    // Horner in conj(z) for each power of z, then Horner in z.
    const Complex zb = std::conj(z);
    Complex result{};
    for (int p = kMaxDegree; p >= 0; --p) {
        Complex inner{};
        for (int q = kMaxDegree; q >= 0; --q) inner = inner * zb + c_[p][q];
        result = result * z + inner;
    }
    return result;
}

PolynomialField PolynomialField::d() const {
    PolynomialField out;
    for (int p = 1; p <= kMaxDegree; ++p) {
        for (int q = 0; q <= kMaxDegree; ++q) out.c_[p - 1][q] = static_cast<double>(p) * c_[p][q];
    }
    return out;
}

PolynomialField PolynomialField::dbar() const {
    PolynomialField out;
    for (int p = 0; p <= kMaxDegree; ++p) {
        for (int q = 1; q <= kMaxDegree; ++q) out.c_[p][q - 1] = static_cast<double>(q) * c_[p][q];
    }
    return out;
}

PolynomialField PolynomialField::conjugate() const {
    PolynomialField out;
    for (int p = 0; p <= kMaxDegree; ++p) {
        for (int q = 0; q <= kMaxDegree; ++q) out.c_[q][p] = std::conj(c_[p][q]);
    }
    return out;
}

PolynomialField PolynomialField::operator*(const PolynomialField& other) const {
    PolynomialField out;
    for (int p1 = 0; p1 <= kMaxDegree; ++p1) {
        for (int q1 = 0; q1 <= kMaxDegree; ++q1) {
            if (c_[p1][q1] == Complex{}) continue;
            for (int p2 = 0; p2 <= kMaxDegree; ++p2) {
                for (int q2 = 0; q2 <= kMaxDegree; ++q2) {
                    if (other.c_[p2][q2] == Complex{}) continue;
                    check_degree(p1 + p2, q1 + q2);
                    out.c_[p1 + p2][q1 + q2] += c_[p1][q1] * other.c_[p2][q2];
                }
            }
        }
    }
    return out;
}

PolynomialField PolynomialField::operator+(const PolynomialField& other) const {
    PolynomialField out = *this;
    for (int p = 0; p <= kMaxDegree; ++p) {
        for (int q = 0; q <= kMaxDegree; ++q) out.c_[p][q] += other.c_[p][q];
    }
    return out;
}

PolynomialField PolynomialField::operator-(const PolynomialField& other) const { return *this + (-other); }

PolynomialField PolynomialField::operator*(Complex scale) const {
    PolynomialField out = *this;
    for (auto& row : out.c_) {
        for (auto& c : row) c *= scale;
    }
    return out;
}

double PolynomialField::sup_bound(double radius) const noexcept {
    double bound = 0.0;
    for (int p = 0; p <= kMaxDegree; ++p) {
        for (int q = 0; q <= kMaxDegree; ++q) bound += std::abs(c_[p][q]) * ipow(radius, p + q);
    }
    return bound;
}

double PolynomialField::lipschitz_bound(double radius) const noexcept {
    double bound = 0.0;
    for (int p = 0; p <= kMaxDegree; ++p) {
        for (int q = 0; q <= kMaxDegree; ++q) {
            if (p + q == 0) continue;
            bound += std::abs(c_[p][q]) * (p + q) * ipow(radius, p + q - 1);
        }
    }
    return bound;
}

PolynomialField wirtinger_exact(const PolynomialField& p, int order_d, int order_dbar) {
    check_order(order_d, "order_d", true);
    check_order(order_dbar, "order_dbar", true);
    PolynomialField out = p;
    for (int k = 0; k < order_d; ++k) out = out.d();
    for (int k = 0; k < order_dbar; ++k) out = out.dbar();
    return out;
}

HolomorphicPolynomial::HolomorphicPolynomial(std::vector<Complex> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.size() > static_cast<std::size_t>(kMaxDegree) + 1) {
        throw DomainError("holomorphic polynomial degree exceeds 20");
    }
    for (const Complex& c : coefficients_) require_finite(c, "holomorphic polynomial coefficient");
}

int HolomorphicPolynomial::degree() const noexcept {
    for (int k = static_cast<int>(coefficients_.size()) - 1; k >= 0; --k) {
        if (coefficients_[k] != Complex{}) return k;
    }
    return -1;
}

Complex HolomorphicPolynomial::operator()(Complex z) const noexcept {
    Complex result{};
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) result = result * z + *it;
    return result;
}

HolomorphicPolynomial HolomorphicPolynomial::derivative() const {
    std::vector<Complex> out;
    for (std::size_t k = 1; k < coefficients_.size(); ++k) out.push_back(static_cast<double>(k) * coefficients_[k]);
    return HolomorphicPolynomial(std::move(out));
}

PolynomialField HolomorphicPolynomial::as_field() const {
    PolynomialField field;
    for (int k = 0; k <= degree(); ++k) field.set_coefficient(k, 0, coefficients_[k]);
    return field;
}

}  // namespace pmp
