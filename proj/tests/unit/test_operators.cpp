#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pmp/errors.hpp"
#include "pmp/operators.hpp"
#include "pmp/oracle.hpp"

namespace pmp {
namespace {

const DiskDomain kUnit(1.0);

ScalarField poly(const PolynomialField& p, double radius = 1.0) {
    return ScalarField::from_polynomial(DiskDomain(radius), p);
}

double rel(Complex value, Complex reference) {
    return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

TEST(OperatorT, GoldenMonomials) {
    std::mt19937_64 rng(21);
    for (int l = 0; l <= 5; ++l) {
        const ScalarField f = poly(PolynomialField::monomial(0, l));
        for (int trial = 0; trial < 3; ++trial) {
            const Complex z = random_disk_point(rng, 0.9);
            const Complex exact = ipow(std::conj(z), l + 1) / static_cast<double>(l + 1);
            EXPECT_LE(rel(apply_T(f, z), exact), 1e-10) << "l=" << l << " z=" << z;
            EXPECT_LE(rel(apply_Tbar(f.conjugated(), z), std::conj(exact)), 1e-10);
        }
    }
}

TEST(OperatorT, ProductWithHolomorphicCorrection) {
    // T(z) = |z|^2 - R^2, the holomorphic part being fixed by the boundary term.
    const double R = 1.5;
    const ScalarField f = poly(PolynomialField::monomial(1, 0), R);
    const Complex z{0.4, -0.7};
    EXPECT_LE(rel(apply_T(f, z), std::norm(z) - R * R), 1e-10);
}

TEST(OperatorT, DbarInvertsT) {
    std::mt19937_64 rng(22);
    const ScalarField f = poly(random_polynomial(rng, 3));
    const PointFunction Tf = [&f](Complex w) { return apply_T(f, w); };
    for (int trial = 0; trial < 3; ++trial) {
        const Complex z = random_disk_point(rng, 0.7);
        EXPECT_LE(std::abs(wirtinger_derivative(Tf, z, 0, 1, 1e-3) - f(z)), 1e-6);
    }
}

TEST(OperatorT, PompeiuIdentity) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 4; ++trial) {
        const PolynomialField p = random_polynomial(rng, 4);
        const Complex z = random_disk_point(rng, 0.85);
        EXPECT_LE(rel(apply_T(poly(p.dbar()), z) + apply_S(poly(p), z), p(z)), 1e-9);
        EXPECT_LE(rel(apply_Tbar(poly(p.d()), z) + apply_Sbar(poly(p), z), p(z)), 1e-9);
    }
}

TEST(OperatorS, ReproducesHolomorphicFunctions) {
    const ScalarField f = poly(PolynomialField::monomial(3, 0) + PolynomialField::constant(2.0));
    const Complex z{0.1, 0.5};
    EXPECT_LE(rel(apply_S(f, z), ipow(z, 3) + 2.0), 1e-12);
    EXPECT_THROW(apply_S(f, Complex{1.0, 0.0}), DomainError);
    EXPECT_THROW(apply_Sbar(f, Complex{0.0, 1.2}), DomainError);
}

TEST(OperatorPiT, MatchesDerivativeOfT) {
    std::mt19937_64 rng(24);
    const ScalarField f = poly(random_polynomial(rng, 3));
    const PointFunction Tf = [&f](Complex w) { return apply_T(f, w); };
    const PointFunction Tbf = [&f](Complex w) { return apply_Tbar(f, w); };
    const Complex z = random_disk_point(rng, 0.6);
    EXPECT_LE(std::abs(apply_2T(f, z) - wirtinger_derivative(Tf, z, 1, 0, 1e-3)), 1e-6);
    EXPECT_LE(std::abs(apply_2Tbar(f, z) - wirtinger_derivative(Tbf, z, 0, 1, 1e-3)), 1e-6);
    EXPECT_LE(std::abs(apply_2T(poly(PolynomialField::monomial(0, 1)), z)), 1e-10);
}

TEST(OperatorPowers, TPowerOfOneIsScaledConjugatePower) {
    const ScalarField one = ScalarField::constant(kUnit, 1.0);
    const Complex z{-0.3, 0.2};
    for (int k = 1; k <= 4; ++k) {
        EXPECT_LE(rel(apply_T_power(one, z, k), ipow(std::conj(z), k) / factorial(k)), 1e-10) << k;
        EXPECT_LE(rel(apply_Tbar_power(one, z, k), ipow(z, k) / factorial(k)), 1e-10) << k;
    }
    EXPECT_THROW(apply_T_power(one, z, 0), DomainError);
}

TEST(OperatorMixed, FirstOrderMatchesSingleOperators) {
    std::mt19937_64 rng(25);
    const ScalarField f = poly(random_polynomial(rng, 3));
    const Complex z = random_disk_point(rng, 0.8);
    EXPECT_LE(rel(apply_mixed(f, z, 1, 1), nested_apply(f, z, mixed_program(1, 1))), 1e-7);
    EXPECT_LE(rel(apply_mixed(f, z, 2, 1), nested_apply(f, z, mixed_program(2, 1))), 1e-6);
    EXPECT_LE(rel(apply_mixed(f, z, 1, 2), nested_apply(f, z, mixed_program(1, 2))), 1e-6);
}

TEST(OperatorMixed, TTbarOfOneAtOrigin) {
    // T Tbar 1 = T(z) = |z|^2 - R^2.
    const ScalarField one = ScalarField::constant(kUnit, 1.0);
    EXPECT_LE(std::abs(apply_mixed(one, 0.0, 1, 1) + 1.0), 1e-7);
    EXPECT_LE(std::abs(apply_mixed(one, Complex{0.5, 0.0}, 1, 1) + 0.75), 1e-7);
}

TEST(OperatorMixed, ConjugationAndMirrorSymmetry) {
    std::mt19937_64 rng(26);
    const PolynomialField p = random_polynomial(rng, 3);
    const ScalarField f = poly(p);
    PolynomialField reflected;
    for (int i = 0; i <= PolynomialField::kMaxDegree; ++i) {
        for (int j = 0; j <= PolynomialField::kMaxDegree; ++j) reflected.set_coefficient(i, j, std::conj(p.coefficient(i, j)));
    }
    const ScalarField g = poly(reflected);
    const Complex z = random_disk_point(rng, 0.8);
    for (const auto& [mu, nu] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 3}}) {
        EXPECT_LE(std::abs(apply_conjugate_dual(f, z, mu, nu) - std::conj(apply_mixed(f.conjugated(), z, mu, nu))), 1e-12);
        EXPECT_LE(std::abs(apply_mixed(g, std::conj(z), mu, nu) - std::conj(apply_mixed(f, z, mu, nu))), 1e-10);
    }
}

TEST(OperatorMixed, ConjugateDualOfOneOrder) {
    // Tbar T 1 = Tbar(conj z) = |z|^2 - R^2 as well.
    const ScalarField one = ScalarField::constant(kUnit, 1.0);
    EXPECT_LE(std::abs(apply_conjugate_dual(one, Complex{0.0, 0.5}, 1, 1) + 0.75), 1e-7);
}

TEST(OperatorPolydisc, SingleFactorDelegatesToMixed) {
    std::mt19937_64 rng(27);
    const PolynomialField p = random_polynomial(rng, 2);
    const ScalarField f = poly(p);
    const ScalarField fn(PolydiscDomain(1, 1.0), [&p](std::span<const Complex> z) { return p(z[0]); });
    const Complex z[] = {random_disk_point(rng, 0.7)};
    EXPECT_LE(std::abs(apply_polydisc(fn, z, {2}, {1}) - apply_mixed(f, z[0], 2, 1)), 1e-13);
}

TEST(OperatorPolydisc, SeparableFieldFactorises) {
    const PolynomialField p = PolynomialField::monomial(1, 1) + PolynomialField::constant(0.5);
    const PolynomialField q = PolynomialField::monomial(0, 2, Complex{0.0, 1.0});
    const ScalarField f(PolydiscDomain(2, 1.0), [&](std::span<const Complex> z) { return p(z[0]) * q(z[1]); });
    const Complex z[] = {Complex{0.2, -0.1}, Complex{-0.3, 0.4}};
    const Complex product = apply_mixed(poly(p), z[0], 1, 2) * apply_mixed(poly(q), z[1], 2, 1);
    EXPECT_LE(rel(apply_polydisc(f, z, {1, 2}, {2, 1}), product), 1e-4);
}

TEST(OperatorPolydisc, ArgumentChecks) {
    const ScalarField f4(PolydiscDomain(4, 1.0), [](std::span<const Complex>) { return Complex{1.0, 0.0}; });
    const Complex z4[] = {0.0, 0.0, 0.0, 0.0};
    EXPECT_THROW(apply_polydisc(f4, z4, {1, 1, 1, 1}, {1, 1, 1, 1}), DimensionCap);
    const ScalarField f2(PolydiscDomain(2, 1.0), [](std::span<const Complex>) { return Complex{1.0, 0.0}; });
    const Complex z2[] = {0.0, 0.0};
    EXPECT_THROW(apply_polydisc(f2, z2, {1}, {1, 1}), DomainError);
    EXPECT_THROW(apply_polydisc(f2, z2, {0, 1}, {1, 1}), DomainError);
    const Complex outside[] = {0.0, 1.5};
    EXPECT_THROW(apply_polydisc(f2, outside, {1, 1}, {1, 1}), DomainError);
}

TEST(OperatorOptions, Validation) {
    OperatorOptions o;
    EXPECT_NO_THROW(o.validate());
    o.area = {2, 8};
    EXPECT_THROW(o.validate(), ResolutionTooLow);
    const ScalarField one = ScalarField::constant(kUnit, 1.0);
    EXPECT_THROW(apply_T(one, 0.1, o), ResolutionTooLow);
    EXPECT_THROW(apply_T(one, Complex{2.0, 0.0}), DomainError);
}

TEST(OperatorT, ConvergesUnderRefinement) {
    const ScalarField f(kUnit, [](Complex z) { return std::exp(std::conj(z)) * std::cos(z.real()); });
    const Complex z{0.35, 0.2};
    const Complex coarse = apply_T(f, z, {{16, 32}});
    const Complex fine = apply_T(f, z, {{32, 64}});
    const Complex finest = apply_T(f, z, {{64, 128}});
    EXPECT_LE(std::abs(finest - fine), std::abs(fine - coarse) + 1e-13);
    EXPECT_LE(std::abs(finest - fine), 1e-8);
}

}  // namespace
}  // namespace pmp
