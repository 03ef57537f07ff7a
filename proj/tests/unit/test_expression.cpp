#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "pmp/config.hpp"
#include "pmp/errors.hpp"
#include "pmp/expression.hpp"

namespace pmp {
namespace {

TEST(Expression, EvaluatesArithmetic) {
    const Complex z{0.5, -0.25};
    EXPECT_NEAR(std::abs(parse_expression("z^2*zbar + 3").evaluate(z) - (z * z * std::conj(z) + 3.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(parse_expression("-(z - 1)^3").evaluate(z) + ipow(z - 1.0, 3)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(parse_expression("1+2i*z").evaluate(z) - (1.0 + Complex{0.0, 2.0} * z)), 0.0, 1e-15);
    EXPECT_EQ(parse_expression("2.5e-1").evaluate(z), Complex(0.25, 0.0));
    EXPECT_EQ(parse_expression("1i").evaluate(z), Complex(0.0, 1.0));
    EXPECT_THROW(parse_expression("i"), ParseError);
}

TEST(Expression, PolydiscVariables) {
    const Expression e = parse_expression("z1*z2bar + zbar1", 2);
    const Complex z[] = {Complex{0.1, 0.2}, Complex{-0.3, 0.4}};
    EXPECT_EQ(e.factors(), 2);
    EXPECT_NEAR(std::abs(e.evaluate(z) - (z[0] * std::conj(z[1]) + std::conj(z[0]))), 0.0, 1e-16);
    EXPECT_THROW(parse_expression("z", 2), UnknownVariable);
    EXPECT_THROW(parse_expression("z3", 2), UnknownVariable);
    EXPECT_THROW(parse_expression("z0", 2), UnknownVariable);
}

TEST(Expression, ParseErrorsCarryOffsets) {
    try {
        parse_expression("z^^2");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 2u);
    }
    EXPECT_THROW(parse_expression(""), ParseError);
    EXPECT_THROW(parse_expression("(z + 1"), ParseError);
    EXPECT_THROW(parse_expression("z + * 2"), ParseError);
    EXPECT_THROW(parse_expression("w"), ParseError);
    EXPECT_THROW(parse_expression("z^65"), ParseError);
    EXPECT_THROW(parse_expression("z 2"), ParseError);
}

TEST(Expression, CanonicalTextRoundTrips) {
    for (const char* text : {"z^2*zbar + 3", "-(z - 1)^3", "1+2i*z", "0.1*z - zbar*(2 + 0.5i)", "((z))"}) {
        const Expression e = parse_expression(text);
        const Expression again = parse_expression(e.to_string());
        EXPECT_EQ(e, again) << text << " -> " << e.to_string();
        EXPECT_EQ(again.to_string(), e.to_string());
    }
    const Expression poly = parse_expression("z1bar*z2 - 1", 2);
    EXPECT_EQ(parse_expression(poly.to_string(), 2), poly);
}

TEST(Expression, PolynomialConversion) {
    const auto p = parse_expression("(z + zbar)^2 - 2*z*zbar").to_polynomial();
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->coefficient(2, 0), Complex(1.0, 0.0));
    EXPECT_EQ(p->coefficient(0, 2), Complex(1.0, 0.0));
    EXPECT_EQ(p->coefficient(1, 1), Complex(0.0, 0.0));
    EXPECT_FALSE(parse_expression("z^9").to_polynomial().has_value());
    EXPECT_FALSE(parse_expression("z1*z2", 2).to_polynomial().has_value());
}

TEST(Expression, FieldsAndConstants) {
    const ScalarField f = make_field("z*zbar", 2.0);
    EXPECT_TRUE(f.polynomial().has_value());
    EXPECT_DOUBLE_EQ(f.radius(), 2.0);
    EXPECT_EQ(f(Complex{1.0, 1.0}), Complex(2.0, 0.0));
    const ScalarField g = make_field("z1*z2", 1.0, 2);
    EXPECT_EQ(g.factors(), 2);
    EXPECT_EQ(parse_complex("0.3-0.2i"), Complex(0.3, -0.2));
    EXPECT_EQ(parse_complex("-1.5"), Complex(-1.5, 0.0));
    EXPECT_THROW(parse_complex("z"), DomainError);
    const HolomorphicPolynomial h = make_holomorphic("1 + z^2");
    EXPECT_EQ(h.degree(), 2);
    EXPECT_THROW(make_holomorphic("zbar"), DomainError);
    EXPECT_THROW(make_holomorphic("z^9"), DomainError);
}

TEST(RunConfig, DefaultsAndValidation) {
    RunConfig c;
    EXPECT_NO_THROW(c.validate());
    EXPECT_EQ(c.operator_options().area, (Resolution{64, 128}));
    EXPECT_EQ(c.operator_options().contour_count, 256);
    EXPECT_DOUBLE_EQ(c.tolerance("missing", 0.5), 0.5);
    c.radius = -1.0;
    EXPECT_THROW(c.validate(), DomainError);
    c.radius = 1.0;
    c.n_radial = 2;
    EXPECT_THROW(c.validate(), ResolutionTooLow);
}

TEST(RunConfig, JsonRoundTrip) {
    RunConfig c;
    c.radius = 2.5;
    c.n_radial = 32;
    c.n_angular = 96;
    c.contour_n = 128;
    c.tolerances["residual"] = 1e-3;
    c.output = "out.csv";
    c.seed = 18446744073709551615ull;
    const RunConfig back = RunConfig::from_json(c.to_json());
    EXPECT_EQ(back.to_json(), c.to_json());
    EXPECT_DOUBLE_EQ(back.tolerance("residual", 1.0), 1e-3);
    EXPECT_EQ(back.seed, c.seed);
}

TEST(RunConfig, RejectsMalformedDocuments) {
    EXPECT_THROW(RunConfig::from_json("{\"radius\": 1, \"bogus\": 2}"), DomainError);
    EXPECT_THROW(RunConfig::from_json("{\"radius\": \"one\"}"), DomainError);
    EXPECT_THROW(RunConfig::from_json("[1, 2]"), DomainError);
    EXPECT_THROW(RunConfig::from_json("{"), DomainError);
    EXPECT_THROW(RunConfig::from_json("{\"tolerances\": {\"a\": -1}}"), DomainError);
    EXPECT_THROW(RunConfig::load("/nonexistent/config.json"), DomainError);
}

TEST(RunConfig, LoadsFromFile) {
    const std::string path = ::testing::TempDir() + "pmp_config_test.json";
    {
        std::ofstream out(path);
        out << "{\"radius\": 1.5, \"seed\": 9}";
    }
    const RunConfig c = RunConfig::load(path);
    EXPECT_DOUBLE_EQ(c.radius, 1.5);
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(c.n_radial, 64);
    std::remove(path.c_str());
}

}  // namespace
}  // namespace pmp
