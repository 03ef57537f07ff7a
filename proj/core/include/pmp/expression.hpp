#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmp/field.hpp"
#include "pmp/polynomial.hpp"

namespace pmp {

/// Syntax tree of a field expression. Grammar (whitespace ignored):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary ('*' unary)*
///     unary   := '-' unary | factor
///     factor  := atom ('^' uint)?
///     atom    := number | number 'i' | var | '(' expr ')'
///     var     := 'z' | 'zbar' | 'z' k | 'zbar' k | 'z' k 'bar'
///
/// A literal such as "1+2i" is read as the sum of two literals, so "1+2i*z"
/// means 1 + (2i * z). Variable index k (1-based) selects a polydisc factor;
/// plain z and zbar are only valid on a single-factor domain.
class Expression {
public:
    enum class Kind { Literal, Variable, Add, Sub, Mul, Pow, Neg };

    struct Node {
        Kind kind = Kind::Literal;
        Complex value{};      // Literal
        int factor = 0;       // Variable: 0 for plain z, else 1-based factor index
        bool conjugate = false;
        int exponent = 0;     // Pow
        std::vector<std::shared_ptr<const Node>> children;
    };
    using NodePtr = std::shared_ptr<const Node>;

    Expression(NodePtr root, std::string source, int factors);

    const Node& root() const noexcept { return *root_; }
    const std::string& source() const noexcept { return source_; }
    int factors() const noexcept { return factors_; }

    /// Value at a point of the polydisc (one coordinate per factor).
    Complex evaluate(std::span<const Complex> z) const;
    Complex evaluate(Complex z) const;

    /// True when the tree contains no variables.
    bool is_constant() const;

    /// Canonical text that parses back to a structurally identical tree.
    std::string to_string() const;

    /// Exact polynomial form for single-factor expressions whose degrees in z
    /// and conj(z) both stay within PolynomialField::kMaxDegree.
    std::optional<PolynomialField> to_polynomial() const;

    /// Structural equality of the trees (source text is not compared).
    friend bool operator==(const Expression& a, const Expression& b);

private:
    NodePtr root_;
    std::string source_;
    int factors_;
};

/// Throws ParseError (with the byte offset) on malformed input and
/// UnknownVariable if a variable does not exist on a domain with `factors` factors.
Expression parse_expression(std::string_view text, int factors = 1);

/// Field for an expression; polynomial single-factor expressions are backed by
/// an exact PolynomialField.
ScalarField make_field(const Expression& expression, double radius, double hoelder_alpha = 0.5);
ScalarField make_field(std::string_view text, double radius, int factors = 1, double hoelder_alpha = 0.5);

/// Value of a constant expression such as "0.3+0.2i" or "-1.5".
Complex parse_complex(std::string_view text);

/// Holomorphic polynomial from an expression in z only (no zbar).
HolomorphicPolynomial make_holomorphic(std::string_view text);

}  // namespace pmp
