#include "pmp/expression.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>

#include "pmp/errors.hpp"

namespace pmp {

namespace {

using Node = Expression::Node;
using NodePtr = Expression::NodePtr;
using Kind = Expression::Kind;

constexpr int kMaxExponent = 64;

NodePtr make_node(Node node) { return std::make_shared<const Node>(std::move(node)); }

NodePtr binary(Kind kind, NodePtr lhs, NodePtr rhs) {
    Node node;
    node.kind = kind;
    node.children = {std::move(lhs), std::move(rhs)};
    return make_node(std::move(node));
}

class Parser {
public:
    Parser(std::string_view text, int factors) : text_(text), factors_(factors) {}

    NodePtr parse() {
        NodePtr root = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
    [[noreturn]] void fail_at(const std::string& message, std::size_t offset) const {
        throw ParseError(message, offset);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = binary(Kind::Add, lhs, term());
            } else if (accept('-')) {
                lhs = binary(Kind::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        while (accept('*')) lhs = binary(Kind::Mul, lhs, unary());
        return lhs;
    }

    NodePtr unary() {
        if (accept('-')) {
            Node node;
            node.kind = Kind::Neg;
            node.children = {unary()};
            return make_node(std::move(node));
        }
        return factor();
    }

    NodePtr factor() {
        NodePtr base = atom();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a non-negative integer exponent");
        int exponent = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, exponent);
        if (ec != std::errc() || exponent > kMaxExponent) fail_at("exponent too large", start);
        Node node;
        node.kind = Kind::Pow;
        node.exponent = exponent;
        node.children = {base};
        return make_node(std::move(node));
    }

    NodePtr atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'z') return variable();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    NodePtr number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t from = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return pos_ - from;
        };
        std::size_t mantissa = digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) fail_at("malformed number", start);
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (digits() == 0) fail("malformed exponent in number");
        }
        const std::string literal(text_.substr(start, pos_ - start));
        const double value = std::strtod(literal.c_str(), nullptr);
        Node node;
        node.kind = Kind::Literal;
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            ++pos_;
            node.value = Complex{0.0, value};
        } else {
            node.value = Complex{value, 0.0};
        }
        return make_node(std::move(node));
    }

    int index() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) return 0;
        int k = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
        if (ec != std::errc() || k < 1 || k > factors_) {
            throw UnknownVariable("unknown variable index " + std::string(text_.substr(start, pos_ - start)) +
                                      " on a domain with " + std::to_string(factors_) + " factor(s)",
                                  start);
        }
        return k;
    }

    bool accept_word(std::string_view word) {
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    NodePtr variable() {
        const std::size_t start = pos_;
        ++pos_;  // 'z'
        Node node;
        node.kind = Kind::Variable;
        if (accept_word("bar")) {
            node.conjugate = true;
            node.factor = index();
        } else {
            node.factor = index();
            if (node.factor > 0 && accept_word("bar")) node.conjugate = true;
        }
        if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            fail_at("unknown identifier", start);
        }
        if (node.factor == 0 && factors_ != 1) {
            throw UnknownVariable("plain z/zbar is ambiguous on a domain with " + std::to_string(factors_) +
                                      " factors; use z1, z2bar, ...",
                                  start);
        }
        return make_node(std::move(node));
    }

    std::string_view text_;
    int factors_;
    std::size_t pos_ = 0;
};

Complex evaluate_node(const Node& node, std::span<const Complex> z) {
    switch (node.kind) {
        case Kind::Literal:
            return node.value;
        case Kind::Variable: {
            const Complex v = z[node.factor == 0 ? 0 : node.factor - 1];
            return node.conjugate ? std::conj(v) : v;
        }
        case Kind::Add:
            return evaluate_node(*node.children[0], z) + evaluate_node(*node.children[1], z);
        case Kind::Sub:
            return evaluate_node(*node.children[0], z) - evaluate_node(*node.children[1], z);
        case Kind::Mul:
            return evaluate_node(*node.children[0], z) * evaluate_node(*node.children[1], z);
        case Kind::Pow:
            return ipow(evaluate_node(*node.children[0], z), node.exponent);
        case Kind::Neg:
            return -evaluate_node(*node.children[0], z);
    }
    return {};
}

std::string format_real(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

bool is_atomic(const Node& node) { return node.kind == Kind::Literal || node.kind == Kind::Variable; }

void print_node(const Node& node, std::string& out) {
    auto child = [&out](const Node& c) {
        if (is_atomic(c)) {
            print_node(c, out);
        } else {
            out += '(';
            print_node(c, out);
            out += ')';
        }
    };
    switch (node.kind) {
        case Kind::Literal:
            if (node.value.imag() != 0.0) {
                out += format_real(node.value.imag()) + "i";
            } else {
                out += format_real(node.value.real());
            }
            return;
        case Kind::Variable:
            out += node.conjugate ? "zbar" : "z";
            if (node.factor > 0) out += std::to_string(node.factor);
            return;
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul:
            child(*node.children[0]);
            out += node.kind == Kind::Add ? "+" : node.kind == Kind::Sub ? "-" : "*";
            child(*node.children[1]);
            return;
        case Kind::Pow:
            child(*node.children[0]);
            out += "^" + std::to_string(node.exponent);
            return;
        case Kind::Neg:
            out += "-";
            child(*node.children[0]);
            return;
    }
}

bool same_tree(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
    switch (a.kind) {
        case Kind::Literal:
            if (a.value != b.value) return false;
            break;
        case Kind::Variable:
            if (a.factor != b.factor || a.conjugate != b.conjugate) return false;
            break;
        case Kind::Pow:
            if (a.exponent != b.exponent) return false;
            break;
        default:
            break;
    }
    for (std::size_t k = 0; k < a.children.size(); ++k) {
        if (!same_tree(*a.children[k], *b.children[k])) return false;
    }
    return true;
}

PolynomialField polynomial_of(const Node& node) {
    switch (node.kind) {
        case Kind::Literal:
            return PolynomialField::constant(node.value);
        case Kind::Variable:
            return node.conjugate ? PolynomialField::monomial(0, 1) : PolynomialField::monomial(1, 0);
        case Kind::Add:
            return polynomial_of(*node.children[0]) + polynomial_of(*node.children[1]);
        case Kind::Sub:
            return polynomial_of(*node.children[0]) - polynomial_of(*node.children[1]);
        case Kind::Mul:
            return polynomial_of(*node.children[0]) * polynomial_of(*node.children[1]);
        case Kind::Pow: {
            const PolynomialField base = polynomial_of(*node.children[0]);
            PolynomialField result = PolynomialField::constant(1.0);
            for (int k = 0; k < node.exponent; ++k) result = result * base;
            return result;
        }
        case Kind::Neg:
            return -polynomial_of(*node.children[0]);
    }
    return {};
}

}  // namespace

Expression::Expression(NodePtr root, std::string source, int factors)
    : root_(std::move(root)), source_(std::move(source)), factors_(factors) {
    if (!root_) throw DomainError("expression without a root node");
}

Complex Expression::evaluate(std::span<const Complex> z) const {
    if (static_cast<int>(z.size()) != factors_) throw DomainError("expression evaluated with wrong arity");
    return evaluate_node(*root_, z);
}

Complex Expression::evaluate(Complex z) const { return evaluate(std::span<const Complex>(&z, 1)); }

bool Expression::is_constant() const {
    auto visit = [](auto&& self, const Node& node) -> bool {
        if (node.kind == Kind::Variable) return false;
        for (const auto& child : node.children) {
            if (!self(self, *child)) return false;
        }
        return true;
    };
    return visit(visit, *root_);
}

std::string Expression::to_string() const {
    std::string out;
    print_node(*root_, out);
    return out;
}

std::optional<PolynomialField> Expression::to_polynomial() const {
    if (factors_ != 1) return std::nullopt;
    try {
        return polynomial_of(*root_);
    } catch (const DomainError&) {
        return std::nullopt;  // degree beyond the polynomial field cap
    }
}

bool operator==(const Expression& a, const Expression& b) {
    return a.factors_ == b.factors_ && same_tree(*a.root_, *b.root_);
}

Expression parse_expression(std::string_view text, int factors) {
    if (factors < 1) throw DomainError("expression domain needs at least one factor");
    Parser parser(text, factors);
    return Expression(parser.parse(), std::string(text), factors);
}

ScalarField make_field(const Expression& expression, double radius, double hoelder_alpha) {
    if (expression.factors() == 1) {
        const DiskDomain disk(radius);
        if (auto polynomial = expression.to_polynomial()) {
            return ScalarField::from_polynomial(disk, *polynomial, hoelder_alpha, expression.source());
        }
        return ScalarField(
            disk, [expression](Complex z) { return expression.evaluate(z); }, hoelder_alpha, expression.source());
    }
    return ScalarField(
        PolydiscDomain(expression.factors(), radius),
        [expression](std::span<const Complex> z) { return expression.evaluate(z); }, hoelder_alpha,
        expression.source());
}

ScalarField make_field(std::string_view text, double radius, int factors, double hoelder_alpha) {
    return make_field(parse_expression(text, factors), radius, hoelder_alpha);
}

Complex parse_complex(std::string_view text) {
    const Expression expression = parse_expression(text, 1);
    if (!expression.is_constant()) throw DomainError("'" + std::string(text) + "' is not a constant");
    return expression.evaluate(Complex{});
}

HolomorphicPolynomial make_holomorphic(std::string_view text) {
    const Expression expression = parse_expression(text, 1);
    const auto polynomial = expression.to_polynomial();
    if (!polynomial) throw DomainError("holomorphic function must be a polynomial of degree <= 8");
    std::vector<Complex> coefficients;
    for (int p = 0; p <= PolynomialField::kMaxDegree; ++p) {
        for (int q = 1; q <= PolynomialField::kMaxDegree; ++q) {
            if (polynomial->coefficient(p, q) != Complex{}) {
                throw DomainError("holomorphic function '" + std::string(text) + "' depends on zbar");
            }
        }
        coefficients.push_back(polynomial->coefficient(p, 0));
    }
    return HolomorphicPolynomial(std::move(coefficients));
}

}  // namespace pmp
