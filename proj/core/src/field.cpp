#include "pmp/field.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "pmp/errors.hpp"
#include "pmp/parallel.hpp"

namespace pmp {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("Hoelder exponent must lie strictly inside (0, 1)");
}

std::string format_number(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", x);
    return buffer;
}

}  // namespace

ScalarField::ScalarField(DiskDomain domain, UnaryEvaluator fn, double hoelder_alpha, std::string description)
    : domain_(1, domain.radius()), unary_(std::move(fn)), alpha_(hoelder_alpha), description_(std::move(description)) {
    check_alpha(alpha_);
    if (!unary_) throw DomainError("scalar field needs an evaluator");
    nary_ = [u = unary_](std::span<const Complex> z) { return u(z[0]); };
}

ScalarField::ScalarField(PolydiscDomain domain, Evaluator fn, double hoelder_alpha, std::string description)
    : domain_(domain), nary_(std::move(fn)), alpha_(hoelder_alpha), description_(std::move(description)) {
    check_alpha(alpha_);
    if (!nary_) throw DomainError("scalar field needs an evaluator");
    if (domain_.factors() == 1) {
        unary_ = [f = nary_](Complex z) { return f(std::span<const Complex>(&z, 1)); };
    }
}

ScalarField ScalarField::from_polynomial(DiskDomain domain, const PolynomialField& p, double hoelder_alpha,
                                         std::string description) {
    ScalarField field(domain, [p](Complex z) { return p(z); }, hoelder_alpha, std::move(description));
    field.polynomial_ = p;
    return field;
}

ScalarField ScalarField::constant(DiskDomain domain, Complex value) {
    return from_polynomial(domain, PolynomialField::constant(value));
}

Complex ScalarField::operator()(Complex z) const {
    if (!unary_) throw DomainError("single-point evaluation of a polydisc field");
    return unary_(z);
}

Complex ScalarField::operator()(std::span<const Complex> z) const {
    if (static_cast<int>(z.size()) != domain_.factors()) throw DomainError("field evaluated with wrong arity");
    return nary_(z);
}

ScalarField ScalarField::conjugated() const {
    ScalarField out = *this;
    out.nary_ = [f = nary_](std::span<const Complex> z) { return std::conj(f(z)); };
    if (unary_) out.unary_ = [f = unary_](Complex z) { return std::conj(f(z)); };
    if (polynomial_) out.polynomial_ = polynomial_->conjugate();
    out.description_ = description_.empty() ? std::string() : "conj(" + description_ + ")";
    return out;
}

ScalarField ScalarField::with_alpha(double alpha) const {
    check_alpha(alpha);
    ScalarField out = *this;
    out.alpha_ = alpha;
    return out;
}

void GridGeometry::validate() const {
    if (rows < 1 || cols < 1) throw DomainError("grid needs at least one row and one column");
    if (!(radius > 0.0)) throw DomainError("grid radius must be positive");
    if (!(extent > 0.0 && extent <= 1.0)) throw DomainError("grid extent must lie in (0, 1]");
}

std::vector<Complex> GridGeometry::points() const {
    validate();
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(rows) * cols);
    if (kind == GridKind::Cartesian) {
        const double half = extent * radius / std::sqrt(2.0);
        auto coord = [half](int i, int n) { return n == 1 ? 0.0 : -half + 2.0 * half * i / (n - 1); };
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) pts.emplace_back(coord(j, cols), coord(i, rows));
        }
    } else {
        for (int i = 0; i < rows; ++i) {
            const double r = extent * radius * (i + 0.5) / rows;
            for (int j = 0; j < cols; ++j) pts.push_back(std::polar(r, 2.0 * kPi * j / cols));
        }
    }
    return pts;
}

void GridField::write_csv(std::ostream& out) const {
    const auto pts = points();
    if (pts.size() != values.size()) throw DomainError("grid field: sample count does not match geometry");
    out << "x,y,re,im\n";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        out << format_number(pts[k].real()) << ',' << format_number(pts[k].imag()) << ','
            << format_number(values[k].real()) << ',' << format_number(values[k].imag()) << '\n';
    }
}

GridField evaluate_grid(const GridGeometry& geometry, const std::function<Complex(Complex)>& fn) {
    const auto pts = geometry.points();
    GridField field{geometry, std::vector<Complex>(pts.size())};
    parallel_for(pts.size(), [&](std::size_t k) {
        const Complex v = fn(pts[k]);
        if (!is_finite(v)) throw NonFiniteSample("grid evaluation produced a non-finite value");
        field.values[k] = v;
    });
    return field;
}

std::string grid_kind_name(GridKind kind) { return kind == GridKind::Cartesian ? "cartesian" : "polar"; }

GridKind parse_grid_kind(const std::string& name) {
    if (name == "cartesian") return GridKind::Cartesian;
    if (name == "polar") return GridKind::Polar;
    throw DomainError("unknown grid kind '" + name + "' (expected cartesian or polar)");
}

}  // namespace pmp
