#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmp/geometry.hpp"
#include "pmp/polynomial.hpp"

namespace pmp {

/// A complex-valued function on the disk (one factor) or polydisc, with the
/// Hoelder exponent it is assumed to carry. Fields built from a
/// PolynomialField keep it, so exact Wirtinger derivatives stay available.
class ScalarField {
public:
    using UnaryEvaluator = std::function<Complex(Complex)>;
    using Evaluator = std::function<Complex(std::span<const Complex>)>;

    /// Field on the disk.
    ScalarField(DiskDomain domain, UnaryEvaluator fn, double hoelder_alpha = 0.5, std::string description = {});
    /// Field on the polydisc; `fn` receives one coordinate per factor.
    ScalarField(PolydiscDomain domain, Evaluator fn, double hoelder_alpha = 0.5, std::string description = {});

    static ScalarField from_polynomial(DiskDomain domain, const PolynomialField& p, double hoelder_alpha = 0.5,
                                       std::string description = {});
    static ScalarField constant(DiskDomain domain, Complex value);

    int factors() const noexcept { return domain_.factors(); }
    double radius() const noexcept { return domain_.radius(); }
    DiskDomain disk() const { return DiskDomain(domain_.radius()); }
    const PolydiscDomain& domain() const noexcept { return domain_; }
    double hoelder_alpha() const noexcept { return alpha_; }
    const std::string& description() const noexcept { return description_; }
    const std::optional<PolynomialField>& polynomial() const noexcept { return polynomial_; }

    /// Single-factor evaluation; throws DomainError on a polydisc field.
    Complex operator()(Complex z) const;
    Complex operator()(std::span<const Complex> z) const;

    /// z -> conj(f(z)).
    ScalarField conjugated() const;
    /// Same field with a different Hoelder exponent tag.
    ScalarField with_alpha(double alpha) const;

private:
    PolydiscDomain domain_;
    UnaryEvaluator unary_;
    Evaluator nary_;
    double alpha_;
    std::string description_;
    std::optional<PolynomialField> polynomial_;
};

enum class GridKind { Cartesian, Polar };

/// Target points for batch evaluation, listed row-major. Cartesian grids
/// cover the square inscribed in the disk of radius extent * R; polar grids
/// use rows of constant radius (extent * R * (i + 1/2) / rows) and columns of
/// constant angle.
struct GridGeometry {
    GridKind kind = GridKind::Cartesian;
    int rows = 11;
    int cols = 11;
    double radius = 1.0;
    double extent = 0.9;

    void validate() const;
    std::vector<Complex> points() const;
};

struct GridField {
    GridGeometry geometry;
    std::vector<Complex> values;

    std::vector<Complex> points() const { return geometry.points(); }
    /// CSV with header "x,y,re,im", one row per point in row-major order,
    /// numbers printed with 17 significant digits (bit-exact round trip).
    void write_csv(std::ostream& out) const;
};

/// Evaluate `fn` at every grid point, in parallel, each value in its own slot.
GridField evaluate_grid(const GridGeometry& geometry, const std::function<Complex(Complex)>& fn);

std::string grid_kind_name(GridKind kind);
GridKind parse_grid_kind(const std::string& name);

}  // namespace pmp
