#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pmp/field.hpp"
#include "pmp/operators.hpp"
#include "pmp/polynomial.hpp"

namespace pmp {

/// Data of the equation d^mu dbar^nu u = A on a disk: the right-hand side and
/// the holomorphic free functions g_0..g_{nu-1} and f_0..f_{mu-1}. A missing
/// right-hand side means A = 0.
struct SolutionSpec {
    int mu = 1;
    int nu = 1;
    DiskDomain domain{};
    std::optional<ScalarField> rhs;
    std::vector<HolomorphicPolynomial> g_list;
    std::vector<HolomorphicPolynomial> f_list;

    /// Throws DomainError on bad orders or list lengths (exactly nu g's and mu f's).
    void validate() const;
};

/// Pointwise evaluator of a solution. Each call runs one quadrature pass
/// centred at the target point.
class Solution {
public:
    explicit Solution(std::function<Complex(Complex)> evaluator) : evaluator_(std::move(evaluator)) {}

    Complex operator()(Complex z) const { return evaluator_(z); }
    /// Values at many points, evaluated in parallel.
    std::vector<Complex> evaluate(std::span<const Complex> points) const;
    GridField evaluate(const GridGeometry& grid) const;
    const std::function<Complex(Complex)>& evaluator() const noexcept { return evaluator_; }

private:
    std::function<Complex(Complex)> evaluator_;
};

/// u = g_0 + sum_{j=1}^{nu-1} T^j g_j + T^nu sum_{i=0}^{mu-1} Tbar^i conj(f_i),
/// which solves d^mu dbar^nu u = 0. The right-hand side in `spec` is ignored.
Solution solve_homogeneous(const SolutionSpec& spec, const OperatorOptions& options = {});

/// u = g_0(z) + int [ sum_{j=1}^{nu-1} G(z,zeta,j) g_j + G(z,zeta,nu) conj(f_0)
///     + sum_{i=1}^{mu-1} G(z,zeta,nu,i) conj(f_i) + G(z,zeta,nu,mu) A ] d(conj zeta) ^ d(zeta),
/// one quadrature pass per target point, solving d^mu dbar^nu u = A.
Solution solve_pde(const SolutionSpec& spec, const OperatorOptions& options = {});

/// Real solution of Delta^2 u = A for real A:
/// u = Re(1/(32 pi i) int c3(z, eta, 2, 2) A(eta) d(conj eta) ^ d(eta)) + Re(|z|^2 h1(z) + h2(z)).
/// Throws NonRealRHS (at construction) if A has an imaginary part above 1e-12
/// at any quadrature node of a centred probe rule, and again during evaluation
/// if a sample is not real.
Solution solve_biharmonic(const ScalarField& rhs, const HolomorphicPolynomial& h1, const HolomorphicPolynomial& h2,
                          const OperatorOptions& options = {});

/// |FD[d^mu dbar^nu] u(z) - A(z)| at each point, with the Richardson-refined
/// Wirtinger stencil. `step` <= 0 selects default_fd_step(mu + nu, R).
/// Throws StencilOutOfDomain if a stencil tap would leave the closed disk.
std::vector<double> fd_residual(const std::function<Complex(Complex)>& u, int mu, int nu, const ScalarField& rhs,
                                std::span<const Complex> points, double step = 0.0);

}  // namespace pmp
