#pragma once

#include "motivic/chains.hpp"
#include "motivic/complex_hp.hpp"

#include <map>

namespace motivic {

// Piecewise-linear path in the plane from 1 to the embedded value of a field
// symbol, avoiding 0. The logarithm of the endpoint is accumulated segment
// by segment, so a path that winds picks up the matching multiple of 2 pi i.
struct PathSpec {
    std::vector<ComplexHP> points;

    static PathSpec straight(const ComplexHP& target);
    void validate() const; // endpoints present, no segment through 0
};

// Logarithm of the endpoint along the path.
ComplexHP log_along(const PathSpec& path);

// Li_k as a power series with a proven geometric tail bound; |a| < 1.
// Summation order is fixed, so results are reproducible at fixed precision.
ComplexHP li(int k, const ComplexHP& a);
Real li_real(int k, const Rat& a);

// Independent quadrature oracle: the iterated integral of
// dt_0/(1-t_0) dt_1/t_1 ... dt_{k-1}/t_{k-1} over the ordered simplex
// 0 <= t_0 <= ... <= t_{k-1} <= a, as nested Gauss-Legendre rules with the
// order escalated until two successive evaluations agree within tol.
// k <= 3. Throws when the escalation budget is exhausted.
Real iterated_quadrature(int k, const Rat& a, const Real& tol);

// Numeric bindings of field symbols for the integration map.
struct EvalBinding {
    ComplexHP value;
    PathSpec path;
};
using EvalContext = std::map<std::string, EvalBinding>;

EvalContext single_binding(const std::string& sym, const Rat& a, const PathSpec* path = nullptr);

// The integration map on chain elements of cohomological degree 0:
//   I(Eta(k,0)) = -Li_k(a)/(2 pi i)^k,  I(Eta(k,i)) = 0 for i > 0,
//   I(Xi(k)) = I(Eta(k,0)),             I(PathPow(j)) = (log a / 2 pi i)^j,
//   I(1) = 1, multiplicative over composition products, and
//   I(z * gamma) = augmentation(z) * I(gamma).
ComplexHP I_map(const ChainElement& x, const EvalContext& ctx);

// Cauchy-Stokes demo on the disk of the given radius about 0 (radius in
// (0,1)): the contour integral (1/2 pi i) times the boundary-circle integral
// of dz/z, compared against intersection number 1 of the disk with {z = 0}.
struct CauchyStokesReport {
    ComplexHP contour_value; // I_1 of the topological boundary
    Real intersection = 1;   // I_0 of the cubical boundary
    Real residual = 0;
};

CauchyStokesReport cauchy_stokes_demo(const Rat& radius);

} // namespace motivic
