#pragma once

#include <array>

#include "kq/kronecker_f.hpp"
#include "kq/poly_core.hpp"

namespace kq {

inline constexpr double kResidualAcceptance = 1e-6;

/// Relative mismatches of the three sextic coefficients not used by the fit.
struct FitResiduals {
    double r4 = 0.0;
    double r2 = 0.0;
    double r0 = 0.0;

    double max() const;
};

/// Coefficients of the degree-12 resolvent
///
///   (F + a)^6 + 4a (F + a)^5 + 10b (F + a)^3 + 4c (F + a) - 4ac + 5b^2 = 0,   F = f^2.
struct ResolventCoeffs {
    Complex a;
    Complex b;
    Complex c;
    FitResiduals residuals;
};

/// prod_k (F - v_k^2) over v in (f, f_0, ..., f_4).
MonicPoly sextic_from_family(const FFamily& fam);

/// Fits (a, b, c) from the F^5, F^3 and F^1 coefficients of a monic sextic and
/// reports the F^4, F^2, F^0 mismatches relative to max(1, |s_j|).
/// Throws InvalidInput unless the degree is 6.
ResolventCoeffs fit_abc(const MonicPoly& sextic);

/// The sextic in F obtained by expanding the resolvent form for given (a, b, c).
/// Expands by polynomial arithmetic in G = F + a, independent of fit_abc's identities.
MonicPoly resolvent_form_sextic(Complex a, Complex b, Complex c);

/// Direct evaluation with G = F + a.
Complex eval_resolvent_form(Complex F, Complex a, Complex b, Complex c);

/// Sum of the magnitudes of the terms of eval_resolvent_form; the natural scale for
/// judging how close eval_resolvent_form is to zero.
double resolvent_form_magnitude(Complex F, Complex a, Complex b, Complex c);

/// The monic degree-12 polynomial in f (only even powers present).
MonicPoly degree12_poly(const ResolventCoeffs& coeffs);

/// Everything the resolvent pipeline derives from one labelled tuple.
struct ResolveResult {
    FFamily family;
    MonicPoly sextic;
    ResolventCoeffs coeffs;
    MonicPoly degree12;
    /// Smallest pairwise gap between the six f^2 values, relative to their scale.
    double min_square_gap = 0.0;
    /// True when min_square_gap is below kClusterWarning; residuals are then unreliable.
    bool clustered = false;
};

inline constexpr double kClusterWarning = 1e-6;

/// Throws Degenerate for tuples below the degeneracy floor.
ResolveResult resolve(const RootTuple& rt);

using Triple = std::array<Complex, 3>;

struct TwoValuednessReport {
    Triple even_triple;
    Triple odd_triple;
    double even_spread = 0.0;
    double odd_spread = 0.0;
    double pair_symmetric_spread = 0.0;
};

/// (a, b, c) of the tuple as labelled.
Triple abc_of(const RootTuple& rt);

/// Sweeps all 120 relabellings. even_triple is the identity's triple,
/// odd_triple the first odd permutation's; spreads are the largest
/// component-wise deviations relative to max(1, |reference|).
/// Throws Degenerate for degenerate tuples.
TwoValuednessReport two_valuedness_check(const RootTuple& rt);

}  // namespace kq
