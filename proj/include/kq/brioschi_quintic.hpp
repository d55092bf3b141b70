#pragma once

#include <array>
#include <vector>

#include "kq/kronecker_f.hpp"
#include "kq/poly_core.hpp"

namespace kq {

inline constexpr double kSuppressedRejection = 1e-5;

/// Signs applied to (f, f_0, ..., f_4) before forming the product.
using FamilySigns = std::array<int, 6>;

/// The family as produced by f_family, without sign changes.
inline constexpr FamilySigns kNaturalSigns{1, 1, 1, 1, 1, 1};

/// Sign normalisation under which the product is five-valued under A5.
/// With the family exactly as f_family produces it the product takes 30
/// values under A5; flipping f_3 (equivalently f_2) fixes that, giving
/// (f - f_0)(f_1 - f_4)(f_2 + f_3). find_phi_sign_normalizations() recovers
/// this choice as the first valid entry of a lexicographic search.
inline constexpr FamilySigns kPhiSigns{1, 1, 1, 1, -1, 1};

FFamily apply_signs(const FFamily& fam, const FamilySigns& signs);

/// (f - f_0)(f_1 - f_4)(f_2 - f_3), on the family exactly as given.
Complex phi(const FFamily& fam);

struct PhiFamily {
    /// The distinct values over the A5-relabellings (5 for generic input).
    std::vector<Complex> values;
    /// Distinct values over all of S5 (10 for generic input).
    int s5_value_count = 0;
};

/// Product values over A5 and the S5 count, after normalising each family by `signs`.
/// Throws Degenerate for degenerate tuples, NumericFailure on ambiguous
/// deduplication, and VerificationFailure when A5 does not give 5 values.
PhiFamily phi_values(const RootTuple& rt, double tol = kDefaultDedupTol,
                     const FamilySigns& signs = kPhiSigns);

struct SuppressedCoefficients {
    /// |c4| / s and |c2| / s^3 with s = value_scale of the five values.
    double c4_mag = 0.0;
    double c2_mag = 0.0;
};

/// z^5 + p z^3 + q z + r.
struct PrincipalQuintic {
    Complex p;
    Complex q;
    Complex r;
    SuppressedCoefficients suppressed;
};

/// Monic quintic through the five values. Throws VerificationFailure when a
/// suppressed coefficient exceeds kSuppressedRejection, InvalidInput unless
/// there are exactly five values.
PrincipalQuintic phi_quintic(const PhiFamily& pf);

struct PowerSumCheck {
    double p1 = 0.0;
    double p3 = 0.0;
    /// |sum Phi_i^2| / s^2, generically far from zero.
    double p2_magnitude = 0.0;
};

/// Relative magnitudes of the first three power sums (p_k scaled by s^k).
PowerSumCheck power_sum_check(const PhiFamily& pf);

/// Largest disagreement between the coefficient route (c4, c2) and the power
/// sum route (-p1, -p3 / 3), valid because e1 = 0 makes p3 = 3 e3.
double newton_bridge_gap(const PhiFamily& pf);

/// Full monic quintic coefficients (z^4 ... z^0) through the A5 values of rt.
std::array<Complex, 5> phi_quintic_coefficients(const RootTuple& rt,
                                                double tol = kDefaultDedupTol);

/// Largest relative coefficient deviation of the product quintic over all
/// A5 relabellings of rt (coefficient k scaled by s^(5-k)).
double invariance_check(const RootTuple& rt, double tol = kDefaultDedupTol);

/// Coefficient deviation caused by one relabelling (used as an odd-permutation control).
double coefficient_deviation(const RootTuple& rt, const Perm5& p,
                             double tol = kDefaultDedupTol);

/// Every sign vector with first entry +1 under which the product is 5-valued
/// under A5 and 10-valued under S5 on rt, in lexicographic order (+1 before -1).
std::vector<FamilySigns> find_phi_sign_normalizations(const RootTuple& rt,
                                                      double tol = kDefaultDedupTol);

}  // namespace kq
