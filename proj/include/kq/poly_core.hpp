#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

namespace kq {

using Complex = std::complex<double>;

/// Five labelled roots (x0, ..., x4). The order is meaningful: relabelling
/// changes f, the sign of the discriminant root, and the resolvent triple.
using RootTuple = std::array<Complex, 5>;

/// Monic polynomial z^n + c[0] z^(n-1) + ... + c[n-1].
/// The leading 1 is implicit; coeffs().size() is the degree.
class MonicPoly {
public:
    MonicPoly() = default;
    explicit MonicPoly(std::vector<Complex> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Coefficient of z^k, 0 <= k <= degree (k == degree gives 1).
    Complex coeff_of(int k) const;

    /// Largest coefficient magnitude, including the leading 1.
    double max_coeff_magnitude() const;

    friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

private:
    std::vector<Complex> coeffs_;
};

inline constexpr int kMaxDegree = 12;

struct RootFinderOptions {
    int max_iterations = 500;
    /// Residual bound is residual_tol * max(1, max|coeff|), or the Horner rounding floor if larger.
    double residual_tol = 1e-12;
};

/// Expands prod (z - r_i). Accepts 1 to kMaxDegree roots.
MonicPoly poly_from_roots(std::span<const Complex> roots);

/// All roots of p by Aberth-Ehrlich simultaneous iteration.
/// Throws NumericFailure (carrying the worst residual) if the iteration cap is hit.
std::vector<Complex> find_roots(const MonicPoly& p, const RootFinderOptions& opts = {});

/// Horner evaluation.
Complex eval_poly(const MonicPoly& p, Complex z);

/// p_1 ... p_kmax with p_k = sum v_i^k.
std::vector<Complex> power_sums(std::span<const Complex> values, int k_max);

/// e_1 ... e_n computed directly from the values.
std::vector<Complex> elementary_symmetric(std::span<const Complex> values);

/// e_1 ... e_n recovered from p_1 ... p_n by Newton's identities.
std::vector<Complex> elementary_from_power_sums(std::span<const Complex> power_sums);

/// prod_{i<j} (x_i - x_j) in the literal index order of rt.
Complex sqrt_discriminant(const RootTuple& rt);

/// max(1, max_i |x_i|).
double root_scale(const RootTuple& rt);

/// True when |sqrt_discriminant| < 1e-8 * root_scale^10.
bool is_degenerate(const RootTuple& rt);

inline constexpr double kDegeneracyFactor = 1e-8;

// ---------------------------------------------------------------------------
// Tolerance helpers shared by the verification modules.

inline constexpr double kAbsoluteFloor = 1e-10;

/// max(1, max_i |v_i|).
double value_scale(std::span<const Complex> values);

/// |a - b| / max(1, |a|, |b|).
double rel_diff(Complex a, Complex b);

/// Single-linkage clustering: two values share a cluster when their distance
/// is at most max(tol, kAbsoluteFloor) * value_scale(values). Cluster
/// representatives are the first member in input order.
///
/// When `reject_ambiguous` is set, throws NumericFailure if two distinct
/// clusters come within 10x of the linking distance.
std::vector<Complex> cluster_values(std::span<const Complex> values, double tol,
                                    bool reject_ambiguous = true);

struct Assignment {
    /// perm[i] is the index in `b` matched to a[i].
    std::vector<int> perm;
    /// Largest |a[i] - b[perm[i]]| over the matching.
    double max_distance = 0.0;
};

/// Minimum total-distance matching between two equal-length lists (<= 16 entries).
Assignment optimal_assignment(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace kq
