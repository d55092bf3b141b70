#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kq/perm_group.hpp"
#include "kq/poly_core.hpp"

namespace kq {

inline constexpr double kDefaultDedupTol = 1e-7;
inline constexpr double kDefaultRankThreshold = 1e-6;

/// The twelve-valued root function
///
///   f(x) = sum_{m=0..4} sum_{n=1..4} sin(2 n pi / 5) x_m x_{m+n}^2 x_{m+2n}^2
///
/// with indices taken mod 5. Homogeneous of degree 5.
Complex eval_f(const RootTuple& rt);

/// f together with f_k = f(x_k, x_{k+3}, x_{k+4}, x_{k+1}, x_{k+2}), k = 0..4.
struct FFamily {
    Complex f;
    std::array<Complex, 5> fk;

    /// (f, f_0, f_1, f_2, f_3, f_4).
    std::array<Complex, 6> values() const;
};

/// The argument order used for f_k: (k, k+3, k+4, k+1, k+2) mod 5.
std::array<int, 5> family_argument_order(int k);

FFamily f_family(const RootTuple& rt);

/// Identifies an orbit value with one of +-f, +-f_0, ..., +-f_4.
struct FamilyLabel {
    /// 0 for f, k + 1 for f_k; -1 when nothing matched.
    int member = -1;
    int sign = 1;
    double deviation = 0.0;
    /// Number of +-f_k within tolerance; exactly 1 for a clean match.
    int candidates = 0;
};

struct OrbitReport {
    /// Distinct values of f over the A5-relabellings, in enumeration order.
    std::vector<Complex> values;
    /// Indices (i, j) into `values` with values[j] == -values[i].
    std::vector<std::pair<int, int>> pair_map;
    /// One label per entry of `values`.
    std::vector<FamilyLabel> family_match;
    bool degenerate = false;

    /// Twelve values, six disjoint sign pairs, and every value labelled exactly once.
    bool well_formed() const;
};

/// Evaluates f over all 60 even relabellings of rt, deduplicates, pairs
/// v with -v, and labels each value by the matching member of f_family(rt).
/// Degenerate tuples return degenerate = true with the (unchecked) cluster
/// representatives. Throws NumericFailure if deduplication is ambiguous.
OrbitReport a5_orbit(const RootTuple& rt, double tol = kDefaultDedupTol);

/// f over every relabelling in `perms`, in order.
std::vector<Complex> f_over(const RootTuple& rt, std::span<const Perm5> perms);

struct RelationReport {
    int rank = 0;
    /// Descending singular values of the N x 6 sample matrix.
    std::vector<double> singular_values;
    /// Null-space basis when rank == 3. Integer vectors when `integer_relations`.
    std::optional<std::vector<std::array<Complex, 6>>> relations;
    bool integer_relations = false;
};

/// Numerical rank of the matrix whose rows are (f, f_0, ..., f_4), using the
/// values exactly as f_family produces them. Column sign changes cannot alter
/// the rank, so no sign normalisation is attempted. Needs at least 10 samples
/// (InvalidInput otherwise).
RelationReport relation_rank(std::span<const FFamily> samples,
                             double threshold = kDefaultRankThreshold);

}  // namespace kq
