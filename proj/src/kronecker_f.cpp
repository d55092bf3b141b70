#include "kq/kronecker_f.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

#include "kq/errors.hpp"

namespace kq {

namespace {

// sin(2 pi / 5) and sin(4 pi / 5); sin(6 pi / 5) and sin(8 pi / 5) are their negatives.
constexpr double kSin1 = 0.95105651629515357211643933337938;
constexpr double kSin2 = 0.58778525229247312916870595463907;

// T_n = sum_m x_m x_{m+n}^2 x_{m+2n}^2
Complex shifted_sum(const RootTuple& x, int n) {
    Complex acc{0.0, 0.0};
    for (int m = 0; m < 5; ++m) {
        const Complex& a = x[static_cast<std::size_t>(m)];
        const Complex& b = x[static_cast<std::size_t>((m + n) % 5)];
        const Complex& c = x[static_cast<std::size_t>((m + 2 * n) % 5)];
        acc += a * (b * b) * (c * c);
    }
    return acc;
}

constexpr int kRelationCount = 3;
constexpr int kIntegerBound = 4;

using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

Matrix sample_matrix(std::span<const FFamily> samples) {
    Matrix m(static_cast<Eigen::Index>(samples.size()), 6);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto row = samples[i].values();
        for (std::size_t j = 0; j < 6; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j];
        }
    }
    return m;
}

int numerical_rank(const Eigen::VectorXd& sv, double threshold) {
    if (sv.size() == 0 || sv(0) == 0.0) {
        return 0;
    }
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold * sv(0)) {
            ++rank;
        }
    }
    return rank;
}

// Small-integer vectors v (entries in -4..4) with A v = 0 to `tol`, up to kRelationCount
// linearly independent ones. Returns an empty list unless a full basis is found.
std::vector<std::array<Complex, 6>> integer_relations(const Matrix& a, const Matrix& row_space,
                                                      double tol) {
    std::vector<Eigen::Matrix<Complex, 6, 1>> accepted;
    const double a_norm = a.norm();
    std::array<int, 6> v{};
    const int span = 2 * kIntegerBound + 1;
    int total = 1;
    for (int i = 0; i < 6; ++i) {
        total *= span;
    }
    for (int code = 0; code < total && static_cast<int>(accepted.size()) < kRelationCount; ++code) {
        int rest = code;
        for (int i = 0; i < 6; ++i) {
            v[static_cast<std::size_t>(i)] = rest % span - kIntegerBound;
            rest /= span;
        }
        // canonical representative: first nonzero entry positive
        const auto first = std::find_if(v.begin(), v.end(), [](int e) { return e != 0; });
        if (first == v.end() || *first < 0) {
            continue;
        }
        Eigen::Matrix<Complex, 6, 1> cand;
        for (int i = 0; i < 6; ++i) {
            cand(i) = static_cast<double>(v[static_cast<std::size_t>(i)]);
        }
        if ((row_space.adjoint() * cand).norm() > tol * cand.norm()) {
            continue;
        }
        if ((a * cand).norm() > tol * a_norm * cand.norm()) {
            continue;
        }
        Matrix basis(6, static_cast<Eigen::Index>(accepted.size() + 1));
        for (std::size_t k = 0; k < accepted.size(); ++k) {
            basis.col(static_cast<Eigen::Index>(k)) = accepted[k];
        }
        basis.col(static_cast<Eigen::Index>(accepted.size())) = cand;
        Eigen::JacobiSVD<Matrix> svd(basis);
        if (numerical_rank(svd.singularValues(), 1e-9) ==
            static_cast<int>(accepted.size()) + 1) {
            accepted.push_back(cand);
        }
    }
    std::vector<std::array<Complex, 6>> out;
    if (static_cast<int>(accepted.size()) == kRelationCount) {
        for (const auto& col : accepted) {
            std::array<Complex, 6> r{};
            for (int i = 0; i < 6; ++i) {
                r[static_cast<std::size_t>(i)] = col(i);
            }
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace

Complex eval_f(const RootTuple& rt) {
    // Pairing n with 5 - n uses sin(2(5-n)pi/5) = -sin(2n pi/5).
    return kSin1 * (shifted_sum(rt, 1) - shifted_sum(rt, 4)) +
           kSin2 * (shifted_sum(rt, 2) - shifted_sum(rt, 3));
}

std::array<Complex, 6> FFamily::values() const { return {f, fk[0], fk[1], fk[2], fk[3], fk[4]}; }

std::array<int, 5> family_argument_order(int k) {
    return {k % 5, (k + 3) % 5, (k + 4) % 5, (k + 1) % 5, (k + 2) % 5};
}

FFamily f_family(const RootTuple& rt) {
    FFamily fam;
    fam.f = eval_f(rt);
    for (int k = 0; k < 5; ++k) {
        fam.fk[static_cast<std::size_t>(k)] = eval_f(kq::apply(Perm5(family_argument_order(k)), rt));
    }
    return fam;
}

std::vector<Complex> f_over(const RootTuple& rt, std::span<const Perm5> perms) {
    std::vector<Complex> out;
    out.reserve(perms.size());
    for (const Perm5& p : perms) {
        out.push_back(eval_f(kq::apply(p, rt)));
    }
    return out;
}

bool OrbitReport::well_formed() const {
    if (degenerate || values.size() != 12 || pair_map.size() != 6 ||
        family_match.size() != values.size()) {
        return false;
    }
    std::vector<bool> covered(values.size(), false);
    for (const auto& [i, j] : pair_map) {
        if (covered[static_cast<std::size_t>(i)] || covered[static_cast<std::size_t>(j)]) {
            return false;
        }
        covered[static_cast<std::size_t>(i)] = covered[static_cast<std::size_t>(j)] = true;
    }
    return std::all_of(family_match.begin(), family_match.end(),
                       [](const FamilyLabel& l) { return l.member >= 0 && l.candidates == 1; });
}

OrbitReport a5_orbit(const RootTuple& rt, double tol) {
    OrbitReport report;
    const std::vector<Complex> raw = f_over(rt, all_a5());
    report.degenerate = is_degenerate(rt);
    report.values = cluster_values(raw, tol, !report.degenerate);
    if (report.degenerate) {
        return report;
    }

    const double link = std::max(tol, kAbsoluteFloor);
    const double scale = value_scale(report.values);
    const std::size_t n = report.values.size();

    std::vector<bool> paired(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (paired[i]) {
            continue;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!paired[j] && std::abs(report.values[i] + report.values[j]) <= link * scale) {
                report.pair_map.emplace_back(static_cast<int>(i), static_cast<int>(j));
                paired[i] = paired[j] = true;
                break;
            }
        }
    }

    const auto family = f_family(rt).values();
    for (const Complex& v : report.values) {
        FamilyLabel best;
        best.deviation = std::numeric_limits<double>::infinity();
        for (int member = 0; member < 6; ++member) {
            for (int sign : {1, -1}) {
                const double dev =
                    std::abs(v - static_cast<double>(sign) * family[static_cast<std::size_t>(member)]) /
                    scale;
                if (dev <= link) {
                    ++best.candidates;
                }
                if (dev < best.deviation) {
                    best.member = member;
                    best.sign = sign;
                    best.deviation = dev;
                }
            }
        }
        if (best.candidates == 0) {
            best.member = -1;
        }
        report.family_match.push_back(best);
    }
    return report;
}

RelationReport relation_rank(std::span<const FFamily> samples, double threshold) {
    if (samples.size() < 10) {
        throw InvalidInput("relation_rank: at least 10 samples are required");
    }

    RelationReport report;
    const Matrix a = sample_matrix(samples);
    const Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
    report.rank = numerical_rank(svd.singularValues(), threshold);

    const Eigen::VectorXd& sv = svd.singularValues();
    report.singular_values.assign(sv.data(), sv.data() + sv.size());

    if (report.rank == kRelationCount) {
        const Matrix& v = svd.matrixV();
        const Matrix row_space = v.leftCols(kRelationCount);
        auto ints = integer_relations(a, row_space, threshold);
        if (!ints.empty()) {
            report.relations = std::move(ints);
            report.integer_relations = true;
        } else {
            std::vector<std::array<Complex, 6>> raw;
            for (int k = kRelationCount; k < 6; ++k) {
                std::array<Complex, 6> r{};
                for (int i = 0; i < 6; ++i) {
                    r[static_cast<std::size_t>(i)] = v(i, k);
                }
                raw.push_back(r);
            }
            report.relations = std::move(raw);
        }
    }
    return report;
}

}  // namespace kq
