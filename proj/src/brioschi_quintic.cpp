#include "kq/brioschi_quintic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kq/errors.hpp"
#include "kq/perm_group.hpp"

namespace kq {

namespace {

std::vector<Complex> phi_over(const RootTuple& rt, std::span<const Perm5> perms,
                              const FamilySigns& signs) {
    std::vector<Complex> out;
    out.reserve(perms.size());
    for (const Perm5& p : perms) {
        out.push_back(phi(apply_signs(f_family(kq::apply(p, rt)), signs)));
    }
    return out;
}

// Coefficient k of z^(4-k), divided by s^(k+1): each is homogeneous of that degree in the values.
std::array<double, 5> coefficient_scales(double s) {
    std::array<double, 5> out{};
    double power = s;
    for (double& v : out) {
        v = power;
        power *= s;
    }
    return out;
}

std::array<Complex, 5> quintic_through(std::span<const Complex> values) {
    const MonicPoly q = poly_from_roots(values);
    std::array<Complex, 5> out{};
    std::copy(q.coeffs().begin(), q.coeffs().end(), out.begin());
    return out;
}

}  // namespace

FFamily apply_signs(const FFamily& fam, const FamilySigns& signs) {
    FFamily out;
    out.f = static_cast<double>(signs[0]) * fam.f;
    for (std::size_t k = 0; k < 5; ++k) {
        out.fk[k] = static_cast<double>(signs[k + 1]) * fam.fk[k];
    }
    return out;
}

Complex phi(const FFamily& fam) {
    const auto& fk = fam.fk;
    return (fam.f - fk[0]) * (fk[1] - fk[4]) * (fk[2] - fk[3]);
}

PhiFamily phi_values(const RootTuple& rt, double tol, const FamilySigns& signs) {
    if (is_degenerate(rt)) {
        throw Degenerate("phi_values: root tuple has (near-)repeated roots");
    }
    PhiFamily out;
    out.values = cluster_values(phi_over(rt, all_a5(), signs), tol);
    out.s5_value_count =
        static_cast<int>(cluster_values(phi_over(rt, all_s5(), signs), tol).size());
    if (out.values.size() != 5) {
        throw VerificationFailure("phi_values: expected 5 values under A5, found " +
                                      std::to_string(out.values.size()),
                                  static_cast<double>(out.values.size()));
    }
    return out;
}

PrincipalQuintic phi_quintic(const PhiFamily& pf) {
    if (pf.values.size() != 5) {
        throw InvalidInput("phi_quintic: need exactly five values");
    }
    const auto c = quintic_through(pf.values);
    const double s = value_scale(pf.values);

    PrincipalQuintic out;
    out.suppressed.c4_mag = std::abs(c[0]) / s;
    out.suppressed.c2_mag = std::abs(c[2]) / (s * s * s);
    out.p = c[1];
    out.q = c[3];
    out.r = c[4];

    const double worst = std::max(out.suppressed.c4_mag, out.suppressed.c2_mag);
    if (worst > kSuppressedRejection) {
        throw VerificationFailure("phi_quintic: z^4 or z^2 coefficient does not vanish", worst);
    }
    return out;
}

PowerSumCheck power_sum_check(const PhiFamily& pf) {
    if (pf.values.empty()) {
        return {};
    }
    const auto p = power_sums(pf.values, 3);
    const double s = value_scale(pf.values);
    return {std::abs(p[0]) / s, std::abs(p[2]) / (s * s * s), std::abs(p[1]) / (s * s)};
}

double newton_bridge_gap(const PhiFamily& pf) {
    const auto c = quintic_through(pf.values);
    const auto p = power_sums(pf.values, 3);
    const double s = value_scale(pf.values);
    const double gap4 = std::abs(c[0] + p[0]) / s;
    const double gap2 = std::abs(c[2] + p[2] / 3.0) / (s * s * s);
    return std::max(gap4, gap2);
}

std::array<Complex, 5> phi_quintic_coefficients(const RootTuple& rt, double tol) {
    return quintic_through(phi_values(rt, tol).values);
}

double coefficient_deviation(const RootTuple& rt, const Perm5& p, double tol) {
    const PhiFamily base = phi_values(rt, tol);
    const auto ref = quintic_through(base.values);
    const auto scales = coefficient_scales(value_scale(base.values));
    const auto moved = phi_quintic_coefficients(kq::apply(p, rt), tol);
    double worst = 0.0;
    for (std::size_t k = 0; k < 5; ++k) {
        worst = std::max(worst, std::abs(moved[k] - ref[k]) / scales[k]);
    }
    return worst;
}

double invariance_check(const RootTuple& rt, double tol) {
    if (is_degenerate(rt)) {
        throw Degenerate("invariance_check: root tuple has (near-)repeated roots");
    }
    const PhiFamily base = phi_values(rt, tol);
    const auto ref = quintic_through(base.values);
    const auto scales = coefficient_scales(value_scale(base.values));
    double worst = 0.0;
    for (const Perm5& p : all_a5()) {
        const auto moved = phi_quintic_coefficients(kq::apply(p, rt), tol);
        for (std::size_t k = 0; k < 5; ++k) {
            worst = std::max(worst, std::abs(moved[k] - ref[k]) / scales[k]);
        }
    }
    return worst;
}

std::vector<FamilySigns> find_phi_sign_normalizations(const RootTuple& rt, double tol) {
    if (is_degenerate(rt)) {
        throw Degenerate("find_phi_sign_normalizations: root tuple has (near-)repeated roots");
    }
    std::vector<FamilySigns> found;
    for (int code = 0; code < 32; ++code) {
        FamilySigns signs{1, 1, 1, 1, 1, 1};
        for (int k = 0; k < 5; ++k) {
            // entry 1 is the most significant bit so the search runs lexicographically
            if (code & (1 << (4 - k))) {
                signs[static_cast<std::size_t>(k + 1)] = -1;
            }
        }
        try {
            const auto a5 = cluster_values(phi_over(rt, all_a5(), signs), tol);
            const auto s5 = cluster_values(phi_over(rt, all_s5(), signs), tol);
            if (a5.size() == 5 && s5.size() == 10) {
                found.push_back(signs);
            }
        } catch (const NumericFailure&) {
            // ambiguous clustering: not a clean normalisation on this tuple
        }
    }
    return found;
}

}  // namespace kq
