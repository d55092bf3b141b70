#include "kq/resolvent12.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "kq/errors.hpp"
#include "kq/perm_group.hpp"

namespace kq {

namespace {

// Dense polynomials stored lowest degree first.
using Dense = std::vector<Complex>;

Dense multiply(const Dense& p, const Dense& q) {
    Dense out(p.size() + q.size() - 1, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            out[i + j] += p[i] * q[j];
        }
    }
    return out;
}

void add_scaled(Dense& acc, const Dense& p, Complex factor) {
    if (acc.size() < p.size()) {
        acc.resize(p.size(), Complex{0.0, 0.0});
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc[i] += factor * p[i];
    }
}

double relative_to(Complex observed, Complex reference) {
    return std::abs(observed - reference) / std::max(1.0, std::abs(reference));
}

double triple_deviation(const Triple& t, const Triple& ref) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        worst = std::max(worst, relative_to(t[i], ref[i]));
    }
    return worst;
}

}  // namespace

double FitResiduals::max() const { return std::max({r4, r2, r0}); }

MonicPoly sextic_from_family(const FFamily& fam) {
    std::array<Complex, 6> squares{};
    const auto values = fam.values();
    std::transform(values.begin(), values.end(), squares.begin(), [](Complex v) { return v * v; });
    return poly_from_roots(squares);
}

ResolventCoeffs fit_abc(const MonicPoly& sextic) {
    if (sextic.degree() != 6) {
        throw InvalidInput("fit_abc: expected a sextic");
    }
    // c is what remains of s1 after removing 26a^5 + 30a^2 b, which dominates
    // for |a| ~ 10; extended precision keeps that cancellation from eating digits.
    using Wide = std::complex<long double>;
    auto wide = [&](int k) { return Wide(sextic.coeff_of(k)); };
    const Wide s5 = wide(5), s4 = wide(4), s3 = wide(3), s2 = wide(2), s1 = wide(1), s0 = wide(0);

    // Expanding in G = F + a:
    //   s5 = 10a
    //   s4 = 35a^2
    //   s3 = 60a^3 + 10b
    //   s2 = 55a^4 + 30ab
    //   s1 = 26a^5 + 30a^2 b + 4c
    //   s0 = 5a^6 + 10a^3 b + 5b^2        (the c terms cancel)
    const Wide a = s5 / 10.0L;
    const Wide a2 = a * a;
    const Wide a3 = a2 * a;
    const Wide b = (s3 - 60.0L * a3) / 10.0L;
    const Wide c = (s1 - 26.0L * a3 * a2 - 30.0L * a2 * b) / 4.0L;

    ResolventCoeffs out;
    out.a = Complex(a);
    out.b = Complex(b);
    out.c = Complex(c);

    auto rel = [](Wide observed, Wide predicted) {
        return static_cast<double>(std::abs(observed - predicted) /
                                   std::max(1.0L, std::abs(observed)));
    };
    out.residuals.r4 = rel(s4, 35.0L * a2);
    out.residuals.r2 = rel(s2, 55.0L * a2 * a2 + 30.0L * a * b);
    out.residuals.r0 = rel(s0, 5.0L * a3 * a3 + 10.0L * a3 * b + 5.0L * b * b);
    return out;
}

MonicPoly resolvent_form_sextic(Complex a, Complex b, Complex c) {
    const Dense g{a, Complex{1.0, 0.0}};  // G = F + a
    std::array<Dense, 7> g_pow;
    g_pow[0] = Dense{Complex{1.0, 0.0}};
    for (std::size_t k = 1; k < g_pow.size(); ++k) {
        g_pow[k] = multiply(g_pow[k - 1], g);
    }
    Dense acc;
    add_scaled(acc, g_pow[6], 1.0);
    add_scaled(acc, g_pow[5], 4.0 * a);
    add_scaled(acc, g_pow[3], 10.0 * b);
    add_scaled(acc, g_pow[1], 4.0 * c);
    add_scaled(acc, g_pow[0], -4.0 * a * c + 5.0 * b * b);

    // acc[6] == 1; MonicPoly wants F^5 ... F^0.
    std::vector<Complex> coeffs(acc.rbegin() + 1, acc.rend());
    return MonicPoly(std::move(coeffs));
}

Complex eval_resolvent_form(Complex F, Complex a, Complex b, Complex c) {
    const Complex g = F + a;
    const Complex g2 = g * g;
    const Complex g3 = g2 * g;
    const Complex g5 = g3 * g2;
    return g5 * g + 4.0 * a * g5 + 10.0 * b * g3 + 4.0 * c * g - 4.0 * a * c + 5.0 * b * b;
}

double resolvent_form_magnitude(Complex F, Complex a, Complex b, Complex c) {
    const double g = std::abs(F + a);
    const double aa = std::abs(a);
    const double bb = std::abs(b);
    const double cc = std::abs(c);
    return std::pow(g, 6) + 4.0 * aa * std::pow(g, 5) + 10.0 * bb * std::pow(g, 3) +
           4.0 * cc * g + 4.0 * aa * cc + 5.0 * bb * bb;
}

MonicPoly degree12_poly(const ResolventCoeffs& coeffs) {
    const MonicPoly sextic = resolvent_form_sextic(coeffs.a, coeffs.b, coeffs.c);
    // f^12 + s5 f^10 + ... ; odd powers of f are zero.
    std::vector<Complex> out(12, Complex{0.0, 0.0});
    for (int j = 0; j < 6; ++j) {
        const int power = 2 * j;  // coefficient of f^(2j)
        out[static_cast<std::size_t>(11 - power)] = sextic.coeff_of(j);
    }
    return MonicPoly(std::move(out));
}

ResolveResult resolve(const RootTuple& rt) {
    if (is_degenerate(rt)) {
        throw Degenerate("resolve: root tuple has (near-)repeated roots");
    }
    ResolveResult out;
    out.family = f_family(rt);
    out.sextic = sextic_from_family(out.family);
    out.coeffs = fit_abc(out.sextic);
    out.degree12 = degree12_poly(out.coeffs);

    std::array<Complex, 6> squares{};
    const auto values = out.family.values();
    std::transform(values.begin(), values.end(), squares.begin(), [](Complex v) { return v * v; });
    const double scale = value_scale(squares);
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < squares.size(); ++i) {
        for (std::size_t j = i + 1; j < squares.size(); ++j) {
            gap = std::min(gap, std::abs(squares[i] - squares[j]) / scale);
        }
    }
    out.min_square_gap = gap;
    out.clustered = gap < kClusterWarning;
    return out;
}

Triple abc_of(const RootTuple& rt) {
    const ResolventCoeffs fit = fit_abc(sextic_from_family(f_family(rt)));
    return {fit.a, fit.b, fit.c};
}

TwoValuednessReport two_valuedness_check(const RootTuple& rt) {
    if (is_degenerate(rt)) {
        throw Degenerate("two_valuedness_check: root tuple has (near-)repeated roots");
    }
    const auto& s5 = all_s5();
    const Perm5 swap01({1, 0, 2, 3, 4});

    TwoValuednessReport report;
    report.even_triple = abc_of(rt);
    const auto first_odd =
        std::find_if(s5.begin(), s5.end(), [](const Perm5& p) { return p.parity() == -1; });
    report.odd_triple = abc_of(kq::apply(*first_odd, rt));

    auto symmetric = [](const Triple& t, const Triple& u) {
        return std::array<Complex, 6>{t[0] + u[0], t[1] + u[1], t[2] + u[2],
                                      t[0] * u[0], t[1] * u[1], t[2] * u[2]};
    };
    const auto sym_ref = symmetric(report.even_triple, report.odd_triple);

    for (const Perm5& p : s5) {
        const Triple t = abc_of(kq::apply(p, rt));
        if (p.parity() == 1) {
            report.even_spread = std::max(report.even_spread, triple_deviation(t, report.even_triple));
        } else {
            report.odd_spread = std::max(report.odd_spread, triple_deviation(t, report.odd_triple));
        }
        const Triple partner = abc_of(kq::apply(compose(p, swap01), rt));
        const auto sym = symmetric(t, partner);
        for (std::size_t i = 0; i < sym.size(); ++i) {
            report.pair_symmetric_spread =
                std::max(report.pair_symmetric_spread, relative_to(sym[i], sym_ref[i]));
        }
    }
    return report;
}

}  // namespace kq
