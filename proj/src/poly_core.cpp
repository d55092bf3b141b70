#include "kq/poly_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "kq/errors.hpp"

namespace kq {

namespace {

bool all_finite(std::span<const Complex> values) {
    return std::all_of(values.begin(), values.end(), [](Complex v) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
}

struct HornerResult {
    Complex value;
    Complex derivative;
};

HornerResult horner_with_derivative(const MonicPoly& p, Complex z) {
    Complex value{1.0, 0.0};
    Complex derivative{0.0, 0.0};
    for (const Complex& c : p.coeffs()) {
        derivative = derivative * z + value;
        value = value * z + c;
    }
    return {value, derivative};
}

}  // namespace

MonicPoly::MonicPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw InvalidInput("monic polynomial must have degree >= 1");
    }
    if (!all_finite(coeffs_)) {
        throw InvalidInput("monic polynomial has non-finite coefficients");
    }
}

Complex MonicPoly::coeff_of(int k) const {
    const int n = degree();
    if (k < 0 || k > n) {
        throw InvalidInput("coefficient index out of range");
    }
    if (k == n) {
        return {1.0, 0.0};
    }
    return coeffs_[static_cast<std::size_t>(n - 1 - k)];
}

double MonicPoly::max_coeff_magnitude() const {
    double m = 1.0;
    for (const Complex& c : coeffs_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

MonicPoly poly_from_roots(std::span<const Complex> roots) {
    if (roots.empty()) {
        throw InvalidInput("poly_from_roots: empty root list");
    }
    if (roots.size() > static_cast<std::size_t>(kMaxDegree)) {
        throw InvalidInput("poly_from_roots: more than 12 roots");
    }
    // full[k] is the coefficient of z^(m-k) for the running product of degree m.
    std::vector<Complex> full{Complex{1.0, 0.0}};
    for (const Complex& r : roots) {
        full.push_back(Complex{0.0, 0.0});
        for (std::size_t k = full.size() - 1; k > 0; --k) {
            full[k] -= r * full[k - 1];
        }
    }
    return MonicPoly(std::vector<Complex>(full.begin() + 1, full.end()));
}

Complex eval_poly(const MonicPoly& p, Complex z) {
    Complex value{1.0, 0.0};
    for (const Complex& c : p.coeffs()) {
        value = value * z + c;
    }
    return value;
}

std::vector<Complex> find_roots(const MonicPoly& p, const RootFinderOptions& opts) {
    const int n = p.degree();
    if (n < 1 || n > kMaxDegree) {
        throw InvalidInput("find_roots: degree must be in 1..12");
    }
    const auto& c = p.coeffs();
    if (n == 1) {
        return {-c[0]};
    }

    // Upper bound on root moduli: max_j |c_j|^(1/(j+1)).
    double radius = 0.0;
    for (int j = 0; j < n; ++j) {
        radius = std::max(radius, std::pow(std::abs(c[static_cast<std::size_t>(j)]), 1.0 / (j + 1)));
    }
    if (radius == 0.0) {
        return std::vector<Complex>(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    }

    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
    }

    const double bound = opts.residual_tol * std::max(1.0, p.max_coeff_magnitude());
    // Horner cannot resolve |p(z)| below its rounding error, which for large |z|
    // and degree 12 sits well above `bound`; accept residuals at that floor too.
    auto floor_at = [&](Complex zk) {
        const double r = std::abs(zk);
        double sum = 1.0;
        for (const Complex& ck : c) {
            sum = sum * r + std::abs(ck);
        }
        return 4.0 * n * std::numeric_limits<double>::epsilon() * sum;
    };
    std::vector<Complex> residual(static_cast<std::size_t>(n));
    double worst = std::numeric_limits<double>::infinity();
    int polish_left = 2;

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        worst = 0.0;
        bool settled = true;
        for (std::size_t k = 0; k < z.size(); ++k) {
            residual[k] = eval_poly(p, z[k]);
            const double mag = std::abs(residual[k]);
            worst = std::max(worst, mag);
            settled = settled && mag <= std::max(bound, floor_at(z[k]));
        }
        if (settled) {
            if (polish_left == 0) {
                return z;
            }
            --polish_left;
        }

        // Gauss-Seidel style Aberth update.
        for (std::size_t k = 0; k < z.size(); ++k) {
            const auto [value, derivative] = horner_with_derivative(p, z[k]);
            if (value == Complex{0.0, 0.0}) {
                continue;
            }
            Complex repulsion{0.0, 0.0};
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != k) {
                    const Complex d = z[k] - z[j];
                    if (d != Complex{0.0, 0.0}) {
                        repulsion += 1.0 / d;
                    }
                }
            }
            const Complex newton = value / derivative;
            const Complex denom = 1.0 - newton * repulsion;
            Complex step = (std::isfinite(std::abs(newton)) && denom != Complex{0.0, 0.0})
                               ? newton / denom
                               : Complex{radius * 1e-3, radius * 1e-3};
            if (!std::isfinite(std::abs(step))) {
                step = Complex{radius * 1e-3, radius * 1e-3};
            }
            z[k] -= step;
        }
    }

    throw NumericFailure("find_roots: no convergence within " +
                             std::to_string(opts.max_iterations) +
                             " iterations (worst residual " + std::to_string(worst) + ")",
                         worst);
}

std::vector<Complex> power_sums(std::span<const Complex> values, int k_max) {
    if (k_max < 1) {
        throw InvalidInput("power_sums: k_max must be >= 1");
    }
    std::vector<Complex> sums(static_cast<std::size_t>(k_max), Complex{0.0, 0.0});
    for (const Complex& v : values) {
        Complex power = v;
        for (int k = 0; k < k_max; ++k) {
            sums[static_cast<std::size_t>(k)] += power;
            power *= v;
        }
    }
    return sums;
}

std::vector<Complex> elementary_symmetric(std::span<const Complex> values) {
    if (values.empty()) {
        throw InvalidInput("elementary_symmetric: empty value list");
    }
    // e[k] for the running prefix; e[0] = 1.
    std::vector<Complex> e(values.size() + 1, Complex{0.0, 0.0});
    e[0] = 1.0;
    std::size_t seen = 0;
    for (const Complex& v : values) {
        ++seen;
        for (std::size_t k = seen; k > 0; --k) {
            e[k] += v * e[k - 1];
        }
    }
    return std::vector<Complex>(e.begin() + 1, e.end());
}

std::vector<Complex> elementary_from_power_sums(std::span<const Complex> p) {
    // k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    std::vector<Complex> e(p.size() + 1, Complex{0.0, 0.0});
    e[0] = 1.0;
    for (std::size_t k = 1; k <= p.size(); ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 1; i <= k; ++i) {
            const double sign = (i % 2 == 1) ? 1.0 : -1.0;
            acc += sign * e[k - i] * p[i - 1];
        }
        e[k] = acc / static_cast<double>(k);
    }
    return std::vector<Complex>(e.begin() + 1, e.end());
}

Complex sqrt_discriminant(const RootTuple& rt) {
    Complex product{1.0, 0.0};
    for (std::size_t i = 0; i < rt.size(); ++i) {
        for (std::size_t j = i + 1; j < rt.size(); ++j) {
            product *= rt[i] - rt[j];
        }
    }
    return product;
}

double root_scale(const RootTuple& rt) { return value_scale(rt); }

bool is_degenerate(const RootTuple& rt) {
    const double scale = root_scale(rt);
    return std::abs(sqrt_discriminant(rt)) < kDegeneracyFactor * std::pow(scale, 10);
}

double value_scale(std::span<const Complex> values) {
    double m = 1.0;
    for (const Complex& v : values) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double rel_diff(Complex a, Complex b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<Complex> cluster_values(std::span<const Complex> values, double tol,
                                    bool reject_ambiguous) {
    const std::size_t n = values.size();
    const double link = std::max(tol, kAbsoluteFloor) * value_scale(values);

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(values[i] - values[j]) <= link) {
                const std::size_t ri = find(i);
                const std::size_t rj = find(j);
                // keep the smaller index as root so the representative is the first member
                if (ri != rj) {
                    parent[std::max(ri, rj)] = std::min(ri, rj);
                }
            }
        }
    }

    if (reject_ambiguous) {
        double closest = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (find(i) != find(j)) {
                    closest = std::min(closest, std::abs(values[i] - values[j]));
                }
            }
        }
        if (closest < 10.0 * link) {
            throw NumericFailure(
                "ambiguous deduplication: distinct clusters within 10x of the tolerance "
                "(use a smaller tolerance or treat the instance as near-degenerate)",
                closest);
        }
    }

    std::vector<Complex> reps;
    for (std::size_t i = 0; i < n; ++i) {
        if (find(i) == i) {
            reps.push_back(values[i]);
        }
    }
    return reps;
}

Assignment optimal_assignment(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw InvalidInput("optimal_assignment: lists differ in length");
    }
    const std::size_t n = a.size();
    if (n > 16) {
        throw InvalidInput("optimal_assignment: at most 16 entries");
    }
    // Bitmask DP over the set of used b-indices; row i is a[popcount(mask)].
    const std::size_t states = std::size_t{1} << n;
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> cost(states, inf);
    std::vector<int> choice(states, -1);
    cost[0] = 0.0;
    for (std::size_t mask = 0; mask < states; ++mask) {
        if (cost[mask] == inf) {
            continue;
        }
        const auto row = static_cast<std::size_t>(std::popcount(mask));
        if (row == n) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::size_t{1} << j)) {
                continue;
            }
            const std::size_t next = mask | (std::size_t{1} << j);
            const double c = cost[mask] + std::abs(a[row] - b[j]);
            if (c < cost[next]) {
                cost[next] = c;
                choice[next] = static_cast<int>(j);
            }
        }
    }

    Assignment out;
    out.perm.assign(n, -1);
    std::size_t mask = states - 1;
    for (std::size_t row = n; row > 0; --row) {
        const int j = choice[mask];
        out.perm[row - 1] = j;
        out.max_distance = std::max(out.max_distance, std::abs(a[row - 1] - b[static_cast<std::size_t>(j)]));
        mask &= ~(std::size_t{1} << static_cast<std::size_t>(j));
    }
    return out;
}

}  // namespace kq
