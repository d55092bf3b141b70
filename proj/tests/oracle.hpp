#pragma once

// Test-only reference evaluations in 50-digit arithmetic. These follow the
// defining formulas term by term and share no code with the library.

#include <array>
#include <complex>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "kq/poly_core.hpp"

namespace kq::oracle {

using Real = boost::multiprecision::cpp_bin_float_50;
using HP = boost::multiprecision::cpp_complex_50;

inline HP lift(Complex z) { return HP(Real(z.real()), Real(z.imag())); }

inline Complex lower(const HP& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// sum_{m=0..4} sum_{n=1..4} sin(2 n pi / 5) x_m x_{m+n}^2 x_{m+2n}^2, all 20 terms.
inline HP f(const std::array<HP, 5>& x) {
    const Real pi = boost::math::constants::pi<Real>();
    HP acc(0);
    for (int m = 0; m < 5; ++m) {
        for (int n = 1; n <= 4; ++n) {
            const Real s = boost::multiprecision::sin(Real(2 * n) * pi / 5);
            const HP& b = x[(m + n) % 5];
            const HP& c = x[(m + 2 * n) % 5];
            acc += HP(s) * x[m] * b * b * c * c;
        }
    }
    return acc;
}

inline std::array<HP, 5> lift(const RootTuple& rt) {
    std::array<HP, 5> x;
    for (int i = 0; i < 5; ++i) {
        x[i] = lift(rt[i]);
    }
    return x;
}

/// (f, f_0, ..., f_4) with the argument lists written out literally.
inline std::array<HP, 6> family(const RootTuple& rt) {
    const auto x = lift(rt);
    return {f(x),
            f({x[0], x[3], x[4], x[1], x[2]}),
            f({x[1], x[4], x[0], x[2], x[3]}),
            f({x[2], x[0], x[1], x[3], x[4]}),
            f({x[3], x[1], x[2], x[4], x[0]}),
            f({x[4], x[2], x[3], x[0], x[1]})};
}

}  // namespace kq::oracle
