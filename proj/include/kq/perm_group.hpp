#pragma once

#include <array>
#include <vector>

#include "kq/poly_core.hpp"

namespace kq {

/// A permutation of the five root labels {0, ..., 4}.
///
/// Action convention ("pull"): apply(p, rt)[i] = rt[p(i)]. compose() is
/// defined so that apply(compose(p, q), rt) == apply(p, apply(q, rt)),
/// which forces compose(p, q)(i) = q(p(i)).
class Perm5 {
public:
    /// Identity.
    Perm5();

    /// Throws InvalidInput unless `image` is a bijection on {0..4}.
    explicit Perm5(const std::array<int, 5>& image);

    int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
    const std::array<int, 5>& image() const { return image_; }

    /// +1 for even, -1 for odd (parity of the inversion count).
    int parity() const { return parity_; }

    Perm5 inverse() const;

    friend bool operator==(const Perm5& a, const Perm5& b) { return a.image_ == b.image_; }

private:
    std::array<int, 5> image_;
    int parity_;
};

/// All 120 permutations, lexicographic by image.
const std::vector<Perm5>& all_s5();

/// The 60 even permutations, in the same lexicographic order.
const std::vector<Perm5>& all_a5();

/// The 20 permutations that cycle three labels and fix two.
const std::vector<Perm5>& three_cycles();

Perm5 compose(const Perm5& p, const Perm5& q);

template <typename T>
std::array<T, 5> apply(const Perm5& p, const std::array<T, 5>& values) {
    std::array<T, 5> out{};
    for (int i = 0; i < 5; ++i) {
        out[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(p(i))];
    }
    return out;
}

}  // namespace kq
