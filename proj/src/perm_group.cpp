#include "kq/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "kq/errors.hpp"

namespace kq {

namespace {

int parity_of(const std::array<int, 5>& image) {
    int inversions = 0;
    for (std::size_t i = 0; i < image.size(); ++i) {
        for (std::size_t j = i + 1; j < image.size(); ++j) {
            if (image[i] > image[j]) {
                ++inversions;
            }
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Perm5> enumerate_s5() {
    std::vector<Perm5> out;
    out.reserve(120);
    std::array<int, 5> image{0, 1, 2, 3, 4};
    do {
        out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

}  // namespace

Perm5::Perm5() : image_{0, 1, 2, 3, 4}, parity_(1) {}

Perm5::Perm5(const std::array<int, 5>& image) : image_(image) {
    std::array<bool, 5> hit{};
    for (int v : image_) {
        if (v < 0 || v > 4 || hit[static_cast<std::size_t>(v)]) {
            throw InvalidInput("Perm5: image is not a bijection on {0..4}");
        }
        hit[static_cast<std::size_t>(v)] = true;
    }
    parity_ = parity_of(image_);
}

Perm5 Perm5::inverse() const {
    std::array<int, 5> inv{};
    for (int i = 0; i < 5; ++i) {
        inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
    }
    return Perm5(inv);
}

const std::vector<Perm5>& all_s5() {
    static const std::vector<Perm5> s5 = enumerate_s5();
    return s5;
}

const std::vector<Perm5>& all_a5() {
    static const std::vector<Perm5> a5 = [] {
        std::vector<Perm5> out;
        std::copy_if(all_s5().begin(), all_s5().end(), std::back_inserter(out),
                     [](const Perm5& p) { return p.parity() == 1; });
        return out;
    }();
    return a5;
}

const std::vector<Perm5>& three_cycles() {
    static const std::vector<Perm5> cycles = [] {
        std::vector<Perm5> out;
        for (const Perm5& p : all_s5()) {
            int fixed = 0;
            for (int i = 0; i < 5; ++i) {
                fixed += p(i) == i ? 1 : 0;
            }
            // exactly two fixed points and even: the remaining three form a 3-cycle
            if (fixed == 2 && p.parity() == 1) {
                out.push_back(p);
            }
        }
        return out;
    }();
    return cycles;
}

Perm5 compose(const Perm5& p, const Perm5& q) {
    std::array<int, 5> image{};
    for (int i = 0; i < 5; ++i) {
        image[static_cast<std::size_t>(i)] = q(p(i));
    }
    return Perm5(image);
}

}  // namespace kq
