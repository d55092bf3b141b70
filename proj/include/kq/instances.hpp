#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>

#include "kq/poly_core.hpp"

namespace kq {

inline constexpr double kAnnulusInner = 0.5;
inline constexpr double kAnnulusOuter = 1.5;
inline constexpr double kMinSeparation = 1e-2;

/// Five roots drawn area-uniformly from the annulus 0.5 <= |z| <= 1.5, with
/// every pairwise distance >= 1e-2. The stream depends only on (seed, index).
RootTuple random_instance(std::uint64_t seed, std::int64_t index);

/// Where a single instance comes from. Exactly one source is populated.
struct InstanceSpec {
    enum class Source { Coefficients, Roots, Generator };

    Source source = Source::Generator;
    /// Roots (x0..x4) or monic coefficients (z^4 .. z^0), depending on `source`.
    std::array<Complex, 5> values{};
    std::uint64_t seed = 0;
    std::int64_t index = 0;

    static InstanceSpec from_roots(const std::array<Complex, 5>& roots);
    static InstanceSpec from_coefficients(const std::array<Complex, 5>& coeffs);
    static InstanceSpec from_generator(std::uint64_t seed, std::int64_t index);
};

/// Reads {"roots": [[re, im] x5]} or {"coefficients": [[re, im] x5]}.
/// `expected` names the source the caller asked for; a file holding the other
/// key, malformed JSON, or wrong shapes raise InvalidInput.
InstanceSpec read_instance_file(const std::filesystem::path& path, InstanceSpec::Source expected);

/// Labelled roots of the instance. Coefficient input is solved with
/// find_roots and labelled in the order the root finder returns.
RootTuple instance_roots(const InstanceSpec& spec);

}  // namespace kq
