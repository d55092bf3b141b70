#include "kq/instances.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

#include <json.hpp>

#include "kq/errors.hpp"

namespace kq {

namespace {

constexpr int kMaxDraws = 10000;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// [0, 1) from the top 53 bits; std::uniform_real_distribution is not
// specified bit-exactly across standard libraries.
double unit(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

std::array<Complex, 5> parse_five(const nlohmann::json& arr, const char* key) {
    if (!arr.is_array() || arr.size() != 5) {
        throw InvalidInput(std::string("\"") + key + "\" must be an array of 5 [re, im] pairs");
    }
    std::array<Complex, 5> out{};
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& pair = arr[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw InvalidInput(std::string("\"") + key + "\" entries must be [re, im] number pairs");
        }
        const double re = pair[0].get<double>();
        const double im = pair[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im)) {
            throw InvalidInput("non-finite value in instance file");
        }
        out[i] = Complex{re, im};
    }
    return out;
}

}  // namespace

RootTuple random_instance(std::uint64_t seed, std::int64_t index) {
    std::mt19937_64 gen(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(index)));
    constexpr double inner2 = kAnnulusInner * kAnnulusInner;
    constexpr double outer2 = kAnnulusOuter * kAnnulusOuter;

    for (int draw = 0; draw < kMaxDraws; ++draw) {
        RootTuple rt{};
        for (Complex& z : rt) {
            const double radius = std::sqrt(inner2 + unit(gen) * (outer2 - inner2));
            const double angle = 2.0 * std::numbers::pi * unit(gen);
            z = std::polar(radius, angle);
        }
        bool separated = true;
        for (std::size_t i = 0; i < rt.size() && separated; ++i) {
            for (std::size_t j = i + 1; j < rt.size(); ++j) {
                if (std::abs(rt[i] - rt[j]) < kMinSeparation) {
                    separated = false;
                    break;
                }
            }
        }
        if (separated) {
            return rt;
        }
    }
    throw Error("random_instance: rejection sampling exhausted");
}

InstanceSpec InstanceSpec::from_roots(const std::array<Complex, 5>& roots) {
    InstanceSpec s;
    s.source = Source::Roots;
    s.values = roots;
    return s;
}

InstanceSpec InstanceSpec::from_coefficients(const std::array<Complex, 5>& coeffs) {
    InstanceSpec s;
    s.source = Source::Coefficients;
    s.values = coeffs;
    return s;
}

InstanceSpec InstanceSpec::from_generator(std::uint64_t seed, std::int64_t index) {
    InstanceSpec s;
    s.source = Source::Generator;
    s.seed = seed;
    s.index = index;
    return s;
}

InstanceSpec read_instance_file(const std::filesystem::path& path, InstanceSpec::Source expected) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open instance file: " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("malformed instance file " + path.string() + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw InvalidInput("instance file must hold a JSON object");
    }
    const bool has_roots = doc.contains("roots");
    const bool has_coeffs = doc.contains("coefficients");
    if (has_roots == has_coeffs) {
        throw InvalidInput("instance file must hold exactly one of \"roots\" or \"coefficients\"");
    }
    if (expected == InstanceSpec::Source::Roots) {
        if (!has_roots) {
            throw InvalidInput("--roots file has no \"roots\" entry");
        }
        return InstanceSpec::from_roots(parse_five(doc["roots"], "roots"));
    }
    if (expected == InstanceSpec::Source::Coefficients) {
        if (!has_coeffs) {
            throw InvalidInput("--coeffs file has no \"coefficients\" entry");
        }
        return InstanceSpec::from_coefficients(parse_five(doc["coefficients"], "coefficients"));
    }
    throw InvalidInput("instance files hold roots or coefficients, not generator settings");
}

RootTuple instance_roots(const InstanceSpec& spec) {
    switch (spec.source) {
        case InstanceSpec::Source::Roots:
            return spec.values;
        case InstanceSpec::Source::Coefficients: {
            const auto found =
                find_roots(MonicPoly(std::vector<Complex>(spec.values.begin(), spec.values.end())));
            RootTuple rt{};
            std::copy(found.begin(), found.end(), rt.begin());
            return rt;
        }
        case InstanceSpec::Source::Generator:
            return random_instance(spec.seed, spec.index);
    }
    throw InvalidInput("unknown instance source");
}

}  // namespace kq
