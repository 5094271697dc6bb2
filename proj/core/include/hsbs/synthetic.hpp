#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hsbs/cube.hpp"
#include "hsbs/ground_truth.hpp"

namespace hsbs {

/// Recipe for a cube with known band structure.
///
/// Band layout (0-based): informative, then redundant, then the synergy pairs
/// (two adjacent bands per pair), then noise.
struct SyntheticSpec {
    std::size_t width = 64;
    std::size_t height = 64;
    std::size_t n_classes = 4;
    std::size_t n_informative = 4;
    std::size_t n_redundant = 4;
    std::size_t n_noise = 8;
    double noise_sigma = 1.0;
    std::size_t synergy_pairs = 0;
    std::uint64_t seed = 1;

    std::size_t total_bands() const { return n_informative + n_redundant + n_noise + 2 * synergy_pairs; }

    friend bool operator==(const SyntheticSpec&, const SyntheticSpec&) = default;
};

enum class BandRole { informative, redundant, synergy, noise };

std::string_view to_string(BandRole role);

/// How one synthetic band is built. For redundant bands `parent` is the
/// informative band copied; for synergy bands `parent` is the pair partner.
struct BandDesign {
    BandRole role;
    std::size_t parent = 0;
    std::size_t group = 0;  // index within its role (pair index for synergy)
    double offset = 0.0;
    double gain = 0.0;
};

/// Redundant band r is `gain * parent + offset + noise`.
inline constexpr double kRedundantGain = 1.5;
inline constexpr double kRedundantOffset = 7.0;

/// Throws SpecError when the spec cannot be realized: no bands, redundant
/// bands without informative parents, fewer pixels than classes, or
/// synergy pairs with fewer than two classes.
void validate(const SyntheticSpec& spec);

std::vector<BandDesign> synthetic_layout(const SyntheticSpec& spec);

struct SyntheticDataset {
    HyperCube cube;
    GroundTruth gt;
};

/// Builds the dataset. Pure function of `spec`.
///
/// Pixel assignment: pixel p first takes combination m = p mod (C * 2^S) with
/// class index m mod C and synergy bit s = ((m / C) >> s) & 1, so classes and
/// synergy bits are exactly balanced whenever W*H is a multiple of C * 2^S.
/// The assignments are then shuffled with the seeded Rng. Every pixel is
/// labeled (label = class index + 1).
///
/// Sample values, drawn band by band then row-major, one normal draw each:
///   informative i: 100 + 10 i + 10 * class + sigma * n
///   redundant:     1.5 * parent + 7 + sigma * n
///   synergy:       100 + 50 * level + sigma * n, with the first band of a pair
///                  at level = bit and the second at level = bit xor parity(class)
///   noise:         100 + sigma * n
SyntheticDataset generate_synthetic(const SyntheticSpec& spec);

SyntheticSpec parse_synthetic_spec(std::string_view text);
SyntheticSpec load_synthetic_spec(const std::filesystem::path& path);
std::string format_synthetic_spec(const SyntheticSpec& spec);

}  // namespace hsbs
