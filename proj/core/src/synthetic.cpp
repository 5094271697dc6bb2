#include "hsbs/synthetic.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hsbs/error.hpp"
#include "hsbs/key_value.hpp"
#include "hsbs/random.hpp"

namespace hsbs {

std::string_view to_string(BandRole role) {
    switch (role) {
        case BandRole::informative: return "informative";
        case BandRole::redundant: return "redundant";
        case BandRole::synergy: return "synergy";
        case BandRole::noise: return "noise";
    }
    return "?";
}

void validate(const SyntheticSpec& spec) {
    if (spec.width == 0 || spec.height == 0) throw SpecError("width and height must be positive");
    if (spec.n_classes == 0) throw SpecError("n_classes must be positive");
    if (spec.total_bands() == 0) throw SpecError("spec produces no bands");
    if (spec.n_redundant > 0 && spec.n_informative == 0) {
        throw SpecError("redundant bands need at least one informative parent band");
    }
    if (spec.synergy_pairs > 0 && spec.n_classes < 2) throw SpecError("synergy pairs need at least 2 classes");
    if (spec.synergy_pairs > 16) throw SpecError("at most 16 synergy pairs are supported");
    if (spec.width * spec.height < spec.n_classes) {
        throw SpecError("fewer pixels than classes: every class must occur");
    }
    if (!(spec.noise_sigma >= 0.0) || !std::isfinite(spec.noise_sigma)) {
        throw SpecError("noise_sigma must be finite and non-negative");
    }
}

std::vector<BandDesign> synthetic_layout(const SyntheticSpec& spec) {
    validate(spec);
    std::vector<BandDesign> layout;
    layout.reserve(spec.total_bands());
    for (std::size_t i = 0; i < spec.n_informative; ++i) {
        layout.push_back({BandRole::informative, i, i, 100.0 + 10.0 * static_cast<double>(i), 10.0});
    }
    for (std::size_t r = 0; r < spec.n_redundant; ++r) {
        layout.push_back({BandRole::redundant, r % spec.n_informative, r, kRedundantOffset, kRedundantGain});
    }
    const std::size_t first_synergy = layout.size();
    for (std::size_t s = 0; s < spec.synergy_pairs; ++s) {
        const std::size_t a = first_synergy + 2 * s;
        layout.push_back({BandRole::synergy, a + 1, s, 100.0, 50.0});
        layout.push_back({BandRole::synergy, a, s, 100.0, 50.0});
    }
    for (std::size_t n = 0; n < spec.n_noise; ++n) layout.push_back({BandRole::noise, 0, n, 100.0, 0.0});
    return layout;
}

SyntheticDataset generate_synthetic(const SyntheticSpec& spec) {
    const auto layout = synthetic_layout(spec);
    const std::size_t pixels = spec.width * spec.height;
    const std::size_t n_classes = spec.n_classes;
    const std::size_t combos = n_classes << spec.synergy_pairs;

    std::vector<std::uint32_t> combo(pixels);
    for (std::size_t p = 0; p < pixels; ++p) combo[p] = static_cast<std::uint32_t>(p % combos);
    Rng rng(spec.seed);
    rng.shuffle(std::span<std::uint32_t>(combo));

    std::vector<int> labels(pixels);
    for (std::size_t p = 0; p < pixels; ++p) labels[p] = static_cast<int>(combo[p] % n_classes) + 1;

    const double sigma = spec.noise_sigma;
    std::vector<double> values(layout.size() * pixels);
    for (std::size_t b = 0; b < layout.size(); ++b) {
        const BandDesign& d = layout[b];
        double* plane = values.data() + b * pixels;
        for (std::size_t p = 0; p < pixels; ++p) {
            const double noise = sigma * rng.normal();
            const std::size_t cls = combo[p] % n_classes;
            switch (d.role) {
                case BandRole::informative:
                    plane[p] = d.offset + d.gain * static_cast<double>(cls) + noise;
                    break;
                case BandRole::redundant:
                    plane[p] = d.gain * values[d.parent * pixels + p] + d.offset + noise;
                    break;
                case BandRole::synergy: {
                    const std::size_t bit = (combo[p] / n_classes >> d.group) & 1U;
                    const bool second = d.parent < b;
                    const std::size_t level = second ? (bit ^ (cls & 1U)) : bit;
                    plane[p] = d.offset + d.gain * static_cast<double>(level) + noise;
                    break;
                }
                case BandRole::noise:
                    plane[p] = d.offset + noise;
                    break;
            }
        }
    }
    return {HyperCube(spec.width, spec.height, layout.size(), std::move(values)),
            GroundTruth(spec.width, spec.height, std::move(labels))};
}

SyntheticSpec parse_synthetic_spec(std::string_view text) {
    const auto kv = KeyValues::parse(text);
    SyntheticSpec spec;
    for (const auto& [key, value] : kv.entries()) {
        if (key == "width") {
            spec.width = parse_uint(value, key);
        } else if (key == "height") {
            spec.height = parse_uint(value, key);
        } else if (key == "n_classes") {
            spec.n_classes = parse_uint(value, key);
        } else if (key == "n_informative") {
            spec.n_informative = parse_uint(value, key);
        } else if (key == "n_redundant") {
            spec.n_redundant = parse_uint(value, key);
        } else if (key == "n_noise") {
            spec.n_noise = parse_uint(value, key);
        } else if (key == "noise_sigma") {
            spec.noise_sigma = parse_double(value, key);
        } else if (key == "synergy_pairs") {
            spec.synergy_pairs = parse_uint(value, key);
        } else if (key == "seed") {
            spec.seed = parse_uint(value, key);
        } else {
            throw FormatError("unknown synthetic spec key `" + key + "`");
        }
    }
    validate(spec);
    return spec;
}

SyntheticSpec load_synthetic_spec(const std::filesystem::path& path) {
    const auto kv = KeyValues::load(path);  // surfaces IoError with the path
    std::string text;
    for (const auto& [key, value] : kv.entries()) text += key + " = " + value + "\n";
    try {
        return parse_synthetic_spec(text);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string format_synthetic_spec(const SyntheticSpec& spec) {
    return fmt::format(
        "width = {}\nheight = {}\nn_classes = {}\nn_informative = {}\nn_redundant = {}\nn_noise = {}\n"
        "noise_sigma = {}\nsynergy_pairs = {}\nseed = {}\n",
        spec.width, spec.height, spec.n_classes, spec.n_informative, spec.n_redundant, spec.n_noise,
        spec.noise_sigma, spec.synergy_pairs, spec.seed);
}

}  // namespace hsbs
