#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hsbs/coded_variable.hpp"

namespace hsbs {

/// Dense count table over the product alphabet of 1 to 3 coded variables.
///
/// Cell index is row-major over `dims` (last axis fastest). Only built when
/// the product alphabet is at most kMaxDenseCells; larger products go through
/// a sort-based path in the entropy functions.
class JointHistogram {
public:
    static constexpr std::size_t kMaxDenseCells = std::size_t{1} << 22;

    /// Throws ContractError on length mismatch, an empty input or a product
    /// alphabet above kMaxDenseCells.
    explicit JointHistogram(std::span<const CodedVariable* const> vars);

    std::span<const std::uint32_t> dims() const noexcept { return dims_; }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }
    std::uint64_t total() const noexcept { return total_; }

    /// Sums out every axis not listed in `keep` (ascending axis numbers).
    JointHistogram marginal(std::span<const std::size_t> keep) const;

    /// Plug-in entropy in bits of the distribution this table describes.
    double entropy() const;

    static bool fits(std::span<const CodedVariable* const> vars);

private:
    JointHistogram() = default;

    std::vector<std::uint32_t> dims_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

/// Plug-in entropy (bits) from counts: log2 N - (1/N) sum n log2 n, empty cells skipped.
double entropy_from_counts(std::span<const std::uint64_t> counts, std::uint64_t total);

// All measures below use plug-in (empirical histogram) probabilities and log base 2.
// Every multi-argument measure throws ContractError when lengths differ or inputs are empty.

/// Clamped to log2(alphabet_size) so the bound holds exactly.
double entropy(const CodedVariable& x);
double joint_entropy(const CodedVariable& a, const CodedVariable& b);
double joint_entropy(const CodedVariable& a, const CodedVariable& b, const CodedVariable& c);

/// H(a) + H(b) - H(a,b), with round-off below zero clamped to 0.
double mutual_info(const CodedVariable& a, const CodedVariable& b);

/// I(a; (b,c)) = H(a) + H(b,c) - H(a,b,c), clamped at 0 like mutual_info.
double mi_joined(const CodedVariable& a, const CodedVariable& b, const CodedVariable& c);

/// Interaction information I(a;b;c) = I((a,b);c) - I(a;c) - I(b;c), i.e.
/// mi_joined(c, a, b) - mutual_info(a, c) - mutual_info(b, c).
///
/// Symmetric in its three arguments. Signed: negative means redundancy,
/// positive means a and b together say more about c than separately. Never
/// clamped.
double interaction_info(const CodedVariable& a, const CodedVariable& b, const CodedVariable& c);

/// Pairs two variables pixel-wise into one variable over the observed pairs.
/// Codes are dense ranks of the (a, b) pairs in lexicographic order.
CodedVariable join(const CodedVariable& a, const CodedVariable& b);

}  // namespace hsbs
