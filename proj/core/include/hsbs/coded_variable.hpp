#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hsbs {

/// Integer-coded sample vector over the labeled pixels of a dataset.
///
/// Every code is < alphabet_size. Variables derived from the same (cube, GT)
/// pair share one pixel order and length.
class CodedVariable {
public:
    CodedVariable() = default;
    /// Throws ContractError if alphabet_size is 0 or any code is out of range.
    CodedVariable(std::vector<std::uint32_t> codes, std::uint32_t alphabet_size);

    std::span<const std::uint32_t> codes() const noexcept { return codes_; }
    std::uint32_t alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t size() const noexcept { return codes_.size(); }
    bool empty() const noexcept { return codes_.empty(); }
    std::uint32_t operator[](std::size_t i) const { return codes_[i]; }

    friend bool operator==(const CodedVariable&, const CodedVariable&) = default;

private:
    std::vector<std::uint32_t> codes_;
    std::uint32_t alphabet_size_ = 1;
};

}  // namespace hsbs
