#include "hsbs/info.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hsbs/error.hpp"

namespace hsbs {

namespace {

void check_lengths(std::span<const CodedVariable* const> vars) {
    if (vars.empty() || vars.front()->empty()) throw ContractError("information measure on an empty variable");
    for (const CodedVariable* v : vars) {
        if (v->size() != vars.front()->size()) {
            throw ContractError("variable lengths differ: " + std::to_string(vars.front()->size()) + " vs " +
                                std::to_string(v->size()));
        }
    }
}

// Entropy of the product variable via sorting mixed-radix keys; used when the
// dense table would be too large. Alphabets are folded to observed ranks first
// so the key never overflows.
double entropy_by_sorting(std::span<const CodedVariable* const> vars) {
    const std::size_t n = vars.front()->size();
    std::vector<std::uint64_t> keys(n, 0);
    std::vector<std::uint32_t> ranks(n);
    for (const CodedVariable* v : vars) {
        // Rank codes by value so each axis needs at most n distinct slots.
        std::vector<std::uint32_t> seen(v->codes().begin(), v->codes().end());
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (std::size_t i = 0; i < n; ++i) {
            ranks[i] = static_cast<std::uint32_t>(std::lower_bound(seen.begin(), seen.end(), (*v)[i]) - seen.begin());
        }
        const std::uint64_t radix = seen.size();
        for (std::size_t i = 0; i < n; ++i) keys[i] = keys[i] * radix + ranks[i];
        // Re-rank the running key so the next multiplication cannot overflow.
        std::vector<std::uint64_t> distinct(keys);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t i = 0; i < n; ++i) {
            keys[i] = static_cast<std::uint64_t>(std::lower_bound(distinct.begin(), distinct.end(), keys[i]) -
                                                 distinct.begin());
        }
    }
    std::vector<std::uint64_t> counts;
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && keys[j] == keys[i]) ++j;
        counts.push_back(j - i);
        i = j;
    }
    return entropy_from_counts(counts, n);
}

double entropy_of(std::span<const CodedVariable* const> vars) {
    check_lengths(vars);
    if (JointHistogram::fits(vars)) return JointHistogram(vars).entropy();
    return entropy_by_sorting(vars);
}

double clamp_mi(double mi) { return mi < 0.0 ? 0.0 : mi; }

}  // namespace

double entropy_from_counts(std::span<const std::uint64_t> counts, std::uint64_t total) {
    if (total == 0) return 0.0;
    std::vector<std::uint64_t> occupied;
    for (std::uint64_t c : counts) {
        if (c > 0) occupied.push_back(c);
    }
    // A single occupied cell is log2(N) - log2(N); keep it an exact zero.
    if (occupied.size() <= 1) return 0.0;
    // Summing in count order makes the result independent of cell layout, so
    // H(a, b) and H(b, a) agree bit for bit.
    std::sort(occupied.begin(), occupied.end());
    double sum = 0.0;
    for (std::uint64_t c : occupied) {
        const double n = static_cast<double>(c);
        sum += n * std::log2(n);
    }
    const double t = static_cast<double>(total);
    return std::log2(t) - sum / t;
}

bool JointHistogram::fits(std::span<const CodedVariable* const> vars) {
    std::size_t cells = 1;
    for (const CodedVariable* v : vars) {
        cells *= v->alphabet_size();
        if (cells > kMaxDenseCells) return false;
    }
    return true;
}

JointHistogram::JointHistogram(std::span<const CodedVariable* const> vars) {
    check_lengths(vars);
    if (vars.size() > 3) throw ContractError("JointHistogram supports at most 3 variables");
    if (!fits(vars)) throw ContractError("product alphabet too large for a dense histogram");
    std::size_t cells = 1;
    for (const CodedVariable* v : vars) {
        dims_.push_back(v->alphabet_size());
        cells *= v->alphabet_size();
    }
    counts_.assign(cells, 0);
    const std::size_t n = vars.front()->size();
    switch (vars.size()) {
        case 1: {
            const auto a = vars[0]->codes();
            for (std::size_t i = 0; i < n; ++i) ++counts_[a[i]];
            break;
        }
        case 2: {
            const auto a = vars[0]->codes();
            const auto b = vars[1]->codes();
            const std::size_t nb = dims_[1];
            for (std::size_t i = 0; i < n; ++i) ++counts_[a[i] * nb + b[i]];
            break;
        }
        default: {
            const auto a = vars[0]->codes();
            const auto b = vars[1]->codes();
            const auto c = vars[2]->codes();
            const std::size_t nb = dims_[1];
            const std::size_t nc = dims_[2];
            for (std::size_t i = 0; i < n; ++i) ++counts_[(a[i] * nb + b[i]) * nc + c[i]];
            break;
        }
    }
    total_ = n;
}

JointHistogram JointHistogram::marginal(std::span<const std::size_t> keep) const {
    JointHistogram out;
    out.total_ = total_;
    for (std::size_t axis : keep) {
        if (axis >= dims_.size()) throw ContractError("marginal: axis out of range");
        out.dims_.push_back(dims_[axis]);
    }
    std::size_t cells = 1;
    for (auto d : out.dims_) cells *= d;
    out.counts_.assign(cells, 0);

    std::array<std::size_t, 3> index{};
    for (std::size_t cell = 0; cell < counts_.size(); ++cell) {
        std::size_t rest = cell;
        for (std::size_t axis = dims_.size(); axis-- > 0;) {
            index[axis] = rest % dims_[axis];
            rest /= dims_[axis];
        }
        std::size_t target = 0;
        for (std::size_t k = 0; k < keep.size(); ++k) target = target * out.dims_[k] + index[keep[k]];
        out.counts_[target] += counts_[cell];
    }
    return out;
}

double JointHistogram::entropy() const { return entropy_from_counts(counts_, total_); }

double entropy(const CodedVariable& x) {
    const std::array<const CodedVariable*, 1> vars{&x};
    // Round-off can push a uniform histogram a few ulps past the bound.
    return std::min(entropy_of(vars), std::log2(static_cast<double>(x.alphabet_size())));
}

double joint_entropy(const CodedVariable& a, const CodedVariable& b) {
    const std::array<const CodedVariable*, 2> vars{&a, &b};
    return entropy_of(vars);
}

double joint_entropy(const CodedVariable& a, const CodedVariable& b, const CodedVariable& c) {
    const std::array<const CodedVariable*, 3> vars{&a, &b, &c};
    return entropy_of(vars);
}

double mutual_info(const CodedVariable& a, const CodedVariable& b) {
    const std::array<const CodedVariable*, 2> vars{&a, &b};
    check_lengths(vars);
    if (JointHistogram::fits(vars)) {
        const JointHistogram ab(vars);
        const std::array<std::size_t, 1> ka{0};
        const std::array<std::size_t, 1> kb{1};
        return clamp_mi(ab.marginal(ka).entropy() + ab.marginal(kb).entropy() - ab.entropy());
    }
    return clamp_mi(entropy(a) + entropy(b) - joint_entropy(a, b));
}

double mi_joined(const CodedVariable& a, const CodedVariable& b, const CodedVariable& c) {
    const std::array<const CodedVariable*, 3> vars{&a, &b, &c};
    check_lengths(vars);
    return clamp_mi(entropy(a) + joint_entropy(b, c) - joint_entropy(a, b, c));
}

double interaction_info(const CodedVariable& a, const CodedVariable& b, const CodedVariable& c) {
    const std::array<const CodedVariable*, 3> vars{&a, &b, &c};
    check_lengths(vars);
    if (!JointHistogram::fits(vars)) return mi_joined(c, a, b) - mutual_info(a, c) - mutual_info(b, c);

    // One pass over the samples; every entropy comes from marginals of the
    // same table, which reproduces the direct histograms cell for cell.
    const JointHistogram abc(vars);
    auto h = [&abc](std::initializer_list<std::size_t> axes) {
        const std::vector<std::size_t> keep(axes);
        return abc.marginal(keep).entropy();
    };
    const double h_a = h({0});
    const double h_b = h({1});
    const double h_c = h({2});
    const double h_ab = h({0, 1});
    const double h_ac = h({0, 2});
    const double h_bc = h({1, 2});
    const double h_abc = abc.entropy();

    const double i_ab_c = clamp_mi(h_ab + h_c - h_abc);
    const double i_ac = clamp_mi(h_a + h_c - h_ac);
    const double i_bc = clamp_mi(h_b + h_c - h_bc);
    return i_ab_c - i_ac - i_bc;
}

CodedVariable join(const CodedVariable& a, const CodedVariable& b) {
    const std::array<const CodedVariable*, 2> vars{&a, &b};
    check_lengths(vars);
    std::vector<std::uint64_t> keys(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) keys[i] = std::uint64_t{a[i]} * b.alphabet_size() + b[i];
    std::vector<std::uint64_t> distinct(keys);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::uint32_t> codes(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        codes[i] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), keys[i]) -
                                              distinct.begin());
    }
    return CodedVariable(std::move(codes), static_cast<std::uint32_t>(distinct.size()));
}

}  // namespace hsbs
