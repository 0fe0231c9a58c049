#pragma once

/**
 * @file strings.hpp
 * @brief Deletion-chain blocks (A:j), strings of blocks, and the admissible
 * strings indexing the monomial basis of Q_n.
 *
 * A block (A:j) stands for the run X(A) X(A^(1)) ... X(A^(j-1)), where
 * A^(m) drops the m largest elements of A. A string is admissible when no
 * block starts on a subset of the previous block's set whose size is the
 * size that block's chain would have reached next:
 *   NOT (A_i subset of A_{i-1} and |A_i| = |A_{i-1}| - j_{i-1}).
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncsym/errors.hpp"
#include "ncsym/freealg/symbol.hpp"

namespace ncsym::qn {

using subset_mask = std::uint32_t;

inline subset_mask to_mask(const index_set& a) {
    subset_mask m = 0;
    for (int e : a) m |= subset_mask(1) << (e - 1);
    return m;
}

inline index_set from_mask(subset_mask m) {
    index_set a;
    for (int e = 1; m; ++e, m >>= 1)
        if (m & 1) a.push_back(e);
    return a;
}

/// [r] = {1, ..., r}
inline index_set interval(int r) {
    index_set a;
    for (int e = 1; e <= r; ++e) a.push_back(e);
    return a;
}

inline bool is_subset(const index_set& a, const index_set& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline index_set drop_last(const index_set& a, int m) {
    return index_set(a.begin(), a.end() - m);
}

struct string_block {
    index_set set;
    int j = 1;

    /// (A, A^(1), ..., A^(j-1))
    std::vector<index_set> expand() const {
        std::vector<index_set> out;
        for (int m = 0; m < j; ++m) out.push_back(drop_last(set, m));
        return out;
    }

    auto operator<=>(const string_block&) const = default;
};

/// May the block `next` follow the block `prev`?
inline bool admissible_junction(const string_block& prev, const string_block& next) {
    const int reached = static_cast<int>(prev.set.size()) - prev.j;
    return !(static_cast<int>(next.set.size()) == reached && is_subset(next.set, prev.set));
}

class admissible_string {
public:
    admissible_string() = default;

    /// Validates block shapes and every junction; throws range_error if not
    /// admissible over [n].
    admissible_string(std::vector<string_block> blocks, int n) : blocks_(std::move(blocks)) {
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            const auto& blk = blocks_[b];
            if (blk.set.empty() || blk.j < 1 || blk.j > static_cast<int>(blk.set.size()))
                throw range_error("malformed block");
            if (blk.set.back() > n || blk.set.front() < 1) throw range_error("block set is not inside [n]");
            if (b > 0 && !admissible_junction(blocks_[b - 1], blk))
                throw range_error("string is not admissible");
        }
    }

    const std::vector<string_block>& blocks() const { return blocks_; }

    int weight() const {
        int w = 0;
        for (const auto& b : blocks_) w += b.j;
        return w;
    }
    int length() const { return static_cast<int>(blocks_.size()); }

    /// The word of sets X(B) stands for.
    std::vector<index_set> sets() const {
        std::vector<index_set> out;
        for (const auto& b : blocks_)
            for (auto& s : b.expand()) out.push_back(std::move(s));
        return out;
    }

    friend bool operator==(const admissible_string&, const admissible_string&) = default;

    /// (weight, length, blocks lexicographically)
    friend bool operator<(const admissible_string& a, const admissible_string& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        if (a.length() != b.length()) return a.length() < b.length();
        return a.blocks_ < b.blocks_;
    }

private:
    std::vector<string_block> blocks_;
};

/**
 * Splits a word of sets into maximal deletion chains. Any admissible string
 * spelling the word must use exactly this split, because cutting a chain
 * where it could continue violates the junction condition. Returns nullopt
 * when the split is not admissible.
 */
inline std::optional<admissible_string> string_of_word(const std::vector<index_set>& sets, int n) {
    std::vector<string_block> blocks;
    for (const auto& s : sets) {
        if (s.empty()) throw range_error("empty set in word");
        if (!blocks.empty()) {
            auto& last = blocks.back();
            const int next_size = static_cast<int>(last.set.size()) - last.j;
            if (next_size >= 1 && s == drop_last(last.set, last.j)) {
                ++last.j;
                continue;
            }
            if (!admissible_junction(last, string_block{s, 1})) return std::nullopt;
        }
        blocks.push_back({s, 1});
    }
    return admissible_string(std::move(blocks), n);
}

/// All nonempty subsets of [n], ordered as index_sets.
inline std::vector<index_set> nonempty_subsets(int n) {
    std::vector<index_set> out;
    for (subset_mask m = 1; m < (subset_mask(1) << n); ++m) out.push_back(from_mask(m));
    std::sort(out.begin(), out.end());
    return out;
}

/// Every admissible string over [n] of weight d, sorted. Built block by
/// block; d = 0 gives the single empty string.
inline std::vector<admissible_string> enumerate_basis(int n, int d) {
    if (n < 1) throw range_error("n must be at least 1");
    if (d < 0) throw range_error("degree must be nonnegative");
    const auto subsets = nonempty_subsets(n);
    std::vector<admissible_string> out;
    std::vector<string_block> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current, n);
            return;
        }
        for (const auto& a : subsets) {
            const int max_j = std::min<int>(static_cast<int>(a.size()), remaining);
            for (int j = 1; j <= max_j; ++j) {
                string_block blk{a, j};
                if (!current.empty() && !admissible_junction(current.back(), blk)) continue;
                current.push_back(std::move(blk));
                self(self, remaining - j);
                current.pop_back();
            }
        }
    };
    rec(rec, d);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string to_string(const string_block& b) {
    return "({" + set_to_string(b.set) + "}:" + std::to_string(b.j) + ")";
}

inline std::string to_string(const admissible_string& s) {
    if (s.blocks().empty()) return "()";
    std::string out;
    for (const auto& b : s.blocks()) out += to_string(b);
    return out;
}

} // namespace ncsym::qn
