#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fmp {

// A finite sequence (k_1, ..., k_r) of positive integers. The empty sequence is
// the index of weight and depth zero.
class Index {
public:
    Index() = default;
    Index(std::initializer_list<int> parts);
    explicit Index(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    int depth() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    int front() const { return parts_.front(); }
    int back() const { return parts_.back(); }

    /// Sub-index of parts [first, first + count).
    Index slice(std::size_t first, std::size_t count) const;
    Index drop_back() const { return slice(0, parts_.size() - 1); }
    Index with_back(int value) const;

    friend auto operator<=>(const Index&, const Index&) = default;
    friend bool operator==(const Index&, const Index&) = default;

    /// "(2,3)"; the empty index is "()".
    std::string to_string() const;
    /// "2,3"; the empty index is "-".
    std::string to_cli() const;

private:
    std::vector<int> parts_;
};

/// Parses "2,3" or "-" (the empty index). Throws DomainError on malformed input.
Index parse_index(std::string_view text);

/// (λ_1,…,λ_a, μ_1,…,μ_b)
Index concat(const Index& lambda, const Index& mu);

/// (λ_1,…,λ_{a-1}, λ_a+μ_b, μ_{b-1},…,μ_1). Both operands must be nonempty.
Index star(const Index& lambda, const Index& mu);

/// (k_r, ..., k_1)
Index reversed(const Index& k);

/// Every index of the given weight (compositions), in lexicographic order.
std::vector<Index> indices_of_weight(int weight);

/// Every index with weight <= max_weight and depth <= max_depth, the empty index included.
std::vector<Index> indices_up_to(int max_weight, int max_depth);

enum class Letter : unsigned char { x, y };

using Word = std::vector<Letter>;

/// (k_1,…,k_r) -> x^{k_1-1} y ··· x^{k_r-1} y
Word index_to_word(const Index& k);

/// Inverse of index_to_word. Throws DomainError("word not admissible") unless
/// the word is empty or ends in y.
Index word_to_index(const Word& w);

/// Parses "xyxxy" (spaces ignored).
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

}  // namespace fmp
