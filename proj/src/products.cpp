#include "fmp/products.hpp"

#include <optional>
#include <vector>

namespace fmp {

namespace {

// Memoised over suffix positions; memo[i][j] is suffix(a, i) sh suffix(b, j).
class WordShuffler {
public:
    WordShuffler(const Word& a, const Word& b)
        : a_(a), b_(b), memo_(a.size() + 1, std::vector<std::optional<WordSum>>(b.size() + 1)) {}

    const WordSum& run(std::size_t i, std::size_t j) {
        auto& slot = memo_[i][j];
        if (slot) return *slot;
        WordSum out;
        if (i == a_.size()) {
            out.emplace(Word(b_.begin() + j, b_.end()), 1);
        } else if (j == b_.size()) {
            out.emplace(Word(a_.begin() + i, a_.end()), 1);
        } else {
            prepend(a_[i], run(i + 1, j), out);
            prepend(b_[j], run(i, j + 1), out);
        }
        slot = std::move(out);
        return *slot;
    }

private:
    static void prepend(Letter u, const WordSum& tail, WordSum& out) {
        for (const auto& [w, c] : tail) {
            Word uw;
            uw.reserve(w.size() + 1);
            uw.push_back(u);
            uw.insert(uw.end(), w.begin(), w.end());
            out[uw] += c;
        }
    }

    const Word& a_;
    const Word& b_;
    std::vector<std::vector<std::optional<WordSum>>> memo_;
};

class Stuffler {
public:
    Stuffler(const Index& a, const Index& b)
        : a_(a), b_(b),
          memo_(static_cast<std::size_t>(a.depth()) + 1,
                std::vector<std::optional<FormalSum>>(static_cast<std::size_t>(b.depth()) + 1)) {}

    const FormalSum& run(std::size_t i, std::size_t j) {
        auto& slot = memo_[i][j];
        if (slot) return *slot;
        const std::size_t ra = a_.depth(), rb = b_.depth();
        FormalSum out;
        if (i == ra) {
            out.add(b_.slice(j, rb - j), 1);
        } else if (j == rb) {
            out.add(a_.slice(i, ra - i), 1);
        } else {
            prepend(a_[i], run(i + 1, j), out);
            prepend(b_[j], run(i, j + 1), out);
            prepend(a_[i] + b_[j], run(i + 1, j + 1), out);
        }
        slot = std::move(out);
        return *slot;
    }

private:
    static void prepend(int k, const FormalSum& tail, FormalSum& out) {
        for (const auto& [idx, c] : tail.terms()) out.add(concat(Index{k}, idx), c);
    }

    const Index& a_;
    const Index& b_;
    std::vector<std::vector<std::optional<FormalSum>>> memo_;
};

}  // namespace

WordSum shuffle_words(const Word& a, const Word& b) {
    WordShuffler s(a, b);
    return s.run(0, 0);
}

FormalSum shuffle(const Index& k, const Index& kp) {
    FormalSum out;
    for (const auto& [w, c] : shuffle_words(index_to_word(k), index_to_word(kp))) out.add(word_to_index(w), c);
    return out;
}

FormalSum stuffle(const Index& k, const Index& kp) {
    Stuffler s(k, kp);
    return s.run(0, 0);
}

FormalSum shuffle(const FormalSum& a, const FormalSum& b) {
    FormalSum out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) out += shuffle(ka, kb).scaled(ca * cb);
    }
    return out;
}

FormalSum stuffle(const FormalSum& a, const FormalSum& b) {
    FormalSum out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) out += stuffle(ka, kb).scaled(ca * cb);
    }
    return out;
}

}  // namespace fmp
