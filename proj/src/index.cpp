#include "fmp/index.hpp"

#include <charconv>
#include <numeric>

#include "fmp/error.hpp"

namespace fmp {

namespace {

void check_parts(const std::vector<int>& parts) {
    for (int k : parts) {
        if (k < 1) throw DomainError("index entries must be positive, got " + std::to_string(k));
    }
}

void compositions(int remaining, int max_depth, std::vector<int>& prefix, std::vector<Index>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (static_cast<int>(prefix.size()) == max_depth) return;
    for (int k = 1; k <= remaining; ++k) {
        prefix.push_back(k);
        compositions(remaining - k, max_depth, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Index::Index(std::initializer_list<int> parts) : parts_(parts) { check_parts(parts_); }

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) { check_parts(parts_); }

int Index::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Index Index::slice(std::size_t first, std::size_t count) const {
    return Index(std::vector<int>(parts_.begin() + first, parts_.begin() + first + count));
}

Index Index::with_back(int value) const {
    auto parts = parts_;
    parts.back() = value;
    return Index(std::move(parts));
}

std::string Index::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::string Index::to_cli() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

Index parse_index(std::string_view text) {
    if (text == "-") return {};
    if (text.empty()) throw DomainError("empty index text (use '-' for the empty index)");
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        int value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size() || value < 1) {
            throw DomainError("malformed index '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Index(std::move(parts));
}

Index concat(const Index& lambda, const Index& mu) {
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
    return Index(std::move(parts));
}

Index star(const Index& lambda, const Index& mu) {
    if (lambda.empty() || mu.empty()) throw DomainError("star needs two nonempty indices");
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end() - 1);
    parts.push_back(lambda.back() + mu.back());
    for (int j = mu.depth() - 2; j >= 0; --j) parts.push_back(mu[j]);
    return Index(std::move(parts));
}

Index reversed(const Index& k) { return Index(std::vector<int>(k.parts().rbegin(), k.parts().rend())); }

std::vector<Index> indices_of_weight(int weight) {
    std::vector<Index> out;
    std::vector<int> prefix;
    compositions(weight, weight, prefix, out);
    return out;
}

std::vector<Index> indices_up_to(int max_weight, int max_depth) {
    std::vector<Index> out;
    for (int w = 0; w <= max_weight; ++w) {
        std::vector<int> prefix;
        compositions(w, max_depth, prefix, out);
    }
    return out;
}

Word index_to_word(const Index& k) {
    Word w;
    for (int part : k.parts()) {
        w.insert(w.end(), static_cast<std::size_t>(part - 1), Letter::x);
        w.push_back(Letter::y);
    }
    return w;
}

Index word_to_index(const Word& w) {
    if (!w.empty() && w.back() != Letter::y) throw DomainError("word not admissible");
    std::vector<int> parts;
    int run = 1;
    for (Letter l : w) {
        if (l == Letter::x) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    return Index(std::move(parts));
}

Word parse_word(std::string_view text) {
    Word w;
    for (char c : text) {
        if (c == 'x') w.push_back(Letter::x);
        else if (c == 'y') w.push_back(Letter::y);
        else if (c != ' ') throw DomainError(std::string("unknown letter '") + c + "'");
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string out;
    for (Letter l : w) out += (l == Letter::x ? 'x' : 'y');
    return out;
}

}  // namespace fmp
