#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ryser {

class malformed_literal : public std::invalid_argument {
public:
    explicit malformed_literal(std::string_view literal)
        : std::invalid_argument("row literal must match ^[+-]+$, got \"" + std::string(literal) + "\"") {}
};

class index_out_of_range : public std::out_of_range {
public:
    index_out_of_range(std::size_t k, std::size_t n)
        : std::out_of_range("shift " + std::to_string(k) + " outside [0, " + std::to_string(n) + ")") {}
};

/**
 * A finite sequence over {+1, -1}: the first row of a circulant matrix, or a
 * Barker candidate. Literal form is one '+' or '-' per entry ("+++-").
 *
 * Mask convention: bit i of a mask is entry i (0-based), with 0 meaning +1.
 */
class SignRow {
public:
    SignRow() = default;

    SignRow(std::initializer_list<int> entries) : SignRow(std::vector<int>(entries)) {}

    explicit SignRow(std::vector<int> entries) {
        entries_.reserve(entries.size());
        for (int e : entries) {
            if (e != 1 && e != -1) throw std::invalid_argument("sign row entries must be +1 or -1");
            entries_.push_back(static_cast<std::int8_t>(e));
        }
    }

    static SignRow from_literal(std::string_view literal) {
        if (literal.empty()) throw malformed_literal(literal);
        SignRow row;
        row.entries_.reserve(literal.size());
        for (char c : literal) {
            if (c == '+') row.entries_.push_back(1);
            else if (c == '-') row.entries_.push_back(-1);
            else throw malformed_literal(literal);
        }
        return row;
    }

    static SignRow from_mask(std::uint64_t mask, std::size_t n) {
        SignRow row;
        row.entries_.resize(n);
        for (std::size_t i = 0; i < n; ++i) row.entries_[i] = ((mask >> i) & 1) ? -1 : 1;
        return row;
    }

    std::string literal() const {
        std::string s;
        s.reserve(entries_.size());
        for (auto e : entries_) s.push_back(e > 0 ? '+' : '-');
        return s;
    }

    std::uint64_t mask() const {
        if (entries_.size() > 64) throw std::length_error("row too long for a 64-bit mask");
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] < 0) m |= std::uint64_t{1} << i;
        }
        return m;
    }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    int operator[](std::size_t i) const noexcept { return entries_[i]; }
    std::span<const std::int8_t> entries() const noexcept { return entries_; }

    int sum() const noexcept {
        int s = 0;
        for (auto e : entries_) s += e;
        return s;
    }

    SignRow negated() const {
        SignRow r = *this;
        for (auto& e : r.entries_) e = static_cast<std::int8_t>(-e);
        return r;
    }

    SignRow reversed() const {
        SignRow r = *this;
        std::reverse(r.entries_.begin(), r.entries_.end());
        return r;
    }

    /// Cyclic left shift: entry i of the result is entry (i + k) mod n.
    SignRow rotated(std::size_t k) const {
        SignRow r = *this;
        const std::size_t n = entries_.size();
        for (std::size_t i = 0; i < n; ++i) r.entries_[i] = entries_[(i + k) % n];
        return r;
    }

    /// h_i -> (-1)^i h_i with 1-based i.
    SignRow alternated() const {
        SignRow r = *this;
        for (std::size_t i = 0; i < r.entries_.size(); i += 2) r.entries_[i] = static_cast<std::int8_t>(-r.entries_[i]);
        return r;
    }

    /// Lexicographic with +1 before -1, which is also the literal string order.
    friend bool operator<(const SignRow& a, const SignRow& b) { return a.literal() < b.literal(); }
    friend bool operator==(const SignRow&, const SignRow&) = default;

private:
    std::vector<std::int8_t> entries_;
};

}  // namespace ryser
