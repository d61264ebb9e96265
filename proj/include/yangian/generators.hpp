#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace yangian {

inline constexpr int kNoTruncation = std::numeric_limits<int>::max();

// T^(level)_ij; negative levels are generators of the dual Yangian.
struct GenId {
    int level = 1;
    int i = 1;
    int j = 1;

    bool positive() const { return level > 0; }
    bool negative() const { return level < 0; }
    int abs_level() const { return std::abs(level); }

    // Normal order: negative block first, then by (|level|, i, j).
    auto key() const { return std::make_tuple(level > 0 ? 1 : 0, std::abs(level), i, j); }
    friend bool operator==(const GenId&, const GenId&) = default;
    friend bool operator<(const GenId& a, const GenId& b) { return a.key() < b.key(); }
    friend bool operator>(const GenId& a, const GenId& b) { return b < a; }
    friend bool operator<=(const GenId& a, const GenId& b) { return !(b < a); }

    std::string str() const {
        return "T[" + std::to_string(level) + "," + std::to_string(i) + "," + std::to_string(j) + "]";
    }
};

inline void validate(const GenId& g, int n) {
    if (g.level == 0) throw std::invalid_argument("generator level 0 is the scalar delta, not a generator");
    if (g.i < 1 || g.i > n || g.j < 1 || g.j > n)
        throw std::out_of_range("generator index out of range in " + g.str());
}

using Monomial = std::vector<GenId>;

inline bool is_normal(const Monomial& m) {
    for (std::size_t p = 0; p + 1 < m.size(); ++p)
        if (m[p + 1] < m[p]) return false;
    return true;
}

inline bool has_positive(const Monomial& m) {
    return std::any_of(m.begin(), m.end(), [](const GenId& g) { return g.positive(); });
}
inline bool has_negative(const Monomial& m) {
    return std::any_of(m.begin(), m.end(), [](const GenId& g) { return g.negative(); });
}

// Sum of |level| over dual generators.
inline int dual_degree(const Monomial& m) {
    int d = 0;
    for (const auto& g : m)
        if (g.negative()) d += g.abs_level();
    return d;
}

// Sum of levels over Yangian generators.
inline int level_degree(const Monomial& m) {
    int d = 0;
    for (const auto& g : m)
        if (g.positive()) d += g.level;
    return d;
}

// deg' T^(r) = r - 1, deg' T^(-r) = -r.
inline int deg_prime(const Monomial& m) {
    int d = 0;
    for (const auto& g : m) d += g.positive() ? g.level - 1 : g.level;
    return d;
}

// Lower bound on the dual degree of every normal monomial the word rewrites to,
// taken over prefixes: (dual degree up to a dual factor) minus (Yangian levels
// standing in front of it). Rewriting never lowers it.
inline int truncation_weight(const Monomial& m) {
    int best = 0, neg = 0, pos = 0;
    for (const auto& g : m) {
        if (g.negative()) {
            neg += g.abs_level();
            best = std::max(best, neg - pos);
        } else {
            pos += g.level;
        }
    }
    return best;
}

inline std::string to_string(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (std::size_t p = 0; p < m.size(); ++p) s += (p ? " * " : "") + m[p].str();
    return s;
}

}  // namespace yangian
