#pragma once

#include <yangian/generators.hpp>
#include <yangian/rational.hpp>
#include <yangian/series.hpp>

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace yangian {

enum class AlgebraTag { Y, Ystar, DY };

inline std::string to_string(AlgebraTag t) {
    switch (t) {
        case AlgebraTag::Y: return "Y";
        case AlgebraTag::Ystar: return "Y*";
        case AlgebraTag::DY: return "DY";
    }
    return "?";
}

inline AlgebraTag parse_tag(const std::string& s) {
    if (s == "Y") return AlgebraTag::Y;
    if (s == "Y*") return AlgebraTag::Ystar;
    if (s == "DY") return AlgebraTag::DY;
    throw std::invalid_argument("unknown algebra tag '" + s + "'");
}

using WordSum = std::map<Monomial, Rational>;

class AlgElement;
enum class RewriteStrategy { leftmost, rightmost };
AlgElement normal_form(int n, int dual_trunc, const WordSum& raw,
                       RewriteStrategy strategy = RewriteStrategy::leftmost);

// Finite linear combination of normal monomials, stored modulo the span of normal
// monomials whose dual degree exceeds the truncation D. An element with n() == 0
// is an untyped zero that combines with anything.
class AlgElement {
public:
    using Terms = std::map<Monomial, Rational>;

    AlgElement() = default;
    explicit AlgElement(int n, int dual_trunc = kNoTruncation) : n_(n), d_(dual_trunc) {
        if (n < 1) throw std::invalid_argument("N must be >= 1");
        if (dual_trunc < 0) throw std::invalid_argument("dual truncation must be >= 0");
    }

    static AlgElement scalar(int n, const Rational& c, int dual_trunc = kNoTruncation) {
        AlgElement x(n, dual_trunc);
        x.add_term({}, c);
        return x;
    }
    static AlgElement one(int n, int dual_trunc = kNoTruncation) { return scalar(n, Rational(1), dual_trunc); }
    static AlgElement generator(int n, GenId g, int dual_trunc = kNoTruncation) {
        validate(g, n);
        AlgElement x(n, dual_trunc);
        x.add_term({g}, Rational(1));
        return x;
    }
    // T^(level)_ij with T^(0)_ij = δ_ij.
    static AlgElement t(int n, int level, int i, int j, int dual_trunc = kNoTruncation) {
        if (level == 0) return scalar(n, Rational(i == j ? 1 : 0), dual_trunc);
        return generator(n, {level, i, j}, dual_trunc);
    }

    int n() const { return n_; }
    int dual_trunc() const { return d_; }
    bool truncated() const { return d_ != kNoTruncation; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    AlgebraTag tag() const {
        bool pos = false, neg = false;
        for (const auto& [m, c] : terms_) {
            pos = pos || has_positive(m);
            neg = neg || has_negative(m);
        }
        if (pos && neg) return AlgebraTag::DY;
        return neg ? AlgebraTag::Ystar : AlgebraTag::Y;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational scalar_part() const { return coefficient({}); }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    // Adds c·m for a normal monomial m; monomials beyond the truncation are dropped.
    void add_term(const Monomial& m, const Rational& c) {
        if (!is_normal(m)) throw std::invalid_argument("add_term needs a normal monomial: " + to_string(m));
        if (d_ != kNoTruncation && dual_degree(m) > d_) return;
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgElement with_truncation(int dual_trunc) const {
        AlgElement r(n_ == 0 ? 1 : n_, dual_trunc);
        r.n_ = n_;
        for (const auto& [m, c] : terms_) r.add_term(m, c);
        return r;
    }

    AlgElement& operator+=(const AlgElement& o) { return accumulate(o, Rational(1)); }
    AlgElement& operator-=(const AlgElement& o) { return accumulate(o, Rational(-1)); }
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
    friend AlgElement operator-(const AlgElement& a) { return a * Rational(-1); }

    friend AlgElement operator*(const AlgElement& a, const Rational& c) {
        AlgElement r = a;
        r.terms_.clear();
        if (c.is_zero()) return r;
        for (const auto& [m, v] : a.terms_) r.terms_.emplace(m, v * c);
        return r;
    }
    friend AlgElement operator*(const Rational& c, const AlgElement& a) { return a * c; }

    // Concatenate words and normalize.
    friend AlgElement operator*(const AlgElement& a, const AlgElement& b) {
        int n = common_n(a, b), d = common_trunc(a, b);
        if (n == 0) return AlgElement();
        if (a.is_zero() || b.is_zero()) return AlgElement(n, d);
        if (a.is_scalar()) return (b * a.scalar_part()).with_truncation(d);
        if (b.is_scalar()) return (a * b.scalar_part()).with_truncation(d);
        WordSum raw;
        Monomial w;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                w = ma;
                w.insert(w.end(), mb.begin(), mb.end());
                raw[w] += ca * cb;
            }
        }
        return normal_form(n, d, raw);
    }
    // Adds c·normal_form(a b) for normal monomials a, b.
    void add_product(const Monomial& a, const Monomial& b, const Rational& c);
    AlgElement& operator*=(const AlgElement& o) { return *this = *this * o; }

    friend bool operator==(const AlgElement& a, const AlgElement& b) { return a.terms_ == b.terms_; }

    // Text in the expression grammar: "c * T[l,i,j] * ..." joined by + and -.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += a.sign() < 0 ? " - " : " + ";
                if (a.sign() < 0) a = -a;
            }
            first = false;
            if (m.empty()) {
                out += a.str();
            } else if (a.is_one()) {
                out += to_string(m);
            } else {
                out += a.str() + " * " + to_string(m);
            }
        }
        return out;
    }

    static int common_n(const AlgElement& a, const AlgElement& b) {
        if (a.n_ == 0) return b.n_;
        if (b.n_ == 0) return a.n_;
        if (a.n_ != b.n_) throw std::invalid_argument("elements over different N");
        return a.n_;
    }
    static int common_trunc(const AlgElement& a, const AlgElement& b) {
        if (a.n_ == 0) return b.d_;
        if (b.n_ == 0) return a.d_;
        if (a.d_ == kNoTruncation) return b.d_;
        if (b.d_ == kNoTruncation) return a.d_;
        if (a.d_ != b.d_)
            throw std::invalid_argument("dual truncation mismatch: " + std::to_string(a.d_) + " vs " +
                                        std::to_string(b.d_));
        return a.d_;
    }

private:
    AlgElement& accumulate(const AlgElement& o, const Rational& s) {
        int n = common_n(*this, o), d = common_trunc(*this, o);
        n_ = n;
        if (d != d_) *this = with_truncation(d);
        for (const auto& [m, c] : o.terms_) add_term(m, c * s);
        return *this;
    }

    int n_ = 0;
    int d_ = kNoTruncation;
    Terms terms_;
};

inline bool coeff_is_zero(const AlgElement& x) { return x.is_zero(); }
inline std::string coeff_to_string(const AlgElement& x) { return "(" + x.str() + ")"; }
inline AlgElement coeff_scalar_inverse(const AlgElement& x) {
    if (!x.is_scalar() || x.is_zero()) throw std::domain_error("constant term is not an invertible scalar");
    return AlgElement::scalar(x.n(), x.scalar_part().inverse(), x.dual_trunc());
}

using ASeries = PolySeries<AlgElement>;

enum class RelationFamily { yang, dual, cross };

namespace detail {

struct RawTerm {
    Monomial word;
    Rational coeff;
};
using RawTerms = std::vector<RawTerm>;

// Accumulates a word factor by factor; level 0 factors are the scalar δ.
struct WordBuilder {
    Monomial word;
    bool dead = false;
    WordBuilder& t(int level, int i, int j) {
        if (level == 0) {
            dead = dead || i != j;
        } else {
            word.push_back({level, i, j});
        }
        return *this;
    }
};

inline void emit(RawTerms& out, const WordBuilder& b, const Rational& c) {
    if (!b.dead) out.push_back({b.word, c});
}

// [T^(r)_ij, T^(s)_kl] in the Yangian.
inline void yang_bracket(RawTerms& out, int r, int i, int j, int s, int k, int l) {
    for (int a = 1; a <= std::min(r, s); ++a) {
        emit(out, WordBuilder{}.t(a - 1, k, j).t(r + s - a, i, l), Rational(1));
        emit(out, WordBuilder{}.t(r + s - a, k, j).t(a - 1, i, l), Rational(-1));
    }
}

// [T^(-r)_ij, T^(-s)_kl] in the dual Yangian.
inline void dual_bracket(RawTerms& out, int r, int i, int j, int s, int k, int l) {
    if (k == j) emit(out, WordBuilder{}.t(-r - s, i, l), Rational(1));
    if (i == l) emit(out, WordBuilder{}.t(-r - s, k, j), Rational(-1));
    for (int b = 1; b <= s; ++b) {
        emit(out, WordBuilder{}.t(b - r - s - 1, i, l).t(-b, k, j), Rational(1));
        emit(out, WordBuilder{}.t(-b, i, l).t(b - r - s - 1, k, j), Rational(-1));
    }
}

// Coefficient of v^b in T*_pq(v): δ + T^(-1) at b = 0, T^(-b-1) otherwise.
inline std::vector<int> star_levels(int b) { return b == 0 ? std::vector<int>{0, -1} : std::vector<int>{-b - 1}; }

// [T^(r)_ij, T^(-s)_kl] in the double Yangian.
inline void cross_bracket(RawTerms& out, int n, int r, int i, int j, int s, int k, int l) {
    for (int p = 0; p < std::min(r, s); ++p) {
        const int a = r - 1 - p, b = s - 1 - p;
        for (int lv : star_levels(b)) {
            for (int m = 1; m <= n; ++m) {
                if (j == k) emit(out, WordBuilder{}.t(a, i, m).t(lv, m, l), Rational(1));
                if (i == l) emit(out, WordBuilder{}.t(lv, k, m).t(a, m, j), Rational(-1));
            }
        }
    }
}

class BracketCache {
public:
    using Key = std::array<int, 7>;

    std::shared_ptr<const RawTerms> get(const GenId& x, const GenId& y, int n) {
        Key key{x.level, x.i, x.j, y.level, y.i, y.j, n};
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        auto value = std::make_shared<const RawTerms>(compute(x, y, n));
        std::unique_lock lock(mutex_);
        return cache_.emplace(key, std::move(value)).first->second;
    }

    static RawTerms compute(const GenId& x, const GenId& y, int n) {
        RawTerms out;
        if (x.positive() && y.positive()) {
            yang_bracket(out, x.level, x.i, x.j, y.level, y.i, y.j);
        } else if (x.negative() && y.negative()) {
            dual_bracket(out, -x.level, x.i, x.j, -y.level, y.i, y.j);
        } else if (x.positive()) {
            cross_bracket(out, n, x.level, x.i, x.j, -y.level, y.i, y.j);
        } else {
            cross_bracket(out, n, y.level, y.i, y.j, -x.level, x.i, x.j);
            for (auto& t : out) t.coeff = -t.coeff;
        }
        return out;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const RawTerms>> cache_;
};

inline BracketCache& bracket_cache() {
    static BracketCache cache;
    return cache;
}

}  // namespace detail

// Raw word expansion of [x, y] for generators x, y.
inline WordSum bracket_words(const GenId& x, const GenId& y, int n) {
    WordSum out;
    for (const auto& t : *detail::bracket_cache().get(x, y, n)) out[t.word] += t.coeff;
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

// Rewrites a combination of arbitrary words into normal monomials. Words whose
// truncation weight exceeds D lie in the truncation ideal and are discarded.
inline AlgElement normal_form(int n, int dual_trunc, const WordSum& raw, RewriteStrategy strategy) {
    AlgElement result(n, dual_trunc);
    const bool finite = dual_trunc != kNoTruncation;
    auto dropped = [&](const Monomial& w) { return finite && truncation_weight(w) > dual_trunc; };

    WordSum pending;
    auto push = [&](const Monomial& w, const Rational& c) {
        if (c.is_zero() || dropped(w)) return;
        auto [it, fresh] = pending.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) pending.erase(it);
        }
    };
    for (const auto& [w, c] : raw) {
        for (const auto& g : w) validate(g, n);
        push(w, c);
    }

    Monomial next;
    while (!pending.empty()) {
        auto node = pending.extract(std::prev(pending.end()));
        const Monomial& w = node.key();
        const Rational c = node.mapped();
        int pos = -1;
        if (strategy == RewriteStrategy::leftmost) {
            for (std::size_t p = 0; p + 1 < w.size(); ++p)
                if (w[p + 1] < w[p]) {
                    pos = static_cast<int>(p);
                    break;
                }
        } else {
            for (std::size_t p = w.size(); p-- > 1;)
                if (w[p] < w[p - 1]) {
                    pos = static_cast<int>(p) - 1;
                    break;
                }
        }
        if (pos < 0) {
            result.add_term(w, c);
            continue;
        }
        const GenId x = w[pos], y = w[pos + 1];
        if (!finite && x.negative() && y.negative())
            throw std::domain_error("reordering dual generators needs a finite dual truncation D");
        next = w;
        std::swap(next[pos], next[pos + 1]);
        push(next, c);
        for (const auto& t : *detail::bracket_cache().get(x, y, n)) {
            next.assign(w.begin(), w.begin() + pos);
            next.insert(next.end(), t.word.begin(), t.word.end());
            next.insert(next.end(), w.begin() + pos + 2, w.end());
            push(next, c * t.coeff);
        }
    }
    return result;
}

namespace detail {

// Normal forms of concatenated words, keyed by (N, D, word).
class ProductCache {
public:
    using Value = std::shared_ptr<const AlgElement::Terms>;

    Value get(int n, int d, const Monomial& word) {
        Key key{n, d, word};
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        auto value = std::make_shared<const AlgElement::Terms>(normal_form(n, d, {{word, Rational(1)}}).terms());
        std::unique_lock lock(mutex_);
        if (cache_.size() > kMaxEntries) cache_.clear();
        return cache_.emplace(std::move(key), std::move(value)).first->second;
    }

private:
    static constexpr std::size_t kMaxEntries = 2'000'000;
    using Key = std::tuple<int, int, Monomial>;
    std::shared_mutex mutex_;
    std::map<Key, Value> cache_;
};

inline ProductCache& product_cache() {
    static ProductCache cache;
    return cache;
}

}  // namespace detail

inline void AlgElement::add_product(const Monomial& a, const Monomial& b, const Rational& c) {
    if (c.is_zero()) return;
    Monomial w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    if (a.empty() || b.empty() || !(b.front() < a.back())) {
        if (d_ == kNoTruncation || truncation_weight(w) <= d_) add_term(w, c);
        return;
    }
    for (const auto& [m, v] : *detail::product_cache().get(n_, d_, w)) add_term(m, v * c);
}

inline AlgElement normal_form(const AlgElement& shape, const WordSum& raw,
                              RewriteStrategy strategy = RewriteStrategy::leftmost) {
    return normal_form(shape.n(), shape.dual_trunc(), raw, strategy);
}

inline AlgElement commutator(const AlgElement& x, const AlgElement& y) { return x * y - y * x; }

// Closed-form right-hand side of [T^(±r)_ij, T^(±s)_kl] for the chosen family:
// yang: [T^(r), T^(s)], dual: [T^(-r), T^(-s)], cross: [T^(r), T^(-s)].
inline AlgElement rel_rhs(RelationFamily family, int r, int s, int i, int j, int k, int l, int n,
                          int dual_trunc = kNoTruncation) {
    for (int x : {i, j, k, l})
        if (x < 1 || x > n) throw std::out_of_range("relation index out of range 1..N");
    if (r < 0 || s < 0) throw std::invalid_argument("relation levels must be nonnegative");
    if (r == 0 || s == 0) return AlgElement(n, dual_trunc);
    GenId x{family == RelationFamily::dual ? -r : r, i, j};
    GenId y{family == RelationFamily::yang ? s : -s, k, l};
    return normal_form(n, dual_trunc, bracket_words(x, y, n));
}

// [T^(r+1)_ij, T^(s)_kl] - [T^(r)_ij, T^(s+1)_kl] = T^(r)_kj T^(s)_il - T^(s)_kj T^(r)_il.
inline bool commutator_equiv_check(int r, int s, int i, int j, int k, int l, int n) {
    AlgElement lhs = rel_rhs(RelationFamily::yang, r + 1, s, i, j, k, l, n) -
                     rel_rhs(RelationFamily::yang, r, s + 1, i, j, k, l, n);
    AlgElement rhs = AlgElement::t(n, r, k, j) * AlgElement::t(n, s, i, l) -
                     AlgElement::t(n, s, k, j) * AlgElement::t(n, r, i, l);
    return (lhs - rhs).is_zero();
}

enum class Filtration { deg, deg_prime };

inline int filtration_degree(const Monomial& m, Filtration f) {
    if (f == Filtration::deg_prime) return deg_prime(m);
    if (has_negative(m)) throw std::invalid_argument("the level-sum filtration is defined on the Yangian only");
    return level_degree(m);
}

struct GradedPart {
    int degree = 0;
    AlgElement leading;
};

inline AlgElement homogeneous_part(const AlgElement& x, Filtration f, int degree) {
    AlgElement r = x * Rational(0);
    for (const auto& [m, c] : x.terms())
        if (filtration_degree(m, f) == degree) r.add_term(m, c);
    return r;
}

inline GradedPart graded_leading(const AlgElement& x, Filtration f) {
    if (x.is_zero()) throw std::invalid_argument("graded_leading of zero");
    int top = std::numeric_limits<int>::min();
    for (const auto& [m, c] : x.terms()) top = std::max(top, filtration_degree(m, f));
    return {top, homogeneous_part(x, f, top)};
}

enum class BasisSide { yangian, dual };

namespace detail {

inline void partitions(int s, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (s == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(s, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(s - p, p, cur, out);
        cur.pop_back();
    }
}

// Multisets of size k drawn from {0..m-1}, as nondecreasing sequences.
inline void multisets(int k, int m, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int x = start; x < m; ++x) {
        cur.push_back(x);
        multisets(k, m, x, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// Compare weakly decreasing partitions from their last part backwards.
inline bool inverse_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    auto ia = a.rbegin(), ib = b.rbegin();
    for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib)
        if (*ia != *ib) return *ia < *ib;
    return a.size() < b.size();
}

inline std::vector<int> partition_of(const Monomial& m) {
    std::vector<int> parts;
    for (const auto& g : m) parts.push_back(g.abs_level());
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

// Normal monomials of level-sum (or dual degree) s, ordered by partition in
// inverse lexicographic order, then by index order.
inline std::vector<Monomial> basis_enumerate(BasisSide side, int s, int n) {
    if (s < 0) throw std::invalid_argument("degree must be >= 0");
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    detail::partitions(s, s, cur, parts);
    std::sort(parts.begin(), parts.end(), inverse_lex_less);
    const int sign = side == BasisSide::yangian ? 1 : -1;
    const int pairs = n * n;
    std::vector<Monomial> out;
    for (const auto& lambda : parts) {
        // distinct part values with multiplicities
        std::vector<std::pair<int, int>> groups;
        for (int p : lambda) {
            if (!groups.empty() && groups.back().first == p) ++groups.back().second;
            else groups.push_back({p, 1});
        }
        std::vector<std::vector<std::vector<int>>> choices;
        for (const auto& [value, mult] : groups) {
            std::vector<std::vector<int>> ms;
            std::vector<int> c;
            detail::multisets(mult, pairs, 0, c, ms);
            choices.push_back(std::move(ms));
        }
        std::vector<Monomial> block;
        std::vector<std::size_t> pick(groups.size(), 0);
        while (true) {
            Monomial m;
            for (std::size_t g = 0; g < groups.size(); ++g)
                for (int x : choices[g][pick[g]]) m.push_back({sign * groups[g].first, x / n + 1, x % n + 1});
            std::sort(m.begin(), m.end());
            block.push_back(std::move(m));
            std::size_t g = 0;
            while (g < pick.size() && ++pick[g] == choices[g].size()) pick[g++] = 0;
            if (g == pick.size()) break;
        }
        std::sort(block.begin(), block.end());
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

}  // namespace yangian
