#pragma once

#include <yangian/rational.hpp>

#include <algorithm>
#include <tuple>
#include <type_traits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace yangian {

class TruncationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

enum class Direction { ascending, descending };

inline std::string to_string(Direction d) { return d == Direction::ascending ? "asc" : "desc"; }

// A series variable. Ascending: powers x^0..x^K. Descending: powers x^0..x^{-K},
// stored as the nonnegative exponent k for x^{-k}.
struct VariableSpec {
    std::string name;
    Direction direction = Direction::descending;
    int order = 0;

    friend bool operator==(const VariableSpec&, const VariableSpec&) = default;
};

inline VariableSpec asc(std::string name, int order) { return {std::move(name), Direction::ascending, order}; }
inline VariableSpec desc(std::string name, int order) { return {std::move(name), Direction::descending, order}; }

using Exponent = std::vector<int>;

// Scalar hooks for coefficient rings. Other rings (algebra elements) overload these.
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline Rational coeff_scalar_inverse(const Rational& c) { return c.inverse(); }
inline std::string coeff_to_string(const Rational& c) { return c.str(); }

// Truncated multivariate series over a (possibly noncommutative) ring C whose
// variables commute with everything.
template <class C>
class PolySeries {
public:
    PolySeries() = default;
    explicit PolySeries(std::vector<VariableSpec> vars) : vars_(std::move(vars)) { normalize_vars(); }

    static PolySeries constant(const C& c, std::vector<VariableSpec> vars = {}) {
        PolySeries s(std::move(vars));
        s.add_term(Exponent(s.vars_.size(), 0), c);
        return s;
    }

    // c * x^{±e} for a single variable of the given spec.
    static PolySeries monomial(const VariableSpec& v, int e, const C& c) {
        PolySeries s({v});
        s.add_term({e}, c);
        return s;
    }

    const std::vector<VariableSpec>& variables() const { return vars_; }
    const std::map<Exponent, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int var_index(const std::string& name) const {
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (vars_[k].name == name) return static_cast<int>(k);
        return -1;
    }

    // Adds c at exponent e; exponents beyond the truncation are dropped.
    void add_term(const Exponent& e, const C& c) {
        if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity does not match variables");
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] < 0) throw std::invalid_argument("negative stored exponent");
            if (e[k] > vars_[k].order) return;
        }
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    C coeff(const Exponent& e, const C& zero = C{}) const {
        if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity does not match variables");
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] < 0 || e[k] > vars_[k].order)
                throw TruncationError("coefficient requested beyond truncation of '" + vars_[k].name + "'");
        auto it = terms_.find(e);
        return it == terms_.end() ? zero : it->second;
    }

    // Coefficient lookup by variable name; unnamed variables take exponent 0.
    C coeff(const std::map<std::string, int>& named, const C& zero = C{}) const {
        Exponent e(vars_.size(), 0);
        for (const auto& [name, p] : named) {
            int k = var_index(name);
            if (k < 0) {
                if (p != 0) return zero;
                continue;
            }
            e[k] = p;
        }
        return coeff(e, zero);
    }

    PolySeries& operator+=(const PolySeries& o) { return *this = combine(*this, o, Rational(1)); }
    PolySeries& operator-=(const PolySeries& o) { return *this = combine(*this, o, Rational(-1)); }
    friend PolySeries operator+(const PolySeries& a, const PolySeries& b) { return combine(a, b, Rational(1)); }
    friend PolySeries operator-(const PolySeries& a, const PolySeries& b) { return combine(a, b, Rational(-1)); }
    friend PolySeries operator-(const PolySeries& a) { return a * Rational(-1); }

    friend PolySeries operator*(const PolySeries& a, const Rational& c) {
        PolySeries r(a.vars_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : a.terms_) r.add_term(e, v * c);
        return r;
    }
    friend PolySeries operator*(const Rational& c, const PolySeries& a) { return a * c; }

    friend PolySeries operator*(const PolySeries& a, const PolySeries& b) {
        auto [vars, ma, mb] = merge(a.vars_, b.vars_);
        PolySeries r(vars);
        Exponent e(vars.size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                std::fill(e.begin(), e.end(), 0);
                for (std::size_t k = 0; k < ea.size(); ++k) e[ma[k]] += ea[k];
                for (std::size_t k = 0; k < eb.size(); ++k) e[mb[k]] += eb[k];
                bool keep = true;
                for (std::size_t k = 0; k < e.size(); ++k) keep = keep && e[k] <= vars[k].order;
                if (keep) r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    PolySeries& operator*=(const PolySeries& o) { return *this = *this * o; }

    // Same value viewed over a larger variable set (missing variables get exponent 0).
    PolySeries extended(const std::vector<VariableSpec>& vars) const {
        auto [merged, ma, mb] = merge(vars_, vars);
        (void)mb;
        PolySeries r(merged);
        Exponent e(merged.size());
        for (const auto& [ea, c] : terms_) {
            std::fill(e.begin(), e.end(), 0);
            for (std::size_t k = 0; k < ea.size(); ++k) e[ma[k]] = ea[k];
            r.add_term(e, c);
        }
        return r;
    }

    // Lower the truncation order of one variable.
    PolySeries truncated(const std::string& name, int order) const {
        int k = var_index(name);
        if (k < 0) return *this;
        auto vars = vars_;
        vars[k].order = std::min(vars[k].order, order);
        PolySeries r(vars);
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }

    template <class F>
    auto map_coeffs(F&& f) const {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        PolySeries<D> r(vars_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    friend bool operator==(const PolySeries& a, const PolySeries& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    // True when a - b vanishes at every order kept by both.
    friend bool equal_within_truncation(const PolySeries& a, const PolySeries& b) { return (a - b).is_zero(); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                int p = vars_[k].direction == Direction::descending ? -e[k] : e[k];
                if (!mono.empty()) mono += "*";
                mono += vars_[k].name;
                if (p != 1) mono += "^" + std::to_string(p);
            }
            std::string cs = coeff_to_string(c);
            if (!first) out += " + ";
            first = false;
            if (mono.empty()) out += cs;
            else if (cs == "1") out += mono;
            else out += cs + "*" + mono;
        }
        return out;
    }

    // Merge two variable lists by name; returns merged list and index maps.
    static std::tuple<std::vector<VariableSpec>, std::vector<int>, std::vector<int>>
    merge(const std::vector<VariableSpec>& a, const std::vector<VariableSpec>& b) {
        std::vector<VariableSpec> out;
        std::size_t p = 0, q = 0;
        std::vector<int> ma(a.size()), mb(b.size());
        while (p < a.size() || q < b.size()) {
            if (q == b.size() || (p < a.size() && a[p].name < b[q].name)) {
                ma[p++] = static_cast<int>(out.size());
                out.push_back(a[p - 1]);
            } else if (p == a.size() || b[q].name < a[p].name) {
                mb[q++] = static_cast<int>(out.size());
                out.push_back(b[q - 1]);
            } else {
                if (a[p].direction != b[q].direction)
                    throw std::invalid_argument("variable '" + a[p].name + "' used with both directions");
                VariableSpec v = a[p];
                v.order = std::min(a[p].order, b[q].order);
                ma[p++] = mb[q++] = static_cast<int>(out.size());
                out.push_back(v);
            }
        }
        return {out, ma, mb};
    }

private:
    void normalize_vars() {
        std::sort(vars_.begin(), vars_.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
        for (std::size_t k = 0; k + 1 < vars_.size(); ++k)
            if (vars_[k].name == vars_[k + 1].name) throw std::invalid_argument("duplicate variable " + vars_[k].name);
        for (const auto& v : vars_)
            if (v.order < 0) throw std::invalid_argument("negative truncation order");
    }

    static PolySeries combine(const PolySeries& a, const PolySeries& b, const Rational& sb) {
        auto [vars, ma, mb] = merge(a.vars_, b.vars_);
        PolySeries r(vars);
        Exponent e(vars.size());
        auto put = [&](const PolySeries& s, const std::vector<int>& m, const Rational* scale) {
            for (const auto& [es, c] : s.terms_) {
                std::fill(e.begin(), e.end(), 0);
                for (std::size_t k = 0; k < es.size(); ++k) e[m[k]] = es[k];
                r.add_term(e, scale ? c * *scale : c);
            }
        };
        put(a, ma, nullptr);
        put(b, mb, &sb);
        return r;
    }

    std::vector<VariableSpec> vars_;
    std::map<Exponent, C> terms_;
};

using RSeries = PolySeries<Rational>;

// a^{-1} by the finite geometric expansion around the constant term.
template <class C>
PolySeries<C> series_invert(const PolySeries<C>& a) {
    Exponent zero_exp(a.variables().size(), 0);
    auto it = a.terms().find(zero_exp);
    if (it == a.terms().end()) throw std::domain_error("series_invert: zero constant term");
    const C inv0 = coeff_scalar_inverse(it->second);
    PolySeries<C> one = PolySeries<C>::constant(inv0 * it->second, a.variables());
    // x = 1 - a * a0^{-1}; a^{-1} = a0^{-1} * sum_k x^k
    PolySeries<C> scaled(a.variables());
    for (const auto& [e, c] : a.terms()) scaled.add_term(e, c * inv0);
    PolySeries<C> x = one - scaled;
    int total = 0;
    for (const auto& v : a.variables()) total += v.order;
    PolySeries<C> sum = one, power = one;
    for (int k = 1; k <= total && !power.is_zero(); ++k) {
        power = power * x;
        sum += power;
    }
    PolySeries<C> r(a.variables());
    for (const auto& [e, c] : sum.terms()) r.add_term(e, inv0 * c);
    return r;
}

// Certifies that an ascending series has no significant terms above its truncation,
// so that re-expansion around a shifted point is exact.
enum class ShiftBound { unbounded, certified_polynomial };

// Substitute var -> var + c.
template <class C>
PolySeries<C> series_shift(const PolySeries<C>& a, const std::string& var, const Rational& c,
                           ShiftBound bound = ShiftBound::unbounded) {
    int k = a.var_index(var);
    if (k < 0 || c.is_zero()) return a;
    const VariableSpec& v = a.variables()[k];
    PolySeries<C> r(a.variables());
    if (v.direction == Direction::descending) {
        // (x + c)^{-e} = sum_t binom(-e, t) c^t x^{-e-t}
        for (const auto& [e, coef] : a.terms()) {
            if (e[k] == 0) {
                r.add_term(e, coef);
                continue;
            }
            Exponent f = e;
            for (int t = 0; e[k] + t <= v.order; ++t) {
                f[k] = e[k] + t;
                r.add_term(f, coef * (binomial(-e[k], t) * c.pow(t)));
            }
        }
        return r;
    }
    if (bound != ShiftBound::certified_polynomial)
        throw TruncationError("ascending shift of '" + var + "' needs a certified bound on significant orders");
    for (const auto& [e, coef] : a.terms()) {
        Exponent f = e;
        for (int t = 0; t <= e[k]; ++t) {
            f[k] = t;
            r.add_term(f, coef * (binomial(e[k], t) * c.pow(e[k] - t)));
        }
    }
    return r;
}

}  // namespace yangian
