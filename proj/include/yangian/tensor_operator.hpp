#pragma once

#include <yangian/series.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace yangian {

using MultiIndex = std::vector<int>;  // entries in 1..N

// Sparse operator on (C^N)^{⊗k} with series entries. Multi-indices are packed
// base N with slot 1 most significant.
class TensorOperator {
public:
    using Key = std::pair<std::uint64_t, std::uint64_t>;

    TensorOperator(int n, int arity) : n_(n), arity_(arity) {
        if (n < 1) throw std::invalid_argument("operator dimension must be >= 1");
        if (arity < 0) throw std::invalid_argument("operator arity must be >= 0");
        dim_ = 1;
        for (int a = 0; a < arity; ++a) dim_ *= static_cast<std::uint64_t>(n);
    }

    static TensorOperator identity(int n, int arity, const RSeries& c = RSeries::constant(Rational(1))) {
        TensorOperator t(n, arity);
        for (std::uint64_t x = 0; x < t.dim_; ++x) t.add({x, x}, c);
        return t;
    }

    int n() const { return n_; }
    int arity() const { return arity_; }
    std::uint64_t dim() const { return dim_; }
    const std::map<Key, RSeries>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    std::uint64_t pack(const MultiIndex& idx) const {
        if (static_cast<int>(idx.size()) != arity_) throw std::invalid_argument("multi-index length mismatch");
        std::uint64_t x = 0;
        for (int v : idx) {
            if (v < 1 || v > n_) throw std::out_of_range("index out of range 1..N");
            x = x * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v - 1);
        }
        return x;
    }
    MultiIndex unpack(std::uint64_t x) const {
        MultiIndex idx(arity_);
        for (int a = arity_ - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(x % n_) + 1;
            x /= n_;
        }
        return idx;
    }

    void add(const Key& k, const RSeries& c) {
        if (c.is_zero()) return;
        auto it = entries_.find(k);
        if (it == entries_.end()) {
            entries_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    void add(const MultiIndex& row, const MultiIndex& col, const RSeries& c) { add({pack(row), pack(col)}, c); }

    RSeries entry(const MultiIndex& row, const MultiIndex& col) const {
        auto it = entries_.find({pack(row), pack(col)});
        return it == entries_.end() ? RSeries() : it->second;
    }

    TensorOperator& operator+=(const TensorOperator& o) {
        check_compatible(o);
        for (const auto& [k, c] : o.entries_) add(k, c);
        return *this;
    }
    TensorOperator& operator-=(const TensorOperator& o) {
        check_compatible(o);
        for (const auto& [k, c] : o.entries_) add(k, -c);
        return *this;
    }
    friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
    friend TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }

    friend TensorOperator operator*(const TensorOperator& a, const RSeries& c) {
        TensorOperator r(a.n_, a.arity_);
        for (const auto& [k, v] : a.entries_) r.add(k, v * c);
        return r;
    }
    friend TensorOperator operator*(const RSeries& c, const TensorOperator& a) { return a * c; }
    friend TensorOperator operator*(const TensorOperator& a, const Rational& c) {
        return a * RSeries::constant(c);
    }
    friend TensorOperator operator*(const Rational& c, const TensorOperator& a) { return a * c; }

    // Sparse operator product.
    friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
        a.check_compatible(b);
        std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, const RSeries*>>> rows;
        for (const auto& [k, v] : b.entries_) rows[k.first].push_back({k.second, &v});
        TensorOperator r(a.n_, a.arity_);
        for (const auto& [k, v] : a.entries_) {
            auto it = rows.find(k.second);
            if (it == rows.end()) continue;
            for (const auto& [col, w] : it->second) r.add({k.first, col}, v * *w);
        }
        return r;
    }

    friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
        if (a.n_ != b.n_ || a.arity_ != b.arity_) return false;
        return (a - b).is_zero();
    }

    // Swap row and column index at slot a (1-based).
    TensorOperator partial_transpose(int a) const {
        if (a < 1 || a > arity_) throw std::out_of_range("partial transpose slot out of range");
        TensorOperator r(n_, arity_);
        for (const auto& [k, v] : entries_) {
            MultiIndex row = unpack(k.first), col = unpack(k.second);
            std::swap(row[a - 1], col[a - 1]);
            r.add(row, col, v);
        }
        return r;
    }

    std::string str() const {
        if (entries_.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : entries_) {
            out += index_str(unpack(k.first)) + " <- " + index_str(unpack(k.second)) + " : " + v.str() + "\n";
        }
        return out;
    }

private:
    static std::string index_str(const MultiIndex& m) {
        std::string s = "(";
        for (std::size_t a = 0; a < m.size(); ++a) s += (a ? "," : "") + std::to_string(m[a]);
        return s + ")";
    }
    void check_compatible(const TensorOperator& o) const {
        if (n_ != o.n_ || arity_ != o.arity_) throw std::invalid_argument("operator dimension or arity mismatch");
    }

    int n_;
    int arity_;
    std::uint64_t dim_;
    std::map<Key, RSeries> entries_;
};

// A ⊗ B, with A on the leading slots.
inline TensorOperator tensor_product(const TensorOperator& a, const TensorOperator& b) {
    if (a.n() != b.n()) throw std::invalid_argument("tensor product of different dimensions");
    TensorOperator r(a.n(), a.arity() + b.arity());
    for (const auto& [ka, va] : a.entries())
        for (const auto& [kb, vb] : b.entries())
            r.add({ka.first * b.dim() + kb.first, ka.second * b.dim() + kb.second}, va * vb);
    return r;
}

enum class BasicKind { unit, P, Q, e };

// Builds 1, P_ab, Q_ab, or e_ij at slot a inside arity k.
inline TensorOperator build_basic(BasicKind kind, int n, int arity, int a = 1, int b = 2, int i = 1, int j = 1) {
    TensorOperator t(n, arity);
    const RSeries one = RSeries::constant(Rational(1));
    if (kind == BasicKind::unit) return TensorOperator::identity(n, arity);
    if (a < 1 || a > arity) throw std::out_of_range("slot out of range");
    if (kind == BasicKind::e) {
        if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("matrix unit index out of range");
        for (std::uint64_t x = 0; x < t.dim(); ++x) {
            MultiIndex col = t.unpack(x);
            if (col[a - 1] != j) continue;
            MultiIndex row = col;
            row[a - 1] = i;
            t.add(row, col, one);
        }
        return t;
    }
    if (b < 1 || b > arity || a == b) throw std::out_of_range("slot pair out of range");
    for (std::uint64_t x = 0; x < t.dim(); ++x) {
        MultiIndex col = t.unpack(x);
        if (kind == BasicKind::P) {
            MultiIndex row = col;
            std::swap(row[a - 1], row[b - 1]);
            t.add(row, col, one);
        } else if (col[a - 1] == col[b - 1]) {
            // Q = sum e_ij ⊗ e_ij
            for (int m = 1; m <= n; ++m) {
                MultiIndex row = col;
                row[a - 1] = row[b - 1] = m;
                t.add(row, col, one);
            }
        }
    }
    return t;
}

inline TensorOperator permutation_op(int n, int arity, int a, int b) { return build_basic(BasicKind::P, n, arity, a, b); }
inline TensorOperator q_op(int n, int arity, int a, int b) { return build_basic(BasicKind::Q, n, arity, a, b); }
inline TensorOperator unit_op(int n, int arity, int a, int i, int j) { return build_basic(BasicKind::e, n, arity, a, 0, i, j); }

// α₁x₁ + α₂x₂ + … + c.
struct AffineArg {
    std::map<std::string, Rational> coeffs;
    Rational constant;

    static AffineArg var(const std::string& name, Rational alpha = Rational(1)) { return {{{name, alpha}}, Rational(0)}; }
    static AffineArg scalar(Rational c) { return {{}, c}; }
    AffineArg operator+(const AffineArg& o) const {
        AffineArg r = *this;
        for (const auto& [k, v] : o.coeffs) r.coeffs[k] += v;
        r.constant += o.constant;
        return r;
    }
    AffineArg operator-(const AffineArg& o) const { return *this + o * Rational(-1); }
    AffineArg operator*(const Rational& s) const {
        AffineArg r = *this;
        for (auto& [k, v] : r.coeffs) v *= s;
        r.constant *= s;
        return r;
    }
};

// 1/arg as a truncated series: expanded in the inverse of the unique descending
// variable, or around the nonzero constant when every variable is ascending.
inline RSeries reciprocal_series(const AffineArg& arg, const std::vector<VariableSpec>& vars) {
    auto spec_of = [&](const std::string& name) -> const VariableSpec& {
        for (const auto& v : vars)
            if (v.name == name) return v;
        throw std::invalid_argument("undeclared series variable '" + name + "'");
    };
    const VariableSpec* lead = nullptr;
    Rational alpha;
    RSeries rest = RSeries::constant(arg.constant);
    for (const auto& [name, c] : arg.coeffs) {
        if (c.is_zero()) continue;
        const VariableSpec& v = spec_of(name);
        if (v.direction == Direction::descending) {
            if (lead) throw std::invalid_argument("reciprocal needs at most one descending variable");
            lead = &v;
            alpha = c;
        } else {
            rest += RSeries::monomial(v, 1, c);
        }
    }
    if (lead) {
        // 1/(αx + rest) = Σ_k (−rest)^k α^{−k−1} x^{−k−1}
        RSeries out({*lead});
        RSeries power = RSeries::constant(Rational(1));
        for (int k = 0; k + 1 <= lead->order; ++k) {
            out += power * RSeries::monomial(*lead, k + 1, alpha.pow(-k - 1));
            power = power * (-rest);
        }
        return out;
    }
    if (arg.constant.is_zero()) throw std::domain_error("reciprocal of an argument with vanishing constant term");
    return series_invert(rest);
}

enum class RKind { yang, transposed, transposed_inverse };

struct RMatrixSpec {
    RKind kind = RKind::yang;
    AffineArg argument;
};

// R_ab(arg) inside arity k: 1 − P x⁻¹, 1 − Q x⁻¹, or 1 + Q (x − N)⁻¹.
inline TensorOperator build_r(const RMatrixSpec& spec, int n, int arity, int a, int b,
                              const std::vector<VariableSpec>& vars) {
    if (!(a < b && b <= arity && a >= 1)) throw std::out_of_range("R-matrix slots must satisfy 1 <= a < b <= k");
    TensorOperator one = TensorOperator::identity(n, arity);
    if (spec.kind == RKind::transposed_inverse) {
        AffineArg shifted = spec.argument + AffineArg::scalar(Rational(-n));
        bool has_desc = false;
        for (const auto& [name, c] : shifted.coeffs)
            for (const auto& v : vars)
                if (v.name == name && !c.is_zero() && v.direction == Direction::descending) has_desc = true;
        if (!has_desc && shifted.constant.is_zero())
            throw std::domain_error("transposed inverse evaluated at its pole u = N");
        return one + q_op(n, arity, a, b) * reciprocal_series(shifted, vars);
    }
    RSeries f = reciprocal_series(spec.argument, vars);
    const TensorOperator x = spec.kind == RKind::yang ? permutation_op(n, arity, a, b) : q_op(n, arity, a, b);
    return one - x * f;
}

struct YbeResult {
    bool holds = false;
    TensorOperator residual;
};

// (u+P12)(u+v+P13)(v+P23) = (v+P23)(u+v+P13)(u+P12) with polynomial entries.
inline YbeResult ybe_check(int n) {
    const VariableSpec u = asc("u", 3), v = asc("v", 3);
    auto scalar = [&](RSeries s) { return TensorOperator::identity(n, 3, s); };
    RSeries su = RSeries::monomial(u, 1, Rational(1)), sv = RSeries::monomial(v, 1, Rational(1));
    TensorOperator f12 = scalar(su) + permutation_op(n, 3, 1, 2);
    TensorOperator f13 = scalar(su + sv) + permutation_op(n, 3, 1, 3);
    TensorOperator f23 = scalar(sv) + permutation_op(n, 3, 2, 3);
    TensorOperator residual = f12 * f13 * f23 - f23 * f13 * f12;
    bool ok = residual.is_zero();
    return {ok, std::move(residual)};
}

}  // namespace yangian
