#pragma once

#include <yangian/algebra.hpp>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace yangian {

// Element of a k-fold tensor power. With finite D, terms whose total dual degree
// exceeds D are discarded: the total-degree filtration is the one the coproduct
// of the dual Yangian respects.
class TensorElement {
public:
    using Key = std::vector<Monomial>;
    using Terms = std::map<Key, Rational>;

    TensorElement(int n, int arity, int dual_trunc = kNoTruncation) : n_(n), arity_(arity), d_(dual_trunc) {
        if (n < 1) throw std::invalid_argument("N must be >= 1");
        if (arity < 0) throw std::invalid_argument("arity must be >= 0");
    }

    static TensorElement from(const AlgElement& x) {
        TensorElement t(x.n() == 0 ? 1 : x.n(), 1, x.dual_trunc());
        for (const auto& [m, c] : x.terms()) t.add_term({m}, c);
        return t;
    }
    static TensorElement unit(int n, int arity, int dual_trunc = kNoTruncation) {
        TensorElement t(n, arity, dual_trunc);
        t.add_term(Key(arity), Rational(1));
        return t;
    }

    int n() const { return n_; }
    int arity() const { return arity_; }
    int dual_trunc() const { return d_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const Rational& c) {
        if (static_cast<int>(k.size()) != arity_) throw std::invalid_argument("tensor key arity mismatch");
        if (c.is_zero()) return;
        if (d_ != kNoTruncation) {
            int deg = 0;
            for (const auto& m : k) deg += dual_degree(m);
            if (deg > d_) return;
        }
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const TensorElement& a, const Rational& c) {
        TensorElement r(a.n_, a.arity_, a.d_);
        for (const auto& [k, v] : a.terms_) r.add_term(k, v * c);
        return r;
    }

    // Factorwise product in the tensor power of the algebra.
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
        a.check(b);
        TensorElement r(a.n_, a.arity_, a.d_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                std::vector<AlgElement> factors;
                factors.reserve(a.arity_);
                bool zero = false;
                for (int s = 0; s < a.arity_ && !zero; ++s) {
                    AlgElement f(a.n_, a.d_);
                    f.add_product(ka[s], kb[s], Rational(1));
                    zero = f.is_zero();
                    factors.push_back(std::move(f));
                }
                if (!zero) r.add_expanded(factors, ca * cb);
            }
        }
        return r;
    }

    // a ⊗ b
    friend TensorElement tensor(const TensorElement& a, const TensorElement& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("tensor of different N");
        TensorElement r(a.n_, a.arity_ + b.arity_, std::min(a.d_, b.d_));
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                Key k = ka;
                k.insert(k.end(), kb.begin(), kb.end());
                r.add_term(k, ca * cb);
            }
        return r;
    }

    // Replace slot s (0-based) by the image of a linear map sending a monomial
    // to an element of arity m.
    TensorElement apply_slot(int s, int m, const std::function<TensorElement(const Monomial&)>& f) const {
        if (s < 0 || s >= arity_) throw std::out_of_range("tensor slot out of range");
        TensorElement r(n_, arity_ - 1 + m, d_);
        std::map<Monomial, TensorElement> memo;
        for (const auto& [k, c] : terms_) {
            auto it = memo.find(k[s]);
            if (it == memo.end()) it = memo.emplace(k[s], f(k[s])).first;
            if (it->second.arity_ != m) throw std::logic_error("slot map returned wrong arity");
            for (const auto& [img, v] : it->second.terms_) {
                Key out(k.begin(), k.begin() + s);
                out.insert(out.end(), img.begin(), img.end());
                out.insert(out.end(), k.begin() + s + 1, k.end());
                r.add_term(out, c * v);
            }
        }
        return r;
    }

    // Multiply slots s and s+1 together.
    TensorElement multiply_slots(int s) const {
        if (s < 0 || s + 1 >= arity_) throw std::out_of_range("tensor slot out of range");
        TensorElement r(n_, arity_ - 1, d_);
        for (const auto& [k, c] : terms_) {
            AlgElement p(n_, d_);
            p.add_product(k[s], k[s + 1], Rational(1));
            for (const auto& [m, v] : p.terms()) {
                Key out(k.begin(), k.begin() + s);
                out.push_back(m);
                out.insert(out.end(), k.begin() + s + 2, k.end());
                r.add_term(out, c * v);
            }
        }
        return r;
    }

    AlgElement to_element() const {
        if (arity_ != 1) throw std::logic_error("to_element needs arity 1");
        AlgElement x(n_, d_);
        for (const auto& [k, c] : terms_) x.add_term(k[0], c);
        return x;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += c.str() + " *";
            for (std::size_t s = 0; s < k.size(); ++s) out += (s ? " (x) " : " ") + ("(" + to_string(k[s]) + ")");
        }
        return out;
    }

private:
    void check(const TensorElement& o) const {
        if (n_ != o.n_ || arity_ != o.arity_) throw std::invalid_argument("tensor shape mismatch");
    }
    void add_expanded(const std::vector<AlgElement>& factors, const Rational& c) {
        Key k(arity_);
        std::function<void(int, Rational)> rec = [&](int s, Rational acc) {
            if (s == arity_) {
                add_term(k, acc);
                return;
            }
            for (const auto& [m, v] : factors[s].terms()) {
                k[s] = m;
                rec(s + 1, acc * v);
            }
        };
        rec(0, c);
    }

    int n_;
    int arity_;
    int d_;
    Terms terms_;
};

enum class CoproductSide { yangian, dual, dual_opposite, double_yangian };

namespace detail {

inline TensorElement generator_coproduct(int n, int d, const GenId& g, CoproductSide side) {
    TensorElement t(n, 2, d);
    t.add_term({{g}, {}}, Rational(1));
    t.add_term({{}, {g}}, Rational(1));
    auto pair = [&](GenId a, GenId b) {
        Monomial ma, mb;
        ma.push_back(a);
        mb.push_back(b);
        return TensorElement::Key{ma, mb};
    };
    const int r = g.abs_level();
    bool opposite = side == CoproductSide::dual_opposite || (side == CoproductSide::double_yangian && g.negative());
    for (int k = 1; k <= n; ++k) {
        if (g.positive()) {
            for (int s = 1; s < r; ++s) t.add_term(pair({s, g.i, k}, {r - s, k, g.j}), Rational(1));
        } else {
            // T^(-r)_ij ↦ ... + Σ_k Σ_{s=1}^{r} T^(-s)_ik ⊗ T^(s-r-1)_kj
            for (int s = 1; s <= r; ++s) {
                GenId a{-s, g.i, k}, b{s - r - 1, k, g.j};
                t.add_term(opposite ? pair(b, a) : pair(a, b), Rational(1));
            }
        }
    }
    return t;
}

inline void check_side(const Monomial& m, CoproductSide side) {
    if (side == CoproductSide::yangian && has_negative(m))
        throw std::invalid_argument("Yangian coproduct applied to a dual generator");
    if ((side == CoproductSide::dual || side == CoproductSide::dual_opposite) && has_positive(m))
        throw std::invalid_argument("dual coproduct applied to a Yangian generator");
}

}  // namespace detail

// Δ on a monomial, extended multiplicatively.
inline TensorElement delta_monomial(int n, int d, const Monomial& m, CoproductSide side) {
    detail::check_side(m, side);
    TensorElement acc = TensorElement::unit(n, 2, d);
    for (const auto& g : m) acc = acc * detail::generator_coproduct(n, d, g, side);
    return acc;
}

inline TensorElement delta(const AlgElement& x, CoproductSide side) {
    TensorElement out(x.n() == 0 ? 1 : x.n(), 2, x.dual_trunc());
    for (const auto& [m, c] : x.terms()) out += delta_monomial(out.n(), out.dual_trunc(), m, side) * c;
    return out;
}

inline Rational counit(const AlgElement& x) { return x.scalar_part(); }

inline TensorElement counit_monomial(int n, int d, const Monomial& m) {
    TensorElement t(n, 0, d);
    if (m.empty()) t.add_term({}, Rational(1));
    return t;
}

using AlgMatrix = std::vector<std::vector<ASeries>>;

// T(u) with u descending to order K.
inline AlgMatrix t_matrix(int n, int order, int dual_trunc = kNoTruncation) {
    const VariableSpec u = desc("u", order);
    AlgMatrix t(n, std::vector<ASeries>(n, ASeries({u})));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int r = 0; r <= order; ++r) t[i - 1][j - 1].add_term({r}, AlgElement::t(n, r, i, j, dual_trunc));
    return t;
}

// T*(v) = δ + T^(-1) + T^(-2) v + … with v ascending to order K.
inline AlgMatrix tstar_matrix(int n, int dual_trunc, int order) {
    const VariableSpec v = asc("v", order);
    AlgMatrix t(n, std::vector<ASeries>(n, ASeries({v})));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            t[i - 1][j - 1].add_term({0}, AlgElement::t(n, 0, i, j, dual_trunc));
            for (int b = 0; b <= order; ++b)
                t[i - 1][j - 1].add_term({b}, AlgElement::t(n, -b - 1, i, j, dual_trunc));
        }
    return t;
}

inline AlgMatrix mat_mul(const AlgMatrix& a, const AlgMatrix& b) {
    const std::size_t n = a.size();
    AlgMatrix c(n, std::vector<ASeries>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ASeries s;
            for (std::size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

// (1 + M)^{-1} = Σ_k (-M)^k, where every entry of M is nilpotent modulo the truncation.
inline AlgMatrix mat_inverse_unipotent(const AlgMatrix& a, int max_terms) {
    const std::size_t n = a.size();
    const int N = static_cast<int>(n);
    const auto vars = a[0][0].variables();
    const int d = a[0][0].terms().empty() ? kNoTruncation : a[0][0].terms().begin()->second.dual_trunc();
    AlgMatrix minus_m(n, std::vector<ASeries>(n)), sum(n, std::vector<ASeries>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ASeries one = i == j ? ASeries::constant(AlgElement::one(N, d), vars) : ASeries(vars);
            minus_m[i][j] = one - a[i][j];
            sum[i][j] = one;
        }
    AlgMatrix power = sum;
    for (int k = 1; k <= max_terms; ++k) {
        power = mat_mul(power, minus_m);
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                sum[i][j] += power[i][j];
                zero = zero && power[i][j].is_zero();
            }
        if (zero) break;
    }
    return sum;
}

// Coefficients C^(0..K) of T(u)^{-1}: C^(r) = -Σ_{a=1}^{r} T^(a) C^(r-a).
inline std::vector<std::vector<std::vector<AlgElement>>> antipode_coefficients(int n, int order) {
    std::vector<std::vector<std::vector<AlgElement>>> c(order + 1,
                                                        std::vector<std::vector<AlgElement>>(n, std::vector<AlgElement>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) c[0][i - 1][j - 1] = AlgElement::t(n, 0, i, j);
    for (int r = 1; r <= order; ++r)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                AlgElement s(n);
                for (int a = 1; a <= r; ++a)
                    for (int k = 1; k <= n; ++k) s -= AlgElement::t(n, a, i, k) * c[r - a][k - 1][j - 1];
                c[r][i - 1][j - 1] = s;
            }
    return c;
}

// T(u)^{-1} to order u^{-K}; entry (i,j) at u^{-r} is S(T^(r)_ij).
inline AlgMatrix antipode_Y(int n, int order) {
    auto c = antipode_coefficients(n, order);
    const VariableSpec u = desc("u", order);
    AlgMatrix m(n, std::vector<ASeries>(n, ASeries({u})));
    for (int r = 0; r <= order; ++r)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j].add_term({r}, c[r][i][j]);
    return m;
}

// T*(v)^{-1}, computed in the algebra truncated at D, to order v^K.
inline AlgMatrix antipode_dual(int n, int dual_trunc, int order) {
    if (dual_trunc == kNoTruncation) throw std::domain_error("the dual antipode needs a finite truncation D");
    return mat_inverse_unipotent(tstar_matrix(n, dual_trunc, order), dual_trunc);
}

// Antipode on elements of the Yangian or of the truncated dual Yangian.
class Antipode {
public:
    Antipode(int n, int dual_trunc = kNoTruncation) : n_(n), d_(dual_trunc) {}

    AlgElement generator(const GenId& g) {
        auto it = gens_.find(g);
        if (it != gens_.end()) return it->second;
        AlgElement img;
        if (g.positive()) {
            img = antipode_coefficients(n_, g.level)[g.level][g.i - 1][g.j - 1].with_truncation(d_);
        } else {
            if (d_ == kNoTruncation) throw std::domain_error("the dual antipode needs a finite truncation D");
            const int r = g.abs_level();
            if (dual_cache_order_ < r - 1) {
                dual_ = antipode_dual(n_, d_, std::max(r - 1, 0));
                dual_cache_order_ = r - 1;
            }
            img = dual_[g.i - 1][g.j - 1].coeff(Exponent{r - 1}, AlgElement(n_, d_));
            if (r == 1) img -= AlgElement::t(n_, 0, g.i, g.j, d_);
        }
        return gens_.emplace(g, img).first->second;
    }

    // S(g1…gm) = S(gm)…S(g1)
    AlgElement monomial(const Monomial& m) {
        AlgElement acc = AlgElement::one(n_, d_);
        for (auto it = m.rbegin(); it != m.rend(); ++it) acc = acc * generator(*it);
        return acc;
    }

    AlgElement operator()(const AlgElement& x) {
        AlgElement out(n_, d_);
        for (const auto& [m, c] : x.terms()) out += monomial(m) * c;
        return out;
    }

private:
    int n_;
    int d_;
    std::map<GenId, AlgElement> gens_;
    AlgMatrix dual_;
    int dual_cache_order_ = -1;
};

// Z^(0..K) with Σ_k T_ki(u+N) T^♯_kj(u) = δ_ij Z(u), read at i = j = 1.
inline std::vector<AlgElement> z_series_matrix_entry(int n, int order, int i, int j) {
    auto t = t_matrix(n, order);
    auto inv = antipode_Y(n, order);
    ASeries z;
    for (int k = 0; k < n; ++k) {
        ASeries shifted = series_shift(t[k][i - 1], "u", Rational(n));
        z += shifted * inv[j - 1][k];
    }
    std::vector<AlgElement> out;
    for (int r = 0; r <= order; ++r) out.push_back(z.coeff(Exponent{r}, AlgElement(n)));
    return out;
}

// Coefficients Z^(0), …, Z^(K) of the central series; Z^(0) = 1 and Z^(1) = 0.
inline std::vector<AlgElement> z_series(int n, int order) { return z_series_matrix_entry(n, order, 1, 1); }

inline ASeries z_as_series(const std::vector<AlgElement>& z) {
    const VariableSpec u = desc("u", static_cast<int>(z.size()) - 1);
    ASeries s({u});
    for (std::size_t r = 0; r < z.size(); ++r) s.add_term({static_cast<int>(r)}, z[r]);
    return s;
}

struct SeriesCheck {
    bool holds = true;
    std::vector<std::string> failures;
};

// S²(T^(r)_ij) against the u^{-r} coefficient of Z(u)^{-1} T_ij(u+N), r ≤ K.
inline SeriesCheck s_square_check(int n, int order) {
    SeriesCheck res;
    auto zinv = series_invert(z_as_series(z_series(n, order)));
    auto t = t_matrix(n, order);
    Antipode s(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            ASeries rhs = zinv * series_shift(t[i - 1][j - 1], "u", Rational(n));
            for (int r = 1; r <= order; ++r) {
                AlgElement lhs = s(s.generator({r, i, j}));
                AlgElement diff = lhs - rhs.coeff(Exponent{r}, AlgElement(n));
                if (!diff.is_zero()) {
                    res.holds = false;
                    res.failures.push_back("S^2(T[" + std::to_string(r) + "," + std::to_string(i) + "," +
                                           std::to_string(j) + "]) residual " + diff.str());
                }
            }
        }
    return res;
}

// Σ_k T*_ki(v-N) T^♭_kj(v) = δ_ij Z°(v), at (i, j), in the algebra truncated at D.
inline ASeries z_circ_entry(int n, int dual_trunc, int order, int i, int j) {
    if (dual_trunc == kNoTruncation || dual_trunc < 1) throw std::domain_error("Z° needs a finite truncation D >= 1");
    if (order > dual_trunc - 1)
        throw TruncationError("v-order " + std::to_string(order) + " of Z° is not certified at D = " +
                              std::to_string(dual_trunc) + " (needs order <= D - 1)");
    // Modulo the truncation T*(v) is a polynomial of degree D-1 in v, so the shift is exact.
    const int full = dual_trunc - 1;
    auto ts = tstar_matrix(n, dual_trunc, full);
    auto inv = antipode_dual(n, dual_trunc, full);
    ASeries z;
    for (int k = 0; k < n; ++k) {
        ASeries shifted = series_shift(ts[k][i - 1], "v", Rational(-n), ShiftBound::certified_polynomial);
        z += shifted * inv[j - 1][k];
    }
    return z.truncated("v", order);
}

inline ASeries z_circ_series(int n, int dual_trunc, int order) { return z_circ_entry(n, dual_trunc, order, 1, 1); }

struct StabilizationReport {
    int coefficient = 0;
    // number of monomials of each exact dual degree d, for d = coefficient + 1 … max D
    std::vector<std::pair<int, std::size_t>> new_terms;
    std::optional<int> stabilized_at;
};

// For each v-coefficient of Z°, the terms that appear at each new dual degree.
// A coefficient has stabilized at D0 when no terms of degree > D0 appear up to max_d.
inline std::vector<StabilizationReport> z_circ_stabilization(int n, int order, int max_d) {
    auto z = z_circ_series(n, max_d, order);
    std::vector<StabilizationReport> out;
    for (int k = 0; k <= order; ++k) {
        StabilizationReport rep;
        rep.coefficient = k;
        AlgElement c = z.coeff(Exponent{k}, AlgElement(n, max_d));
        std::map<int, std::size_t> counts;
        for (const auto& [m, v] : c.terms()) ++counts[dual_degree(m)];
        int last = 0;
        for (int d = 0; d <= max_d; ++d) {
            std::size_t cnt = counts.count(d) ? counts[d] : 0;
            if (d >= k + 1) rep.new_terms.push_back({d, cnt});
            if (cnt > 0) last = d;
        }
        if (last < max_d) rep.stabilized_at = std::max(last, k + 1);
        out.push_back(std::move(rep));
    }
    return out;
}

struct HopfCheckResult {
    std::string name;
    bool holds = true;
    std::string residual;
};

// Coassociativity, counit and antipode axioms on one generator.
inline std::vector<HopfCheckResult> hopf_axioms(int n, int dual_trunc, const GenId& g) {
    const bool dual = g.negative();
    const CoproductSide side = dual ? CoproductSide::dual : CoproductSide::yangian;
    const int d = dual ? dual_trunc : kNoTruncation;
    const AlgElement x = AlgElement::generator(n, g, d);
    auto dx = delta(x, side);
    auto dslot = [&](const Monomial& m) { return delta_monomial(n, d, m, side); };
    auto eps = [&](const Monomial& m) { return counit_monomial(n, d, m); };
    Antipode s(n, d);
    auto sslot = [&](const Monomial& m) { return TensorElement::from(s.monomial(m)); };

    std::vector<HopfCheckResult> out;
    auto record = [&](const std::string& what, const TensorElement& a, const TensorElement& b) {
        auto diff = a - b;
        out.push_back({what + " " + g.str(), diff.is_zero(), diff.str()});
    };
    record("coassociativity", dx.apply_slot(0, 2, dslot), dx.apply_slot(1, 2, dslot));
    auto xt = TensorElement::from(x);
    record("left counit", dx.apply_slot(0, 0, eps), xt);
    record("right counit", dx.apply_slot(1, 0, eps), xt);
    auto unit = TensorElement::from(AlgElement::scalar(n, counit(x), d));
    record("left antipode", dx.apply_slot(0, 1, sslot).multiply_slots(0), unit);
    record("right antipode", dx.apply_slot(1, 1, sslot).multiply_slots(0), unit);
    return out;
}

}  // namespace yangian
