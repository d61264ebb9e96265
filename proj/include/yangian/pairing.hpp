#pragma once

#include <yangian/hopf.hpp>
#include <yangian/tensor_operator.hpp>

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace yangian {

enum class PairingMethod { fast, tensor, recursive };

namespace detail {

struct PairingShape {
    int m = 0, n = 0;
    std::vector<int> r, s;
    std::vector<int> row, col;  // (i_1..i_m, k_1..k_n) and (j_1..j_m, l_1..l_n)
};

inline PairingShape pairing_shape(const Monomial& x, const Monomial& z, int n) {
    PairingShape p;
    for (const auto& g : x) {
        if (!g.positive()) throw std::invalid_argument("first pairing argument must be a Yangian monomial");
        validate(g, n);
        p.r.push_back(g.level);
        p.row.push_back(g.i);
        p.col.push_back(g.j);
    }
    for (const auto& g : z) {
        if (!g.negative()) throw std::invalid_argument("second pairing argument must be a dual monomial");
        validate(g, n);
        p.s.push_back(g.abs_level());
    }
    for (const auto& g : z) p.row.push_back(g.i);
    for (const auto& g : z) p.col.push_back(g.j);
    p.m = static_cast<int>(x.size());
    p.n = static_cast<int>(z.size());
    return p;
}

// Coefficient of e_{row,col} u^{-r} v^{s-1} in Π_a Π_b (1 - Σ_t u_a^{-t} v_b^{t-1} P_{a,b+m}).
// A term picks cells (a,b) with exponents t_ab >= 1: row sums give r_a and each
// column needs Σ (t_ab - 1) = s_b - 1. With exclude_empty_ones, every column with
// s_b = 1 must pick at least one cell (the factor block minus 1).
inline Rational pairing_tables(const PairingShape& p, bool exclude_empty_ones) {
    const int m = p.m, n = p.n;
    std::vector<int> row_left = p.r, budget(n), picked(n, 0);
    for (int b = 0; b < n; ++b) budget[b] = p.s[b] - 1;
    std::vector<std::pair<int, int>> cells;
    Rational total(0);

    auto finish = [&] {
        for (int b = 0; b < n; ++b) {
            if (budget[b] != 0) return;
            if (exclude_empty_ones && p.s[b] == 1 && picked[b] == 0) return;
        }
        // entry (row, col) of the ordered product of transpositions
        std::vector<int> v = p.col;
        for (auto it = cells.rbegin(); it != cells.rend(); ++it) std::swap(v[it->first], v[m + it->second]);
        if (v != p.row) return;
        total += Rational(cells.size() % 2 ? -1 : 1);
    };

    auto rec = [&](auto&& self, int a, int b) -> void {
        if (a == m) {
            finish();
            return;
        }
        if (b == n) {
            if (row_left[a] == 0) self(self, a + 1, 0);
            return;
        }
        self(self, a, b + 1);
        for (int t = 1; t <= row_left[a] && t - 1 <= budget[b]; ++t) {
            row_left[a] -= t;
            budget[b] -= t - 1;
            ++picked[b];
            cells.push_back({a, b});
            self(self, a, b + 1);
            cells.pop_back();
            --picked[b];
            budget[b] += t - 1;
            row_left[a] += t;
        }
    };
    rec(rec, 0, 0);
    return total;
}

inline Rational pair_fast(const Monomial& x, const Monomial& z, int n) {
    auto p = pairing_shape(x, z, n);
    if (level_degree(x) < dual_degree(z)) return Rational(0);
    if (p.m == 0 || p.n == 0) return Rational(p.m == 0 && p.n == 0 ? 1 : 0);
    return pairing_tables(p, true);
}

// Expands the product of R-matrices as operators and reads off one coefficient.
inline Rational pair_tensor(const Monomial& x, const Monomial& z, int n) {
    auto p = pairing_shape(x, z, n);
    if (p.m == 0 || p.n == 0) return Rational(p.m == 0 && p.n == 0 ? 1 : 0);
    const int arity = p.m + p.n;
    std::vector<VariableSpec> vars;
    std::map<std::string, int> target;
    for (int a = 0; a < p.m; ++a) {
        vars.push_back(desc("u" + std::to_string(a + 1), p.r[a]));
        target["u" + std::to_string(a + 1)] = p.r[a];
    }
    for (int b = 0; b < p.n; ++b) {
        vars.push_back(asc("v" + std::to_string(b + 1), p.s[b] - 1));
        target["v" + std::to_string(b + 1)] = p.s[b] - 1;
    }
    const auto one = TensorOperator::identity(n, arity, RSeries::constant(Rational(1), vars));
    TensorOperator prod = one;
    for (int b = 0; b < p.n; ++b) {
        TensorOperator block = one;
        for (int a = 0; a < p.m; ++a) {
            AffineArg arg = AffineArg::var("u" + std::to_string(a + 1)) - AffineArg::var("v" + std::to_string(b + 1));
            block = block * build_r({RKind::yang, arg}, n, arity, a + 1, p.m + b + 1, vars);
        }
        if (p.s[b] == 1) block = block - one;
        prod = prod * block;
    }
    return prod.entry(p.row, p.col).coeff(target);
}

// Full-product coefficients F, then subtract the contributions of δ at s_b = 1 positions.
inline Rational pair_recursive(const Monomial& x, const Monomial& z, int n) {
    auto p = pairing_shape(x, z, n);
    if (p.m == 0 || p.n == 0) return Rational(p.m == 0 && p.n == 0 ? 1 : 0);
    Rational value = pairing_tables(p, false);
    std::vector<int> ones;
    for (int b = 0; b < p.n; ++b)
        if (p.s[b] == 1) ones.push_back(b);
    const int q = static_cast<int>(ones.size());
    for (int mask = 0; mask < (1 << q) - 1; ++mask) {
        Monomial sub;
        bool live = true;
        for (int b = 0, o = 0; b < p.n; ++b) {
            if (p.s[b] == 1) {
                bool keep = (mask >> o++) & 1;
                if (!keep) {
                    live = live && z[b].i == z[b].j;
                    continue;
                }
            }
            sub.push_back(z[b]);
        }
        if (live) value -= pair_recursive(x, sub, n);
    }
    return value;
}

class PairingCache {
public:
    Rational get(const Monomial& x, const Monomial& z, int n) {
        Key key{n, x, z};
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        Rational v = pair_fast(x, z, n);
        std::unique_lock lock(mutex_);
        if (cache_.size() > kMaxEntries) cache_.clear();
        cache_.emplace(std::move(key), v);
        return v;
    }

private:
    static constexpr std::size_t kMaxEntries = 4'000'000;
    using Key = std::tuple<int, Monomial, Monomial>;
    std::shared_mutex mutex_;
    std::map<Key, Rational> cache_;
};

inline PairingCache& pairing_cache() {
    static PairingCache cache;
    return cache;
}

}  // namespace detail

// ⟨T^(r_1)…T^(r_m), T^(-s_1)…T^(-s_n)⟩; factors may come in any order.
inline Rational pair_monomials(const Monomial& x, const Monomial& z, int n, PairingMethod method = PairingMethod::fast) {
    switch (method) {
        case PairingMethod::tensor: return detail::pair_tensor(x, z, n);
        case PairingMethod::recursive: return detail::pair_recursive(x, z, n);
        case PairingMethod::fast: break;
    }
    return detail::pairing_cache().get(x, z, n);
}

inline int yangian_degree(const AlgElement& x) {
    int d = 0;
    for (const auto& [m, c] : x.terms()) d = std::max(d, level_degree(m));
    return d;
}

inline Rational pair_elements(const AlgElement& x, const AlgElement& z, PairingMethod method = PairingMethod::fast) {
    if (x.tag() == AlgebraTag::DY || (!x.is_scalar() && x.tag() != AlgebraTag::Y))
        throw std::invalid_argument("first pairing argument must lie in the Yangian");
    if (z.tag() == AlgebraTag::DY || (!z.is_scalar() && z.tag() != AlgebraTag::Ystar))
        throw std::invalid_argument("second pairing argument must lie in the dual Yangian");
    if (z.dual_trunc() < yangian_degree(x))
        throw TruncationError("dual truncation " + std::to_string(z.dual_trunc()) + " is below the degree " +
                              std::to_string(yangian_degree(x)) + " of the Yangian argument");
    const int n = std::max({x.n(), z.n(), 1});
    Rational total(0);
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [mz, cz] : z.terms()) {
            if (level_degree(mx) < dual_degree(mz)) continue;
            total += cx * cz * pair_monomials(mx, mz, n, method);
        }
    return total;
}

// Σ Π_k ⟨a_k, b_k⟩ over factorwise pairs.
inline Rational pair_tensors(const TensorElement& a, const TensorElement& b, PairingMethod method = PairingMethod::fast) {
    if (a.arity() != b.arity()) throw std::invalid_argument("tensor pairing arity mismatch");
    const int n = std::max(a.n(), b.n());
    Rational total(0);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            Rational v = ca * cb;
            for (int s = 0; s < a.arity() && !v.is_zero(); ++s) {
                if (level_degree(ka[s]) < dual_degree(kb[s])) v = Rational(0);
                else v *= pair_monomials(ka[s], kb[s], n, method);
            }
            total += v;
        }
    return total;
}

// T^(r)_ij ↦ T^(-r)_ji, put in normal order.
inline Monomial dual_partner(const Monomial& m) {
    Monomial z;
    for (const auto& g : m) {
        if (!g.positive()) throw std::invalid_argument("dual_partner takes a Yangian monomial");
        z.push_back({-g.level, g.j, g.i});
    }
    std::sort(z.begin(), z.end());
    return z;
}

// (-1)^m g! h! … over the multiplicities of the triples (r, i, j).
inline Rational gram_diagonal_formula(const Monomial& m) {
    std::map<GenId, int> mult;
    for (const auto& g : m) ++mult[g];
    Rational v(m.size() % 2 ? -1 : 1);
    for (const auto& [g, k] : mult) v *= factorial(k);
    return v;
}

using RationalMatrix = std::vector<std::vector<Rational>>;

inline int matrix_rank(RationalMatrix a) {
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    int rank = 0;
    for (std::size_t c = 0, r = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t k = r + 1; k < rows; ++k) {
            if (a[k][c].is_zero()) continue;
            Rational f = a[k][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[k][j] -= f * a[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// Exact inverse by Gauss-Jordan elimination.
inline RationalMatrix matrix_inverse(RationalMatrix a) {
    const std::size_t n = a.size();
    RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        Rational f = a[c][c].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= f;
            inv[c][j] *= f;
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (k == c || a[k][c].is_zero()) continue;
            Rational g = a[k][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[k][j] -= g * a[c][j];
                inv[k][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

inline bool is_lower_triangular(const RationalMatrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a[i].size(); ++j)
            if (!a[i][j].is_zero()) return false;
    return true;
}

struct GramTable {
    int degree = 0;
    int n = 1;
    std::vector<Monomial> rows;  // Yangian basis of degree s
    std::vector<Monomial> cols;  // dual partners of the rows
    RationalMatrix values;
    RationalMatrix inverse;
    bool lower_triangular = false;
    bool diagonal_matches = false;
    int rank = 0;
};

inline GramTable gram_matrix(int s, int n) {
    GramTable g;
    g.degree = s;
    g.n = n;
    g.rows = basis_enumerate(BasisSide::yangian, s, n);
    for (const auto& m : g.rows) g.cols.push_back(dual_partner(m));
    const std::size_t k = g.rows.size();
    g.values.assign(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g.values[i][j] = pair_monomials(g.rows[i], g.cols[j], n);
    g.lower_triangular = is_lower_triangular(g.values);
    g.diagonal_matches = true;
    for (std::size_t i = 0; i < k; ++i)
        g.diagonal_matches = g.diagonal_matches && g.values[i][i] == gram_diagonal_formula(g.rows[i]);
    g.rank = matrix_rank(g.values);
    if (g.rank == static_cast<int>(k)) g.inverse = matrix_inverse(g.values);
    return g;
}

// Yangian basis X_s of degree ≤ D with the dual elements X'_s, ⟨X_r, X'_s⟩ = δ_rs.
struct DualSystem {
    int max_degree = 0;
    int n = 1;
    std::vector<Monomial> basis;
    std::vector<AlgElement> duals;
};

inline DualSystem dual_system(int max_degree, int n) {
    if (max_degree < 0) throw std::invalid_argument("degree bound must be >= 0");
    DualSystem sys;
    sys.max_degree = max_degree;
    sys.n = n;
    std::vector<Monomial> partners;
    for (int s = 0; s <= max_degree; ++s)
        for (auto& m : basis_enumerate(BasisSide::yangian, s, n)) {
            partners.push_back(dual_partner(m));
            sys.basis.push_back(std::move(m));
        }
    const std::size_t k = sys.basis.size();
    RationalMatrix f(k, std::vector<Rational>(k, Rational(0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            // degree blocks: ⟨X_i, Z_j⟩ = 0 when deg X_i < deg Z_j, which covers j > i
            f[i][j] = pair_monomials(sys.basis[i], partners[j], n);
        }
    auto g = matrix_inverse(f);
    for (std::size_t s = 0; s < k; ++s) {
        AlgElement x(n, max_degree);
        for (std::size_t r = 0; r < k; ++r)
            if (!g[r][s].is_zero()) x.add_term(partners[r], g[r][s]);
        sys.duals.push_back(std::move(x));
    }
    return sys;
}

// ℛ_D = Σ X'_s ⊗ X_s with the dual factor first.
inline TensorElement universal_r(const DualSystem& sys) {
    TensorElement r(sys.n, 2, sys.max_degree);
    for (std::size_t s = 0; s < sys.basis.size(); ++s)
        for (const auto& [m, c] : sys.duals[s].terms()) r.add_term({m, sys.basis[s]}, c);
    return r;
}

inline TensorElement universal_r(int max_degree, int n) { return universal_r(dual_system(max_degree, n)); }

struct DualityResult {
    Rational product_side;    // ⟨X, ZW⟩
    Rational coproduct_side;  // ⟨Δ(X), Z⊗W⟩
    Rational product_side2;   // ⟨XY, Z⟩
    Rational coproduct_side2; // ⟨X⊗Y, Δ(Z)⟩
    bool holds() const { return product_side == coproduct_side && product_side2 == coproduct_side2; }
};

// Both bialgebra duality identities for X, Y in the Yangian and Z, W in the dual Yangian.
inline DualityResult duality_check(const AlgElement& x, const AlgElement& y, const AlgElement& z, const AlgElement& w,
                                   PairingMethod method = PairingMethod::fast) {
    const int need = yangian_degree(x) + yangian_degree(y);
    for (const auto* e : {&z, &w})
        if (e->dual_trunc() < need)
            throw TruncationError("duality check needs dual truncation >= " + std::to_string(need));
    auto zz = z.with_truncation(need), ww = w.with_truncation(need);
    DualityResult res;
    res.product_side = pair_elements(x, zz * ww, method);
    res.coproduct_side = pair_tensors(delta(x, CoproductSide::yangian),
                                      tensor(TensorElement::from(zz), TensorElement::from(ww)), method);
    res.product_side2 = pair_elements(x * y, zz, method);
    TensorElement xy = tensor(TensorElement::from(x), TensorElement::from(y));
    res.coproduct_side2 = pair_tensors(xy, delta(zz, CoproductSide::dual), method);
    return res;
}

}  // namespace yangian
