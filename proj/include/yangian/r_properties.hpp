#pragma once

#include <yangian/hopf.hpp>
#include <yangian/pairing.hpp>
#include <yangian/representations.hpp>

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace yangian {

struct RPropertyResult {
    std::string name;
    bool holds = false;
    std::string residual;  // first mismatch, empty when the identity holds
};

namespace detail {

// Σ ρ(first) ⊗ second, collected by (i, j, exponent) with algebra-valued coefficients.
using SlotCollect = std::map<std::tuple<int, int, Exponent>, AlgElement>;

inline SlotCollect collect_slot(Representation& rep, const TensorElement& r, int rep_slot, int dual_trunc) {
    SlotCollect out;
    const int other = 1 - rep_slot;
    for (const auto& [k, c] : r.terms()) {
        TensorOperator img = rep.monomial(k[rep_slot]);
        AlgElement x(r.n(), dual_trunc);
        x.add_term(k[other], c);
        for (const auto& [key, s] : img.entries())
            for (const auto& [e, q] : s.terms()) {
                auto [it, fresh] = out.try_emplace({static_cast<int>(key.first) + 1, static_cast<int>(key.second) + 1, e},
                                                   AlgElement(r.n(), dual_trunc));
                (void)fresh;
                it->second += x * q;
            }
    }
    return out;
}

inline RPropertyResult compare_collect(std::string name, const SlotCollect& got, const SlotCollect& want) {
    auto lookup = [](const SlotCollect& m, const SlotCollect::key_type& k, const AlgElement& zero) {
        auto it = m.find(k);
        return it == m.end() ? zero : it->second;
    };
    std::vector<SlotCollect::key_type> keys;
    for (const auto& [k, v] : got) keys.push_back(k);
    for (const auto& [k, v] : want) keys.push_back(k);
    for (const auto& k : keys) {
        const AlgElement& ref = got.count(k) ? got.at(k) : want.at(k);
        AlgElement zero(ref.n(), ref.dual_trunc());
        AlgElement diff = lookup(got, k, zero) - lookup(want, k, zero);
        if (!diff.is_zero()) {
            const auto& [i, j, e] = k;
            return {std::move(name), false,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") exponent " + std::to_string(e[0]) +
                        ": " + diff.str()};
        }
    }
    return {std::move(name), true, ""};
}

}  // namespace detail

// (id ⊗ ε)ℛ = 1
inline RPropertyResult r_counit_property(const TensorElement& r) {
    AlgElement acc(r.n(), r.dual_trunc());
    for (const auto& [k, c] : r.terms()) {
        if (!k[1].empty()) continue;  // ε kills every generator
        AlgElement x(r.n(), r.dual_trunc());
        x.add_term(k[0], c);
        acc += x;
    }
    AlgElement diff = acc - AlgElement::one(r.n(), r.dual_trunc());
    return {"(id x eps)R = 1", diff.is_zero(), diff.is_zero() ? "" : diff.str()};
}

// (ρ*_u ⊗ id)ℛ = T(u) modulo u^-(D+1)
inline RPropertyResult r_rho_star_property(const TensorElement& r) {
    const int n = r.n(), d = r.dual_trunc();
    Representation rep({RepSpec::symbolic(RepKind::rho_star, desc("u", d), n)});
    auto got = detail::collect_slot(rep, r, 0, kNoTruncation);
    detail::SlotCollect want;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 0; k <= d; ++k) {
                AlgElement x = AlgElement::t(n, k, i, j);
                if (!x.is_zero()) want.emplace(std::make_tuple(i, j, Exponent{k}), x);
            }
    return detail::compare_collect("(rho*_u x id)R = T(u) mod u^-" + std::to_string(d + 1), got, want);
}

// (id ⊗ ρ_v)ℛ = T*(v) modulo I_D
inline RPropertyResult r_rho_property(const TensorElement& r) {
    const int n = r.n(), d = r.dual_trunc();
    Representation rep({RepSpec::symbolic(RepKind::rho, asc("v", d > 0 ? d - 1 : 0), n)});
    auto got = detail::collect_slot(rep, r, 1, d);
    detail::SlotCollect want;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) want.emplace(std::make_tuple(i, j, Exponent{0}), AlgElement::one(n, d));
            for (int b = 0; b + 1 <= d; ++b) {
                auto key = std::make_tuple(i, j, Exponent{b});
                AlgElement x = AlgElement::t(n, -b - 1, i, j, d);
                auto it = want.find(key);
                if (it == want.end()) want.emplace(key, x);
                else it->second += x;
            }
        }
    return detail::compare_collect("(id x rho_v)R = T*(v) mod I_" + std::to_string(d), got, want);
}

inline TensorOperator rho_star_rho_image(const TensorElement& r) {
    const int n = r.n(), d = r.dual_trunc();
    const VariableSpec u = desc("u", d), v = asc("v", d);
    Representation left({RepSpec::symbolic(RepKind::rho_star, u, n)});
    Representation right({RepSpec::symbolic(RepKind::rho, v, n)});
    TensorOperator out(n, 2);
    for (const auto& [k, c] : r.terms()) out += tensor_product(left.monomial(k[0]), right.monomial(k[1])) * c;
    return out;
}

// R(u - v) with u descending and v ascending to order D, the ρ*_u ⊗ ρ_v target.
inline TensorOperator yang_r_target(int n, int d) {
    const std::vector<VariableSpec> vars{desc("u", d), asc("v", d)};
    return build_r({RKind::yang, AffineArg::var("u") - AffineArg::var("v")}, n, 2, 1, 2, vars);
}

// The u-order of every term is bounded by D; v-orders never exceed u-orders in R(u - v).
inline TensorOperator drop_u_beyond(const TensorOperator& t, int d) {
    TensorOperator out(t.n(), t.arity());
    for (const auto& [k, s] : t.entries()) out.add(k, s.truncated("u", d));
    return out;
}

// (ρ*_u ⊗ ρ_v)ℛ = R(u - v)
inline RPropertyResult r_evaluation_property(const TensorElement& r) {
    TensorOperator diff = drop_u_beyond(rho_star_rho_image(r), r.dual_trunc()) -
                          drop_u_beyond(yang_r_target(r.n(), r.dual_trunc()), r.dual_trunc());
    return {"(rho*_u x rho_v)R = R(u-v)", diff.is_zero(), diff.is_zero() ? "" : diff.str()};
}

// (S ⊗ id)ℛ is inverse to ℛ, checked in ρ*_u ⊗ ρ_v. S is an anti-homomorphism, so the
// image of S(g_1…g_m) is the reversed product of the images of S(g_k).
inline RPropertyResult r_antipode_property(const TensorElement& r) {
    const int n = r.n(), d = r.dual_trunc();
    const VariableSpec u = desc("u", d), v = asc("v", d);
    Representation left({RepSpec::symbolic(RepKind::rho_star, u, n)});
    Representation right({RepSpec::symbolic(RepKind::rho, v, n)});
    Antipode s(n, d);
    std::map<GenId, TensorOperator> s_images;
    auto s_image = [&](const GenId& g) -> const TensorOperator& {
        auto it = s_images.find(g);
        if (it == s_images.end()) it = s_images.emplace(g, left(s.generator(g))).first;
        return it->second;
    };
    TensorOperator inv(n, 2);
    for (const auto& [k, c] : r.terms()) {
        TensorOperator acc = left.identity();
        for (auto g = k[0].rbegin(); g != k[0].rend(); ++g) acc = acc * s_image(*g);
        inv += tensor_product(acc, right.monomial(k[1])) * c;
    }
    TensorOperator prod = drop_u_beyond(drop_u_beyond(inv, d) * rho_star_rho_image(r), d);
    const std::vector<VariableSpec> vars{u, v};
    TensorOperator diff = prod - TensorOperator::identity(n, 2, RSeries::constant(Rational(1), vars));
    return {"(S x id)R . R = 1 in rho*_u x rho_v", diff.is_zero(), diff.is_zero() ? "" : diff.str()};
}

inline std::vector<RPropertyResult> r_properties(int max_degree, int n) {
    TensorElement r = universal_r(max_degree, n);
    return {r_counit_property(r), r_rho_star_property(r), r_rho_property(r), r_evaluation_property(r),
            r_antipode_property(r)};
}

}  // namespace yangian
