#pragma once

#include <yangian/algebra.hpp>
#include <yangian/hopf.hpp>
#include <yangian/pairing.hpp>
#include <yangian/r_properties.hpp>
#include <yangian/representations.hpp>
#include <yangian/tensor_operator.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace yangian {

struct CheckConfig {
    int n = 2;
    int dual_trunc = 5;
    int order = 3;
    std::uint32_t seed = 1;
};

struct IdentityResult {
    std::string suite;
    std::string name;
    bool holds = true;
    std::string residual;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ybe", "pbw", "hopf", "center", "duality", "rprops", "double"};
    return names;
}

// Seeded generators of words and elements for the randomized identities.
class RandomSource {
public:
    explicit RandomSource(std::uint32_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    // A word of the given length with levels in 1..max_level; dual letters get a random sign.
    Monomial word(int n, int len, int max_level, bool dual) {
        Monomial w;
        for (int p = 0; p < len; ++p) {
            int l = uniform(1, max_level);
            if (dual && uniform(0, 1)) l = -l;
            w.push_back({l, uniform(1, n), uniform(1, n)});
        }
        return w;
    }

    // A shuffled word of total level at most max_deg, all levels of one sign.
    Monomial graded_word(int n, int sign, int max_deg) {
        Monomial m;
        int left = uniform(0, max_deg);
        while (left > 0) {
            const int r = uniform(1, left);
            m.push_back({sign * r, uniform(1, n), uniform(1, n)});
            left -= r;
        }
        std::shuffle(m.begin(), m.end(), rng_);
        return m;
    }

    // Random combination of two graded words, multiplied out in the algebra.
    AlgElement graded_element(int n, int sign, int max_deg, int dual_trunc) {
        AlgElement x(n, dual_trunc);
        for (int t = 0; t < 2; ++t) {
            AlgElement f = AlgElement::one(n, dual_trunc);
            for (const auto& g : graded_word(n, sign, max_deg)) f = f * AlgElement::generator(n, g, dual_trunc);
            x += f * Rational(uniform(-3, 3), uniform(1, 3));
        }
        return x;
    }

private:
    std::mt19937 rng_;
};

namespace detail {

inline std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ';');
    while (!s.empty() && s.back() == ';') s.pop_back();
    return s;
}

class SuiteBuilder {
public:
    explicit SuiteBuilder(std::string suite) : suite_(std::move(suite)) {}

    void record(std::string name, bool holds, std::string residual = "") {
        out_.push_back({suite_, std::move(name), holds, holds ? "" : one_line(std::move(residual))});
    }
    void record(std::string name, const std::vector<std::string>& failures) {
        record(std::move(name), failures.empty(), failures.empty() ? "" : failures.front());
    }

    std::vector<IdentityResult> take() {
        std::stable_sort(out_.begin(), out_.end(),
                         [](const IdentityResult& a, const IdentityResult& b) { return a.name < b.name; });
        return std::move(out_);
    }

private:
    std::string suite_;
    std::vector<IdentityResult> out_;
};

inline std::vector<std::string> confluence_failures(int n, int dual_trunc, int words, int max_len, bool dual,
                                                    RandomSource& rnd) {
    std::vector<std::string> failures;
    for (int t = 0; t < words; ++t) {
        WordSum raw{{rnd.word(n, rnd.uniform(0, max_len), 3, dual), Rational(1)}};
        const int d = dual ? dual_trunc : kNoTruncation;
        AlgElement a = normal_form(n, d, raw, RewriteStrategy::leftmost);
        AlgElement b = normal_form(n, d, raw, RewriteStrategy::rightmost);
        if (!(a == b)) failures.push_back(to_string(raw.begin()->first) + " residual " + (a - b).str());
    }
    return failures;
}

}  // namespace detail

inline std::vector<IdentityResult> check_ybe(const CheckConfig& cfg) {
    detail::SuiteBuilder b("ybe");
    auto res = ybe_check(cfg.n);
    b.record("Yang-Baxter N=" + std::to_string(cfg.n), res.holds, detail::one_line(res.residual.str()));
    return b.take();
}

inline std::vector<IdentityResult> check_pbw(const CheckConfig& cfg) {
    detail::SuiteBuilder b("pbw");
    const int n = cfg.n, k = cfg.order;
    std::vector<std::string> equiv;
    for (int r = 0; r <= k; ++r)
        for (int s = 0; s <= k; ++s)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int a = 1; a <= n; ++a)
                        for (int l = 1; l <= n; ++l)
                            if (!commutator_equiv_check(r, s, i, j, a, l, n))
                                equiv.push_back("r=" + std::to_string(r) + " s=" + std::to_string(s) + " (" +
                                                std::to_string(i) + std::to_string(j) + std::to_string(a) +
                                                std::to_string(l) + ")");
    b.record("commutator form equivalent to the RTT form r,s<=" + std::to_string(k), equiv);
    for (int s = 0; s <= k; ++s) {
        GramTable g = gram_matrix(s, n);
        const std::string tag = "Gram s=" + std::to_string(s);
        b.record(tag + " lower triangular", g.lower_triangular);
        b.record(tag + " diagonal formula", g.diagonal_matches);
        b.record(tag + " rank " + std::to_string(g.rank) + " = basis size " + std::to_string(g.rows.size()),
                 g.rank == static_cast<int>(g.rows.size()));
    }
    RandomSource rnd(cfg.seed);
    b.record("rewriting confluent on 100 seeded Yangian words",
             detail::confluence_failures(n, cfg.dual_trunc, 100, 5, false, rnd));
    return b.take();
}

inline std::vector<IdentityResult> check_hopf(const CheckConfig& cfg) {
    detail::SuiteBuilder b("hopf");
    std::map<std::string, std::vector<std::string>> failures;
    std::vector<std::string> names;
    for (int r = 1; r <= cfg.order; ++r)
        for (int sign : {1, -1})
            for (int i = 1; i <= cfg.n; ++i)
                for (int j = 1; j <= cfg.n; ++j) {
                    const GenId g{sign * r, i, j};
                    for (const auto& res : hopf_axioms(cfg.n, cfg.dual_trunc, g)) {
                        const std::string axiom = res.name.substr(0, res.name.find(" T["));
                        const std::string name =
                            axiom + (sign > 0 ? " on Y generators of level <=" + std::to_string(cfg.order)
                                              : " on dual generators of level <=" + std::to_string(cfg.order) +
                                                    " at D=" + std::to_string(cfg.dual_trunc));
                        auto [it, fresh] = failures.try_emplace(name);
                        if (fresh) names.push_back(name);
                        if (!res.holds) it->second.push_back(g.str() + " residual " + res.residual);
                    }
                }
    for (const auto& name : names) b.record(name, failures[name]);
    return b.take();
}

inline std::vector<IdentityResult> check_center(const CheckConfig& cfg) {
    detail::SuiteBuilder b("center");
    const int n = cfg.n, k = cfg.order, top = cfg.order + 1, d = cfg.dual_trunc;
    auto z = z_series(n, top);
    b.record("Z^(1) = 0", z[1].is_zero(), z[1].str());

    std::vector<std::string> central, central_dual, grouplike, leading;
    for (int r = 1; r <= top; ++r) {
        for (int s = 1; s <= k; ++s)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    auto c = commutator(z[r], AlgElement::t(n, s, i, j));
                    if (!c.is_zero()) central.push_back("[Z^(" + std::to_string(r) + "), T[" + std::to_string(s) + "," +
                                                        std::to_string(i) + "," + std::to_string(j) + "]] = " + c.str());
                    auto cd = commutator(z[r].with_truncation(d), AlgElement::t(n, -s, i, j, d));
                    if (!cd.is_zero())
                        central_dual.push_back("[Z^(" + std::to_string(r) + "), T[" + std::to_string(-s) + "," +
                                               std::to_string(i) + "," + std::to_string(j) + "]] = " + cd.str());
                }
        TensorElement expect(n, 2);
        for (int a = 0; a <= r; ++a) expect += tensor(TensorElement::from(z[a]), TensorElement::from(z[r - a]));
        TensorElement diff = delta(z[r], CoproductSide::yangian) - expect;
        if (!diff.is_zero()) grouplike.push_back("Z^(" + std::to_string(r) + ") residual " + diff.str());
        if (r >= 2) {
            auto lead = graded_leading(z[r], Filtration::deg_prime);
            AlgElement want(n);
            for (int i = 1; i <= n; ++i) want += AlgElement::t(n, r - 1, i, i) * Rational(1 - r);
            if (lead.degree != r - 2 || !(lead.leading == want))
                leading.push_back("Z^(" + std::to_string(r) + ") residual " + (lead.leading - want).str());
        }
    }
    const std::string range = " r<=" + std::to_string(top) + ", s<=" + std::to_string(k);
    b.record("Z^(r) central in Y" + range, central);
    b.record("Z^(r) central against dual generators in DY at D=" + std::to_string(d) + range, central_dual);
    b.record("Z(u) grouplike to u^-" + std::to_string(top), grouplike);
    b.record("deg'-leading part of Z^(r) is (1-r) sum_i T^(r-1)_ii, r<=" + std::to_string(top), leading);
    b.record("S^2 equals Z(u)^-1 T(u+N) for r<=" + std::to_string(k), s_square_check(n, k).failures);
    return b.take();
}

inline std::vector<IdentityResult> check_duality(const CheckConfig& cfg, int triples = 100) {
    detail::SuiteBuilder b("duality");
    const int n = cfg.n, need = 3;
    RandomSource rnd(cfg.seed);
    std::vector<std::string> first, second, paths;
    for (int t = 0; t < triples; ++t) {
        const int dx = rnd.uniform(0, 3);
        auto x = rnd.graded_element(n, 1, dx, kNoTruncation);
        auto y = rnd.graded_element(n, 1, 3 - dx, kNoTruncation);
        auto z = rnd.graded_element(n, -1, 3, need), w = rnd.graded_element(n, -1, 3, need);
        auto fast = duality_check(x, y, z, w, PairingMethod::fast);
        auto slow = duality_check(x, y, z, w, PairingMethod::recursive);
        const std::string tag = "triple " + std::to_string(t) + ": ";
        if (fast.product_side != fast.coproduct_side)
            first.push_back(tag + (fast.product_side - fast.coproduct_side).str());
        if (fast.product_side2 != fast.coproduct_side2)
            second.push_back(tag + (fast.product_side2 - fast.coproduct_side2).str());
        if (fast.product_side != slow.product_side || fast.coproduct_side != slow.coproduct_side ||
            fast.product_side2 != slow.product_side2 || fast.coproduct_side2 != slow.coproduct_side2)
            paths.push_back(tag + "pairing paths disagree");
    }
    const std::string count = " on " + std::to_string(triples) + " seeded triples";
    b.record("<X, ZW> = <Delta(X), Z(x)W>" + count, first);
    b.record("<XY, Z> = <X(x)Y, Delta(Z)>" + count, second);
    b.record("combinatorial and recursive pairings agree" + count, paths);
    return b.take();
}

inline std::vector<IdentityResult> check_rprops(const CheckConfig& cfg) {
    detail::SuiteBuilder b("rprops");
    for (const auto& r : r_properties(cfg.dual_trunc, cfg.n))
        b.record(r.name + " at D=" + std::to_string(cfg.dual_trunc), r.holds, detail::one_line(r.residual));
    return b.take();
}

inline std::vector<IdentityResult> check_double(const CheckConfig& cfg) {
    detail::SuiteBuilder b("double");
    const int n = cfg.n, k = cfg.order, d = cfg.dual_trunc;
    RandomSource rnd(cfg.seed);
    b.record("rewriting confluent on 200 seeded DY words (length <=5) at D=" + std::to_string(d),
             detail::confluence_failures(n, d, 200, 5, true, rnd));
    b.record("graded brackets in Y match gl_N[z], levels <=" + std::to_string(k),
             graded_bracket_check(n, k, false, kNoTruncation).failures);
    // the top bracket [T^(-k), T^(-k)] needs D >= 2k to survive truncation
    const int dg = std::max(d, 2 * k);
    b.record("graded brackets in DY match gl_N[z,z^-1], levels <=" + std::to_string(k) + " at D=" + std::to_string(dg),
             graded_bracket_check(n, k, true, dg).failures);

    const Rational c(3);
    const std::vector<std::pair<std::string, RelationFamily>> families{
        {"yang", RelationFamily::yang}, {"dual", RelationFamily::dual}, {"cross", RelationFamily::cross}};
    for (const auto& [fname, family] : families) {
        b.record("rho_c relations (" + fname + "), c=3",
                 rep_relation_check({RepSpec::numeric(RepKind::rho, c, n)}, family, k).failures);
        b.record("sigma_c relations (" + fname + "), c=3",
                 rep_relation_check({RepSpec::numeric(RepKind::sigma, c, n)}, family, k).failures);
    }
    if (c != Rational(n))
        b.record("sigma_c with dual parameter c-N relations (cross), c=3",
                 rep_relation_check({RepSpec::sigma_double(c, n)}, RelationFamily::cross, k).failures);
    b.record("rho*_u relations (dual)",
             rep_relation_check({RepSpec::symbolic(RepKind::rho_star, desc("u", k + 2), n)}, RelationFamily::dual, k)
                 .failures);
    return b.take();
}

inline std::vector<IdentityResult> run_suite(const std::string& suite, const CheckConfig& cfg) {
    if (suite == "ybe") return check_ybe(cfg);
    if (suite == "pbw") return check_pbw(cfg);
    if (suite == "hopf") return check_hopf(cfg);
    if (suite == "center") return check_center(cfg);
    if (suite == "duality") return check_duality(cfg);
    if (suite == "rprops") return check_rprops(cfg);
    if (suite == "double") return check_double(cfg);
    if (suite == "all") {
        std::vector<IdentityResult> out;
        for (const auto& s : suite_names()) {
            auto part = run_suite(s, cfg);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown check suite '" + suite + "'");
}

}  // namespace yangian
