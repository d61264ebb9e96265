#pragma once

#include <yangian/algebra.hpp>
#include <yangian/tensor_operator.hpp>

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace yangian {

// rho:   T^(r)_ij ↦ -c^(r-1) e_ji,  T^(-r)_ij ↦ -c^(-r) e_ji
// sigma: T^(r)_ij ↦  c^(r-1) e_ij,  T^(-r)_ij ↦  c^(-r) e_ij
// rho_star is rho with the parameter named u (T*(v) ↦ R(u - v)); sigma_dual is sigma
// on the dual block. current_eval and laurent_eval act on current-algebra words.
enum class RepKind { rho, sigma, rho_star, sigma_dual, current_eval, laurent_eval };

inline std::string to_string(RepKind k) {
    switch (k) {
        case RepKind::rho: return "rho";
        case RepKind::sigma: return "sigma";
        case RepKind::rho_star: return "rho_star";
        case RepKind::sigma_dual: return "sigma_dual";
        case RepKind::current_eval: return "current_eval";
        case RepKind::laurent_eval: return "laurent_eval";
    }
    return "?";
}

// Accepts the kind names and their aliases. The word "covector" names rho for the
// Yangian alone but sigma-type maps in the double, so it is not accepted.
inline RepKind parse_rep_kind(const std::string& s) {
    static const std::map<std::string, RepKind> names{
        {"rho", RepKind::rho},
        {"rho_c", RepKind::rho},
        {"sigma", RepKind::sigma},
        {"sigma_c", RepKind::sigma},
        {"rho_star", RepKind::rho_star},
        {"rho_star_u", RepKind::rho_star},
        {"sigma_dual", RepKind::sigma_dual},
        {"sigma_dual_c", RepKind::sigma_dual},
        {"current_eval", RepKind::current_eval},
        {"current_eval_c", RepKind::current_eval},
        {"varpi", RepKind::current_eval},
        {"laurent_eval", RepKind::laurent_eval},
        {"laurent_eval_c", RepKind::laurent_eval},
    };
    auto it = names.find(s);
    if (it == names.end()) throw std::invalid_argument("unknown representation kind '" + s + "'");
    return it->second;
}

// A parameter is a rational number or a formal variable. An ascending variable
// admits nonnegative powers, a descending one nonpositive powers.
using RepParam = std::variant<Rational, VariableSpec>;

struct RepSpec {
    RepKind kind = RepKind::sigma;
    RepParam param = Rational(0);
    int n = 2;
    // parameter used on dual generators when it differs from the Yangian one
    std::optional<RepParam> dual_param;

    static RepSpec numeric(RepKind k, const Rational& c, int n) {
        if ((k == RepKind::sigma_dual || k == RepKind::laurent_eval) && c.is_zero())
            throw std::invalid_argument(to_string(k) + " needs a nonzero parameter");
        return {k, c, n, std::nullopt};
    }
    static RepSpec symbolic(RepKind k, const VariableSpec& v, int n) { return {k, v, n, std::nullopt}; }

    // σ_c on the Yangian together with T^(-r)_ij ↦ (c - N)^(-r) e_ij on the dual block.
    // With the unshifted dual parameter the cross relations fail for N >= 2; the shift
    // comes from R^t(x)^{-1} = 1 + Q/(x - N).
    static RepSpec sigma_double(const Rational& c, int n) {
        if (c == Rational(n)) throw std::invalid_argument("sigma_double needs c != N");
        RepSpec s{RepKind::sigma, c, n, std::nullopt};
        s.dual_param = c - Rational(n);
        return s;
    }

    bool rho_type() const { return kind == RepKind::rho || kind == RepKind::rho_star; }
    std::string str() const {
        std::string p = std::holds_alternative<Rational>(param) ? std::get<Rational>(param).str()
                                                                : std::get<VariableSpec>(param).name;
        return to_string(kind) + "(" + p + ")";
    }
};

namespace detail {

inline std::vector<VariableSpec> param_vars(const std::vector<RepSpec>& specs) {
    std::vector<VariableSpec> vars;
    for (const auto& s : specs)
        if (auto v = std::get_if<VariableSpec>(&s.param)) {
            bool seen = false;
            for (const auto& w : vars) {
                if (w.name == v->name && !(w == *v))
                    throw std::invalid_argument("parameter variable '" + v->name + "' used with different specs");
                seen = seen || w.name == v->name;
            }
            if (!seen) vars.push_back(*v);
        }
    return vars;
}

inline RSeries param_power(const RepParam& p, int k, const std::vector<VariableSpec>& vars) {
    if (auto c = std::get_if<Rational>(&p)) {
        if (k < 0 && c->is_zero()) throw std::domain_error("negative power of a zero parameter");
        return RSeries::constant(c->pow(k), vars);
    }
    const auto& v = std::get<VariableSpec>(p);
    const bool asc_ok = v.direction == Direction::ascending && k >= 0;
    const bool desc_ok = v.direction == Direction::descending && k <= 0;
    if (!asc_ok && !desc_ok)
        throw std::invalid_argument("power " + std::to_string(k) + " of the formal parameter '" + v.name +
                                    "' is not representable in its direction");
    return RSeries::monomial(v, std::abs(k), Rational(1)).extended(vars);
}

// Image of one generator (level != 0) under one spec, as a 1-slot operator.
inline TensorOperator single_image(const RepSpec& spec, int level, int i, int j, const std::vector<VariableSpec>& vars) {
    if (spec.kind == RepKind::current_eval || spec.kind == RepKind::laurent_eval)
        throw std::invalid_argument("evaluation representations act on current-algebra words");
    if (spec.kind == RepKind::sigma_dual && level > 0)
        throw std::invalid_argument("sigma_dual acts on dual generators only");
    const int power = level > 0 ? level - 1 : level;
    RSeries c = param_power(level < 0 && spec.dual_param ? *spec.dual_param : spec.param, power, vars);
    TensorOperator e(spec.n, 1);
    if (spec.rho_type()) e.add({static_cast<std::uint64_t>(j - 1), static_cast<std::uint64_t>(i - 1)}, -c);
    else e.add({static_cast<std::uint64_t>(i - 1), static_cast<std::uint64_t>(j - 1)}, c);
    return e;
}

// Image of the level-a coefficient T^[a]_ij in one slot: levels 0 and -1 combine for the
// dual constant term δ + T^(-1); level 0 on the Yangian side is δ.
inline TensorOperator coefficient_image(const RepSpec& spec, bool dual, int a, int i, int j,
                                        const std::vector<VariableSpec>& vars) {
    TensorOperator out(spec.n, 1);
    if (a == 0 && i == j) out = TensorOperator::identity(spec.n, 1, RSeries::constant(Rational(1), vars));
    if (dual) return out + single_image(spec, -a - 1, i, j, vars);
    if (a > 0) return out + single_image(spec, a, i, j, vars);
    return out;
}

}  // namespace detail

// Tensor-product representation: Δ on Yangian generators and the opposite Δ' on
// dual generators, then one spec per slot.
class Representation {
public:
    explicit Representation(std::vector<RepSpec> specs) : specs_(std::move(specs)) {
        if (specs_.empty()) throw std::invalid_argument("representation needs at least one factor");
        n_ = specs_[0].n;
        for (const auto& s : specs_)
            if (s.n != n_) throw std::invalid_argument("representation factors have different N");
        vars_ = detail::param_vars(specs_);
    }

    int n() const { return n_; }
    int arity() const { return static_cast<int>(specs_.size()); }
    const std::vector<VariableSpec>& variables() const { return vars_; }
    const std::vector<RepSpec>& specs() const { return specs_; }

    TensorOperator identity() const {
        return TensorOperator::identity(n_, arity(), RSeries::constant(Rational(1), vars_));
    }

    TensorOperator generator(const GenId& g) {
        validate(g, n_);
        auto it = cache_.find(g);
        if (it != cache_.end()) return it->second;
        const bool dual = g.negative();
        const int total = dual ? g.abs_level() - 1 : g.level;
        TensorOperator out(n_, arity());
        // chain i = k_0 -> k_1 -> ... -> k_n = j through the slots, in reverse slot order for Δ'
        auto rec = [&](auto&& self, int step, int from, int left, TensorOperator acc) -> void {
            const int slot = dual ? arity() - 1 - step : step;
            if (step == arity() - 1) {
                auto f = detail::coefficient_image(specs_[slot], dual, left, from, g.j, vars_);
                if (f.entries().empty()) return;
                out = out + place(acc, slot, f);
                return;
            }
            for (int a = 0; a <= left; ++a)
                for (int k = 1; k <= n_; ++k) {
                    auto f = detail::coefficient_image(specs_[slot], dual, a, from, k, vars_);
                    if (f.entries().empty()) continue;
                    self(self, step + 1, k, left - a, place(acc, slot, f));
                }
        };
        rec(rec, 0, g.i, total, identity());
        if (dual && g.abs_level() == 1 && g.i == g.j) out = out - identity();
        return cache_.emplace(g, out).first->second;
    }

    TensorOperator monomial(const Monomial& m) {
        TensorOperator acc = identity();
        for (const auto& g : m) acc = acc * generator(g);
        return acc;
    }

    TensorOperator words(const WordSum& w) {
        TensorOperator out(n_, arity());
        for (const auto& [m, c] : w) out = out + monomial(m) * c;
        return out;
    }

    TensorOperator operator()(const AlgElement& x) {
        TensorOperator out(n_, arity());
        for (const auto& [m, c] : x.terms()) out = out + monomial(m) * c;
        return out;
    }

private:
    // acc times the single-slot operator f placed at slot s
    TensorOperator place(const TensorOperator& acc, int s, const TensorOperator& f) const {
        TensorOperator full = TensorOperator::identity(n_, 0, RSeries::constant(Rational(1), vars_));
        for (int p = 0; p < arity(); ++p)
            full = tensor_product(full, p == s ? f : TensorOperator::identity(n_, 1, RSeries::constant(Rational(1), vars_)));
        return acc * full;
    }

    int n_ = 1;
    std::vector<RepSpec> specs_;
    std::vector<VariableSpec> vars_;
    std::map<GenId, TensorOperator> cache_;
};

inline TensorOperator rep_apply(const AlgElement& x, const std::vector<RepSpec>& specs) {
    Representation rep(specs);
    return rep(x);
}

struct RelationCheck {
    bool holds = true;
    int instances = 0;
    std::vector<std::string> failures;
};

// Images of [x, y] - (relation right-hand side) over all relation instances with
// levels 1..max_level in the given family.
inline RelationCheck rep_relation_check(const std::vector<RepSpec>& specs, RelationFamily family, int max_level) {
    Representation rep(specs);
    const int n = rep.n();
    RelationCheck res;
    for (int r = 1; r <= max_level; ++r)
        for (int s = 1; s <= max_level; ++s)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l) {
                            GenId x{family == RelationFamily::dual ? -r : r, i, j};
                            GenId y{family == RelationFamily::yang ? s : -s, k, l};
                            auto a = rep.generator(x), b = rep.generator(y);
                            auto diff = a * b - b * a - rep.words(bracket_words(x, y, n));
                            ++res.instances;
                            if (!diff.entries().empty()) {
                                std::string what = "[" + x.str() + ", " + y.str() + "]";
                                if (res.holds) what += " residual " + diff.str();
                                res.holds = false;
                                res.failures.push_back(what);
                            }
                        }
    return res;
}

// Elements of U(gl_N[z, z^-1]): words in E_ij z^p.
struct CurrentGen {
    int i = 1;
    int j = 1;
    int power = 0;
    friend auto operator<=>(const CurrentGen&, const CurrentGen&) = default;
    std::string str() const { return "E[" + std::to_string(i) + "," + std::to_string(j) + "]z^" + std::to_string(power); }
};
using CurrentWord = std::vector<CurrentGen>;
using CurrentElement = std::map<CurrentWord, Rational>;

inline void add_word(CurrentElement& x, const CurrentWord& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = x.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) x.erase(it);
    }
}

// E_ij z^p ↔ T^(p+1)_ij for p >= 0 and T^(p)_ij for p < 0.
inline CurrentGen current_of(const GenId& g) { return {g.i, g.j, g.positive() ? g.level - 1 : g.level}; }
inline GenId generator_of(const CurrentGen& e) { return {e.power >= 0 ? e.power + 1 : e.power, e.i, e.j}; }

// [E_ij z^a, E_kl z^b] = δ_kj E_il z^(a+b) - δ_il E_kj z^(a+b)
inline CurrentElement current_bracket(const CurrentGen& x, const CurrentGen& y) {
    CurrentElement out;
    if (x.j == y.i) add_word(out, {{x.i, y.j, x.power + y.power}}, Rational(1));
    if (x.i == y.j) add_word(out, {{y.i, x.j, x.power + y.power}}, Rational(-1));
    return out;
}

// The deg'-homogeneous part of x in the given degree, read as current-algebra words.
inline CurrentElement graded_image(const AlgElement& x, int degree) {
    CurrentElement out;
    for (const auto& [m, c] : x.terms()) {
        if (deg_prime(m) != degree) continue;
        CurrentWord w;
        for (const auto& g : m) w.push_back(current_of(g));
        add_word(out, w, c);
    }
    return out;
}

// ϖ_{c_1..c_n}: E_ij z^p ↦ Σ_slots c^p e_ij via the primitive coproduct.
inline TensorOperator current_eval(const CurrentElement& x, const std::vector<RepParam>& params, int n) {
    if (params.empty()) throw std::invalid_argument("current_eval needs at least one parameter");
    std::vector<RepSpec> specs;
    for (const auto& p : params) specs.push_back({RepKind::current_eval, p, n, std::nullopt});
    auto vars = detail::param_vars(specs);
    const auto one1 = TensorOperator::identity(n, 1, RSeries::constant(Rational(1), vars));
    auto gen = [&](const CurrentGen& e) {
        TensorOperator out(n, static_cast<int>(params.size()));
        for (std::size_t s = 0; s < params.size(); ++s) {
            TensorOperator f(n, 1);
            f.add({static_cast<std::uint64_t>(e.i - 1), static_cast<std::uint64_t>(e.j - 1)},
                  detail::param_power(params[s], e.power, vars));
            TensorOperator full = TensorOperator::identity(n, 0, RSeries::constant(Rational(1), vars));
            for (std::size_t p = 0; p < params.size(); ++p) full = tensor_product(full, p == s ? f : one1);
            out = out + full;
        }
        return out;
    };
    TensorOperator total(n, static_cast<int>(params.size()));
    const auto id = TensorOperator::identity(n, static_cast<int>(params.size()), RSeries::constant(Rational(1), vars));
    for (const auto& [w, c] : x) {
        TensorOperator acc = id;
        for (const auto& e : w) acc = acc * gen(e);
        total = total + acc * c;
    }
    return total;
}

inline TensorOperator current_eval(const CurrentElement& x, const std::vector<Rational>& cs, int n) {
    return current_eval(x, std::vector<RepParam>(cs.begin(), cs.end()), n);
}

struct GradedBracketCheck {
    bool holds = true;
    int instances = 0;
    std::vector<std::string> failures;
};

// For generators x, y with levels in ±1..max_level (Yangian side only when with_dual is
// false), the deg'-component of [x, y] in degree deg'(x) + deg'(y) matches the current
// algebra bracket. Computed modulo the dual truncation D.
inline GradedBracketCheck graded_bracket_check(int n, int max_level, bool with_dual, int dual_trunc) {
    GradedBracketCheck res;
    std::vector<int> levels;
    for (int r = 1; r <= max_level; ++r) {
        levels.push_back(r);
        if (with_dual) levels.push_back(-r);
    }
    for (int r : levels)
        for (int s : levels)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l) {
                            GenId x{r, i, j}, y{s, k, l};
                            const int d = (r < 0 || s < 0) ? dual_trunc : kNoTruncation;
                            auto c = commutator(AlgElement::generator(n, x, d), AlgElement::generator(n, y, d));
                            const int degree = deg_prime({x}) + deg_prime({y});
                            auto got = graded_image(c, degree);
                            auto want = current_bracket(current_of(x), current_of(y));
                            ++res.instances;
                            if (got != want) {
                                res.holds = false;
                                res.failures.push_back("[" + x.str() + ", " + y.str() + "]");
                            }
                        }
    return res;
}

// Deterministic parameter sequence 1, -1, 2, 1/2, 3, -2, 1/3, -1/2, 4, -3, 1/4, -1/3, …
inline std::vector<Rational> trial_parameters(std::size_t count) {
    std::vector<Rational> out;
    for (long k = 1; out.size() < count; ++k) {
        const std::vector<Rational> batch = k == 1 ? std::vector<Rational>{Rational(1), Rational(-1)}
                                                   : std::vector<Rational>{Rational(k), Rational(-(k - 1)),
                                                                           Rational(1, k), Rational(-1, k - 1)};
        for (const auto& c : batch) {
            bool seen = false;
            for (const auto& o : out) seen = seen || o == c;
            if (!seen && out.size() < count) out.push_back(c);
        }
    }
    return out;
}

struct SeparationWitness {
    int n = 0;
    std::vector<Rational> params;
};

// First σ_{c_1} ⊗ … ⊗ σ_{c_n} (n = 1..n_max) whose image of x is nonzero. For each n the
// windows of n consecutive trial parameters are tried in order, then seeded random tuples.
// Elements with dual generators use the shifted extension to the double.
inline std::optional<SeparationWitness> separation_search(const AlgElement& x, int n_max, int trials = 8,
                                                          unsigned seed = 1) {
    if (x.is_zero()) throw std::invalid_argument("separation_search needs a nonzero element");
    const int n = x.n() == 0 ? 1 : x.n();
    if (x.is_scalar()) return SeparationWitness{1, {Rational(1)}};
    const bool dual = x.tag() != AlgebraTag::Y;
    auto seq = trial_parameters(static_cast<std::size_t>(trials + n_max));
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int arity = 1; arity <= n_max; ++arity) {
        std::vector<std::vector<Rational>> tuples;
        for (int t = 0; t < trials; ++t) tuples.emplace_back(seq.begin() + t, seq.begin() + t + arity);
        for (int t = 0; t < trials; ++t) {
            std::vector<Rational> cs;
            while (static_cast<int>(cs.size()) < arity) {
                Rational c(num(rng), den(rng));
                if (!c.is_zero()) cs.push_back(c);
            }
            tuples.push_back(std::move(cs));
        }
        for (const auto& cs : tuples) {
            std::vector<RepSpec> specs;
            bool usable = true;
            for (const auto& c : cs) {
                if (dual && c == Rational(n)) usable = false;
                else specs.push_back(dual ? RepSpec::sigma_double(c, n) : RepSpec::numeric(RepKind::sigma, c, n));
            }
            if (!usable) continue;
            if (!rep_apply(x, specs).entries().empty()) return SeparationWitness{arity, cs};
        }
    }
    return std::nullopt;
}

// The top c-degree part of σ_{c_1..c_k}(x), for symbolic c, equals ϖ_{c_1..c_k} applied
// to the deg'-leading words of x. Yangian elements only (images are polynomials in c).
inline bool leading_coefficient_check(const AlgElement& x, int arity) {
    if (x.is_zero() || x.tag() != AlgebraTag::Y) throw std::invalid_argument("needs a nonzero Yangian element");
    auto lead = graded_leading(x, Filtration::deg_prime);
    const int n = x.n() == 0 ? 1 : x.n();
    const int top = std::max(lead.degree, 0);
    std::vector<RepSpec> specs;
    std::vector<RepParam> params;
    for (int p = 0; p < arity; ++p) {
        VariableSpec c = asc("c" + std::to_string(p + 1), top);
        specs.push_back(RepSpec::symbolic(RepKind::sigma, c, n));
        params.push_back(c);
    }
    auto image = rep_apply(x, specs);
    auto expect = current_eval(graded_image(x, lead.degree), params, n);
    // keep only total degree `top` in the parameters
    TensorOperator top_part(n, arity);
    for (const auto& [idx, series] : image.entries()) {
        RSeries s(series.variables());
        for (const auto& [e, c] : series.terms()) {
            int deg = 0;
            for (int v : e) deg += v;
            if (deg == lead.degree) s.add_term(e, c);
        }
        top_part.add(idx, s);
    }
    return top_part == expect;
}

}  // namespace yangian
