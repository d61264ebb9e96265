#pragma once

#include <yangian/algebra.hpp>
#include <yangian/hopf.hpp>
#include <yangian/pairing.hpp>
#include <yangian/representations.hpp>
#include <yangian/tensor_operator.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace yangian {

using json = nlohmann::json;

// Rationals are exact "p/q" strings.
inline void to_json(json& j, const Rational& r) { j = r.str(); }
inline void from_json(const json& j, Rational& r) {
    if (j.is_number_integer()) r = Rational(j.get<long>());
    else r = Rational::parse(j.get<std::string>());
}

inline void to_json(json& j, const GenId& g) { j = json::array({g.level, g.i, g.j}); }
inline void from_json(const json& j, GenId& g) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("generator must be [level, i, j]");
    g = {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

inline void to_json(json& j, const VariableSpec& v) {
    j = {{"name", v.name}, {"dir", to_string(v.direction)}, {"K", v.order}};
}
inline void from_json(const json& j, VariableSpec& v) {
    const auto dir = j.at("dir").get<std::string>();
    if (dir != "asc" && dir != "desc") throw std::invalid_argument("variable direction must be asc or desc");
    v = {j.at("name").get<std::string>(), dir == "asc" ? Direction::ascending : Direction::descending,
         j.at("K").get<int>()};
}

inline void to_json(json& j, const RSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", e}, {"coeff", c}});
    j = {{"vars", s.variables()}, {"terms", terms}};
}
inline void from_json(const json& j, RSeries& s) {
    s = RSeries(j.at("vars").get<std::vector<VariableSpec>>());
    for (const auto& t : j.at("terms")) s.add_term(t.at("exp").get<Exponent>(), t.at("coeff").get<Rational>());
}

inline void to_json(json& j, const TensorOperator& t) {
    json entries = json::array();
    for (const auto& [k, c] : t.entries())
        entries.push_back({{"row", t.unpack(k.first)}, {"col", t.unpack(k.second)}, {"coeff", c}});
    j = {{"N", t.n()}, {"arity", t.arity()}, {"entries", entries}};
}

inline json truncation_json(int d) { return d == kNoTruncation ? json(nullptr) : json(d); }
inline int truncation_from_json(const json& j) { return j.is_null() ? kNoTruncation : j.get<int>(); }

inline void to_json(json& j, const AlgElement& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms()) terms.push_back({{"coeff", c}, {"mono", m}});
    j = {{"N", x.n()}, {"D", truncation_json(x.dual_trunc())}, {"tag", to_string(x.tag())}, {"terms", terms}};
}

// Terms are re-normalized, so any word order is accepted.
inline AlgElement element_from_json(const json& j) {
    const int n = j.at("N").get<int>();
    const int d = truncation_from_json(j.value("D", json(nullptr)));
    WordSum raw;
    for (const auto& t : j.at("terms")) {
        Monomial m = t.at("mono").get<Monomial>();
        for (const auto& g : m) validate(g, n);
        raw[m] += t.at("coeff").get<Rational>();
    }
    return normal_form(n, d, raw);
}

inline void to_json(json& j, const TensorElement& t) {
    json terms = json::array();
    for (const auto& [k, c] : t.terms()) {
        json term = {{"coeff", c}};
        if (t.arity() == 2) {
            term["monoL"] = k[0];
            term["monoR"] = k[1];
        } else {
            term["monos"] = k;
        }
        terms.push_back(term);
    }
    j = {{"N", t.n()}, {"D", truncation_json(t.dual_trunc())}, {"arity", t.arity()}, {"terms", terms}};
}

inline TensorElement tensor_element_from_json(const json& j) {
    TensorElement t(j.at("N").get<int>(), j.value("arity", 2), truncation_from_json(j.value("D", json(nullptr))));
    for (const auto& term : j.at("terms")) {
        TensorElement::Key k = t.arity() == 2 && term.contains("monoL")
                                   ? TensorElement::Key{term.at("monoL").get<Monomial>(), term.at("monoR").get<Monomial>()}
                                   : term.at("monos").get<TensorElement::Key>();
        t.add_term(k, term.at("coeff").get<Rational>());
    }
    return t;
}

inline json param_json(const RepParam& p) {
    if (auto c = std::get_if<Rational>(&p)) return *c;
    return std::get<VariableSpec>(p);
}
inline RepParam param_from_json(const json& j) {
    if (j.is_object()) return j.get<VariableSpec>();
    return j.get<Rational>();
}

inline void to_json(json& j, const RepSpec& s) {
    j = {{"kind", to_string(s.kind)}, {"c", param_json(s.param)}, {"N", s.n}};
    if (s.dual_param) j["dual_c"] = param_json(*s.dual_param);
}
inline void from_json(const json& j, RepSpec& s) {
    s = RepSpec{parse_rep_kind(j.at("kind").get<std::string>()), param_from_json(j.at("c")), j.at("N").get<int>(),
                std::nullopt};
    if (s.n < 1) throw std::invalid_argument("representation needs N >= 1");
    if (j.contains("dual_c")) s.dual_param = param_from_json(j.at("dual_c"));
}

inline void to_json(json& j, const SeparationWitness& w) { j = {{"n", w.n}, {"params", w.params}}; }

inline void to_json(json& j, const GramTable& g) {
    j = {{"degree", g.degree},
         {"N", g.n},
         {"rows", g.rows},
         {"cols", g.cols},
         {"values", g.values},
         {"lower_triangular", g.lower_triangular},
         {"diagonal_matches", g.diagonal_matches},
         {"rank", g.rank}};
}

inline void to_json(json& j, const DualSystem& sys) {
    json pairs = json::array();
    for (std::size_t s = 0; s < sys.basis.size(); ++s) pairs.push_back({{"monomial", sys.basis[s]}, {"dual", sys.duals[s]}});
    j = {{"max_degree", sys.max_degree}, {"N", sys.n}, {"pairs", pairs}};
}

}  // namespace yangian
