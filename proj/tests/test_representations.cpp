#include <catch2/catch.hpp>

#include <yangian/hopf.hpp>
#include <yangian/representations.hpp>

#include <random>

using namespace yangian;

namespace {

AlgElement T(int n, int level, int i, int j, int d = kNoTruncation) { return AlgElement::t(n, level, i, j, d); }

TensorOperator unit(int n, int i, int j, const Rational& c = Rational(1)) {
    TensorOperator e(n, 1);
    e.add({i}, {j}, RSeries::constant(c));
    return e;
}

RepSpec sigma(const Rational& c, int n = 2) { return RepSpec::numeric(RepKind::sigma, c, n); }
RepSpec rho(const Rational& c, int n = 2) { return RepSpec::numeric(RepKind::rho, c, n); }

AlgElement random_y(std::mt19937& rng, int n, int max_deg_prime) {
    std::uniform_int_distribution<int> idx(1, n), coef(-3, 3), len(1, 3);
    AlgElement x(n);
    for (int t = 0; t < 3; ++t) {
        AlgElement m = AlgElement::scalar(n, Rational(coef(rng) == 0 ? 1 : coef(rng)));
        int budget = std::uniform_int_distribution<int>(0, max_deg_prime)(rng);
        for (int f = len(rng); f > 0; --f) {
            int r = 1 + std::uniform_int_distribution<int>(0, budget)(rng);
            budget -= r - 1;
            m = m * T(n, r, idx(rng), idx(rng));
        }
        x += m;
    }
    return x;
}

}  // namespace

TEST_CASE("single-factor images") {
    const int n = 2;
    CHECK(rep_apply(T(n, 2, 1, 2), {rho(Rational(3))}) == unit(n, 2, 1, Rational(-3)));
    CHECK(rep_apply(T(n, 3, 1, 2), {sigma(Rational(2))}) == unit(n, 1, 2, Rational(4)));
    CHECK(rep_apply(T(n, -2, 1, 2, 3), {sigma(Rational(2))}) == unit(n, 1, 2, Rational(1, 4)));
    CHECK(rep_apply(AlgElement::scalar(n, Rational(5)), {sigma(Rational(2))}) ==
          TensorOperator::identity(n, 1, RSeries::constant(Rational(5))));

    auto u = desc("u", 3);
    auto img = rep_apply(T(n, -1, 1, 1, 3), {RepSpec::symbolic(RepKind::rho_star, u, n)});
    TensorOperator expect(n, 1);
    expect.add({1}, {1}, RSeries::monomial(u, 1, Rational(-1)));
    CHECK(img == expect);
    CHECK_THROWS_AS(rep_apply(T(n, 2, 1, 1), {RepSpec::symbolic(RepKind::rho_star, u, n)}), std::invalid_argument);
    CHECK_THROWS_AS(RepSpec::numeric(RepKind::sigma_dual, Rational(0), n), std::invalid_argument);
    CHECK_THROWS_AS(rep_apply(T(n, -1, 1, 1, 3), {sigma(Rational(0))}), std::domain_error);
    CHECK_THROWS_AS(rep_apply(T(n, 1, 1, 1), {sigma(Rational(1)), sigma(Rational(1), 3)}), std::invalid_argument);
}

TEST_CASE("two-factor image of a level-one generator is primitive") {
    const int n = 2;
    auto img = rep_apply(T(n, 1, 1, 2), {sigma(Rational(2)), sigma(Rational(-1))});
    auto one = TensorOperator::identity(n, 1);
    CHECK(img == tensor_product(unit(n, 1, 2), one) + tensor_product(one, unit(n, 1, 2)));
}

TEST_CASE("tensor-product images follow the coproduct") {
    const int n = 2;
    std::vector<RepSpec> specs{sigma(Rational(2)), rho(Rational(-1, 2))};
    Representation rep(specs);
    Representation a({specs[0]}), b({specs[1]});
    auto image_of = [&](const TensorElement& t) {
        TensorOperator out(n, 2);
        for (const auto& [k, c] : t.terms()) out = out + tensor_product(a.monomial(k[0]), b.monomial(k[1])) * c;
        return out;
    };
    for (int r = 1; r <= 3; ++r)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CHECK(rep(T(n, r, i, j)) == image_of(delta(T(n, r, i, j), CoproductSide::yangian)));
                CHECK(rep(T(n, -r, i, j, 6)) == image_of(delta(T(n, -r, i, j, 6), CoproductSide::dual_opposite)));
            }
}

TEST_CASE("representations respect the relations") {
    for (int n = 1; n <= 3; ++n) {
        for (auto family : {RelationFamily::yang, RelationFamily::dual, RelationFamily::cross}) {
            CHECK(rep_relation_check({rho(Rational(3), n)}, family, 3).holds);
            CHECK(rep_relation_check({RepSpec::sigma_double(Rational(7), n)}, family, 3).holds);
            CHECK(rep_relation_check({RepSpec::sigma_double(Rational(7), n), rho(Rational(-1), n)}, family, 2).holds);
        }
        CHECK(rep_relation_check({sigma(Rational(2), n)}, RelationFamily::yang, 3).holds);
        CHECK(rep_relation_check({sigma(Rational(2), n)}, RelationFamily::dual, 3).holds);
    }
    auto u = desc("u", 5);
    CHECK(rep_relation_check({RepSpec::symbolic(RepKind::rho_star, u, 2)}, RelationFamily::dual, 3).holds);
    auto v = asc("v", 5);
    CHECK(rep_relation_check({RepSpec::symbolic(RepKind::rho, v, 2)}, RelationFamily::yang, 3).holds);
}

TEST_CASE("unshifted sigma on both blocks breaks the cross relations") {
    CHECK(rep_relation_check({sigma(Rational(2), 1)}, RelationFamily::cross, 3).holds);
    for (int n = 2; n <= 3; ++n) CHECK_FALSE(rep_relation_check({sigma(Rational(2), n)}, RelationFamily::cross, 2).holds);
}

TEST_CASE("a wrong relation is detected") {
    // σ_c does not respect a sign-flipped bracket
    Representation rep({sigma(Rational(2))});
    GenId x{1, 1, 2}, y{1, 2, 1};
    auto a = rep.generator(x), b = rep.generator(y);
    auto wrong = a * b - b * a + rep.words(bracket_words(x, y, 2));
    CHECK_FALSE(wrong.is_zero());
}

TEST_CASE("images are multiplicative") {
    std::mt19937 rng(4);
    const int n = 2, d = 6;
    std::vector<RepSpec> specs{sigma(Rational(3)), rho(Rational(1, 2))};
    Representation rep(specs);
    for (int t = 0; t < 10; ++t) {
        auto x = random_y(rng, n, 2), y = random_y(rng, n, 2);
        CHECK(rep(x * y) == rep(x) * rep(y));
        auto z = T(n, -1, 1, 2, d) * T(n, -2, 2, 2, d);
        CHECK(rep(z * x.with_truncation(d)) == rep(z) * rep(x));
    }
}

TEST_CASE("current algebra evaluation") {
    const int n = 2;
    CurrentElement e{{{{1, 2, 2}}, Rational(1)}};
    CHECK(current_eval(e, std::vector<Rational>{Rational(2)}, n) == unit(n, 1, 2, Rational(4)));
    CurrentElement h{{{{1, 1, 0}}, Rational(1)}};
    CHECK(current_eval(h, std::vector<Rational>{Rational(7)}, n) == unit(n, 1, 1));
    CurrentElement neg{{{{1, 1, -1}}, Rational(1)}};
    CHECK_THROWS_AS(current_eval(neg, std::vector<Rational>{Rational(0)}, n), std::domain_error);
    for (int r = 1; r <= 3; ++r)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CurrentElement w{{{{i, j, r - 1}}, Rational(1)}};
                CHECK(current_eval(w, std::vector<Rational>{Rational(3)}, n) ==
                      rep_apply(T(n, r, i, j), {sigma(Rational(3))}));
                CurrentElement wd{{{{i, j, -r}}, Rational(1)}};
                CHECK(current_eval(wd, std::vector<Rational>{Rational(3)}, n) ==
                      rep_apply(T(n, -r, i, j, 3), {sigma(Rational(3))}));
            }
}

TEST_CASE("graded brackets match the current algebra") {
    CHECK(graded_bracket_check(2, 3, false, kNoTruncation).holds);
    auto both = graded_bracket_check(2, 3, true, 6);
    for (const auto& f : both.failures) INFO(f);
    CHECK(both.holds);
}

TEST_CASE("trial parameter sequence") {
    auto s = trial_parameters(9);
    std::vector<Rational> expect{Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(3),
                                 Rational(-2), Rational(1, 3), Rational(-1, 2), Rational(4)};
    CHECK(s == expect);
}

TEST_CASE("separation search") {
    const int n = 2;
    auto w = separation_search(T(n, 1, 1, 2), 2);
    REQUIRE(w);
    CHECK(w->n == 1);
    auto z2 = z_series(n, 2)[2];
    auto wz = separation_search(z2, 2);
    REQUIRE(wz);
    CHECK(wz->n <= 2);
    CHECK_THROWS_AS(separation_search(AlgElement(n), 2), std::invalid_argument);
    auto wd = separation_search(T(n, -1, 1, 2, 4) * T(n, 1, 2, 1, 4), 3);
    REQUIRE(wd);
    for (const auto& c : wd->params) CHECK(c != Rational(n));

    // T^(2)_11 - T^(2)_22 - (T^(1)_11)^2 + (T^(1)_22)^2 ... any nonzero element is separated
    std::mt19937 rng(8);
    for (int t = 0; t < 10; ++t) {
        auto x = random_y(rng, n, 3);
        if (x.is_zero()) continue;
        auto wx = separation_search(x, 4);
        REQUIRE(wx);
        std::vector<RepSpec> specs;
        for (const auto& c : wx->params) specs.push_back(sigma(c));
        CHECK_FALSE(rep_apply(x, specs).is_zero());
    }
}

TEST_CASE("leading coefficient equals the current-algebra evaluation") {
    std::mt19937 rng(12);
    const int n = 2;
    for (int t = 0; t < 10; ++t) {
        auto x = random_y(rng, n, 3);
        if (x.is_zero()) continue;
        for (int k = 1; k <= 3; ++k) CHECK(leading_coefficient_check(x, k));
    }
    CHECK(leading_coefficient_check(z_series(n, 3)[3], 2));
}
