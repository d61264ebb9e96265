#include <catch2/catch.hpp>

#include <yangian/algebra.hpp>

#include <random>

using namespace yangian;

namespace {

AlgElement T(int n, int level, int i, int j, int d = kNoTruncation) { return AlgElement::t(n, level, i, j, d); }

// Coefficient of T*(v) at v^b: δ + T^(-1) at b = 0, T^(-b-1) beyond.
AlgElement Tstar(int n, int b, int i, int j, int d) {
    return b == 0 ? T(n, 0, i, j, d) + T(n, -1, i, j, d) : T(n, -b - 1, i, j, d);
}

// Number of multisets of triples (r, i, j) with Σ r = s: coefficient of x^s in Π_r (1 - x^r)^(-N²).
std::vector<long> multiset_counts(int n, int smax) {
    std::vector<long> c(smax + 1, 0);
    c[0] = 1;
    for (int r = 1; r <= smax; ++r)
        for (int copy = 0; copy < n * n; ++copy)
            for (int s = r; s <= smax; ++s) c[s] += c[s - r];
    return c;
}

Monomial random_word(std::mt19937& rng, int n, int len, int maxlevel, bool dual) {
    std::uniform_int_distribution<int> idx(1, n), lev(1, maxlevel), sign(0, 1);
    Monomial w;
    for (int p = 0; p < len; ++p) {
        int l = lev(rng);
        if (dual && sign(rng)) l = -l;
        w.push_back({l, idx(rng), idx(rng)});
    }
    return w;
}

}  // namespace

TEST_CASE("normal order places dual generators first") {
    GenId a{-2, 1, 1}, b{1, 2, 2}, c{-1, 2, 2};
    CHECK(a < b);
    CHECK(c < a);
    CHECK(is_normal({c, a, b}));
    CHECK_FALSE(is_normal({b, a}));
    CHECK(deg_prime({b, GenId{3, 1, 2}, a}) == 0 + 2 - 2);
}

TEST_CASE("normal form examples") {
    const int n = 2;
    auto x = T(n, 1, 1, 2) * T(n, 1, 2, 1) - T(n, 1, 2, 1) * T(n, 1, 1, 2);
    CHECK(x == T(n, 1, 1, 1) - T(n, 1, 2, 2));

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    auto lhs = normal_form(n, kNoTruncation, {{{{2, i, j}, {1, k, l}}, Rational(1)}});
                    auto rhs = T(n, 1, k, l) * T(n, 2, i, j) + T(n, 0, k, j) * T(n, 2, i, l) -
                               T(n, 0, i, l) * T(n, 2, k, j);
                    CHECK(lhs == rhs);
                }

    Monomial m{{-1, 2, 1}, {-2, 1, 1}, {1, 1, 2}, {3, 2, 2}};
    REQUIRE(is_normal(m));
    auto y = normal_form(n, 5, {{m, Rational(3)}});
    CHECK(y.terms().size() == 1);
    CHECK(y.coefficient(m) == Rational(3));
}

TEST_CASE("reordering dual generators without truncation is refused") {
    CHECK_THROWS_AS(normal_form(2, kNoTruncation, {{{{-2, 1, 1}, {-1, 1, 1}}, Rational(1)}}), std::domain_error);
    CHECK_THROWS_AS(normal_form(2, 3, {{{{0, 1, 1}}, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(normal_form(2, 3, {{{{1, 3, 1}}, Rational(1)}}), std::out_of_range);
}

TEST_CASE("relation right-hand sides at the lowest level") {
    const int n = 2, d = 4;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    CHECK(rel_rhs(RelationFamily::yang, 1, 1, i, j, k, l, n) ==
                          T(n, 0, k, j) * T(n, 1, i, l) - T(n, 0, i, l) * T(n, 1, k, j));
                    auto dual = T(n, 0, k, j) * T(n, -2, i, l, d) - T(n, 0, i, l) * T(n, -2, k, j, d) +
                                T(n, -2, i, l, d) * T(n, -1, k, j, d) - T(n, -1, i, l, d) * T(n, -2, k, j, d);
                    CHECK(rel_rhs(RelationFamily::dual, 1, 1, i, j, k, l, n, d) == dual);
                    auto cross = T(n, 0, j, k) * T(n, -1, i, l, d) - T(n, 0, i, l) * T(n, -1, k, j, d);
                    CHECK(rel_rhs(RelationFamily::cross, 1, 1, i, j, k, l, n, d) == cross);
                }
}

TEST_CASE("Yangian relations agree with the telescoped generating-series relation") {
    // (u-v)[T_ij(u),T_kl(v)] = T_kj(u)T_il(v) - T_kj(v)T_il(u) telescopes to
    // [T^(r),T^(s)] = Σ_{a=1}^{r} (T^(r-a)_kj T^(s+a-1)_il - T^(s+a-1)_kj T^(r-a)_il).
    const int n = 2;
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l) {
                            AlgElement oracle(n);
                            for (int a = 1; a <= r; ++a)
                                oracle += T(n, r - a, k, j) * T(n, s + a - 1, i, l) -
                                          T(n, s + a - 1, k, j) * T(n, r - a, i, l);
                            CHECK(rel_rhs(RelationFamily::yang, r, s, i, j, k, l, n) == oracle);
                        }
}

TEST_CASE("dual relations agree with the telescoped generating-series relation") {
    // (u-v)[T*_ij(u),T*_kl(v)] = T*_il(u)T*_kj(v) - T*_il(v)T*_kj(u) telescopes to
    // [T*[a]_ij, T*[b]_kl] = Σ_{t=1}^{b+1} (T*[a+t]_il T*[b+1-t]_kj - T*[b+1-t]_il T*[a+t]_kj).
    const int n = 2, d = 5;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l) {
                            AlgElement oracle(n, d);
                            for (int t = 1; t <= b + 1; ++t)
                                oracle += Tstar(n, a + t, i, l, d) * Tstar(n, b + 1 - t, k, j, d) -
                                          Tstar(n, b + 1 - t, i, l, d) * Tstar(n, a + t, k, j, d);
                            CHECK(rel_rhs(RelationFamily::dual, a + 1, b + 1, i, j, k, l, n, d) == oracle);
                        }
}

TEST_CASE("cross relations satisfy the mixed generating-series relation") {
    // (u-v)[T_ij(u), T*_kl(v)] = δ_jk Σ_m T_im(u)T*_ml(v) - δ_il Σ_m T*_km(v)T_mj(u),
    // read at u^{-r} v^b: [T^(r+1), T*[b]] - [T^(r), T*[b-1]] = X_{r,b}.
    const int n = 2, d = 5;
    auto bracket = [&](int r, int b, int i, int j, int k, int l) {
        if (r == 0 || b < 0) return AlgElement(n, d);
        return commutator(T(n, r, i, j, d), Tstar(n, b, k, l, d));
    };
    for (int r = 0; r <= 2; ++r)
        for (int b = 0; b <= 2; ++b)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l) {
                            AlgElement rhs(n, d);
                            for (int m = 1; m <= n; ++m) {
                                if (j == k) rhs += T(n, r, i, m, d) * Tstar(n, b, m, l, d);
                                if (i == l) rhs -= Tstar(n, b, k, m, d) * T(n, r, m, j, d);
                            }
                            CHECK(bracket(r + 1, b, i, j, k, l) - bracket(r, b - 1, i, j, k, l) == rhs);
                        }
}

TEST_CASE("equivalent forms of the defining relations") {
    const int n = 2;
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l) CHECK(commutator_equiv_check(r, s, i, j, k, l, n));
}

TEST_CASE("rewriting is confluent") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> len(0, 5);
    for (int t = 0; t < 150; ++t) {
        bool dual = t % 3 != 0;
        WordSum raw{{random_word(rng, 2, len(rng), 3, dual), Rational(1)},
                    {random_word(rng, 2, len(rng), 3, dual), Rational(-2, 3)}};
        const int d = dual ? 5 : kNoTruncation;
        auto a = normal_form(2, d, raw, RewriteStrategy::leftmost);
        auto b = normal_form(2, d, raw, RewriteStrategy::rightmost);
        CHECK(a == b);
    }
}

TEST_CASE("multiplication is associative") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> len(1, 3);
    for (int t = 0; t < 40; ++t) {
        auto word = [&](bool dual) {
            return normal_form(2, dual ? 8 : kNoTruncation, {{random_word(rng, 2, len(rng), 2, dual), Rational(1)}});
        };
        auto x = word(false) + AlgElement::scalar(2, Rational(1, 2)), y = word(false), z = word(false);
        CHECK((x * y) * z == x * (y * z));
        CHECK(AlgElement::one(2) * x == x);

        // In the double, left multiplication by w maps the truncation ideal at D
        // into the one at D - (level sum of w), so both association orders agree
        // below D - L(x) - L(y).
        const int d = 8;
        auto dword = [&] { return normal_form(2, d, {{random_word(rng, 2, len(rng) % 2 + 1, 2, true), Rational(1)}}); };
        auto xd = dword(), yd = dword(), zd = dword();
        int lift = 0;
        for (const auto* e : {&xd, &yd}) {
            int l = 0;
            for (const auto& [m, c] : e->terms()) l = std::max(l, level_degree(m));
            lift += l;
        }
        CHECK(((xd * yd) * zd).with_truncation(d - lift) == (xd * (yd * zd)).with_truncation(d - lift));
    }
}

TEST_CASE("truncation mismatch is an error") {
    CHECK_THROWS_AS(T(2, -1, 1, 1, 3) * T(2, -1, 1, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(T(2, 1, 1, 1) * T(3, 1, 1, 1), std::invalid_argument);
    CHECK((T(2, 1, 1, 1) * T(2, -1, 1, 1, 4)).dual_trunc() == 4);
    CHECK((T(2, 1, 1, 1) * T(2, -1, 1, 1, 4)).tag() == AlgebraTag::DY);
}

TEST_CASE("graded leading parts") {
    const int n = 2;
    auto g = graded_leading(T(n, 3, 1, 2), Filtration::deg_prime);
    CHECK(g.degree == 2);
    CHECK(g.leading == T(n, 3, 1, 2));
    CHECK_THROWS_AS(graded_leading(AlgElement(n), Filtration::deg), std::invalid_argument);
    CHECK_THROWS_AS(graded_leading(T(n, -1, 1, 1, 2), Filtration::deg), std::invalid_argument);

    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l) {
                            auto c = commutator(T(n, r, i, j), T(n, s, k, l));
                            // commutative associated graded for the level-sum filtration
                            for (const auto& [m, v] : c.terms()) CHECK(level_degree(m) < r + s);
                            auto expect = T(n, 0, k, j) * T(n, r + s - 1, i, l) - T(n, 0, i, l) * T(n, r + s - 1, k, j);
                            CHECK(homogeneous_part(c, Filtration::deg_prime, r + s - 2) == expect);
                        }
    // cross bracket at r = s = 1 has deg' -1 leading part
    const int d = 5;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    auto c = commutator(T(n, 1, i, j, d), T(n, -1, k, l, d));
                    auto expect = T(n, 0, k, j) * T(n, -1, i, l, d) - T(n, 0, i, l) * T(n, -1, k, j, d);
                    CHECK(homogeneous_part(c, Filtration::deg_prime, -1) == expect);
                }
}

TEST_CASE("filtration degree is additive on leading parts") {
    std::mt19937 rng(8);
    for (int t = 0; t < 30; ++t) {
        auto x = normal_form(2, 6, {{random_word(rng, 2, 2, 3, true), Rational(1)}});
        auto y = normal_form(2, 6, {{random_word(rng, 2, 2, 3, true), Rational(1)}});
        if (x.is_zero() || y.is_zero()) continue;
        auto p = x * y;
        if (p.is_zero()) continue;
        auto gx = graded_leading(x, Filtration::deg_prime), gy = graded_leading(y, Filtration::deg_prime);
        auto lead = homogeneous_part(p, Filtration::deg_prime, gx.degree + gy.degree);
        if (!lead.is_zero()) CHECK(graded_leading(p, Filtration::deg_prime).degree == gx.degree + gy.degree);
    }
}

TEST_CASE("basis enumeration") {
    CHECK(basis_enumerate(BasisSide::yangian, 3, 1).size() == 3);
    CHECK(basis_enumerate(BasisSide::yangian, 0, 2) == std::vector<Monomial>{Monomial{}});
    auto counts = multiset_counts(2, 4);
    for (int s = 0; s <= 4; ++s) {
        auto b = basis_enumerate(BasisSide::yangian, s, 2);
        CHECK(static_cast<long>(b.size()) == counts[s]);
        auto d = basis_enumerate(BasisSide::dual, s, 2);
        CHECK(d.size() == b.size());
        for (const auto& m : b) {
            CHECK(is_normal(m));
            CHECK(level_degree(m) == s);
        }
        for (std::size_t p = 0; p + 1 < b.size(); ++p)
            CHECK_FALSE(inverse_lex_less(partition_of(b[p + 1]), partition_of(b[p])));
    }
    auto two = basis_enumerate(BasisSide::yangian, 2, 2);
    CHECK(two.size() == 14);
    CHECK(two.front().size() == 2);
    CHECK(two.back().size() == 1);
}

TEST_CASE("element text form") {
    auto x = T(2, -2, 1, 1, 3) * T(2, 1, 2, 2, 3) * Rational(1, 2) - AlgElement::scalar(2, Rational(3), 3);
    CHECK(x.str() == "-3 + 1/2 * T[-2,1,1] * T[1,2,2]");
    CHECK(x.tag() == AlgebraTag::DY);
}
