#include <catch2/catch.hpp>

#include <yangian/tensor_operator.hpp>

#include <random>

using namespace yangian;

namespace {

RSeries k(long v) { return RSeries::constant(Rational(v)); }

TensorOperator random_op(std::mt19937& rng, int n, int arity) {
    TensorOperator t(n, arity);
    std::uniform_int_distribution<std::uint64_t> idx(0, t.dim() - 1);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int e = 0; e < 6; ++e) t.add({idx(rng), idx(rng)}, k(c(rng)));
    return t;
}

}  // namespace

TEST_CASE("P, Q basics") {
    for (int n = 1; n <= 4; ++n) {
        TensorOperator p = permutation_op(n, 2, 1, 2), q = q_op(n, 2, 1, 2);
        TensorOperator one = TensorOperator::identity(n, 2);
        CHECK(p * p == one);
        CHECK(q * q == q * Rational(n));
        CHECK(p.partial_transpose(1) == q);
        CHECK(p.partial_transpose(2) == q);
    }
}

TEST_CASE("P swaps tensor factors") {
    TensorOperator p = permutation_op(3, 2, 1, 2);
    CHECK(p.entry({3, 1}, {1, 3}) == k(1));
    CHECK(p.entry({1, 3}, {1, 3}).is_zero());
}

TEST_CASE("matrix unit at a position") {
    TensorOperator e = unit_op(2, 3, 2, 1, 1);
    CHECK(e.entries().size() == 4);
    CHECK(e.entry({2, 1, 1}, {2, 1, 1}) == k(1));
    CHECK_THROWS_AS(unit_op(2, 3, 4, 1, 1), std::out_of_range);
}

TEST_CASE("R(u) R(-u) = 1 - u^-2") {
    auto u = desc("u", 6);
    std::vector<VariableSpec> vars{u};
    for (int n = 1; n <= 3; ++n) {
        auto r1 = build_r({RKind::yang, AffineArg::var("u")}, n, 2, 1, 2, vars);
        auto r2 = build_r({RKind::yang, AffineArg::var("u", Rational(-1))}, n, 2, 1, 2, vars);
        RSeries f = RSeries::constant(Rational(1), vars) - RSeries::monomial(u, 2, Rational(1));
        CHECK(r1 * r2 == TensorOperator::identity(n, 2, f));
    }
}

TEST_CASE("R^t(u) times its stated inverse is the identity") {
    std::vector<VariableSpec> vars{desc("u", 6)};
    for (int n = 1; n <= 3; ++n) {
        auto rt = build_r({RKind::transposed, AffineArg::var("u")}, n, 2, 1, 2, vars);
        auto inv = build_r({RKind::transposed_inverse, AffineArg::var("u")}, n, 2, 1, 2, vars);
        CHECK(rt * inv == TensorOperator::identity(n, 2, RSeries::constant(Rational(1), vars)));
        CHECK(inv * rt == TensorOperator::identity(n, 2, RSeries::constant(Rational(1), vars)));
    }
    CHECK_THROWS_AS(build_r({RKind::transposed_inverse, AffineArg::scalar(Rational(2))}, 2, 2, 1, 2, {}),
                    std::domain_error);
}

TEST_CASE("R(u - v) with v of order 0 is 1 - P u^-1") {
    std::vector<VariableSpec> vars{desc("u", 3), asc("v", 0)};
    auto r = build_r({RKind::yang, AffineArg::var("u") - AffineArg::var("v")}, 2, 2, 1, 2, vars);
    RSeries f = RSeries::monomial(desc("u", 3), 1, Rational(1));
    CHECK(r == TensorOperator::identity(2, 2, RSeries::constant(Rational(1), vars)) - permutation_op(2, 2, 1, 2) * f);
    CHECK_THROWS_AS(build_r({RKind::yang, AffineArg::var("w")}, 2, 2, 1, 2, vars), std::invalid_argument);
}

TEST_CASE("R(u - v) expands as 1 - P Σ u^-r v^(r-1)") {
    auto u = desc("u", 4), v = asc("v", 4);
    std::vector<VariableSpec> vars{u, v};
    auto r = build_r({RKind::yang, AffineArg::var("u") - AffineArg::var("v")}, 2, 2, 1, 2, vars);
    RSeries f(vars);
    for (int s = 1; s <= 4; ++s) f.add_term({s, s - 1}, Rational(1));
    CHECK(r == TensorOperator::identity(2, 2, RSeries::constant(Rational(1), vars)) - permutation_op(2, 2, 1, 2) * f);
    CHECK(r.partial_transpose(1).partial_transpose(2) == r);
}

TEST_CASE("partial transpose is an involution") {
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
        auto x = random_op(rng, 2, 3);
        for (int a = 1; a <= 3; ++a) CHECK(x.partial_transpose(a).partial_transpose(a) == x);
    }
    CHECK_THROWS_AS(random_op(rng, 2, 3).partial_transpose(4), std::out_of_range);
}

TEST_CASE("operator product is associative and unital") {
    std::mt19937 rng(9);
    for (int t = 0; t < 20; ++t) {
        auto a = random_op(rng, 2, 2), b = random_op(rng, 2, 2), c = random_op(rng, 2, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(TensorOperator::identity(2, 2) * a == a);
    }
    CHECK_THROWS_AS(TensorOperator::identity(2, 2) * TensorOperator::identity(2, 3), std::invalid_argument);
}

TEST_CASE("Yang-Baxter equation in polynomial form") {
    for (int n = 1; n <= 4; ++n) {
        auto res = ybe_check(n);
        CHECK(res.holds);
        CHECK(res.residual.is_zero());
    }
}

TEST_CASE("Yang-Baxter equation for truncated series R-matrices") {
    std::vector<VariableSpec> vars{desc("u", 4), asc("v", 4)};
    auto uv = AffineArg::var("u") - AffineArg::var("v");
    for (int n = 1; n <= 2; ++n) {
        // spectral parameters u, v, -1
        auto r12 = build_r({RKind::yang, uv}, n, 3, 1, 2, vars);
        auto r13 = build_r({RKind::yang, AffineArg::var("u") + AffineArg::scalar(Rational(1))}, n, 3, 1, 3, vars);
        auto r23 = build_r({RKind::yang, AffineArg::var("v") + AffineArg::scalar(Rational(1))}, n, 3, 2, 3, vars);
        CHECK(r12 * r13 * r23 == r23 * r13 * r12);
    }
}
