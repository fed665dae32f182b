#include <doctest.h>

#include "coxperron/diskcount.hpp"
#include "coxperron/errors.hpp"
#include "coxperron/pnfamily.hpp"
#include "coxperron/sturm.hpp"
#include "oracles.hpp"

using namespace coxperron;

namespace {

Poly P(std::initializer_list<long> c) {
    std::vector<long> v(c);
    return Poly::from_integers(std::span<const long>(v));
}

bool positively_proportional(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree() || a.is_zero()) return false;
    const Rational c = a.leading() / b.leading();
    return c > 0 && a == b * c;
}

const Poly kExample = P({-1, -3, 0, 0, 0, 1});  // t^5 - 3t - 1

}  // namespace

TEST_CASE("chain of the quintic example") {
    const SturmSequence seq = build_sturm(kExample, derivative(kExample));
    REQUIRE(seq.size() == 4);
    CHECK(positively_proportional(seq[0], kExample));
    CHECK(positively_proportional(seq[1], P({-3, 0, 0, 0, 5})));
    CHECK(positively_proportional(seq[2], P({5, 12})));
    CHECK(positively_proportional(seq[3], P({1})));
    CHECK(seq.sign_changes_at(-2) == 3);
    CHECK(seq.sign_changes_at(2) == 0);
    CHECK(seq.sign_changes_at_infinity(Direction::plus) == 0);
    CHECK(seq.sign_changes_at_infinity(Direction::minus) == 3);
}

TEST_CASE("small chains") {
    const SturmSequence a = build_sturm(P({-1, 0, 1}), P({0, 2}));
    REQUIRE(a.size() == 3);
    CHECK(a[0] == P({-1, 0, 1}));
    CHECK(a[1] == P({0, 1}));
    CHECK(a[2] == P({1}));

    const Poly sq = P({1, -2, 1});
    const SturmSequence b = build_sturm(sq, derivative(sq));
    const bool ends_in_gcd = positively_proportional(b.chain().back(), P({-1, 1})) ||
                             positively_proportional(b.chain().back(), P({1, -1}));
    CHECK(ends_in_gcd);
    CHECK(b.chain().back().degree() == 1);

    const SturmSequence c = build_sturm(P({0, 0, 1}), P({0, 2}));
    CHECK(c.sign_changes_at_infinity(Direction::plus) == 0);
    CHECK(c.sign_changes_at_infinity(Direction::minus) == 1);

    CHECK_THROWS_AS(build_sturm(Poly{}, P({1})), PreconditionError);
    CHECK_THROWS_AS(build_sturm(P({1, 1}), Poly{}), PreconditionError);
    CHECK_THROWS_AS(build_sturm(P({1, 1}), P({1, 1, 1})), PreconditionError);
}

TEST_CASE("sign changes at infinity of D_n") {
    for (int n : {1, 10, 25}) {
        const Poly d = closed_form_dn(n);
        const SturmSequence seq = build_sturm(d, derivative(d));
        CHECK(seq.sign_changes_at_infinity(Direction::plus) == 3);
        CHECK(seq.sign_changes_at_infinity(Direction::minus) == 6);
    }
    for (int n : {26, 30, 60}) {
        const Poly d = closed_form_dn(n);
        const SturmSequence seq = build_sturm(d, derivative(d));
        CHECK(seq.sign_changes_at_infinity(Direction::plus) == 2);
        CHECK(seq.sign_changes_at_infinity(Direction::minus) == 7);
    }
}

TEST_CASE("count_sign_changes skips zeros") {
    CHECK(count_sign_changes({1, 0, -1, 0, 0, 1}) == 2);
    CHECK(count_sign_changes({}) == 0);
    CHECK(count_sign_changes({0, 0}) == 0);
    CHECK(count_sign_changes({1, 1, 1}) == 0);
}

TEST_CASE("real root counts") {
    CHECK(count_real_roots(kExample, -2, 2) == 3);
    const Poly d5 = closed_form_dn(5);
    CHECK(count_real_roots(d5, 0, cauchy_bound(d5)) == 3);
    CHECK(count_real_roots(P({1, 0, 1}), -10, 10) == 0);
    CHECK(count_real_roots(P({5}), -1, 1) == 0);
    CHECK(count_all_real_roots(kExample) == 3);
    CHECK(count_all_real_roots(P({1, 0, 1})) == 0);
    CHECK(count_all_real_roots(P({0, 0, 1})) == 1);

    CHECK_THROWS_AS(count_real_roots(P({-1, 1}), 1, 3), EndpointRootError);
    CHECK_THROWS_AS(count_real_roots(P({-3, 1}), 1, 3), EndpointRootError);
    CHECK_THROWS_AS(count_real_roots(kExample, 2, 2), PreconditionError);
    CHECK_THROWS_AS(count_real_roots(kExample, 2, -2), PreconditionError);
    CHECK_THROWS_AS(count_real_roots(Poly{}, -1, 1), PreconditionError);
    try {
        count_real_roots(P({-1, 1}), 1, 3);
    } catch (const EndpointRootError& e) {
        CHECK(e.point() == 1);
        CHECK(std::string(e.what()).find("perturb") != std::string::npos);
    }
}

TEST_CASE("generalized weight") {
    CHECK(generalized_weight(kExample, derivative(kExample), -2, 2) == 3);
    // a single crossing of t with g = 1: f'(0) g(0) > 0 counts +1
    CHECK(generalized_weight(P({0, 1}), P({1}), -1, 1) == 1);
    CHECK(generalized_weight(P({0, 1}), P({-1}), -1, 1) == -1);

    const CircleSplit s = circle_split(closed_form_dn(1), 2);
    const Rational m = cauchy_bound(s.phi()) + 1;
    CHECK(generalized_weight(s.phi(), s.psi(), -m, m) == -7);

    CHECK_THROWS_AS(generalized_weight(P({-1, 0, 1}), P({-1, 1}), -5, 5), PreconditionError);
    CHECK_THROWS_AS(generalized_weight(P({0, 1}), P({1}), 0, 1), EndpointRootError);
}

TEST_CASE("isolation") {
    const auto sqrt2 = isolate_real_roots(P({-2, 0, 1}));
    REQUIRE(sqrt2.size() == 2);
    CHECK(sqrt2[0].lo >= -2);
    CHECK(sqrt2[0].hi <= -1);
    CHECK(sqrt2[1].lo >= 1);
    CHECK(sqrt2[1].hi <= 2);

    const Poly d1 = closed_form_dn(1);
    CHECK(d1(3) == -2192);
    CHECK(d1(4) == 33844);
    const auto roots = isolate_real_roots(d1);
    REQUIRE(roots.size() == 3);
    for (const auto& iv : roots) CHECK(iv.lo >= 0);
    CHECK(roots.back().lo >= 3);
    CHECK(roots.back().hi <= 4);

    CHECK_THROWS_AS(isolate_real_roots(P({0, 0, 0, 1})), PreconditionError);
    CHECK(isolate_real_roots(P({1, 0, 1})).empty());

    // exact rational roots come back as points or as intervals straddling them
    const auto rat = isolate_real_roots(P({-1, 0, 4}));  // +-1/2
    REQUIRE(rat.size() == 2);
    CHECK(rat[0].contains(Rational(-1, 2)));
    CHECK(rat[1].contains(Rational(1, 2)));
}

TEST_CASE("refinement") {
    const Interval sqrt2 = refine_root(P({-2, 0, 1}), {1, 2}, Rational(1, 100));
    CHECK(sqrt2.width() <= Rational(1, 100));
    CHECK(sqrt2.lo * sqrt2.lo <= 2);
    CHECK(sqrt2.hi * sqrt2.hi >= 2);

    const Poly d1 = closed_form_dn(1);
    const Rational eps = make_rational(1, ipow(10, 10));
    const Interval tau = refine_root(d1, {3, 4}, eps);
    CHECK(tau.width() <= eps);
    long double largest = 0;
    for (const auto& z : oracle::companion_roots(d1)) {
        if (oracle::is_real(z)) largest = std::max(largest, z.real());
    }
    CHECK(oracle::to_ld(tau.lo) <= largest + 1e-12L);
    CHECK(oracle::to_ld(tau.hi) >= largest - 1e-12L);

    const Interval three = refine_root(P({-3, 1}), {2, 4}, Rational(1, 1000));
    CHECK(three.contains(3));

    CHECK_THROWS_AS(refine_root(P({-3, 1}), {4, 5}, Rational(1, 10)), PreconditionError);
    CHECK_THROWS_AS(refine_root(P({-3, 1}), {2, 4}, 0), PreconditionError);
}

TEST_CASE("property: chain ends in the gcd and has decreasing degrees") {
    oracle::Rng rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const Poly h = rng.poly(static_cast<int>(rng.uniform(0, 2)), 5);
        const Poly f = h * h * rng.poly(static_cast<int>(rng.uniform(1, 5)), 20);
        const SturmSequence seq = build_sturm(f, derivative(f));
        for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i].degree() < seq[i - 1].degree());
        for (const auto& p : seq.chain()) CHECK(p == primitive_part(p));
        const Poly g = gcd(f, derivative(f));
        const Poly last = seq.chain().back();
        CHECK(last.degree() == g.degree());
        CHECK(div_rem(last, g).remainder.is_zero());
    }
}

TEST_CASE("property: interval counts agree with the companion-matrix oracle") {
    oracle::Rng rng(22);
    int checked = 0;
    while (checked < 300) {
        const Poly f = rng.squarefree_poly(8, 50);
        const auto roots = oracle::companion_roots(f);
        if (oracle::min_separation(roots) < 1e-3L || oracle::min_imag_gap(roots) < 1e-3L) continue;
        Rational a = rng.rational(-8, 8, 16);
        Rational b = rng.rational(-8, 8, 16);
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        bool near = false;
        int expected = 0;
        for (const auto& z : roots) {
            if (!oracle::is_real(z)) continue;
            const long double x = z.real();
            if (std::abs(x - oracle::to_ld(a)) < 1e-3L || std::abs(x - oracle::to_ld(b)) < 1e-3L) near = true;
            if (x > oracle::to_ld(a) && x < oracle::to_ld(b)) ++expected;
        }
        if (near) continue;
        CHECK(count_real_roots(f, a, b) == expected);
        ++checked;
    }
}

TEST_CASE("property: additivity over a partition") {
    oracle::Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly f = rng.squarefree_poly(8, 50);
        const Rational a = rng.rational(-10, -4, 3);
        const Rational m = rng.rational(-3, 3, 3);
        const Rational b = rng.rational(4, 10, 3);
        if (f.sign_at(a) == 0 || f.sign_at(m) == 0 || f.sign_at(b) == 0) continue;
        CHECK(count_real_roots(f, a, b) == count_real_roots(f, a, m) + count_real_roots(f, m, b));
    }
}

TEST_CASE("property: infinity agrees with the Cauchy bound") {
    oracle::Rng rng(24);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly f = rng.squarefree_poly(8, 50);
        if (f.degree() < 1) continue;
        const SturmSequence seq = build_sturm(f, derivative(f));
        const Rational bound = cauchy_bound(f);
        CHECK(seq.sign_changes_at(bound) == seq.sign_changes_at_infinity(Direction::plus));
        CHECK(seq.sign_changes_at(-bound) == seq.sign_changes_at_infinity(Direction::minus));
        CHECK(count_all_real_roots(f) == count_real_roots(f, -bound, bound));
    }
}

TEST_CASE("property: positive rescaling leaves sign changes alone") {
    oracle::Rng rng(25);
    for (int trial = 0; trial < 100; ++trial) {
        const Poly f = rng.squarefree_poly(8, 50);
        const SturmSequence seq = build_sturm(f, derivative(f));
        const std::size_t idx = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(seq.size()) - 1));
        const SturmSequence scaled = seq.scaled(idx, rng.rational(1, 20, 7));
        const Rational x = rng.rational(-6, 6, 5);
        CHECK(scaled.sign_changes_at(x) == seq.sign_changes_at(x));
        CHECK(scaled.sign_changes_at_infinity(Direction::plus) == seq.sign_changes_at_infinity(Direction::plus));
        CHECK(scaled.sign_changes_at_infinity(Direction::minus) == seq.sign_changes_at_infinity(Direction::minus));
    }
    CHECK_THROWS_AS(build_sturm(kExample, derivative(kExample)).scaled(0, -1), PreconditionError);
}

TEST_CASE("property: Descartes bound and parity on the positive axis") {
    oracle::Rng rng(26);
    for (int trial = 0; trial < 300; ++trial) {
        const Poly f = rng.squarefree_poly(8, 50);
        if (f.coeff(0) == 0) continue;
        const int positive = count_real_roots(f, 0, cauchy_bound(f));
        const int variations = sign_variations(f);
        CHECK(positive <= variations);
        CHECK((variations - positive) % 2 == 0);
    }
}

TEST_CASE("property: isolating intervals are disjoint and complete") {
    oracle::Rng rng(27);
    for (int trial = 0; trial < 150; ++trial) {
        const Poly f = rng.squarefree_poly(8, 50);
        const auto ivs = isolate_real_roots(f);
        CHECK(static_cast<int>(ivs.size()) == count_all_real_roots(f));
        for (std::size_t i = 0; i < ivs.size(); ++i) {
            const Interval& iv = ivs[i];
            if (iv.lo == iv.hi) {
                CHECK(f.sign_at(iv.lo) == 0);
            } else {
                CHECK(f.sign_at(iv.lo) * f.sign_at(iv.hi) < 0);
            }
            if (i > 0) CHECK(ivs[i - 1].hi < iv.lo);
            const Interval r = refine_root(f, iv, Rational(1, 1 << 20));
            CHECK(r.width() <= Rational(1, 1 << 20));
            CHECK(r.lo >= iv.lo);
            CHECK(r.hi <= iv.hi);
        }
    }
}
