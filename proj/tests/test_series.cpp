#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhilb/series.hpp"

using namespace qhilb;

namespace {

// dim A_n counted as monomials x^i y^j z^k with i + j + 2k = n
long hA_bruteforce(long n)
{
    long c = 0;
    for (long k = 0; 2 * k <= n; ++k)
        for (long i = 0; i <= n - 2 * k; ++i) ++c;
    return n < 0 ? 0 : c;
}

std::vector<long> coeffs(const TruncatedSeries& h)
{
    std::vector<long> v;
    for (const auto& c : h.coeffs) v.push_back(c.get_si());
    return v;
}

LaurentPoly P(std::vector<long> c, int start = 0) { return LaurentPoly::from_coeffs(c, start); }

} // namespace

TEST_CASE("expand_over_hA examples")
{
    CHECK(coeffs(expand_over_hA(1, 5)) == std::vector<long>{1, 2, 4, 6, 9, 12});
    CHECK(coeffs(expand_over_hA(LaurentPoly::one_minus_t() * LaurentPoly::one_minus_t2(), 4)) ==
          std::vector<long>{1, 1, 1, 1, 1});
    CHECK(coeffs(expand_over_hA(LaurentPoly::one_minus_t(), 5)) == std::vector<long>{1, 1, 2, 2, 3, 3});
    CHECK_THROWS_AS(expand_over_hA(P({0, 0, 0, 1}), 2), std::invalid_argument);
}

TEST_CASE("expand_over_hA handles negative degrees")
{
    auto h = expand_over_hA(P({1}, -2), 2);
    CHECK(h.start == -2);
    CHECK(coeffs(h) == std::vector<long>{1, 2, 4, 6, 9});
    CHECK(h.at(-3) == 0);
    CHECK_THROWS(h.at(3));
}

TEST_CASE("hA_coefficient")
{
    CHECK(hA_coefficient(0) == 1);
    CHECK(hA_coefficient(3) == 6);
    CHECK(hA_coefficient(-1) == 0);
    auto h = expand_over_hA(1, 200);
    for (long n = 0; n <= 200; ++n) {
        CHECK(hA_coefficient(n) == hA_bruteforce(n));
        CHECK(h.at((int)n) == hA_coefficient(n));
    }
}

TEST_CASE("expansion is linear and agrees with a convolution oracle")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long> a(6), b(6);
        for (auto& v : a) v = d(rng);
        for (auto& v : b) v = d(rng);
        LaurentPoly qa = P(a), qb = P(b);
        auto ha = expand_over_hA(qa, 12), hb = expand_over_hA(qb, 12), hs = expand_over_hA(qa + qb, 12);
        for (int n = 0; n <= 12; ++n) {
            CHECK(hs.at(n) == ha.at(n) + hb.at(n));
            long conv = 0;
            for (int i = 0; i < 6 && i <= n; ++i) conv += a[i] * hA_bruteforce(n - i);
            CHECK(ha.at(n) == conv);
        }
    }
}

TEST_CASE("gk dimension and multiplicity")
{
    auto r = gk_dim_and_multiplicity(1);
    CHECK(r.gk == 3);
    CHECK(r.e == mpq_class(1, 2));
    r = gk_dim_and_multiplicity(LaurentPoly::one_minus_t());
    CHECK(r.gk == 2);
    CHECK(r.e == mpq_class(1, 2));
    // point module: the series is 1/(1-t), so the growth is constant and the
    // dimension is 1 with multiplicity 1
    r = gk_dim_and_multiplicity(LaurentPoly::one_minus_t() * LaurentPoly::one_minus_t2());
    CHECK(r.gk == 1);
    CHECK(r.e == 1);
    // conic: 1 - t^2 gives the series 1/(1-t)^2, growth n+1
    r = gk_dim_and_multiplicity(LaurentPoly::one_minus_t2());
    CHECK(r.gk == 2);
    CHECK(r.e == 1);
    CHECK_THROWS_AS(gk_dim_and_multiplicity(LaurentPoly()), std::invalid_argument);
    // (1-t)^4 would be a negative dimension
    auto q4 = LaurentPoly::one_minus_t() * LaurentPoly::one_minus_t() * LaurentPoly::one_minus_t() *
              LaurentPoly::one_minus_t();
    CHECK_THROWS_AS(gk_dim_and_multiplicity(q4), std::invalid_argument);
}

TEST_CASE("multiplicity matches the growth of the expansion")
{
    // For gk = d, h_n ~ e n^(d-1)/(d-1)! averaged over parity; check via
    // second differences for gk 3 and first differences for gk 2.
    for (auto q : {P({1}), P({0, 2, 0, -1}), P({0, 0, 2, 0, -1}), P({0, 1, 1, -1})}) {
        auto r = gk_dim_and_multiplicity(q);
        REQUIRE(r.gk == 3);
        auto h = expand_over_hA(q, 60);
        // h_{n+2} - 2h_{n+1} + h_n averages to e over two consecutive n
        mpz_class s = h.at(58) - 2 * h.at(57) + h.at(56) + h.at(57) - 2 * h.at(56) + h.at(55);
        CHECK(mpq_class(s, 2) == r.e);
    }
    auto h = expand_over_hA(LaurentPoly::one_minus_t(), 60);
    CHECK(mpq_class(h.at(60) - h.at(58), 2) == gk_dim_and_multiplicity(LaurentPoly::one_minus_t()).e);
}

TEST_CASE("rank")
{
    CHECK(rank(1) == 1);
    CHECK(rank(P({0, 0, 2, 0, -1})) == 1);
    CHECK(rank(LaurentPoly::one_minus_t()) == 0);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<long> c(5);
        for (auto& v : c) v = d(rng);
        LaurentPoly q = P(c);
        if (q.is_zero() || rank(q) == 0) continue;
        CHECK(gk_dim_and_multiplicity(q).gk == 3);
    }
}

TEST_CASE("polynomial arithmetic and parsing")
{
    auto q = parse_poly("1 - 2t^2 + t^-1");
    CHECK(q.coeff(0) == 1);
    CHECK(q.coeff(2) == -2);
    CHECK(q.coeff(-1) == 1);
    CHECK(q.min_degree() == -1);
    CHECK(parse_poly(q.to_string()) == q);
    CHECK(parse_poly("{\"2\": \"2\", \"4\": \"-1\"}") == P({0, 0, 2, 0, -1}));
    CHECK(parse_poly("2t^2 - t^4").to_string() == "2t^2 - t^4");
    CHECK(P({1, -1}).div_one_minus_t() == 1);
    CHECK(P({1, 0, -1}).div_one_plus_t() == LaurentPoly::one_minus_t());
    CHECK_THROWS(P({1, 1}).div_one_minus_t());
    CHECK((P({1, 1}) * P({1, -1})) == LaurentPoly::one_minus_t2());
    CHECK(P({3, 0, 1}).eval(-2) == 7);
    CHECK_THROWS_AS(P({1}, -1).eval(2), std::domain_error);
    CHECK(P({1}, -1).eval(-1) == -1);
    CHECK(LaurentPoly().to_string() == "0");
    CHECK_THROWS(parse_poly("1 + q"));
}
