#include "doctest.h"
#include "oracles.hpp"

#include "freemeixner/cumulants.hpp"
#include "freemeixner/meixner.hpp"

#include <random>

using namespace freemeixner;

namespace {

using Q = Rational;

Q q(long long n, long long d = 1) { return Q(n) / Q(d); }

CumulantSequence<Q> seq(std::vector<Q> v) { return CumulantSequence<Q>(std::move(v)); }

// tau of a word over {X, Y, S}: expand every S into X or Y, then sum over
// NC(n) with blocks that are all-X (R(X)) or all-Y (R(Y)); mixed blocks vanish.
Q joint_moment_slow(const FreePair<Q>& pair, const Word& word) {
    const int n = static_cast<int>(word.size());
    std::vector<int> s_positions;
    for (int i = 0; i < n; ++i)
        if (word[i] == Symbol::S) s_positions.push_back(i);
    const auto partitions = enumerate_nc(n);
    Q total(0);
    for (unsigned mask = 0; mask < (1U << s_positions.size()); ++mask) {
        std::vector<Symbol> colored(word);
        for (std::size_t k = 0; k < s_positions.size(); ++k)
            colored[s_positions[k]] = (mask >> k) & 1U ? Symbol::Y : Symbol::X;
        for (const auto& p : partitions) {
            Q term(1);
            for (const auto& b : p.blocks()) {
                const Symbol first = colored[b.front() - 1];
                bool mono = true;
                for (int v : b) mono &= colored[v - 1] == first;
                if (!mono) {
                    term = 0;
                    break;
                }
                term *= first == Symbol::X ? pair.x[b.size()] : pair.y[b.size()];
            }
            total += term;
        }
    }
    return total;
}

}  // namespace

TEST_CASE("cumulants_to_moments: semicircle gives Catalan pattern") {
    const auto r = seq({0, 1, 0, 0, 0, 0});
    const auto m = cumulants_to_moments(r);
    const std::vector<Q> expected{1, 0, 1, 0, 2, 0, 5};
    CHECK(m.values() == expected);
    for (int n = 1; n <= 6; ++n) CHECK(m[n] == oracle::moment_by_enumeration(r.values(), n));
}

TEST_CASE("cumulants_to_moments agrees with brute-force NC sum for random rationals") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Q> r;
        for (int i = 0; i < 9; ++i) r.push_back(oracle::random_rational(rng));
        const auto m = cumulants_to_moments(seq(r));
        for (int n = 1; n <= 9; ++n) CHECK(m[n] == oracle::moment_by_enumeration(r, n));
    }
}

TEST_CASE("zero cumulants give the point mass at zero") {
    const auto m = cumulants_to_moments(CumulantSequence<Q>::zeros(6));
    CHECK(m[0] == 1);
    for (int n = 1; n <= 6; ++n) CHECK(m[n] == 0);
}

TEST_CASE("moments_to_cumulants") {
    const auto r = moments_to_cumulants(MomentSequence<Q>({1, 0, 1, 0, 2}));
    CHECK(r.values() == std::vector<Q>{0, 1, 0, 0});

    const Q c = q(-3, 2);
    std::vector<Q> point{1};
    for (int n = 1; n <= 8; ++n) point.push_back(point.back() * c);
    const auto rp = moments_to_cumulants(MomentSequence<Q>(point));
    CHECK(rp[1] == c);
    for (int n = 2; n <= 8; ++n) CHECK(rp[n] == 0);

    CHECK_THROWS_AS(MomentSequence<Q>({2, 0, 1}), DomainError);
}

TEST_CASE("round trip is the identity in exact arithmetic (N <= 12)") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const int order = 1 + trial % 12;
        std::vector<Q> r;
        for (int i = 0; i < order; ++i) r.push_back(oracle::random_rational(rng));
        CHECK(moments_to_cumulants(cumulants_to_moments(seq(r))).values() == r);
    }
}

TEST_CASE("round trip in double precision") {
    std::vector<double> r{0.3, 1.0, -0.7, 2.5, 0.1, -1.2, 0.0, 0.4};
    const auto back = moments_to_cumulants(cumulants_to_moments(CumulantSequence<double>(r)));
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(back.values()[i] == doctest::Approx(r[i]).epsilon(1e-10));
}

TEST_CASE("free_convolve") {
    const auto semi = seq({0, 1, 0, 0});
    CHECK(free_convolve(semi, semi).values() == std::vector<Q>{0, 2, 0, 0});
    CHECK(free_convolve(semi, CumulantSequence<Q>::zeros(4)) == semi);
    CHECK_THROWS_AS(free_convolve(semi, CumulantSequence<Q>::zeros(3)), OrderError);
}

TEST_CASE("free convolution matches the pair expansion of (X + Y)^n") {
    // Additivity: cumulants_to_moments(R_X + R_Y) = tau(S^n) via joint moments, N <= 8.
    const auto s = cumulants(MeixnerParams<Q>{q(1), q(1, 2)}, 8);
    const FreePairSpec<Q> spec(s, q(1, 3));
    const auto m = cumulants_to_moments(free_convolve(spec.x_cumulants(), spec.y_cumulants()));
    for (int n = 1; n <= 8; ++n) {
        const Word w(n, Symbol::S);
        CHECK(joint_moment_free_pair(spec, w) == m[n]);
    }
    // General (non-proportional) pair as well.
    const FreePair<Q> pair{seq({q(1), q(2), q(-1), q(3, 2), 0, q(1, 3)}), seq({q(-1, 2), q(1), q(1), 0, q(2), q(-1)})};
    const auto ms = cumulants_to_moments(free_convolve(pair.x, pair.y));
    for (int n = 1; n <= 6; ++n) CHECK(joint_moment(pair, Word(n, Symbol::S)) == ms[n]);
}

TEST_CASE("mu_{a,b} squared under free convolution") {
    // mu_{a,b} boxplus mu_{a,b} has cumulants 2 R_n; its moments match the
    // symmetric pair alpha = 1/2 with S-cumulants 2 R_n.
    const auto r = cumulants(MeixnerParams<Q>{q(2), q(1)}, 7);
    const auto doubled = free_convolve(r, r);
    const FreePairSpec<Q> spec(doubled, q(1, 2));
    CHECK(spec.x_cumulants() == r);
    const auto m = cumulants_to_moments(doubled);
    for (int n = 1; n <= 7; ++n) CHECK(joint_moment_free_pair(spec, Word(n, Symbol::S)) == m[n]);
}

TEST_CASE("convolution_power") {
    const auto r = seq({0, 1, q(1, 2), q(3)});
    CHECK(convolution_power(r, Q(1)) == r);
    CHECK(convolution_power(r, Q(3)).values() == std::vector<Q>{0, 3, q(3, 2), 9});
    CHECK_THROWS_AS(convolution_power(r, q(1, 2)), DomainError);
    CHECK(convolution_power(r, q(1, 2), PowerMode::formal).values() == std::vector<Q>{0, q(1, 2), q(1, 4), q(3, 2)});
}

TEST_CASE("dilate") {
    const auto semi = seq({0, 1, 0, 0, 0, 0});
    CHECK(dilate(semi, Q(1)) == semi);
    CHECK(dilate(semi, Q(-1)) == semi);
    CHECK(dilate(semi, Q(0)) == CumulantSequence<Q>::zeros(6));

    // Moments scale by lambda^n.
    const auto r = cumulants(MeixnerParams<Q>{q(1, 3), q(-1, 4)}, 10);
    const auto m = cumulants_to_moments(r);
    for (Q lambda : {Q(-2), q(1, 2), Q(3)}) {
        const auto md = cumulants_to_moments(dilate(r, lambda));
        for (int n = 0; n <= 10; ++n) CHECK(md[n] == ipow(lambda, n) * m[n]);
    }
}

TEST_CASE("dilation identity D_{1/lambda}(mu_{a,b}^{boxplus lambda^2}) = mu_{a/lambda, b/lambda^2}") {
    const Q lambda(2);
    const auto lhs = dilate(convolution_power(cumulants(MeixnerParams<Q>{1, 1}, 10), lambda * lambda), Q(1) / lambda);
    CHECK(lhs == cumulants(MeixnerParams<Q>{q(1, 2), q(1, 4)}, 10));
}

TEST_CASE("translate") {
    const auto r = seq({q(1, 2), 1, 2, 3});
    CHECK(translate(r, Q(0)) == r);
    const auto point = cumulants_to_moments(translate(CumulantSequence<Q>::zeros(5), q(2, 3)));
    for (int n = 0; n <= 5; ++n) CHECK(point[n] == ipow(q(2, 3), n));

    // Binomial shift oracle.
    const Q c = q(-3, 4);
    const auto m = cumulants_to_moments(r);
    const auto shifted = cumulants_to_moments(translate(r, c));
    for (int n = 0; n <= 4; ++n) {
        Q expected(0);
        for (int k = 0; k <= n; ++k) expected += binomial_coefficient<Q>(n, k) * ipow(c, n - k) * m[k];
        CHECK(shifted[n] == expected);
    }
}

TEST_CASE("joint_moment_free_pair examples") {
    const FreePairSpec<Q> semi(seq({0, 1, 0, 0}), q(1, 3));
    CHECK(joint_moment_free_pair(semi, parse_word("XY")) == 0);
    CHECK(joint_moment_free_pair(semi, parse_word("XYXY")) == 0);
    CHECK(joint_moment_free_pair(semi, parse_word("XX")) == q(1, 3));

    const Q a = q(5, 7);
    const FreePairSpec<Q> spec(cumulants(MeixnerParams<Q>{a, q(2, 3)}, 6), q(2, 5));
    CHECK(joint_moment_free_pair(spec, parse_word("XSS")) == q(2, 5) * a);

    CHECK_THROWS_AS(joint_moment_free_pair(semi, parse_word("XSSSS")), OrderError);
    CHECK_THROWS_AS(joint_moment_free_pair(semi, Word{}), DomainError);
    CHECK_THROWS_AS(FreePairSpec<Q>(seq({0, 1}), Q(1)), DomainError);
    CHECK_THROWS_AS(parse_word("XZ"), DomainError);
}

TEST_CASE("monochromatic rule equals the multilinear expansion oracle (n <= 7)") {
    const FreePair<Q> pair{seq({q(1, 2), q(2), q(-1), q(3, 2), q(1, 5), q(1, 3), q(-2)}),
                           seq({q(-1), q(1), q(1, 4), q(-2), q(2), q(-1), q(1, 7)})};
    const std::vector<std::string> words{"X", "S", "XY", "SS", "XSY", "SYS", "XYXY", "SXSY", "SSSSS", "XSYSX",
                                         "YSSXSS", "SXSYSX", "SSXSSYS", "XYSXYSS"};
    for (const auto& text : words) {
        CAPTURE(text);
        const Word w = parse_word(text);
        CHECK(joint_moment(pair, w) == joint_moment_slow(pair, w));
    }
}

TEST_CASE("q_binomial") {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k, Q(0)) == 1);
            CHECK(q_binomial(n, k, Q(1)) == binomial_coefficient<Q>(n, k));
        }
    // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
    const Q x = q(1, 3);
    CHECK(q_binomial(4, 2, x) == 1 + x + 2 * x * x + x * x * x + x * x * x * x);
    CHECK(q_binomial(3, 5, x) == 0);
}

TEST_CASE("q_cumulants") {
    const Q a = q(3, 2), b = q(-2, 5);
    const auto r = q_cumulants(a, b, Q(0), 5);
    CHECK(r[1] == 0);
    CHECK(r[2] == 1);
    CHECK(r[5] == a * a * a + 3 * a * b);

    CHECK(q_cumulants(Q(0), Q(1), Q(1), 4)[4] == 2);

    // Nonnegative inputs keep every coefficient nonnegative; integer inputs keep integrality.
    const auto pos = q_cumulants(q(1, 2), q(1, 3), q(2, 3), 12);
    for (int n = 1; n <= 12; ++n) CHECK(pos[n] >= 0);
    const auto ints = q_cumulants(Q(2), Q(3), Q(1), 12);
    for (int n = 1; n <= 12; ++n) CHECK(boost::multiprecision::denominator(ints[n]) == 1);

    CHECK_THROWS_AS(q_cumulants(a, b, Q(-1), 5), DomainError);
    CHECK_THROWS_AS(q_cumulants(a, b, q(3, 2), 5), DomainError);
    CHECK_THROWS_AS(q_cumulants(a, b, Q(0), 1), DomainError);
}

TEST_CASE("q = 0 recurrence reproduces the free Meixner cumulants") {
    for (auto [a, b] : std::vector<std::pair<Q, Q>>{{1, 1}, {q(-2, 3), q(1, 5)}, {q(1, 2), q(-1, 3)}, {0, -1}}) {
        CHECK(q_cumulants(a, b, Q(0), 12) == cumulants(MeixnerParams<Q>{a, b}, 12));
    }
}
