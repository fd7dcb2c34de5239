// SPDX-License-Identifier: Apache-2.0
#include "algebra.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace sublat;

namespace {

// The F_0 constraints as listed with the appendix lattice.
const char* kF0Constraints = "a+b=i a*b=e  b+c=i b*c=e b+d=i b*d=f b+g=i b*g=o "
                             "c+d=a c*d=f   d+e=a d*e=f  d*g=o d+g=a  e+g=c e*g=o  f+g=c f*g=o";

std::uint64_t mask_of(const PartialAlgebra& alg, std::string_view labels)
{
    std::uint64_t m = 0;
    for (char c : labels)
        m |= std::uint64_t{1} << *alg.universe().index_of(c);
    return m;
}

}  // namespace

TEST_CASE("labels and universes")
{
    CHECK(is_valid_label('a', "+*"));
    CHECK(is_valid_label('0', "+*"));
    CHECK_FALSE(is_valid_label('+', "+*"));
    CHECK_FALSE(is_valid_label('=', "+*"));
    CHECK_FALSE(is_valid_label('(', "+*"));
    CHECK_FALSE(is_valid_label(';', "+*"));
    CHECK_FALSE(is_valid_label(',', "+*"));
    CHECK_FALSE(is_valid_label(' ', "+*"));
    CHECK_FALSE(is_valid_label('\\', "+*"));
    CHECK_THROWS_AS(Universe("aba"), Error);
    CHECK_THROWS_AS(Universe(std::string(65, 'a')), Error);
    Universe u("oiab");
    CHECK(u.index_of('a') == 2u);
    CHECK_FALSE(u.index_of('z').has_value());
}

TEST_CASE("is_closed")
{
    const PartialAlgebra f0 = PartialAlgebra::from_text("oiabcdefg", kF0Constraints);
    CHECK(is_closed(f0, SubsetMask{0}));
    CHECK(is_closed(f0, SubsetMask{full_mask(9)}));
    // f+g=c fires with c missing.
    CHECK_FALSE(is_closed(f0, SubsetMask{mask_of(f0, "ofg")}));
}

TEST_CASE("count and sigma on small algebras")
{
    const PartialAlgebra empty8 = PartialAlgebra::from_text("abcdefgh", "");
    CHECK(count_subuniverses(empty8) == 256);
    CHECK(sigma(empty8) == DyadicValue::from_integer(256));

    const PartialAlgebra f0 = PartialAlgebra::from_text("oiabcdefg", kF0Constraints);
    CHECK(count_subuniverses(f0) == 166);
    CHECK(sigma(f0) == DyadicValue::from_integer(83));
    CHECK(sigma(f0).mantissa() == 166);
    CHECK(sigma(f0).exponent() == -1);

    const PartialAlgebra a0 = PartialAlgebra::from_text(
        "oiabcABC", "a+b=C a+c=B a+A=i b+c=A b+B=i c+C=i a*b=o a*c=o a*A=o b*c=o b*B=o c*C=o "
                    "A*B=c A+B=i A*C=b A+C=i B*C=a B+C=i");
    CHECK(count_subuniverses(a0) == 74);
    CHECK(enumerate_subuniverses(a0).size() == 74);
}

TEST_CASE("enumerate_subuniverses")
{
    const PartialAlgebra one = PartialAlgebra::from_text("a", "");
    CHECK(enumerate_subuniverses(one) == std::vector<SubsetMask>{SubsetMask{0}, SubsetMask{1}});
    const PartialAlgebra two = PartialAlgebra::from_text("ab", "a+a=b");
    CHECK(enumerate_subuniverses(two) == std::vector<SubsetMask>{SubsetMask{0}, SubsetMask{2}, SubsetMask{3}});
    CHECK(format_subset(two.universe(), SubsetMask{3}) == "{ab}");
}

TEST_CASE("counting agrees with brute force on random algebras")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 1 + rng() % 12;
        const PartialAlgebra alg = oracle::random_algebra(rng, n, 3 * n);
        const std::uint64_t expected = oracle::brute_count(alg);
        CHECK(count_subuniverses(alg) == expected);
        const auto listed = enumerate_subuniverses(alg);
        CHECK(listed.size() == expected);
        CHECK(std::is_sorted(listed.begin(), listed.end()));
        for (SubsetMask s : listed)
            CHECK(is_closed(alg, s));
    }
}

TEST_CASE("constraint order and duplicates do not matter")
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        const PartialAlgebra alg = oracle::random_algebra(rng, 10, 25);
        std::vector<Constraint> cs = alg.constraints();
        std::shuffle(cs.begin(), cs.end(), rng);
        if (!cs.empty())
            cs.push_back(cs[rng() % cs.size()]);
        const PartialAlgebra shuffled(alg.universe(), cs);
        CHECK(count_subuniverses(shuffled) == count_subuniverses(alg));
    }
}

TEST_CASE("partitioned counting equals the sequential count")
{
    std::mt19937_64 rng(13);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 4 + rng() % 14;
        const PartialAlgebra alg = oracle::random_algebra(rng, n, 2 * n);
        const ClosureChecker checker(alg);
        const std::uint64_t total = std::uint64_t{1} << n;
        const std::uint64_t expected = checker.count_in_range(0, total);
        std::vector<std::uint64_t> cuts{0, total};
        for (int k = 0; k < 5; ++k)
            cuts.push_back(rng() % total);
        std::sort(cuts.begin(), cuts.end());
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            sum += checker.count_in_range(cuts[i], cuts[i + 1]);
        CHECK(sum == expected);
        for (unsigned threads : {1u, 2u, 3u, 8u})
            CHECK(count_subuniverses(alg, CountOptions{threads}) == expected);
    }
}

TEST_CASE("threaded counting on a larger universe")
{
    std::mt19937_64 rng(17);
    const PartialAlgebra alg = oracle::random_algebra(rng, 22, 30);
    const BigUint one = count_subuniverses(alg, CountOptions{1});
    CHECK(one == oracle::brute_count(alg));
    CHECK(count_subuniverses(alg, CountOptions{4}) == one);
    CHECK(count_subuniverses(alg, CountOptions{0}) == one);
}

TEST_CASE("unconstrained elements contribute factors of two")
{
    // 40 elements, only three of them constrained.
    const std::string labels = default_labels(40);
    const PartialAlgebra alg = PartialAlgebra::from_text(labels, "a+b=c");
    CHECK(count_subuniverses(alg) == BigUint(7) << 37);
    CHECK(sigma(alg) == DyadicValue(7, 8 - 3));
}

TEST_CASE("universe too large for counting")
{
    // 41 distinct constrained elements.
    const std::string labels = default_labels(42);
    std::string cs;
    for (std::size_t i = 0; i + 1 < labels.size(); ++i)
        cs += std::string(1, labels[i]) + "+" + labels[i] + "=" + labels[i + 1] + " ";
    const PartialAlgebra alg = PartialAlgebra::from_text(labels, cs);
    CHECK_THROWS_AS(count_subuniverses(alg), Error);
    try {
        count_subuniverses(alg);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UniverseTooLarge);
    }
    CHECK_THROWS_AS(enumerate_subuniverses(PartialAlgebra::from_text(default_labels(25), "")), Error);
}

TEST_CASE("induced weak subalgebra")
{
    const PartialAlgebra f0 = PartialAlgebra::from_text("oiabcdefg", kF0Constraints);
    const PartialAlgebra same = induced_weak_subalgebra(f0, SubsetMask{full_mask(9)});
    CHECK(same.constraints().size() == f0.constraints().size());
    CHECK(count_subuniverses(same) == 166);

    const PartialAlgebra single = induced_weak_subalgebra(f0, SubsetMask{mask_of(f0, "o")});
    CHECK(single.size() == 1);
    CHECK(single.constraints().empty());

    const PartialAlgebra ofg = induced_weak_subalgebra(f0, SubsetMask{mask_of(f0, "ofg")});
    CHECK(ofg.universe().labels() == "ofg");
    REQUIRE(ofg.constraints().size() == 1);
    CHECK(ofg.constraint_text(ofg.constraints()[0]) == "f*g=o");

    CHECK_THROWS_AS(induced_weak_subalgebra(f0, SubsetMask{0}), Error);
}

TEST_CASE("monotonicity under weak subalgebras")
{
    std::mt19937_64 rng(19);
    for (int round = 0; round < 250; ++round) {
        const std::size_t n = 2 + rng() % 11;
        const PartialAlgebra a = oracle::random_algebra(rng, n, 3 * n);
        std::uint64_t subset = rng() & full_mask(n);
        if (subset == 0)
            subset = 1;
        const PartialAlgebra induced = induced_weak_subalgebra(a, SubsetMask{subset});
        // Any subset of the induced facts is also a weak subalgebra.
        std::vector<Constraint> kept;
        for (const Constraint& c : induced.constraints())
            if (rng() % 3 != 0)
                kept.push_back(c);
        const PartialAlgebra b(induced.universe(), kept);
        CHECK(sigma(a) <= sigma(induced));
        CHECK(sigma(induced) <= sigma(b));
    }
}

TEST_CASE("malformed algebra text")
{
    CHECK_THROWS_AS(PartialAlgebra::from_text("ab", "a+b=c"), Error);
    CHECK_THROWS_AS(PartialAlgebra::from_text("ab", "a+b"), Error);
    CHECK_THROWS_AS(PartialAlgebra::from_text("ab", "a-b=a"), Error);
}
