// SPDX-License-Identifier: Apache-2.0
#include "catalog.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "generate.hpp"
#include "lattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace sublat;

namespace {

void check_axioms(const FiniteLattice& l)
{
    const std::size_t n = l.size();
    for (std::size_t x = 0; x < n; ++x) {
        CHECK(l.leq(l.bottom(), x));
        CHECK(l.leq(x, l.top()));
        for (std::size_t y = 0; y < n; ++y) {
            CHECK(l.join(x, y) == l.join(y, x));
            CHECK(l.meet(x, y) == l.meet(y, x));
            CHECK(l.join(x, l.meet(x, y)) == x);
            CHECK(l.meet(x, l.join(x, y)) == x);
            CHECK(l.leq(x, y) == (l.join(x, y) == y));
            for (std::size_t z = 0; z < n; ++z) {
                CHECK(l.join(l.join(x, y), z) == l.join(x, l.join(y, z)));
                CHECK(l.meet(l.meet(x, y), z) == l.meet(x, l.meet(y, z)));
            }
        }
    }
}

}  // namespace

TEST_CASE("chains")
{
    const FiniteLattice c3 = lattice_from_covers("oab", "oa ab");
    CHECK(c3.size() == 3);
    CHECK(c3.join(0, 2) == 2);
    CHECK(c3.meet(1, 2) == 1);
    CHECK(full_algebra(c3).constraints().empty());
    CHECK(count_subuniverses(full_algebra(c3)) == 8);
    for (std::size_t n = 1; n <= 12; ++n)
        CHECK(count_sublattices(chain(n)) == (BigUint(1) << n) - 1);
    CHECK(isomorphic(dual(c3), c3));
}

TEST_CASE("lattice construction errors")
{
    // Two maximal elements.
    try {
        lattice_from_covers("oabc", "oa ob ac");
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotALattice);
    }
    // Bowtie: two minimal and two maximal elements, no join of the bottoms.
    try {
        lattice_from_covers("abcd", "ac ad bc bd");
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotALattice);
        CHECK(std::string(e.what()).find("'a' and 'b'") != std::string::npos);
    }
    try {
        lattice_from_covers("abc", "ab bc ca");
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CyclicCovers);
    }
    CHECK_THROWS_AS(lattice_from_covers("ab", "az"), Error);
}

TEST_CASE("B from its edges")
{
    const FiniteLattice b = kr_lattice({KRFamily::B, 0});
    CHECK(b.size() == 9);
    CHECK(count_subuniverses(full_algebra(b)) == 108);
    check_axioms(b);
}

TEST_CASE("full algebra sizes")
{
    CHECK(count_subuniverses(full_algebra(kr_lattice({KRFamily::F, 0}))) == 166);
    CHECK(count_subuniverses(full_algebra(kr_lattice({KRFamily::A, 0}))) == 74);
    CHECK(count_sublattices(kr_lattice({KRFamily::A, 0})) == 73);
}

TEST_CASE("comparable pairs add nothing")
{
    for (const FiniteLattice& l : enumerate_lattices({8, {}})) {
        if (l.size() > 10)
            continue;
        CHECK(count_subuniverses(full_algebra(l)) == count_subuniverses(full_algebra_with_comparable_pairs(l)));
    }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const FiniteLattice l = random_lattice(10, seed);
        CHECK(count_subuniverses(full_algebra(l)) == count_subuniverses(full_algebra_with_comparable_pairs(l)));
    }
}

TEST_CASE("dual")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const FiniteLattice l = random_lattice(9, seed);
        const FiniteLattice d = dual(l);
        CHECK(dual(d) == l);
        CHECK(count_sublattices(d) == count_sublattices(l));
        for (std::size_t x = 0; x < l.size(); ++x)
            for (std::size_t y = 0; y < l.size(); ++y) {
                CHECK(d.leq(x, y) == l.leq(y, x));
                CHECK(d.join(x, y) == l.meet(x, y));
            }
    }
}

TEST_CASE("ordinal sums")
{
    const FiniteLattice two = ordinal_sum(chain(1), chain(1));
    CHECK(two.size() == 2);
    CHECK(isomorphic(two, chain(2)));
    const FiniteLattice f0 = kr_lattice({KRFamily::F, 0});
    for (std::size_t k = 1; k <= 5; ++k) {
        const FiniteLattice l = ordinal_sum(f0, chain(k));
        CHECK(count_subuniverses(full_algebra(l)) == BigUint(166) << k);
        check_axioms(l);
    }
    CHECK(count_sublattices(ordinal_sum(f0, chain(1))) == 331);
    // Clashing labels are renamed.
    const FiniteLattice both = ordinal_sum(f0, f0);
    CHECK(both.size() == 18);
    CHECK(both.universe().labels().substr(0, 9) == "oiabcdefg");
    CHECK(both.leq(*both.universe().index_of('i'), 9));
}

TEST_CASE("lattice text format")
{
    const std::string text = "# F_0\nelements: oiabcdefg\ncovers: ai bi ca da eb ec fe fd gc of og\n";
    const FiniteLattice l = parse_lattice_text(text);
    CHECK(lattice_sigma(l) == DyadicValue::from_integer(83));
    const FiniteLattice back = parse_lattice_text(format_lattice_text(l));
    CHECK(back == l);
    CHECK_THROWS_AS(parse_lattice_text("covers: ab\n"), Error);
    CHECK_THROWS_AS(parse_lattice_text("elements: ab\nstuff\n"), Error);
}

TEST_CASE("axioms on generated lattices")
{
    for (const FiniteLattice& l : enumerate_lattices({7, {}}))
        check_axioms(l);
    for (std::uint64_t seed = 100; seed < 130; ++seed)
        check_axioms(random_lattice(12, seed));
}

TEST_CASE("sublattice")
{
    const FiniteLattice f1 = kr_lattice({KRFamily::F, 1});
    const std::uint64_t without_h = full_mask(11) & ~(std::uint64_t{1} << *f1.universe().index_of('h'));
    CHECK(sublattice(f1, SubsetMask{without_h}).size() == 10);
    // {b, c} without their join is not closed.
    std::uint64_t bc = (std::uint64_t{1} << *f1.universe().index_of('b')) |
                       (std::uint64_t{1} << *f1.universe().index_of('c'));
    CHECK_THROWS_AS(sublattice(f1, SubsetMask{bc}), Error);
}
