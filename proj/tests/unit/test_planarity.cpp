// SPDX-License-Identifier: Apache-2.0
#include "error.hpp"
#include "generate.hpp"
#include "oracles.hpp"
#include "planarity.hpp"

#include <doctest.h>

using namespace sublat;

TEST_CASE("small lattices are planar")
{
    for (const FiniteLattice& l : enumerate_lattices({7, {}}))
        CHECK(is_planar(l).planar);
}

TEST_CASE("planarity agrees with the dimension test on all lattices up to 8 elements")
{
    int nonplanar = 0;
    for (const FiniteLattice& l : enumerate_lattices({8, {}})) {
        const PlanarityResult r = is_planar(l);
        CHECK(r.planar == oracle::planar_by_dimension(l));
        if (!r.planar) {
            ++nonplanar;
            REQUIRE(r.obstruction.has_value());
            CHECK(is_order_embedding(r.certificate, Poset::of(kr_lattice(*r.obstruction)), Poset::of(l)));
        }
    }
    CHECK(nonplanar == 1);
}

TEST_CASE("planarity agrees with the dimension test on sampled lattices")
{
    int decided = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const FiniteLattice l = random_lattice(9 + seed % 4, seed);
        if (l.size() > 12)
            continue;
        try {
            CHECK(is_planar(l).planar == oracle::planar_by_dimension(l));
            ++decided;
        } catch (const Error& e) {
            // Only K_5 itself is undecidable at 12 elements.
            CHECK(e.kind() == ErrorKind::CatalogIncomplete);
            CHECK(isomorphic(l, kr_lattice({KRFamily::K5, 0})));
        }
    }
    CHECK(decided > 300);
}

TEST_CASE("catalog members are not planar")
{
    for (KRName name : {KRName{KRFamily::A, 0}, KRName{KRFamily::A, 1}, KRName{KRFamily::B, 0},
                        KRName{KRFamily::DualC, 0}, KRName{KRFamily::E, 1}, KRName{KRFamily::F, 0},
                        KRName{KRFamily::G, 0}, KRName{KRFamily::H, 0}}) {
        CAPTURE(name.to_string());
        const FiniteLattice l = kr_lattice(name);
        const PlanarityResult r = is_planar(l);
        CHECK_FALSE(r.planar);
        REQUIRE(r.obstruction.has_value());
        CHECK(*r.obstruction == name);
        CHECK_FALSE(oracle::planar_by_dimension(l));
    }
}

TEST_CASE("missing members make large decisions incomplete")
{
    try {
        is_planar(chain(13));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CatalogIncomplete);
    }
    // An embedded member still decides the question.
    CHECK_FALSE(is_planar(sharpness_witness(20)).planar);
    CHECK(is_planar(chain(12)).planar);
    CHECK_THROWS_AS(is_planar(kr_lattice({KRFamily::K5, 0})), Error);
    // K_5 has order dimension 2.
    CHECK(oracle::planar_by_dimension(kr_lattice({KRFamily::K5, 0})));
}

TEST_CASE("sharpness witness")
{
    CHECK_THROWS_AS(sharpness_witness(8), Error);
    for (std::size_t n = 9; n <= 16; ++n) {
        const FiniteLattice l = sharpness_witness(n);
        CHECK(l.size() == n);
        CHECK(count_sublattices(l) == BigUint(83) * (BigUint(1) << (n - 8)) - 1);
        const PlanarityResult r = is_planar(l);
        CHECK_FALSE(r.planar);
        CHECK(r.obstruction == KRName{KRFamily::F, 0});
    }
    CHECK(count_sublattices(sharpness_witness(9)) == 165);
    CHECK(count_sublattices(sharpness_witness(12)) == 1327);
}

TEST_CASE("antichain condition")
{
    CHECK_FALSE(antichain_condition(chain(6)).has_value());
    // In the cube, atoms join pairwise to coatoms, not to the top.
    const auto w = antichain_condition(kr_lattice({KRFamily::A, 0}));
    REQUIRE(w.has_value());
    const FiniteLattice m3 = lattice_from_covers("oabci", "oa ob oc ai bi ci");
    CHECK_FALSE(antichain_condition(m3).has_value());
}
