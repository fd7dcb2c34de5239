// SPDX-License-Identifier: Apache-2.0
#include "planarity.hpp"

#include "error.hpp"

#include <algorithm>

namespace sublat {

std::vector<KRName> kr_candidates(std::size_t size, bool* incomplete)
{
    std::vector<KRName> out;
    bool missing = false;
    auto fits = [size](KRName name) { return member_size(name).size <= size; };
    for (KRFamily f : {KRFamily::B, KRFamily::DualB, KRFamily::C, KRFamily::DualC, KRFamily::D, KRFamily::DualD})
        if (fits({f, 0}))
            out.push_back({f, 0});
    // Sizes grow strictly with the index, so each family stops at the first
    // member that is too large.
    for (KRFamily f : {KRFamily::A, KRFamily::E, KRFamily::DualE, KRFamily::F, KRFamily::G, KRFamily::H}) {
        for (unsigned n = 0;; ++n) {
            const KRName name{f, n};
            const MemberSize s = member_size(name);
            if (s.size > size || s.size > kMaxUniverse)
                break;
            if (!s.exact) {
                missing = true;
                break;
            }
            out.push_back(name);
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](KRName a, KRName b) { return member_size(a).size < member_size(b).size; });
    if (incomplete)
        *incomplete = missing;
    return out;
}

PlanarityResult is_planar(const FiniteLattice& lattice)
{
    bool incomplete = false;
    const Poset target = Poset::of(lattice);
    for (KRName name : kr_candidates(lattice.size(), &incomplete)) {
        if (auto phi = find_embedding(Poset::of(kr_lattice(name)), target))
            return PlanarityResult{false, name, std::move(*phi)};
    }
    if (incomplete) {
        // The untranscribed members G_n, H_n (n >= 1) contain K_5 as a
        // sublattice, so one of them embeds into a 12-element lattice only
        // if both are isomorphic to K_5.
        const bool only_k5_sized = lattice.size() == 12;
        if (!only_k5_sized || isomorphic(lattice, kr_lattice({KRFamily::K5, 0})))
            throw Error(ErrorKind::CatalogIncomplete,
                        "no transcribed Kelly-Rival member embeds, but untranscribed members of size <= " +
                            std::to_string(lattice.size()) + " are not excluded");
    }
    return PlanarityResult{};
}

std::optional<std::array<std::size_t, 3>> antichain_condition(const FiniteLattice& l)
{
    const std::size_t n = l.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (l.comparable(a, b))
                continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (l.comparable(a, c) || l.comparable(b, c))
                    continue;
                const std::size_t all = l.join(l.join(a, b), c);
                if (l.join(a, b) != all && l.join(a, c) != all && l.join(b, c) != all)
                    return std::array<std::size_t, 3>{a, b, c};
            }
        }
    return std::nullopt;
}

FiniteLattice sharpness_witness(std::size_t n)
{
    if (n < 9)
        throw Error(ErrorKind::InvalidArgument, "the sharpness witness needs n >= 9");
    if (n > kMaxUniverse)
        throw Error(ErrorKind::UniverseTooLarge, "the sharpness witness needs n <= 64");
    const FiniteLattice f0 = kr_lattice({KRFamily::F, 0});
    return n == 9 ? f0 : ordinal_sum(f0, chain(n - 9));
}

}  // namespace sublat
