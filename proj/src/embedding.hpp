// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sublat {

/// A finite poset as reflexive up-set rows; the common input of the
/// embedding search.
struct Poset {
    std::vector<std::uint64_t> up;

    std::size_t size() const noexcept { return up.size(); }
    bool leq(std::size_t x, std::size_t y) const noexcept { return (up[x] >> y) & 1u; }

    static Poset of(const PosetSpec& spec);
    static Poset of(const FiniteLattice& lattice);
};

/// map[i] is the image of source element i.
struct Embedding {
    std::vector<std::uint8_t> map;
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// An order-embedding of `source` into `target` (x <= y iff phi(x) <= phi(y)),
/// or nothing. The search is exhaustive, so nothing means none exists.
std::optional<Embedding> find_embedding(const Poset& source, const Poset& target);
std::optional<Embedding> is_subposet(const PosetSpec& source, const FiniteLattice& target);
std::optional<Embedding> is_subposet(const FiniteLattice& source, const FiniteLattice& target);

/// True iff `phi` is injective and satisfies the order biconditional.
bool is_order_embedding(const Embedding& phi, const Poset& source, const Poset& target);

/// Order-embedding that also sends each join of two lower covers to the
/// join of the images, and each meet of two upper covers to the meet of
/// the images.
bool is_two_embedding(const Embedding& phi, const FiniteLattice& source, const FiniteLattice& target);

/// Equal size and mutually embeddable.
bool isomorphic(const FiniteLattice& a, const FiniteLattice& b);
bool isomorphic(const PosetSpec& a, const PosetSpec& b);

}  // namespace sublat
