// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "catalog.hpp"
#include "embedding.hpp"

#include <array>
#include <optional>
#include <vector>

namespace sublat {

struct PlanarityResult {
    bool planar = true;
    /// Set when not planar: the catalog member found and its embedding.
    std::optional<KRName> obstruction;
    Embedding certificate;
};

/// Kelly-Rival members that can embed into a lattice of `size` elements,
/// smallest first. Sets `incomplete` if an untranscribed member might fit.
std::vector<KRName> kr_candidates(std::size_t size, bool* incomplete = nullptr);

/// Non-planar iff some member of the Kelly-Rival list is a subposet. An
/// embedding found is always reported; if none is found while an
/// untranscribed member could still fit, throws CatalogIncomplete.
PlanarityResult is_planar(const FiniteLattice& lattice);

/// A three-element antichain {a0, a1, a2} whose join differs from the join
/// of every two of them, or nothing if no such antichain exists.
std::optional<std::array<std::size_t, 3>> antichain_condition(const FiniteLattice& lattice);

/// F_0 with an (n - 9)-element chain on top; n >= 9.
FiniteLattice sharpness_witness(std::size_t n);

}  // namespace sublat
