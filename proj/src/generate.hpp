// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lattice.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sublat {

inline constexpr std::size_t kMaxContextSide = 12;
inline constexpr std::size_t kMaxEnumeratedLattice = 8;

struct FormalContext {
    std::size_t objects = 0;
    std::size_t attributes = 0;
    /// incidence[g] has bit m set iff object g has attribute m.
    std::vector<std::uint32_t> incidence;
};

/// Concepts ordered by extent inclusion. Throws InvalidArgument on a bad
/// shape and TooLarge when there are more than `max_concepts` concepts.
FiniteLattice concept_lattice(const FormalContext& ctx, std::size_t max_concepts = kMaxUniverse);

/// A concept lattice of size close to `n_hint` (1 <= n_hint <= 16).
/// The same seed gives the same lattice on every platform.
FiniteLattice random_lattice(std::size_t n_hint, std::uint64_t seed);

struct EnumerationBudget {
    std::size_t max_n = 0;
    std::optional<std::size_t> max_count;
};

/// One lattice per isomorphism class with 1..max_n elements, by size.
std::vector<FiniteLattice> enumerate_lattices(const EnumerationBudget& budget);

/// Rows of the order matrix after relabelling to the lexicographically
/// least form among permutations that keep the height of each element.
/// Equal for isomorphic lattices and only for them.
std::vector<std::uint64_t> canonical_form(const FiniteLattice& lattice);

/// The lattice with the order given by canonical_form and default labels.
FiniteLattice canonical_lattice(const FiniteLattice& lattice);

}  // namespace sublat
