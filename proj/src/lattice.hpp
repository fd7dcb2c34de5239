// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "algebra.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sublat {

/// Labels used when a lattice is built without names: a-z, A-Z, 0-9, then
/// punctuation. Never contains '+' or '*'.
std::string default_labels(std::size_t n);

/// A finite poset given by its cover edges (lower, upper).
struct PosetSpec {
    Universe universe;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> covers;

    std::size_t size() const noexcept { return universe.size(); }
    /// Labels plus "xy" tokens meaning y covers x, e.g. ("oabi", "oa ob ai bi").
    static PosetSpec from_text(std::string_view labels, std::string_view covers);
};

/// Reflexive order as rows of bits: bit y of up(x) is set iff x <= y.
/// Throws CyclicCovers if the cover edges contain a cycle.
std::vector<std::uint64_t> order_from_covers(const PosetSpec& spec);

class FiniteLattice {
public:
    FiniteLattice() = default;
    /// `up[x]` has bit y set iff x <= y. Checks that this is a partial order
    /// with all joins and meets; throws InvalidArgument or NotALattice.
    FiniteLattice(Universe universe, std::vector<std::uint64_t> up);

    std::size_t size() const noexcept { return universe_.size(); }
    const Universe& universe() const noexcept { return universe_; }
    char label(std::size_t i) const { return universe_.label(i); }

    bool leq(std::size_t x, std::size_t y) const noexcept { return (up_[x] >> y) & 1u; }
    bool comparable(std::size_t x, std::size_t y) const noexcept { return leq(x, y) || leq(y, x); }
    std::uint64_t up_set(std::size_t x) const noexcept { return up_[x]; }
    std::uint64_t down_set(std::size_t x) const noexcept { return down_[x]; }
    std::size_t join(std::size_t x, std::size_t y) const noexcept { return join_[x * size() + y]; }
    std::size_t meet(std::size_t x, std::size_t y) const noexcept { return meet_[x * size() + y]; }
    std::size_t bottom() const noexcept { return bottom_; }
    std::size_t top() const noexcept { return top_; }

    /// Hasse diagram edges (lower, upper), sorted.
    std::vector<std::pair<std::uint8_t, std::uint8_t>> covers() const;
    PosetSpec to_spec() const;

    friend bool operator==(const FiniteLattice& a, const FiniteLattice& b)
    {
        return a.universe_ == b.universe_ && a.up_ == b.up_;
    }

private:
    Universe universe_;
    std::vector<std::uint64_t> up_;
    std::vector<std::uint64_t> down_;
    std::vector<std::uint8_t> join_;
    std::vector<std::uint8_t> meet_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
};

FiniteLattice lattice_from_covers(const PosetSpec& spec);
FiniteLattice lattice_from_covers(std::string_view labels, std::string_view covers);

/// Chain 0 < 1 < ... < n-1 with default labels; n >= 1.
FiniteLattice chain(std::size_t n);

/// x+y=join and x*y=meet for every incomparable pair x < y (by index).
PartialAlgebra full_algebra(const FiniteLattice& lattice);
/// Same, but with the (redundant) comparable pairs included as well.
PartialAlgebra full_algebra_with_comparable_pairs(const FiniteLattice& lattice);

/// |Sub(L)| - 1: the empty set is a subuniverse but not a sublattice.
BigUint count_sublattices(const FiniteLattice& lattice, CountOptions options = {});
DyadicValue lattice_sigma(const FiniteLattice& lattice, CountOptions options = {});

FiniteLattice dual(const FiniteLattice& lattice);

/// Every element of `lower` below every element of `upper`. Labels of
/// `upper` that clash with `lower` are replaced by unused default labels.
FiniteLattice ordinal_sum(const FiniteLattice& lower, const FiniteLattice& upper);

/// Sublattice on `subset`; throws NotALattice if `subset` is not closed.
FiniteLattice sublattice(const FiniteLattice& lattice, SubsetMask subset);

/// Text format:
///   elements: oabi
///   covers: oa ob ai bi
/// Blank lines and lines starting with '#' are ignored.
PosetSpec parse_poset_text(std::string_view text);
FiniteLattice parse_lattice_text(std::string_view text);
std::string format_poset_text(const PosetSpec& spec);
std::string format_lattice_text(const FiniteLattice& lattice);

}  // namespace sublat
