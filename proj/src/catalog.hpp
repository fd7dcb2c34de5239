// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lattice.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sublat {

enum class KRFamily {
    A, B, C, D, E, F, G, H,
    DualB, DualC, DualD, DualE,
    K5, Fence8, Crown8, EncapsulatedLadder, H0plus,
};

struct KRName {
    KRFamily family = KRFamily::A;
    unsigned index = 0;

    bool indexed() const noexcept;
    /// "A_0", "dual E_1", "B", "K_5", "fence_8", ...
    std::string to_string() const;
    /// Inverse of to_string; also accepts "A0", "dualE1", "Fence8".
    static KRName parse(std::string_view text);

    friend bool operator==(const KRName&, const KRName&) = default;
};

using KRMember = std::variant<FiniteLattice, PosetSpec>;

/// Stored or generated member. Throws NotTranscribed for G_n and H_n with
/// n >= 1 and for H_0^+.
KRMember kr_member(KRName name);
FiniteLattice kr_lattice(KRName name);

bool is_transcribed(KRName name) noexcept;

struct MemberSize {
    std::size_t size = 0;
    /// False when `size` is only a lower bound (untranscribed member).
    bool exact = true;
};
MemberSize member_size(KRName name);

/// The cover-edge families used by kr_member for every n.
FiniteLattice kr_a(unsigned n);
FiniteLattice kr_e(unsigned n);
FiniteLattice kr_f(unsigned n);

}  // namespace sublat
