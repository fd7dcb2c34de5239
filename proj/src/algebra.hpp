// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dyadic.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sublat {

inline constexpr std::size_t kMaxUniverse = 64;
/// Largest number of constrained elements the counter will sweep.
inline constexpr std::size_t kMaxCountedBits = 40;
inline constexpr std::size_t kMaxEnumerated = 24;
inline constexpr std::string_view kDefaultOpSymbols = "+*";

/// Characters that can never name an element: they structure the input format.
bool is_reserved_char(char c) noexcept;
/// Printable, non-reserved and not one of `op_symbols`.
bool is_valid_label(char c, std::string_view op_symbols) noexcept;

/// Ordered, duplicate-free element names; index i <-> labels()[i].
class Universe {
public:
    Universe() { index_.fill(-1); }
    /// Throws InvalidArgument on duplicates, bad characters or size > 64.
    explicit Universe(std::string_view labels, std::string_view op_symbols = kDefaultOpSymbols);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& labels() const noexcept { return labels_; }
    char label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> index_of(char c) const noexcept;

    friend bool operator==(const Universe& a, const Universe& b) { return a.labels_ == b.labels_; }

private:
    std::string labels_;
    std::array<std::int8_t, 256> index_{};
};

struct Constraint {
    std::uint8_t x = 0;
    char op = '+';
    std::uint8_t y = 0;
    std::uint8_t z = 0;

    friend bool operator==(const Constraint&, const Constraint&) = default;
    friend auto operator<=>(const Constraint&, const Constraint&) = default;
};

/// Subset of a universe; only the low n bits may be set.
struct SubsetMask {
    std::uint64_t bits = 0;

    bool contains(std::size_t i) const noexcept { return (bits >> i) & 1u; }
    friend bool operator==(SubsetMask, SubsetMask) = default;
    friend auto operator<=>(SubsetMask, SubsetMask) = default;
};

inline std::uint64_t full_mask(std::size_t n) noexcept
{
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// A finite binary partial algebra given by facts x op y = z. Duplicate and
/// multi-valued facts are allowed; each is checked on its own.
class PartialAlgebra {
public:
    PartialAlgebra() = default;
    PartialAlgebra(Universe universe, std::vector<Constraint> constraints,
                   std::string op_symbols = std::string(kDefaultOpSymbols));

    /// Convenience: labels plus whitespace/comma separated "x+y=z" tokens.
    static PartialAlgebra from_text(std::string_view labels, std::string_view constraints,
                                    std::string_view op_symbols = kDefaultOpSymbols);

    const Universe& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return universe_.size(); }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
    const std::string& op_symbols() const noexcept { return op_symbols_; }

    std::string constraint_text(const Constraint& c) const;

private:
    Universe universe_;
    std::vector<Constraint> constraints_;
    std::string op_symbols_ = std::string(kDefaultOpSymbols);
};

/// Constraints precompiled to (operand mask, result bit) pairs. A subset s
/// violates a pair iff (s & operands) == operands and (s & result) == 0.
class ClosureChecker {
public:
    struct Rule {
        std::uint64_t operands;
        std::uint64_t result;
        friend bool operator==(const Rule&, const Rule&) = default;
        friend auto operator<=>(const Rule&, const Rule&) = default;
    };

    explicit ClosureChecker(const PartialAlgebra& alg);

    bool is_closed(std::uint64_t s) const noexcept
    {
        for (const Rule& r : rules_)
            if ((s & r.operands) == r.operands && (s & r.result) == 0)
                return false;
        return true;
    }
    std::span<const Rule> rules() const noexcept { return rules_; }
    std::size_t universe_size() const noexcept { return n_; }

    /// Closed subsets with mask in [first, last), by flat sweep.
    std::uint64_t count_in_range(std::uint64_t first, std::uint64_t last) const noexcept;

private:
    std::size_t n_ = 0;
    std::vector<Rule> rules_;
};

struct CountOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 1;
};

bool is_closed(const PartialAlgebra& alg, SubsetMask s);

/// |Sub(alg)| including the empty set. Elements untouched by any
/// non-trivial constraint contribute a factor of two each; the remaining
/// ones are swept in disjoint ranges, one per thread.
BigUint count_subuniverses(const PartialAlgebra& alg, CountOptions options = {});

/// |Sub(alg)| * 2^(subtrahend - n), unrounded.
DyadicValue sigma(const PartialAlgebra& alg, std::int64_t subtrahend = 8, CountOptions options = {});
DyadicValue sigma_from_count(const BigUint& count, std::size_t n, std::int64_t subtrahend = 8);

/// Closed subsets in ascending mask order; n <= 24.
std::vector<SubsetMask> enumerate_subuniverses(const PartialAlgebra& alg);

/// The maximal weak partial subalgebra on `subset`: facts with x, y and z
/// all inside, relabelled in universe order.
PartialAlgebra induced_weak_subalgebra(const PartialAlgebra& alg, SubsetMask subset);

std::string format_subset(const Universe& universe, SubsetMask s);

}  // namespace sublat
