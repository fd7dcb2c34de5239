// SPDX-License-Identifier: Apache-2.0
#include "algebra.hpp"

#include "error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <future>
#include <thread>

namespace sublat {

bool is_reserved_char(char c) noexcept
{
    switch (c) {
    case '=': case '(': case ')': case ';': case ',': case '\\': case ' ': case '%':
        return true;
    default:
        return false;
    }
}

bool is_valid_label(char c, std::string_view op_symbols) noexcept
{
    const auto u = static_cast<unsigned char>(c);
    return u > 0x20 && u < 0x7f && !is_reserved_char(c) && op_symbols.find(c) == std::string_view::npos;
}

Universe::Universe(std::string_view labels, std::string_view op_symbols) : labels_(labels)
{
    index_.fill(-1);
    if (labels_.size() > kMaxUniverse)
        throw Error(ErrorKind::UniverseTooLarge,
                    "universe has " + std::to_string(labels_.size()) + " elements; at most 64 are supported");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const char c = labels_[i];
        if (!is_valid_label(c, op_symbols))
            throw Error(ErrorKind::InvalidArgument, std::string("invalid element label '") + c + "'");
        auto& slot = index_[static_cast<unsigned char>(c)];
        if (slot >= 0)
            throw Error(ErrorKind::InvalidArgument, std::string("duplicate element label '") + c + "'");
        slot = static_cast<std::int8_t>(i);
    }
}

std::optional<std::size_t> Universe::index_of(char c) const noexcept
{
    const auto i = index_[static_cast<unsigned char>(c)];
    if (i < 0)
        return std::nullopt;
    return static_cast<std::size_t>(i);
}

PartialAlgebra::PartialAlgebra(Universe universe, std::vector<Constraint> constraints, std::string op_symbols)
    : universe_(std::move(universe)), constraints_(std::move(constraints)), op_symbols_(std::move(op_symbols))
{
    const std::size_t n = universe_.size();
    for (const Constraint& c : constraints_) {
        if (c.x >= n || c.y >= n || c.z >= n)
            throw Error(ErrorKind::InvalidArgument, "constraint refers to an element outside the universe");
        if (op_symbols_.find(c.op) == std::string::npos)
            throw Error(ErrorKind::InvalidArgument, std::string("undeclared operation symbol '") + c.op + "'");
    }
}

PartialAlgebra PartialAlgebra::from_text(std::string_view labels, std::string_view constraints,
                                         std::string_view op_symbols)
{
    Universe universe(labels, op_symbols);
    std::vector<Constraint> parsed;
    std::size_t i = 0;
    while (i < constraints.size()) {
        if (std::isspace(static_cast<unsigned char>(constraints[i])) || constraints[i] == ',') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < constraints.size() && !std::isspace(static_cast<unsigned char>(constraints[j])) &&
               constraints[j] != ',')
            ++j;
        const std::string_view tok = constraints.substr(i, j - i);
        if (tok.size() != 5 || tok[3] != '=' || op_symbols.find(tok[1]) == std::string_view::npos)
            throw Error(ErrorKind::MalformedConstraint, "malformed constraint '" + std::string(tok) + "'");
        const auto x = universe.index_of(tok[0]);
        const auto y = universe.index_of(tok[2]);
        const auto z = universe.index_of(tok[4]);
        if (!x || !y || !z)
            throw Error(ErrorKind::UnknownLabel, "constraint '" + std::string(tok) + "' uses an undeclared element");
        parsed.push_back({static_cast<std::uint8_t>(*x), tok[1], static_cast<std::uint8_t>(*y),
                          static_cast<std::uint8_t>(*z)});
        i = j;
    }
    return PartialAlgebra(std::move(universe), std::move(parsed), std::string(op_symbols));
}

std::string PartialAlgebra::constraint_text(const Constraint& c) const
{
    return {universe_.label(c.x), c.op, universe_.label(c.y), '=', universe_.label(c.z)};
}

ClosureChecker::ClosureChecker(const PartialAlgebra& alg) : n_(alg.size())
{
    for (const Constraint& c : alg.constraints()) {
        const std::uint64_t operands = (std::uint64_t{1} << c.x) | (std::uint64_t{1} << c.y);
        const std::uint64_t result = std::uint64_t{1} << c.z;
        if (operands & result)
            continue;  // z in {x, y}: holds in every subset
        rules_.push_back({operands, result});
    }
    std::sort(rules_.begin(), rules_.end());
    rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
}

std::uint64_t ClosureChecker::count_in_range(std::uint64_t first, std::uint64_t last) const noexcept
{
    std::uint64_t total = 0;
    for (std::uint64_t s = first; s < last; ++s)
        total += is_closed(s) ? 1 : 0;
    return total;
}

bool is_closed(const PartialAlgebra& alg, SubsetMask s)
{
    for (const Constraint& c : alg.constraints())
        if (s.contains(c.x) && s.contains(c.y) && !s.contains(c.z))
            return false;
    return true;
}

namespace {

/// Re-indexes the constrained elements onto the low bits so the sweep
/// only covers 2^m subsets.
struct CompressedRules {
    std::size_t bits = 0;
    std::size_t free = 0;
    std::vector<ClosureChecker::Rule> rules;

    bool is_closed(std::uint64_t s) const noexcept
    {
        for (const auto& r : rules)
            if ((s & r.operands) == r.operands && (s & r.result) == 0)
                return false;
        return true;
    }
    std::uint64_t count_in_range(std::uint64_t first, std::uint64_t last) const noexcept
    {
        std::uint64_t total = 0;
        for (std::uint64_t s = first; s < last; ++s)
            total += is_closed(s) ? 1 : 0;
        return total;
    }
};

CompressedRules compress(const ClosureChecker& checker)
{
    std::uint64_t involved = 0;
    for (const auto& r : checker.rules())
        involved |= r.operands | r.result;

    std::array<int, 64> remap{};
    remap.fill(-1);
    std::size_t m = 0;
    for (std::size_t i = 0; i < checker.universe_size(); ++i)
        if ((involved >> i) & 1u)
            remap[i] = static_cast<int>(m++);

    auto map_bits = [&](std::uint64_t bits) {
        std::uint64_t out = 0;
        while (bits) {
            const int i = std::countr_zero(bits);
            out |= std::uint64_t{1} << remap[static_cast<std::size_t>(i)];
            bits &= bits - 1;
        }
        return out;
    };

    CompressedRules out;
    out.bits = m;
    out.free = checker.universe_size() - m;
    for (const auto& r : checker.rules())
        out.rules.push_back({map_bits(r.operands), map_bits(r.result)});
    return out;
}

}  // namespace

BigUint count_subuniverses(const PartialAlgebra& alg, CountOptions options)
{
    const ClosureChecker checker(alg);
    const CompressedRules compressed = compress(checker);
    if (compressed.bits > kMaxCountedBits)
        throw Error(ErrorKind::UniverseTooLarge,
                    std::to_string(compressed.bits) + " constrained elements exceed the supported bound of " +
                        std::to_string(kMaxCountedBits));

    const std::uint64_t total_masks = std::uint64_t{1} << compressed.bits;
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    if (total_masks < (std::uint64_t{1} << 16))
        threads = 1;

    std::uint64_t closed = 0;
    if (threads == 1) {
        closed = compressed.count_in_range(0, total_masks);
    } else {
        std::vector<std::future<std::uint64_t>> parts;
        const std::uint64_t chunk = total_masks / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t first = chunk * t;
            const std::uint64_t last = t + 1 == threads ? total_masks : first + chunk;
            parts.push_back(std::async(std::launch::async,
                                       [&compressed, first, last] { return compressed.count_in_range(first, last); }));
        }
        for (auto& p : parts)
            closed += p.get();
    }
    return BigUint(closed) << static_cast<unsigned>(compressed.free);
}

DyadicValue sigma_from_count(const BigUint& count, std::size_t n, std::int64_t subtrahend)
{
    return DyadicValue(count, subtrahend - static_cast<std::int64_t>(n));
}

DyadicValue sigma(const PartialAlgebra& alg, std::int64_t subtrahend, CountOptions options)
{
    return sigma_from_count(count_subuniverses(alg, options), alg.size(), subtrahend);
}

std::vector<SubsetMask> enumerate_subuniverses(const PartialAlgebra& alg)
{
    if (alg.size() > kMaxEnumerated)
        throw Error(ErrorKind::UniverseTooLarge,
                    "listing subuniverses needs |A| <= 24, got " + std::to_string(alg.size()));
    const ClosureChecker checker(alg);
    std::vector<SubsetMask> out;
    const std::uint64_t end = std::uint64_t{1} << alg.size();
    for (std::uint64_t s = 0; s < end; ++s)
        if (checker.is_closed(s))
            out.push_back(SubsetMask{s});
    return out;
}

PartialAlgebra induced_weak_subalgebra(const PartialAlgebra& alg, SubsetMask subset)
{
    const std::size_t n = alg.size();
    subset.bits &= full_mask(n);
    if (subset.bits == 0)
        throw Error(ErrorKind::EmptySubset, "induced weak subalgebra needs a nonempty subset");

    std::array<int, 64> remap{};
    remap.fill(-1);
    std::string labels;
    for (std::size_t i = 0; i < n; ++i) {
        if (subset.contains(i)) {
            remap[i] = static_cast<int>(labels.size());
            labels.push_back(alg.universe().label(i));
        }
    }
    std::vector<Constraint> kept;
    for (const Constraint& c : alg.constraints()) {
        if (subset.contains(c.x) && subset.contains(c.y) && subset.contains(c.z))
            kept.push_back({static_cast<std::uint8_t>(remap[c.x]), c.op, static_cast<std::uint8_t>(remap[c.y]),
                            static_cast<std::uint8_t>(remap[c.z])});
    }
    return PartialAlgebra(Universe(labels, alg.op_symbols()), std::move(kept), alg.op_symbols());
}

std::string format_subset(const Universe& universe, SubsetMask s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < universe.size(); ++i)
        if (s.contains(i))
            out.push_back(universe.label(i));
    out.push_back('}');
    return out;
}

}  // namespace sublat
