// SPDX-License-Identifier: Apache-2.0
#include "lattice.hpp"

#include "error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace sublat {

namespace {

constexpr std::string_view kLabelPool =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789!#$&'-./:<>?@[]^_`{|}~\"";

std::string pair_text(const Universe& u, std::size_t x, std::size_t y)
{
    return std::string("'") + u.label(x) + "' and '" + u.label(y) + "'";
}

/// Least element of `mask` w.r.t. rows `up`, if it is below all of `mask`.
int least_in(std::uint64_t mask, const std::vector<std::uint64_t>& up)
{
    for (std::uint64_t m = mask; m; m &= m - 1) {
        const int z = std::countr_zero(m);
        if ((up[z] & mask) == mask)
            return z;
    }
    return -1;
}

}  // namespace

std::string default_labels(std::size_t n)
{
    if (n > kLabelPool.size())
        throw Error(ErrorKind::UniverseTooLarge, "no default labels for " + std::to_string(n) + " elements");
    return std::string(kLabelPool.substr(0, n));
}

PosetSpec PosetSpec::from_text(std::string_view labels, std::string_view covers)
{
    std::string compact;
    for (char c : labels)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != ',')
            compact.push_back(c);
    PosetSpec spec{Universe(compact), {}};
    std::istringstream in{std::string(covers)};
    std::string tok;
    while (in >> tok) {
        if (tok.size() != 2)
            throw Error(ErrorKind::Syntax, "cover token '" + tok + "' must be two labels");
        const auto lo = spec.universe.index_of(tok[0]);
        const auto hi = spec.universe.index_of(tok[1]);
        if (!lo || !hi)
            throw Error(ErrorKind::UnknownLabel, "cover token '" + tok + "' uses an undeclared element");
        if (*lo == *hi)
            throw Error(ErrorKind::CyclicCovers, "cover token '" + tok + "' is a loop");
        spec.covers.emplace_back(static_cast<std::uint8_t>(*lo), static_cast<std::uint8_t>(*hi));
    }
    return spec;
}

std::vector<std::uint64_t> order_from_covers(const PosetSpec& spec)
{
    const std::size_t n = spec.size();
    std::vector<std::uint64_t> above(n, 0);
    std::vector<int> indegree(n, 0);
    for (auto [lo, hi] : spec.covers) {
        if (lo >= n || hi >= n)
            throw Error(ErrorKind::InvalidArgument, "cover edge index out of range");
        if (!((above[lo] >> hi) & 1u)) {
            above[lo] |= std::uint64_t{1} << hi;
            ++indegree[hi];
        }
    }
    // Kahn's order; a leftover element means a cycle.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0)
            order.push_back(i);
    for (std::size_t k = 0; k < order.size(); ++k)
        for (std::uint64_t m = above[order[k]]; m; m &= m - 1) {
            const auto hi = static_cast<std::size_t>(std::countr_zero(m));
            if (--indegree[hi] == 0)
                order.push_back(hi);
        }
    if (order.size() != n)
        throw Error(ErrorKind::CyclicCovers, "cover edges contain a cycle");
    std::vector<std::uint64_t> up(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::size_t x = *it;
        up[x] = std::uint64_t{1} << x;
        for (std::uint64_t m = above[x]; m; m &= m - 1)
            up[x] |= up[std::countr_zero(m)];
    }
    return up;
}

FiniteLattice::FiniteLattice(Universe universe, std::vector<std::uint64_t> up)
    : universe_(std::move(universe)), up_(std::move(up))
{
    const std::size_t n = universe_.size();
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "a lattice needs at least one element");
    if (up_.size() != n)
        throw Error(ErrorKind::InvalidArgument, "order has the wrong number of rows");
    const std::uint64_t all = full_mask(n);
    down_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        if ((up_[x] & ~all) != 0 || !leq(x, x))
            throw Error(ErrorKind::InvalidArgument, "order is not reflexive on the universe");
        for (std::uint64_t m = up_[x]; m; m &= m - 1) {
            const auto y = static_cast<std::size_t>(std::countr_zero(m));
            if (y != x && leq(y, x))
                throw Error(ErrorKind::InvalidArgument, "order is not antisymmetric at " + pair_text(universe_, x, y));
            if ((up_[y] & ~up_[x]) != 0)
                throw Error(ErrorKind::InvalidArgument, "order is not transitive above '" +
                                                            std::string(1, label(x)) + "'");
            down_[y] |= std::uint64_t{1} << x;
        }
    }
    join_.assign(n * n, 0);
    meet_.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y) {
            const int j = least_in(up_[x] & up_[y], up_);
            if (j < 0)
                throw Error(ErrorKind::NotALattice, "elements " + pair_text(universe_, x, y) + " have no join");
            const int m = least_in(down_[x] & down_[y], down_);
            if (m < 0)
                throw Error(ErrorKind::NotALattice, "elements " + pair_text(universe_, x, y) + " have no meet");
            join_[x * n + y] = join_[y * n + x] = static_cast<std::uint8_t>(j);
            meet_[x * n + y] = meet_[y * n + x] = static_cast<std::uint8_t>(m);
        }
    bottom_ = static_cast<std::size_t>(least_in(all, up_));
    top_ = static_cast<std::size_t>(least_in(all, down_));
}

std::vector<std::pair<std::uint8_t, std::uint8_t>> FiniteLattice::covers() const
{
    std::vector<std::pair<std::uint8_t, std::uint8_t>> out;
    for (std::size_t x = 0; x < size(); ++x) {
        const std::uint64_t strict = up_[x] & ~(std::uint64_t{1} << x);
        for (std::uint64_t m = strict; m; m &= m - 1) {
            const auto y = static_cast<std::size_t>(std::countr_zero(m));
            // y covers x iff nothing strictly between.
            if ((strict & down_[y] & ~(std::uint64_t{1} << y)) == 0)
                out.emplace_back(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y));
        }
    }
    return out;
}

PosetSpec FiniteLattice::to_spec() const
{
    return PosetSpec{universe_, covers()};
}

FiniteLattice lattice_from_covers(const PosetSpec& spec)
{
    return FiniteLattice(spec.universe, order_from_covers(spec));
}

FiniteLattice lattice_from_covers(std::string_view labels, std::string_view covers)
{
    return lattice_from_covers(PosetSpec::from_text(labels, covers));
}

FiniteLattice chain(std::size_t n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "a chain needs at least one element");
    std::vector<std::uint64_t> up(n);
    for (std::size_t i = 0; i < n; ++i)
        up[i] = full_mask(n) & ~full_mask(i);
    return FiniteLattice(Universe(default_labels(n)), std::move(up));
}

namespace {

PartialAlgebra lattice_algebra(const FiniteLattice& l, bool with_comparable)
{
    std::vector<Constraint> cs;
    for (std::size_t x = 0; x < l.size(); ++x)
        for (std::size_t y = x + 1; y < l.size(); ++y) {
            if (!with_comparable && l.comparable(x, y))
                continue;
            cs.push_back({static_cast<std::uint8_t>(x), '+', static_cast<std::uint8_t>(y),
                          static_cast<std::uint8_t>(l.join(x, y))});
            cs.push_back({static_cast<std::uint8_t>(x), '*', static_cast<std::uint8_t>(y),
                          static_cast<std::uint8_t>(l.meet(x, y))});
        }
    return PartialAlgebra(l.universe(), std::move(cs));
}

}  // namespace

PartialAlgebra full_algebra(const FiniteLattice& lattice)
{
    return lattice_algebra(lattice, false);
}

PartialAlgebra full_algebra_with_comparable_pairs(const FiniteLattice& lattice)
{
    return lattice_algebra(lattice, true);
}

BigUint count_sublattices(const FiniteLattice& lattice, CountOptions options)
{
    return count_subuniverses(full_algebra(lattice), options) - 1;
}

DyadicValue lattice_sigma(const FiniteLattice& lattice, CountOptions options)
{
    return sigma(full_algebra(lattice), 8, options);
}

FiniteLattice dual(const FiniteLattice& lattice)
{
    std::vector<std::uint64_t> up(lattice.size());
    for (std::size_t x = 0; x < lattice.size(); ++x)
        up[x] = lattice.down_set(x);
    return FiniteLattice(lattice.universe(), std::move(up));
}

FiniteLattice ordinal_sum(const FiniteLattice& lower, const FiniteLattice& upper)
{
    const std::size_t a = lower.size();
    const std::size_t n = a + upper.size();
    if (n > kMaxUniverse)
        throw Error(ErrorKind::UniverseTooLarge, "ordinal sum would have " + std::to_string(n) + " elements");
    std::string labels = lower.universe().labels();
    std::size_t next = 0;
    for (char c : upper.universe().labels()) {
        if (labels.find(c) != std::string::npos) {
            while (next < kLabelPool.size() && (labels.find(kLabelPool[next]) != std::string::npos ||
                                                upper.universe().index_of(kLabelPool[next])))
                ++next;
            if (next == kLabelPool.size())
                throw Error(ErrorKind::UniverseTooLarge, "ran out of labels for the ordinal sum");
            c = kLabelPool[next++];
        }
        labels.push_back(c);
    }
    std::vector<std::uint64_t> up(n);
    const std::uint64_t upper_part = full_mask(n) & ~full_mask(a);
    for (std::size_t x = 0; x < a; ++x)
        up[x] = lower.up_set(x) | upper_part;
    for (std::size_t x = 0; x < upper.size(); ++x)
        up[a + x] = upper.up_set(x) << a;
    return FiniteLattice(Universe(labels), std::move(up));
}

FiniteLattice sublattice(const FiniteLattice& lattice, SubsetMask subset)
{
    if (subset.bits == 0)
        throw Error(ErrorKind::EmptySubset, "sublattice of the empty set");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (subset.contains(i))
            keep.push_back(i);
    std::string labels;
    for (std::size_t i : keep)
        labels.push_back(lattice.label(i));
    for (std::size_t x : keep)
        for (std::size_t y : keep)
            if (!subset.contains(lattice.join(x, y)) || !subset.contains(lattice.meet(x, y)))
                throw Error(ErrorKind::NotALattice,
                            "subset is not closed under join and meet of " + pair_text(lattice.universe(), x, y));
    std::vector<std::uint64_t> up(keep.size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (lattice.leq(keep[i], keep[j]))
                up[i] |= std::uint64_t{1} << j;
    return FiniteLattice(Universe(labels), std::move(up));
}

PosetSpec parse_poset_text(std::string_view text)
{
    std::string elements;
    std::string covers;
    bool have_elements = false;
    bool have_covers = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        const auto colon = line.find(':');
        const std::string key = colon == std::string::npos ? "" : line.substr(first, colon - first);
        if (key == "elements" && !have_elements) {
            elements = line.substr(colon + 1);
            have_elements = true;
        } else if (key == "covers" && !have_covers) {
            covers = line.substr(colon + 1);
            have_covers = true;
        } else {
            throw Error(ErrorKind::Syntax, "expected 'elements:' then 'covers:'", line_no, first + 1);
        }
    }
    if (!have_elements)
        throw Error(ErrorKind::Syntax, "missing 'elements:' line");
    return PosetSpec::from_text(elements, covers);
}

FiniteLattice parse_lattice_text(std::string_view text)
{
    return lattice_from_covers(parse_poset_text(text));
}

std::string format_poset_text(const PosetSpec& spec)
{
    std::string out = "elements: " + spec.universe.labels() + "\ncovers:";
    for (auto [lo, hi] : spec.covers) {
        out += ' ';
        out += spec.universe.label(lo);
        out += spec.universe.label(hi);
    }
    return out + "\n";
}

std::string format_lattice_text(const FiniteLattice& lattice)
{
    return format_poset_text(lattice.to_spec());
}

}  // namespace sublat
