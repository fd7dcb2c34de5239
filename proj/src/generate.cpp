// SPDX-License-Identifier: Apache-2.0
#include "generate.hpp"

#include "error.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

namespace sublat {

FiniteLattice concept_lattice(const FormalContext& ctx, std::size_t max_concepts)
{
    if (ctx.objects > kMaxContextSide || ctx.attributes > kMaxContextSide)
        throw Error(ErrorKind::InvalidArgument, "formal contexts are limited to 12 objects and 12 attributes");
    if (ctx.incidence.size() != ctx.objects)
        throw Error(ErrorKind::InvalidArgument, "incidence has the wrong number of rows");
    const std::uint32_t attr_mask = (std::uint32_t{1} << ctx.attributes) - 1;
    for (std::uint32_t row : ctx.incidence)
        if (row & ~attr_mask)
            throw Error(ErrorKind::InvalidArgument, "incidence row uses an undeclared attribute");

    // Extents are the intersections of attribute extents (the empty
    // intersection being all objects).
    const std::uint32_t all = (std::uint32_t{1} << ctx.objects) - 1;
    std::set<std::uint32_t> extents{all};
    for (std::size_t m = 0; m < ctx.attributes; ++m) {
        std::uint32_t ext = 0;
        for (std::size_t g = 0; g < ctx.objects; ++g)
            if ((ctx.incidence[g] >> m) & 1u)
                ext |= std::uint32_t{1} << g;
        std::vector<std::uint32_t> fresh;
        for (std::uint32_t e : extents)
            if (!extents.contains(e & ext))
                fresh.push_back(e & ext);
        extents.insert(fresh.begin(), fresh.end());
        if (extents.size() > max_concepts)
            throw Error(ErrorKind::TooLarge, "context has more than " + std::to_string(max_concepts) + " concepts");
    }
    std::vector<std::uint32_t> ordered(extents.begin(), extents.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    const std::size_t n = ordered.size();
    std::vector<std::uint64_t> up(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((ordered[i] & ordered[j]) == ordered[i])
                up[i] |= std::uint64_t{1} << j;
    return FiniteLattice(Universe(default_labels(n)), std::move(up));
}

namespace {

/// Raw engine output only; the standard distributions are not portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t below(std::uint64_t k) { return engine_() % k; }
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

FormalContext random_context(Rng& rng, std::size_t n_hint)
{
    FormalContext ctx;
    const std::size_t side = std::min<std::size_t>(kMaxContextSide, std::max<std::size_t>(2, n_hint));
    ctx.objects = 1 + rng.below(side);
    ctx.attributes = 1 + rng.below(side);
    ctx.incidence.assign(ctx.objects, 0);
    if (rng.chance(1, 2)) {
        const std::uint64_t density = 2 + rng.below(7);  // tenths
        for (auto& row : ctx.incidence)
            for (std::size_t m = 0; m < ctx.attributes; ++m)
                if (rng.chance(density, 10))
                    row |= std::uint32_t{1} << m;
    } else {
        // Nested rows with a few flips give long chains with small branches.
        const std::uint64_t flips = 1 + rng.below(4);  // per twenty
        for (auto& row : ctx.incidence) {
            const std::size_t cut = rng.below(ctx.attributes + 1);
            for (std::size_t m = 0; m < ctx.attributes; ++m)
                if ((m < cut) != rng.chance(flips, 20))
                    row |= std::uint32_t{1} << m;
        }
    }
    return ctx;
}

}  // namespace

FiniteLattice random_lattice(std::size_t n_hint, std::uint64_t seed)
{
    if (n_hint < 1 || n_hint > 16)
        throw Error(ErrorKind::InvalidArgument, "n_hint must be between 1 and 16");
    Rng rng(seed);
    std::optional<FiniteLattice> best;
    std::size_t best_gap = 0;
    for (int attempt = 0; attempt < 200; ++attempt) {
        const FormalContext ctx = random_context(rng, n_hint);
        std::optional<FiniteLattice> l;
        try {
            l = concept_lattice(ctx, 2 * n_hint + 8);
        } catch (const Error&) {
            continue;
        }
        const std::size_t gap = l->size() > n_hint ? l->size() - n_hint : n_hint - l->size();
        if (!best || gap < best_gap) {
            best = std::move(l);
            best_gap = gap;
            if (gap == 0)
                break;
        }
    }
    if (!best)
        return chain(n_hint);
    return std::move(*best);
}

namespace {

/// Length of the longest chain from the bottom to each element.
std::vector<int> heights(const std::vector<std::uint64_t>& up)
{
    const std::size_t n = up.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    // Elements with larger up-sets come first in any linear extension.
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return std::popcount(up[a]) > std::popcount(up[b]); });
    std::vector<int> h(n, 0);
    for (std::size_t y : order)
        for (std::size_t x = 0; x < n; ++x)
            if (x != y && ((up[x] >> y) & 1u))
                h[y] = std::max(h[y], h[x] + 1);
    return h;
}

std::vector<std::uint64_t> relabel(const std::vector<std::uint64_t>& up, const std::vector<std::size_t>& seq)
{
    const std::size_t n = seq.size();
    std::vector<std::uint64_t> rows(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((up[seq[i]] >> seq[j]) & 1u)
                rows[i] |= std::uint64_t{1} << j;
    return rows;
}

std::vector<std::uint64_t> canonical_rows(const std::vector<std::uint64_t>& up)
{
    const std::size_t n = up.size();
    const std::vector<int> h = heights(up);
    std::vector<std::size_t> seq(n);
    for (std::size_t i = 0; i < n; ++i)
        seq[i] = i;
    std::stable_sort(seq.begin(), seq.end(), [&](std::size_t a, std::size_t b) { return h[a] < h[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) in seq
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && h[seq[j]] == h[seq[i]])
            ++j;
        groups.emplace_back(i, j);
        i = j;
    }
    std::vector<std::uint64_t> best = relabel(up, seq);
    // Odometer over the permutations of each level.
    while (true) {
        std::size_t g = 0;
        for (; g < groups.size(); ++g) {
            auto [b, e] = groups[g];
            if (std::next_permutation(seq.begin() + static_cast<std::ptrdiff_t>(b),
                                      seq.begin() + static_cast<std::ptrdiff_t>(e)))
                break;
        }
        if (g == groups.size())
            break;
        std::vector<std::uint64_t> rows = relabel(up, seq);
        if (rows < best)
            best = std::move(rows);
    }
    return best;
}

bool has_all_joins(const std::vector<std::uint64_t>& up)
{
    const std::size_t n = up.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            const std::uint64_t bounds = up[x] & up[y];
            bool found = false;
            for (std::uint64_t m = bounds; m && !found; m &= m - 1)
                found = (up[std::countr_zero(m)] & bounds) == bounds;
            if (!found)
                return false;
        }
    return true;
}

}  // namespace

std::vector<std::uint64_t> canonical_form(const FiniteLattice& lattice)
{
    std::vector<std::uint64_t> up(lattice.size());
    for (std::size_t x = 0; x < lattice.size(); ++x)
        up[x] = lattice.up_set(x);
    return canonical_rows(up);
}

FiniteLattice canonical_lattice(const FiniteLattice& lattice)
{
    return FiniteLattice(Universe(default_labels(lattice.size())), canonical_form(lattice));
}

std::vector<FiniteLattice> enumerate_lattices(const EnumerationBudget& budget)
{
    if (budget.max_n > kMaxEnumeratedLattice)
        throw Error(ErrorKind::InvalidArgument, "exhaustive enumeration is limited to 8 elements");
    std::vector<FiniteLattice> out;
    const auto full = [&] { return budget.max_count && out.size() >= *budget.max_count; };
    for (std::size_t n = 1; n <= budget.max_n && !full(); ++n) {
        if (n <= 2) {
            out.push_back(chain(n));
            continue;
        }
        // Bounded posets 0 < inner < 1 with a natural labelling of the
        // inner elements: i < j only if i precedes j.
        const std::size_t k = n - 2;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                pairs.emplace_back(i, j);
        std::set<std::vector<std::uint64_t>> seen;
        std::vector<std::vector<std::uint64_t>> found;
        for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << pairs.size()); ++rel) {
            std::vector<std::uint64_t> up(n, 0);
            up[0] = full_mask(n);
            up[n - 1] = std::uint64_t{1} << (n - 1);
            for (std::size_t i = 0; i < k; ++i)
                up[i + 1] = (std::uint64_t{1} << (i + 1)) | (std::uint64_t{1} << (n - 1));
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if ((rel >> p) & 1u)
                    up[pairs[p].first + 1] |= std::uint64_t{1} << (pairs[p].second + 1);
            bool transitive = true;
            for (std::size_t x = 1; x <= k && transitive; ++x)
                for (std::uint64_t m = up[x]; m; m &= m - 1)
                    if ((up[std::countr_zero(m)] & ~up[x]) != 0) {
                        transitive = false;
                        break;
                    }
            if (!transitive || !has_all_joins(up))
                continue;
            std::vector<std::uint64_t> canon = canonical_rows(up);
            if (seen.insert(canon).second)
                found.push_back(std::move(canon));
        }
        std::sort(found.begin(), found.end());
        for (auto& rows : found) {
            if (full())
                break;
            out.emplace_back(Universe(default_labels(n)), std::move(rows));
        }
    }
    return out;
}

}  // namespace sublat
