// SPDX-License-Identifier: Apache-2.0
#include "embedding.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

namespace sublat {

Poset Poset::of(const PosetSpec& spec)
{
    return Poset{order_from_covers(spec)};
}

Poset Poset::of(const FiniteLattice& lattice)
{
    Poset p;
    p.up.resize(lattice.size());
    for (std::size_t x = 0; x < lattice.size(); ++x)
        p.up[x] = lattice.up_set(x);
    return p;
}

namespace {

struct Rows {
    std::vector<std::uint64_t> up;    // strict
    std::vector<std::uint64_t> down;  // strict

    explicit Rows(const Poset& p) : up(p.size()), down(p.size(), 0)
    {
        for (std::size_t x = 0; x < p.size(); ++x) {
            up[x] = p.up[x] & ~(std::uint64_t{1} << x);
            for (std::uint64_t m = up[x]; m; m &= m - 1)
                down[std::countr_zero(m)] |= std::uint64_t{1} << x;
        }
    }
};

class Search {
public:
    Search(const Poset& source, const Poset& target) : s_(source), t_(target), n_(source.size())
    {
        const std::size_t m = target.size();
        const std::uint64_t all = full_mask(m);
        domain_.assign(n_, 0);
        for (std::size_t x = 0; x < n_; ++x) {
            const int ux = std::popcount(s_.up[x]);
            const int dx = std::popcount(s_.down[x]);
            for (std::size_t v = 0; v < m; ++v)
                if (std::popcount(t_.up[v]) >= ux && std::popcount(t_.down[v]) >= dx)
                    domain_[x] |= std::uint64_t{1} << v;
            domain_[x] &= all;
        }
        plan();
    }

    std::optional<Embedding> run()
    {
        map_.assign(n_, 0);
        if (!place(0, 0))
            return std::nullopt;
        return Embedding{map_};
    }

private:
    // Each step picks the element with the most comparabilities to those
    // already placed, then the smallest domain, then the highest degree.
    void plan()
    {
        std::vector<bool> placed(n_, false);
        for (std::size_t k = 0; k < n_; ++k) {
            std::size_t best = n_;
            std::tuple<int, int, int> best_key{-1, 0, 0};
            for (std::size_t x = 0; x < n_; ++x) {
                if (placed[x])
                    continue;
                int links = 0;
                for (std::size_t p : order_)
                    links += ((s_.up[x] | s_.down[x]) >> p) & 1u;
                const std::tuple<int, int, int> key{links, -std::popcount(domain_[x]),
                                                    std::popcount(s_.up[x] | s_.down[x])};
                if (best == n_ || key > best_key) {
                    best = x;
                    best_key = key;
                }
            }
            placed[best] = true;
            order_.push_back(best);
        }
    }

    bool place(std::size_t k, std::uint64_t used)
    {
        if (k == n_)
            return true;
        const std::size_t x = order_[k];
        std::uint64_t cand = domain_[x] & ~used;
        for (std::size_t i = 0; i < k && cand; ++i) {
            const std::size_t p = order_[i];
            const std::size_t v = map_[p];
            if ((s_.up[p] >> x) & 1u)
                cand &= t_.up[v];
            else if ((s_.down[p] >> x) & 1u)
                cand &= t_.down[v];
            else
                cand &= ~(t_.up[v] | t_.down[v]);
        }
        for (; cand; cand &= cand - 1) {
            const auto v = static_cast<std::uint8_t>(std::countr_zero(cand));
            map_[x] = v;
            if (place(k + 1, used | (std::uint64_t{1} << v)))
                return true;
        }
        return false;
    }

    Rows s_;
    Rows t_;
    std::size_t n_;
    std::vector<std::uint64_t> domain_;
    std::vector<std::size_t> order_;
    std::vector<std::uint8_t> map_;
};

}  // namespace

std::optional<Embedding> find_embedding(const Poset& source, const Poset& target)
{
    if (source.size() > target.size())
        return std::nullopt;
    if (source.size() == 0)
        return Embedding{};
    return Search(source, target).run();
}

std::optional<Embedding> is_subposet(const PosetSpec& source, const FiniteLattice& target)
{
    return find_embedding(Poset::of(source), Poset::of(target));
}

std::optional<Embedding> is_subposet(const FiniteLattice& source, const FiniteLattice& target)
{
    return find_embedding(Poset::of(source), Poset::of(target));
}

bool is_order_embedding(const Embedding& phi, const Poset& source, const Poset& target)
{
    if (phi.map.size() != source.size())
        return false;
    std::uint64_t used = 0;
    for (std::uint8_t v : phi.map) {
        if (v >= target.size() || ((used >> v) & 1u))
            return false;
        used |= std::uint64_t{1} << v;
    }
    for (std::size_t x = 0; x < source.size(); ++x)
        for (std::size_t y = 0; y < source.size(); ++y)
            if (source.leq(x, y) != target.leq(phi.map[x], phi.map[y]))
                return false;
    return true;
}

bool is_two_embedding(const Embedding& phi, const FiniteLattice& source, const FiniteLattice& target)
{
    if (!is_order_embedding(phi, Poset::of(source), Poset::of(target)))
        return false;
    const auto covers = source.covers();
    const std::size_t n = source.size();
    std::vector<std::uint64_t> lower(n, 0);
    std::vector<std::uint64_t> upper(n, 0);
    for (auto [lo, hi] : covers) {
        lower[hi] |= std::uint64_t{1} << lo;
        upper[lo] |= std::uint64_t{1} << hi;
    }
    for (std::size_t u = 0; u < n; ++u) {
        for (std::uint64_t a = lower[u]; a; a &= a - 1)
            for (std::uint64_t b = a & (a - 1); b; b &= b - 1) {
                const int v = std::countr_zero(a);
                const int w = std::countr_zero(b);
                if (target.join(phi.map[v], phi.map[w]) != phi.map[u])
                    return false;
            }
        for (std::uint64_t a = upper[u]; a; a &= a - 1)
            for (std::uint64_t b = a & (a - 1); b; b &= b - 1) {
                const int v = std::countr_zero(a);
                const int w = std::countr_zero(b);
                if (target.meet(phi.map[v], phi.map[w]) != phi.map[u])
                    return false;
            }
    }
    return true;
}

bool isomorphic(const FiniteLattice& a, const FiniteLattice& b)
{
    return a.size() == b.size() && is_subposet(a, b) && is_subposet(b, a);
}

bool isomorphic(const PosetSpec& a, const PosetSpec& b)
{
    const Poset pa = Poset::of(a);
    const Poset pb = Poset::of(b);
    return pa.size() == pb.size() && find_embedding(pa, pb) && find_embedding(pb, pa);
}

}  // namespace sublat
