#include "transgen/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace transgen {

ChainProduct::ChainProduct(std::vector<std::uint32_t> sizes) : sizes_(std::move(sizes)) {
    n_ = 1;
    K_ = 0;
    for (auto k : sizes_) {
        if (k == 0) throw std::invalid_argument("chain sizes must be >= 1");
        if (n_ > UINT64_MAX / k) throw std::overflow_error("chain product cardinality overflow");
        n_ *= k;
        K_ += k - 1;
    }
}

ChainProduct ChainProduct::divisor_lattice(const Factorization& f) {
    std::vector<std::uint32_t> sizes;
    for (const auto& e : f.entries()) sizes.push_back(e.exponent + 1);
    return ChainProduct(std::move(sizes));
}

ChainProduct ChainProduct::divisor_lattice(std::uint64_t n) {
    return divisor_lattice(factorize(n));
}

ChainProduct ChainProduct::transversal(const Factorization& f) {
    std::vector<std::uint32_t> sizes;
    for (const auto& e : f.entries())
        for (unsigned i = 0; i < e.exponent; ++i) sizes.push_back((std::uint32_t)e.prime);
    return ChainProduct(std::move(sizes));
}

ChainProduct ChainProduct::transversal(std::uint64_t n) { return transversal(factorize(n)); }

std::vector<std::uint64_t> rank_level_counts(const ChainProduct& p) {
    std::vector<std::uint64_t> coeff{1};
    for (auto k : p.sizes()) {
        if (k == 1) continue;
        std::vector<std::uint64_t> next(coeff.size() + k - 1, 0);
        for (std::size_t i = 0; i < coeff.size(); ++i)
            for (std::uint32_t j = 0; j < k; ++j) next[i + j] += coeff[i];
        coeff = std::move(next);
    }
    return coeff;
}

std::uint64_t width_rank(const ChainProduct& p) {
    auto counts = rank_level_counts(p);
    return counts[p.bigK() / 2];
}

namespace {

// Odometer over the chain product; elements indexed 0..n-1 in mixed radix.
std::vector<std::uint32_t> decode(std::uint64_t idx, const std::vector<std::uint32_t>& sizes) {
    std::vector<std::uint32_t> t(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        t[i] = idx % sizes[i];
        idx /= sizes[i];
    }
    return t;
}

bool strictly_below(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

// Hopcroft-Karp maximum matching on an explicit adjacency list L -> R.
std::size_t hopcroft_karp(const std::vector<std::vector<std::uint32_t>>& adj, std::size_t nright) {
    constexpr std::uint32_t NIL = UINT32_MAX;
    std::size_t nleft = adj.size();
    std::vector<std::uint32_t> match_l(nleft, NIL), match_r(nright, NIL);
    std::vector<std::uint32_t> dist(nleft);

    auto bfs = [&]() {
        std::queue<std::uint32_t> q;
        bool found = false;
        for (std::uint32_t u = 0; u < nleft; ++u) {
            if (match_l[u] == NIL) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = NIL;
            }
        }
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop();
            for (auto v : adj[u]) {
                std::uint32_t w = match_r[v];
                if (w == NIL) {
                    found = true;
                } else if (dist[w] == NIL) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };
    std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t u) {
        for (auto v : adj[u]) {
            std::uint32_t w = match_r[v];
            if (w == NIL || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = NIL;
        return false;
    };

    std::size_t matching = 0;
    while (bfs()) {
        for (std::uint32_t u = 0; u < nleft; ++u)
            if (match_l[u] == NIL && dfs(u)) ++matching;
    }
    return matching;
}

}  // namespace

std::uint64_t width_oracle(const ChainProduct& p) {
    std::uint64_t n = p.cardinality();
    if (n > 10000) throw std::length_error("width_oracle: cardinality guard (10^4) exceeded");
    // Comparable-pair count guard keeps the adjacency list in memory.
    {
        unsigned __int128 pairs = 1;
        for (auto k : p.sizes()) pairs *= (unsigned __int128)k * (k + 1) / 2;
        if (pairs > 8u * 1000 * 1000)
            throw std::length_error("width_oracle: comparability size guard exceeded");
    }

    std::vector<std::vector<std::uint32_t>> tuples(n);
    for (std::uint64_t i = 0; i < n; ++i) tuples[i] = decode(i, p.sizes());

    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j)
            if (i != j && strictly_below(tuples[i], tuples[j])) adj[i].push_back((std::uint32_t)j);

    // Dilworth: width = minimum chain cover = n - maximum matching on the
    // transitive comparability relation.
    std::size_t matching = hopcroft_karp(adj, n);
    return n - matching;
}

std::uint64_t width_exhaustive(const ChainProduct& p) {
    std::uint64_t n = p.cardinality();
    if (n > 20) throw std::length_error("width_exhaustive: cardinality guard (20) exceeded");
    std::vector<std::vector<std::uint32_t>> tuples(n);
    for (std::uint64_t i = 0; i < n; ++i) tuples[i] = decode(i, p.sizes());
    std::vector<std::uint32_t> comparable(n, 0);  // bitmask per element
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j)
            if (i != j && (strictly_below(tuples[i], tuples[j]) || strictly_below(tuples[j], tuples[i])))
                comparable[i] |= (1u << j);
    std::uint64_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::uint64_t i = 0; i < n && ok; ++i)
            if ((mask >> i) & 1)
                if (mask & comparable[i]) ok = false;
        if (ok) best = std::max<std::uint64_t>(best, __builtin_popcount(mask));
    }
    return best;
}

mpq_class lemma31_bound(const ChainProduct& p) {
    if (p.cardinality() < 2) throw std::invalid_argument("lemma31_bound: cardinality must be >= 2");
    std::uint64_t K = p.bigK();
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, K);
    mpq_class r(mpz_class(mpz_class(p.cardinality()) * binom(K, K / 2)), pow2);
    r.canonicalize();
    return r;
}

std::size_t SmallPoset::longest_chain() const {
    // DP over a topological order; `less` is transitively closed so any
    // linear extension by in-degree works.
    std::vector<std::size_t> depth(n, 1);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        std::size_t ca = 0, cb = 0;
        for (std::size_t k = 0; k < n; ++k) {
            ca += less[k][a];
            cb += less[k][b];
        }
        return ca < cb;
    });
    std::size_t best = n ? 1 : 0;
    for (std::size_t oi = 0; oi < n; ++oi) {
        std::size_t j = order[oi];
        for (std::size_t i = 0; i < n; ++i)
            if (less[i][j]) depth[j] = std::max(depth[j], depth[i] + 1);
        best = std::max(best, depth[j]);
    }
    return best;
}

std::size_t SmallPoset::max_antichain_bruteforce() const {
    if (n > 24) throw std::length_error("max_antichain_bruteforce: guard (24) exceeded");
    std::vector<std::uint32_t> comparable(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (less[i][j] || less[j][i])) comparable[i] |= (1u << j);
    // Branch and bound on the complement (maximum independent set).
    std::size_t best = 0;
    std::function<void(std::uint32_t, std::size_t)> go = [&](std::uint32_t cand, std::size_t size) {
        if (size + (std::size_t)__builtin_popcount(cand) <= best) return;
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        std::uint32_t v = __builtin_ctz(cand);
        go(cand & ~(1u << v) & ~comparable[v], size + 1);  // take v
        go(cand & ~(1u << v), size);                       // skip v
    };
    go(n == 32 ? ~0u : ((1u << n) - 1), 0);
    return best;
}

}  // namespace transgen
