#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "transgen/numth.hpp"

namespace transgen {

// Cartesian product of chains of sizes k_1..k_t (each >= 1). Chains of size 1
// are permitted and change nothing. Poset-isomorphic to the divisor lattice
// of any integer with exponent vector (k_i - 1).
class ChainProduct {
public:
    explicit ChainProduct(std::vector<std::uint32_t> sizes);

    // Chain sizes from the exponents of n's factorization.
    static ChainProduct divisor_lattice(std::uint64_t n);
    static ChainProduct divisor_lattice(const Factorization& f);

    // The transversal shape for a subgroup of index n: one chain of
    // cardinality p per composition factor, omega(n) chains in total.
    // lemma31_bound on this product equals ws(n) exactly.
    static ChainProduct transversal(std::uint64_t n);
    static ChainProduct transversal(const Factorization& f);

    const std::vector<std::uint32_t>& sizes() const { return sizes_; }
    std::uint64_t cardinality() const { return n_; }
    std::uint64_t bigK() const { return K_; }

private:
    std::vector<std::uint32_t> sizes_;
    std::uint64_t n_;
    std::uint64_t K_;
};

// |R_k| for k = 0..K: coefficients of prod(1 + x + ... + x^(k_i - 1)).
// Entries sum to the cardinality; the list is symmetric and unimodal.
std::vector<std::uint64_t> rank_level_counts(const ChainProduct& p);

// |R_{floor(K/2)}|, which equals max_k |R_k| (de Bruijn et al.).
std::uint64_t width_rank(const ChainProduct& p);

// Maximum antichain size computed independently of the rank structure:
// minimum chain cover via maximum bipartite matching on comparability
// (Dilworth), Hopcroft-Karp. Guarded to cardinality <= 10^4.
std::uint64_t width_oracle(const ChainProduct& p);

// Fully exhaustive maximum-antichain search, |P| <= 20.
std::uint64_t width_exhaustive(const ChainProduct& p);

// (n / 2^K) * C(K, floor(K/2)) as an exact rational, n >= 2.
mpq_class lemma31_bound(const ChainProduct& p);

// Generic finite poset support for the Dilworth-consequence checks:
// a relation given as a strict-order adjacency matrix (transitively closed).
struct SmallPoset {
    std::size_t n;
    std::vector<std::vector<bool>> less;  // less[i][j]: i strictly below j

    std::size_t longest_chain() const;
    std::size_t max_antichain_bruteforce() const;  // n <= 24
};

}  // namespace transgen
