#pragma once

// Independent reference computations used only by the tests. None of these
// go through the library routine they are used to check.

#include "hoeffspecht/combinatorics.hpp"
#include "hoeffspecht/module_vector.hpp"
#include "hoeffspecht/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace oracle {

using hs::ModuleVector;
using hs::Rational;

/// Every l-subset of [n] as a sorted element list, by scanning all 2^n masks
/// and sorting the lists lexicographically.
inline std::vector<std::vector<int>> brute_subsets(int n, int l) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != l) continue;
        std::vector<int> elems;
        for (int k = 1; k <= n; ++k) {
            if (mask & (1u << (k - 1))) elems.push_back(k);
        }
        out.push_back(elems);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Setwise-fixed l-subsets counted by scanning.
inline std::uint64_t brute_fixed_subsets(hs::Permutation const& x, int l) {
    std::uint64_t count = 0;
    for (auto const& elems : brute_subsets(x.n(), l)) {
        std::vector<int> image;
        for (int e : elems) image.push_back(x(e));
        std::sort(image.begin(), image.end());
        if (image == elems) ++count;
    }
    return count;
}

/// Rank by fraction-free (Bareiss-style) elimination on integer rows, with
/// pivots taken from the LAST column backwards and the row of largest
/// absolute pivot. Different pivot rule and arithmetic from rank_of_span.
inline std::size_t bareiss_rank(std::vector<ModuleVector> const& vectors) {
    if (vectors.empty()) return 0;
    std::vector<std::vector<mpz_class>> rows;
    for (auto const& v : vectors) {
        mpz_class common = 1;
        for (auto const& q : v.values()) common = lcm(common, mpz_class(q.get_den()));
        std::vector<mpz_class> row;
        for (auto const& q : v.values()) row.push_back(mpz_class(q.get_num() * (common / q.get_den())));
        rows.push_back(std::move(row));
    }
    std::size_t const cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t cc = cols; cc-- > 0 && rank < rows.size();) {
        std::size_t best = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][cc] != 0 && (best == rows.size() || abs(rows[r][cc]) > abs(rows[best][cc]))) best = r;
        }
        if (best == rows.size()) continue;
        std::swap(rows[rank], rows[best]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][cc] == 0) continue;
            mpz_class const a = rows[rank][cc];
            mpz_class const b = rows[r][cc];
            mpz_class g = 0;
            for (std::size_t k = 0; k < cols; ++k) {
                rows[r][k] = a * rows[r][k] - b * rows[rank][k];
                g = gcd(g, rows[r][k]);
            }
            if (g > 1) {
                for (auto& e : rows[r]) e /= g;
            }
        }
        ++rank;
    }
    return rank;
}

/// Orthogonal projection of h onto span(basis) under the uniform inner
/// product, by exact Gram-Schmidt.
inline ModuleVector gram_schmidt_projection(ModuleVector const& h, std::vector<ModuleVector> const& basis) {
    std::vector<ModuleVector> ortho;
    for (auto const& b : basis) {
        ModuleVector v = b;
        for (auto const& u : ortho) v -= (hs::inner_product(v, u) / hs::inner_product(u, u)) * u;
        if (!hs::is_zero(v)) ortho.push_back(v);
    }
    ModuleVector out(h.n(), h.l());
    for (auto const& u : ortho) out += (hs::inner_product(h, u) / hs::inner_product(u, u)) * u;
    return out;
}

/// The containment vectors eta_I(K) = [I subset K] for all l-subsets I:
/// a spanning set for the U-statistics of order l.
inline std::vector<ModuleVector> eta_vectors(int n, int m, int l) {
    std::vector<ModuleVector> out;
    auto const big = brute_subsets(n, m);
    for (auto const& small : brute_subsets(n, l)) {
        std::vector<Rational> values;
        for (auto const& k : big) {
            bool inside = std::includes(k.begin(), k.end(), small.begin(), small.end());
            values.emplace_back(inside ? 1 : 0);
        }
        out.emplace_back(n, m, std::move(values));
    }
    return out;
}

/// Component of h in SU_l minus SU_{l-1}, via least squares against the
/// eta spanning sets.
inline ModuleVector hoeffding_component(ModuleVector const& h, int l) {
    int const n = h.n();
    int const m = h.l();
    auto const upper = gram_schmidt_projection(h, eta_vectors(n, m, l));
    if (l == 0) return upper;
    return upper - gram_schmidt_projection(h, eta_vectors(n, m, l - 1));
}

inline ModuleVector random_vector(int n, int m, std::uint64_t seed) {
    return hs::random_module_vector(n, m, seed);
}

}  // namespace oracle
