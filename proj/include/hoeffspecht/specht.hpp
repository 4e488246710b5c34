#pragma once

/**
 * @file specht.hpp
 * @brief Two-block Specht modules S^(n-l,l) inside M^(n-l,l).
 *
 * The column operator of a tableau t with pair columns (i_k, j_k) is
 * kappa_t = (Id - (i_1 j_1)) ... (Id - (i_m j_m)); the polytabloid of t is
 * kappa_t applied to the indicator of its bottom row. Standard polytabloids
 * form a basis of the Specht module.
 */

#include "hoeffspecht/combinatorics.hpp"
#include "hoeffspecht/module_vector.hpp"

#include <utility>
#include <vector>

namespace hs {

class ColumnOperator {
public:
    /// The m pair columns of t.
    explicit ColumnOperator(Tableau const& t);

    int n() const noexcept { return n_; }
    std::vector<std::pair<int, int>> const& pairs() const noexcept { return pairs_; }

    /// f minus act((i j), f), once per pair, left to right.
    ModuleVector apply(ModuleVector const& f) const;

private:
    int n_;
    std::vector<std::pair<int, int>> pairs_;
};

ModuleVector polytabloid(Tableau const& t);

/// Polytabloids of the standard tableaux of shape (n-l, l), in the order of
/// standard_tableaux(n, l).
std::vector<ModuleVector> specht_basis(int n, int l);

/// U-statistic lift of v into M^(n-m,m); requires l <= m <= n/2.
ModuleVector lift_to_hoeffding(ModuleVector const& v, int m);

}  // namespace hs
