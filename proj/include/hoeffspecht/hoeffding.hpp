#pragma once

/**
 * @file hoeffding.hpp
 * @brief Exact Hoeffding decomposition of symmetric statistics of a sample
 *        of size m drawn without replacement from [n].
 *
 * A symmetric statistic is a ModuleVector h on the m-subsets of [n]. Its
 * component in the l-th symmetric Hoeffding space is the U-statistic lift of
 * a completely degenerate kernel of order l,
 *
 *   phi_l(J) = d[m,l] * sum_{a=1..l} N[l,a] * sum_{A subset J, |A|=a} (E[h | A] - E[h]),
 *
 * where E[h | A] averages h over the m-subsets containing A. The cost is
 * binomial in n, against the n! of the group-averaged character projection,
 * which is kept here as a brute-force oracle.
 */

#include "hoeffspecht/combinatorics.hpp"
#include "hoeffspecht/module_vector.hpp"
#include "hoeffspecht/rational.hpp"

#include <vector>

namespace hs {

inline constexpr int kDefaultOracleCeiling = 8;

/// The d_{l,j} and N_{l,j} rationals for 1 <= j <= l <= m (zero above the diagonal).
class CoefficientTable {
public:
    CoefficientTable(int n, int m);

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    Rational const& d(int l, int j) const;
    Rational const& N(int l, int j) const;

private:
    int n_;
    int m_;
    std::vector<std::vector<Rational>> d_;
    std::vector<std::vector<Rational>> N_;
};

/// Throws std::domain_error unless 1 <= m <= n/2.
CoefficientTable coefficient_table(int n, int m);

/// E[h(X) | the sample contains `assigned`]: the average of h(assigned + S)
/// over the (m-a)-subsets S of the complement. The empty set gives E[h].
Rational conditional_expectation(ModuleVector const& h, Subset const& assigned);

/// Completely degenerate kernel of order l (1 <= l <= m) of h.
ModuleVector hoeffding_kernel(ModuleVector const& h, int l);

/// f(K) = sum of phi(J) over the l-subsets J of K, for every m-subset K.
ModuleVector u_statistic_lift(ModuleVector const& phi, int m);

/// Orthogonal projection of h onto the l-th symmetric Hoeffding space;
/// l = 0 gives the constant vector E[h].
ModuleVector project(ModuleVector const& h, int l);

/// True iff sum_{j not in A} phi(A + {j}) = 0 for every (l-1)-subset A.
bool is_completely_degenerate(ModuleVector const& phi);

struct HoeffdingDecomposition {
    int n = 0;
    int m = 0;
    Rational mean;
    std::vector<ModuleVector> kernels;      // kernels[l-1] has order l, l = 1..m
    std::vector<ModuleVector> components;   // components[l], l = 0..m

    ModuleVector const& kernel(int l) const { return kernels.at(static_cast<std::size_t>(l - 1)); }
    ModuleVector const& component(int l) const { return components.at(static_cast<std::size_t>(l)); }
    /// Sum of all components; equals the decomposed vector.
    ModuleVector reconstruct() const;
};

/// All kernels and components of h at once, sharing the conditional means.
HoeffdingDecomposition decompose(ModuleVector const& h);

/// Isotypic projection of f onto the chi^(n-l,l) component by literal
/// summation over S_n: (D / n!) sum_x chi(x) f(x^-1 K). Throws ResourceError
/// when n exceeds the ceiling.
ModuleVector character_projection_oracle(ModuleVector const& f, int l,
                                         int ceiling = kDefaultOracleCeiling);

}  // namespace hs
