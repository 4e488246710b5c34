#pragma once

/**
 * @file module_vector.hpp
 * @brief Exact vectors of the permutation module M^(n-l,l).
 *
 * A ModuleVector is a rational-valued function on the l-subsets of [n],
 * stored densely in the canonical (lexicographic) subset order. The symmetric
 * group acts by (x f)(K) = f(x^-1 K), and the inner product is the uniform
 * average <f, g> = C(n,l)^-1 sum_K f(K) g(K).
 */

#include "hoeffspecht/combinatorics.hpp"
#include "hoeffspecht/rational.hpp"

#include <cstddef>
#include <vector>

namespace hs {

class ModuleVector {
public:
    ModuleVector() = default;

    /// Zero vector on the l-subsets of [n].
    ModuleVector(int n, int l);
    /// Takes C(n,l) values in canonical subset order.
    ModuleVector(int n, int l, std::vector<Rational> values);

    static ModuleVector constant(int n, int l, Rational const& value);

    int n() const noexcept { return n_; }
    int l() const noexcept { return l_; }
    std::size_t size() const noexcept { return values_.size(); }

    Rational const& operator[](Subset const& s) const { return values_[checked_rank(s)]; }
    Rational& operator[](Subset const& s) { return values_[checked_rank(s)]; }
    Rational const& at(std::size_t index) const { return values_.at(index); }
    Rational& at(std::size_t index) { return values_.at(index); }

    std::vector<Rational> const& values() const noexcept { return values_; }

    bool same_shape(ModuleVector const& other) const noexcept {
        return n_ == other.n_ && l_ == other.l_;
    }

    ModuleVector& operator+=(ModuleVector const& other);
    ModuleVector& operator-=(ModuleVector const& other);
    ModuleVector& operator*=(Rational const& c);

    friend bool operator==(ModuleVector const&, ModuleVector const&) = default;

private:
    std::size_t checked_rank(Subset const& s) const;

    int n_ = 0;
    int l_ = 0;
    std::vector<Rational> values_;
};

ModuleVector indicator(int n, Subset const& s);

ModuleVector add(ModuleVector const& f, ModuleVector const& g);
ModuleVector subtract(ModuleVector const& f, ModuleVector const& g);
ModuleVector scale(Rational const& c, ModuleVector const& f);
bool is_zero(ModuleVector const& f);

inline ModuleVector operator+(ModuleVector const& f, ModuleVector const& g) { return add(f, g); }
inline ModuleVector operator-(ModuleVector const& f, ModuleVector const& g) { return subtract(f, g); }
inline ModuleVector operator*(Rational const& c, ModuleVector const& f) { return scale(c, f); }

/// Uniform mean of the entries, i.e. <f, 1>.
Rational mean(ModuleVector const& f);

/// (x f)(K) = f(x^-1 K); act(x, indicator(J)) = indicator(x J).
ModuleVector act(Permutation const& x, ModuleVector const& f);

/// C(n,l)^-1 sum_K f(K) g(K). Real scalars, so there is no conjugation.
Rational inner_product(ModuleVector const& f, ModuleVector const& g);

/// Dimension of the span, by exact Gaussian elimination. Pivots are taken in
/// canonical subset order, first remaining vector with a nonzero entry.
std::size_t rank_of_span(std::vector<ModuleVector> const& vectors);

struct GramMatrix {
    std::vector<std::vector<Rational>> entries;

    std::size_t size() const noexcept { return entries.size(); }
    Rational const& operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

GramMatrix gram_matrix(std::vector<ModuleVector> const& vectors);

}  // namespace hs
