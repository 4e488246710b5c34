#pragma once

/**
 * @file combinatorics.hpp
 * @brief Subsets, permutations, cycle types and two-row tableaux of [n].
 *
 * Everything here is 1-based: the population is [n] = {1, ..., n}. Subsets
 * are stored as bitmasks (bit k-1 set iff k is an element), which caps the
 * population size at kMaxN.
 */

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hs {

inline constexpr int kMaxN = 30;
inline constexpr int kDefaultPermutationCeiling = 9;

/// Thrown when a factorial-cost enumeration exceeds its configured ceiling.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

/// n!; throws std::domain_error when it does not fit in 64 bits (n > 20).
std::uint64_t factorial(int n);

// ---------------------------------------------------------------------------
// Subset
// ---------------------------------------------------------------------------

class Subset {
public:
    Subset() = default;

    /// Elements need not be sorted; duplicates or out-of-range values throw.
    Subset(int n, std::vector<int> const& elements);

    static Subset from_mask(int n, std::uint32_t mask);
    static Subset empty(int n) { return from_mask(n, 0); }
    static Subset full(int n);
    /// Parses the comma form "1,4,7" ("" or "{}" is the empty set).
    static Subset parse(int n, std::string_view text);

    int n() const noexcept { return n_; }
    int size() const noexcept;
    std::uint32_t mask() const noexcept { return mask_; }
    bool contains(int element) const noexcept;
    bool is_subset_of(Subset const& other) const noexcept {
        return (mask_ & ~other.mask_) == 0;
    }

    /// Sorted ascending.
    std::vector<int> elements() const;
    Subset complement() const;
    Subset with(int element) const;
    Subset without(int element) const;

    /// Position in enumerate_subsets(n, size()).
    std::size_t rank() const;

    std::string to_string() const;

    friend bool operator==(Subset const&, Subset const&) = default;

private:
    struct FromMask {};
    Subset(FromMask, int n, std::uint32_t mask) : n_(n), mask_(mask) {}

    int n_ = 0;
    std::uint32_t mask_ = 0;
};

/// All l-subsets of [n] in lexicographic order of their sorted elements.
std::vector<Subset> enumerate_subsets(int n, int l);

/// Inverse of Subset::rank for a given (n, l).
Subset subset_from_rank(int n, int l, std::size_t rank);

/// Masks of every l-subset contained in `within`, lexicographic order.
std::vector<std::uint32_t> submasks_of_size(std::uint32_t within, int l);

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

struct CycleType;

class Permutation {
public:
    Permutation() = default;

    /// images[a-1] = x(a); must be a rearrangement of 1..n.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Product of the given cycles on [n], e.g. {{1, 2, 3}, {4, 5}}.
    static Permutation from_cycles(int n, std::vector<std::vector<int>> const& cycles);
    static Permutation transposition(int n, int a, int b);

    int n() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int a) const { return images_[static_cast<std::size_t>(a - 1)]; }
    std::vector<int> const& images() const noexcept { return images_; }

    Permutation inverse() const;
    /// Image mask of a subset mask under this permutation.
    std::uint32_t apply_to_mask(std::uint32_t mask) const noexcept;
    int fixed_points() const noexcept;

    /// Cycle notation without fixed points, e.g. "(1 2 3)(4 5)"; "()" for e.
    std::string to_string() const;

    friend bool operator==(Permutation const&, Permutation const&) = default;

private:
    std::vector<int> images_;
};

/// (xy)(a) = x(y(a)).
Permutation operator*(Permutation const& x, Permutation const& y);

// ---------------------------------------------------------------------------
// Cycle types
// ---------------------------------------------------------------------------

struct CycleType {
    std::vector<int> parts;   // weakly decreasing, positive, summing to n

    int n() const noexcept;
    /// Dash form "3-2-1-1".
    std::string to_string() const;
    static CycleType parse(std::string_view text);

    friend bool operator==(CycleType const&, CycleType const&) = default;
    friend auto operator<=>(CycleType const&, CycleType const&) = default;
};

CycleType cycle_type(Permutation const& x);

/// Every partition of n, ascending lexicographically on the parts
/// ((1,1,1,1) first, (n) last).
std::vector<CycleType> partitions(int n);

/// Size of the conjugacy class n! / (prod parts * prod multiplicities!).
std::uint64_t class_size(CycleType const& type);

/// A permutation with the given cycle type (cycles filled with 1, 2, ... in order).
Permutation representative(CycleType const& type);

/// Number of l-subsets setwise fixed by x: the z^l coefficient of
/// prod over cycles of (1 + z^length).
std::uint64_t fixed_subset_count(CycleType const& type, int l);
std::uint64_t fixed_subset_count(Permutation const& x, int l);

Subset apply_perm_to_subset(Permutation const& x, Subset const& s);

// ---------------------------------------------------------------------------
// Permutation enumeration
// ---------------------------------------------------------------------------

/// Forward range over S_n in lexicographic order of the image sequence.
class PermutationRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Permutation;
        using difference_type = std::ptrdiff_t;
        using pointer = Permutation const*;
        using reference = Permutation const&;

        iterator() = default;
        explicit iterator(int n);

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(iterator const& a, iterator const& b) {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }

    private:
        Permutation current_;
        bool done_ = true;
    };

    explicit PermutationRange(int n) : n_(n) {}
    iterator begin() const { return iterator(n_); }
    iterator end() const { return {}; }

private:
    int n_;
};

/// All n! permutations; throws ResourceError when n > ceiling.
PermutationRange enumerate_permutations(int n, int ceiling = kDefaultPermutationCeiling);

// ---------------------------------------------------------------------------
// Two-row tableaux
// ---------------------------------------------------------------------------

/// Ordered two-row arrangement of [n] of shape (n-m, m), 1 <= m <= n/2.
class Tableau {
public:
    Tableau(std::vector<int> top_row, std::vector<int> bottom_row);
    /// Two semicolon-separated comma lists, "2,1,3;5,4".
    static Tableau parse(std::string_view text);

    int n() const noexcept { return static_cast<int>(top_.size() + bottom_.size()); }
    int m() const noexcept { return static_cast<int>(bottom_.size()); }
    std::vector<int> const& top_row() const noexcept { return top_; }
    std::vector<int> const& bottom_row() const noexcept { return bottom_; }

    std::string to_string() const;

    friend bool operator==(Tableau const&, Tableau const&) = default;

private:
    std::vector<int> top_;
    std::vector<int> bottom_;
};

/// One column of a tableau: a (top, bottom) pair for the first m columns,
/// a singleton top entry afterwards (bottom == 0).
struct Column {
    int top = 0;
    int bottom = 0;

    bool is_pair() const noexcept { return bottom != 0; }
    friend bool operator==(Column const&, Column const&) = default;
};

std::vector<Column> columns(Tableau const& t);

/// Unordered version of a tableau, identified with its bottom block.
struct Tabloid {
    Subset bottom_block;

    Subset top_block() const { return bottom_block.complement(); }
    friend bool operator==(Tabloid const&, Tabloid const&) = default;
};

Tabloid tabloid_of(Tableau const& t);

/// Entry-wise image x t.
Tableau apply_perm_to_tableau(Permutation const& x, Tableau const& t);

/// Tableaux of shape (n-l, l) with increasing rows and columns, ordered
/// lexicographically on the bottom row. l = 0 is rejected (no bottom row).
std::vector<Tableau> standard_tableaux(int n, int l);

/// Number of standard tableaux of shape (n-l, l), by enumeration; 1 for l = 0.
std::uint64_t standard_tableau_count(int n, int l);

}  // namespace hs
