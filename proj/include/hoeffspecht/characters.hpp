#pragma once

/**
 * @file characters.hpp
 * @brief Irreducible characters of S_n for the two-row shapes (n-l, l).
 *
 * The permutation character of M^(n-l,l) counts setwise-fixed l-subsets and
 * splits as the sum of chi^(n-k,k) over k <= l, so each two-row character is
 * the telescoping difference of consecutive fixed-subset counts.
 */

#include "hoeffspecht/combinatorics.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace hs {

std::int64_t two_row_character(int l, CycleType const& type);
std::int64_t two_row_character(int l, Permutation const& x);

/// C(n,l) - C(n,l-1); throws std::domain_error unless 0 <= l <= n/2.
std::uint64_t dimension(int n, int l);

struct CharacterTableRow {
    CycleType type;
    std::uint64_t class_size = 0;
    std::vector<std::int64_t> values;   // chi^(n-l,l) for l = 0..max_l
};

struct CharacterTable {
    int n = 0;
    int max_l = 0;
    std::vector<CharacterTableRow> rows;   // partitions of n, ascending lexicographic
};

CharacterTable character_table(int n, int max_l);

/// CSV with header "cycle_type,class_size,chi_0,...,chi_<max_l>".
void write_character_table_csv(std::ostream& out, CharacterTable const& table);

}  // namespace hs
