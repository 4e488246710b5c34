#include "hoeffspecht/characters.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace hs {

namespace {

void require_two_row(int n, int l) {
    if (l < 0 || 2 * l > n) {
        throw std::domain_error("shape (" + std::to_string(n - l) + "," + std::to_string(l) +
                                ") is not a two-row partition of " + std::to_string(n));
    }
}

}  // namespace

std::int64_t two_row_character(int l, CycleType const& type) {
    require_two_row(type.n(), l);
    if (l == 0) return 1;
    return static_cast<std::int64_t>(fixed_subset_count(type, l)) -
           static_cast<std::int64_t>(fixed_subset_count(type, l - 1));
}

std::int64_t two_row_character(int l, Permutation const& x) { return two_row_character(l, cycle_type(x)); }

std::uint64_t dimension(int n, int l) {
    require_two_row(n, l);
    return binomial(n, l) - binomial(n, l - 1);
}

CharacterTable character_table(int n, int max_l) {
    require_two_row(n, max_l);
    CharacterTable table{n, max_l, {}};
    for (CycleType const& type : partitions(n)) {
        CharacterTableRow row{type, class_size(type), {}};
        for (int l = 0; l <= max_l; ++l) row.values.push_back(two_row_character(l, type));
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_character_table_csv(std::ostream& out, CharacterTable const& table) {
    out << "cycle_type,class_size";
    for (int l = 0; l <= table.max_l; ++l) out << ",chi_" << l;
    out << '\n';
    for (auto const& row : table.rows) {
        out << row.type.to_string() << ',' << row.class_size;
        for (auto v : row.values) out << ',' << v;
        out << '\n';
    }
}

}  // namespace hs
