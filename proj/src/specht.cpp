#include "hoeffspecht/specht.hpp"

#include "hoeffspecht/hoeffding.hpp"

#include <stdexcept>

namespace hs {

ColumnOperator::ColumnOperator(Tableau const& t) : n_(t.n()) {
    for (Column const& c : columns(t)) {
        if (c.is_pair()) pairs_.emplace_back(c.top, c.bottom);
    }
}

ModuleVector ColumnOperator::apply(ModuleVector const& f) const {
    if (f.n() != n_) throw std::domain_error("column operator and vector have different degree");
    ModuleVector out = f;
    for (auto const& [i, j] : pairs_) out -= act(Permutation::transposition(n_, i, j), out);
    return out;
}

ModuleVector polytabloid(Tableau const& t) {
    return ColumnOperator(t).apply(indicator(t.n(), tabloid_of(t).bottom_block));
}

std::vector<ModuleVector> specht_basis(int n, int l) {
    std::vector<ModuleVector> basis;
    for (Tableau const& t : standard_tableaux(n, l)) basis.push_back(polytabloid(t));
    return basis;
}

ModuleVector lift_to_hoeffding(ModuleVector const& v, int m) {
    if (v.l() > m || 2 * m > v.n()) throw std::domain_error("lift needs l <= m <= n/2");
    return u_statistic_lift(v, m);
}

}  // namespace hs
