#include "hoeffspecht/module_vector.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace hs {

namespace {

void require_shape(int n, int l) {
    if (n < 1 || n > kMaxN || l < 0 || l > n) {
        throw std::domain_error("module shape (n=" + std::to_string(n) + ", l=" + std::to_string(l) +
                                ") is invalid");
    }
}

void require_same_shape(ModuleVector const& f, ModuleVector const& g) {
    if (!f.same_shape(g)) {
        throw std::domain_error("module vectors of different shape: (" + std::to_string(f.n()) + "," +
                                std::to_string(f.l()) + ") vs (" + std::to_string(g.n()) + "," +
                                std::to_string(g.l()) + ")");
    }
}

}  // namespace

ModuleVector::ModuleVector(int n, int l) : n_(n), l_(l) {
    require_shape(n, l);
    values_.assign(static_cast<std::size_t>(binomial(n, l)), Rational(0));
}

ModuleVector::ModuleVector(int n, int l, std::vector<Rational> values)
    : n_(n), l_(l), values_(std::move(values)) {
    require_shape(n, l);
    if (values_.size() != binomial(n, l)) {
        throw std::domain_error("expected " + std::to_string(binomial(n, l)) + " values, got " +
                                std::to_string(values_.size()));
    }
}

ModuleVector ModuleVector::constant(int n, int l, Rational const& value) {
    ModuleVector v(n, l);
    for (auto& x : v.values_) x = value;
    return v;
}

std::size_t ModuleVector::checked_rank(Subset const& s) const {
    if (s.n() != n_ || s.size() != l_) {
        throw std::domain_error("subset {" + s.to_string() + "} does not index M^(" +
                                std::to_string(n_ - l_) + "," + std::to_string(l_) + ")");
    }
    return s.rank();
}

ModuleVector& ModuleVector::operator+=(ModuleVector const& other) {
    require_same_shape(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

ModuleVector& ModuleVector::operator-=(ModuleVector const& other) {
    require_same_shape(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

ModuleVector& ModuleVector::operator*=(Rational const& c) {
    for (auto& v : values_) v *= c;
    return *this;
}

ModuleVector indicator(int n, Subset const& s) {
    if (s.n() != n) throw std::domain_error("indicator subset has the wrong degree");
    ModuleVector v(n, s.size());
    v[s] = 1;
    return v;
}

ModuleVector add(ModuleVector const& f, ModuleVector const& g) {
    ModuleVector out = f;
    out += g;
    return out;
}

ModuleVector subtract(ModuleVector const& f, ModuleVector const& g) {
    ModuleVector out = f;
    out -= g;
    return out;
}

ModuleVector scale(Rational const& c, ModuleVector const& f) {
    ModuleVector out = f;
    out *= c;
    return out;
}

bool is_zero(ModuleVector const& f) {
    for (auto const& v : f.values()) {
        if (sgn(v) != 0) return false;
    }
    return true;
}

Rational mean(ModuleVector const& f) {
    Rational total = 0;
    for (auto const& v : f.values()) total += v;
    return total / Rational(static_cast<unsigned long>(f.size()));
}

ModuleVector act(Permutation const& x, ModuleVector const& f) {
    if (x.n() != f.n()) throw std::domain_error("permutation degree differs from module degree");
    ModuleVector out(f.n(), f.l());
    auto const subsets = enumerate_subsets(f.n(), f.l());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        // g(x K) = f(K)
        auto image = Subset::from_mask(f.n(), x.apply_to_mask(subsets[i].mask()));
        out.at(image.rank()) = f.at(i);
    }
    return out;
}

Rational inner_product(ModuleVector const& f, ModuleVector const& g) {
    require_same_shape(f, g);
    Rational total = 0;
    for (std::size_t i = 0; i < f.size(); ++i) total += f.at(i) * g.at(i);
    return total / Rational(static_cast<unsigned long>(f.size()));
}

std::size_t rank_of_span(std::vector<ModuleVector> const& vectors) {
    if (vectors.empty()) return 0;
    for (auto const& v : vectors) require_same_shape(vectors.front(), v);

    std::vector<std::vector<Rational>> rows;
    rows.reserve(vectors.size());
    for (auto const& v : vectors) rows.push_back(v.values());

    std::size_t const cols = vectors.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational const inv = 1 / rows[rank][c];
        for (std::size_t k = c; k < cols; ++k) rows[rank][k] *= inv;
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (sgn(rows[r][c]) == 0) continue;
            Rational const factor = rows[r][c];
            for (std::size_t k = c; k < cols; ++k) {
                if (sgn(rows[rank][k]) != 0) rows[r][k] -= factor * rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

GramMatrix gram_matrix(std::vector<ModuleVector> const& vectors) {
    GramMatrix g;
    g.entries.assign(vectors.size(), std::vector<Rational>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i; j < vectors.size(); ++j) {
            g.entries[i][j] = inner_product(vectors[i], vectors[j]);
            g.entries[j][i] = g.entries[i][j];
        }
    }
    return g;
}

}  // namespace hs
