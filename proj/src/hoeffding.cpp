#include "hoeffspecht/hoeffding.hpp"

#include "hoeffspecht/characters.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hs {

namespace {

void require_sample_shape(int n, int m) {
    if (m < 1 || 2 * m > n) {
        throw std::domain_error("sample size m=" + std::to_string(m) + " needs 1 <= m <= n/2 (n=" +
                                std::to_string(n) + ")");
    }
}

std::size_t rank_of_mask(int n, std::uint32_t mask) { return Subset::from_mask(n, mask).rank(); }

/// means[a][rank(A)] = E[h | A] for every a-subset A, a = 0..max_a.
std::vector<std::vector<Rational>> conditional_means(ModuleVector const& h, int max_a) {
    int const n = h.n();
    int const m = h.l();
    std::vector<std::vector<Rational>> sums(static_cast<std::size_t>(max_a) + 1);
    for (int a = 0; a <= max_a; ++a) sums[static_cast<std::size_t>(a)].assign(binomial(n, a), Rational(0));

    auto const subsets = enumerate_subsets(n, m);
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        Rational const& value = h.at(k);
        if (sgn(value) == 0) continue;
        for (int a = 0; a <= max_a; ++a) {
            for (std::uint32_t sub : submasks_of_size(subsets[k].mask(), a)) {
                sums[static_cast<std::size_t>(a)][rank_of_mask(n, sub)] += value;
            }
        }
    }
    for (int a = 0; a <= max_a; ++a) {
        Rational const count(static_cast<unsigned long>(binomial(n - a, m - a)));
        for (auto& s : sums[static_cast<std::size_t>(a)]) s /= count;
    }
    return sums;
}

ModuleVector kernel_from_means(CoefficientTable const& coeffs, std::vector<std::vector<Rational>> const& means,
                               int l) {
    int const n = coeffs.n();
    Rational const& global_mean = means[0][0];
    ModuleVector phi(n, l);
    auto const subsets = enumerate_subsets(n, l);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        Rational total = 0;
        for (int a = 1; a <= l; ++a) {
            Rational inner = 0;
            for (std::uint32_t sub : submasks_of_size(subsets[i].mask(), a)) {
                inner += means[static_cast<std::size_t>(a)][rank_of_mask(n, sub)] - global_mean;
            }
            total += coeffs.N(l, a) * inner;
        }
        phi.at(i) = coeffs.d(coeffs.m(), l) * total;
    }
    return phi;
}

}  // namespace

CoefficientTable::CoefficientTable(int n, int m) : n_(n), m_(m) {
    require_sample_shape(n, m);
    auto const size = static_cast<std::size_t>(m) + 1;
    d_.assign(size, std::vector<Rational>(size, Rational(0)));
    N_.assign(size, std::vector<Rational>(size, Rational(0)));
    for (int l = 1; l <= m; ++l) {
        d_[l][l] = 1;
        N_[l][l] = 1;
        for (int j = 1; j < l; ++j) {
            Rational product = 1;
            for (int r = j; r <= l - 1; ++r) product *= Rational(n - r) / Rational(n - r - j);
            d_[l][j] = product;
        }
    }
    for (int l = 2; l <= m; ++l) {
        for (int j = 1; j < l; ++j) {
            Rational sum = 0;
            for (int i = j; i <= l - 1; ++i) {
                sum += Rational(static_cast<unsigned long>(binomial(l - j, i - j))) * d_[l][i] * N_[i][j];
            }
            N_[l][j] = -sum;
        }
    }
}

Rational const& CoefficientTable::d(int l, int j) const {
    if (l < 1 || l > m_ || j < 1 || j > l) throw std::out_of_range("d index out of range");
    return d_[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
}

Rational const& CoefficientTable::N(int l, int j) const {
    if (l < 1 || l > m_ || j < 1 || j > l) throw std::out_of_range("N index out of range");
    return N_[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
}

CoefficientTable coefficient_table(int n, int m) { return CoefficientTable(n, m); }

Rational conditional_expectation(ModuleVector const& h, Subset const& assigned) {
    int const n = h.n();
    int const m = h.l();
    if (assigned.n() != n) throw std::domain_error("conditioning subset has the wrong degree");
    int const a = assigned.size();
    if (a > m) {
        throw std::domain_error("cannot condition on " + std::to_string(a) + " draws of a sample of size " +
                                std::to_string(m));
    }
    Rational total = 0;
    auto const rest = submasks_of_size(assigned.complement().mask(), m - a);
    for (std::uint32_t s : rest) total += h[Subset::from_mask(n, assigned.mask() | s)];
    return total / Rational(static_cast<unsigned long>(rest.size()));
}

ModuleVector hoeffding_kernel(ModuleVector const& h, int l) {
    CoefficientTable const coeffs(h.n(), h.l());
    if (l < 1 || l > h.l()) throw std::domain_error("kernel order outside [1, m]");
    return kernel_from_means(coeffs, conditional_means(h, l), l);
}

ModuleVector u_statistic_lift(ModuleVector const& phi, int m) {
    int const n = phi.n();
    int const l = phi.l();
    if (l > m || m > n) throw std::domain_error("lift needs l <= m <= n");
    ModuleVector out(n, m);
    auto const subsets = enumerate_subsets(n, m);
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        Rational total = 0;
        for (std::uint32_t sub : submasks_of_size(subsets[k].mask(), l)) total += phi.at(rank_of_mask(n, sub));
        out.at(k) = total;
    }
    return out;
}

ModuleVector project(ModuleVector const& h, int l) {
    require_sample_shape(h.n(), h.l());
    if (l < 0 || l > h.l()) throw std::domain_error("projection order outside [0, m]");
    if (l == 0) return ModuleVector::constant(h.n(), h.l(), mean(h));
    return u_statistic_lift(hoeffding_kernel(h, l), h.l());
}

bool is_completely_degenerate(ModuleVector const& phi) {
    int const n = phi.n();
    int const l = phi.l();
    if (l < 1) throw std::domain_error("degeneracy needs a kernel of order >= 1");
    for (Subset const& base : enumerate_subsets(n, l - 1)) {
        Rational total = 0;
        for (int j : base.complement().elements()) total += phi[base.with(j)];
        if (sgn(total) != 0) return false;
    }
    return true;
}

ModuleVector HoeffdingDecomposition::reconstruct() const {
    ModuleVector total(n, m);
    for (auto const& c : components) total += c;
    return total;
}

HoeffdingDecomposition decompose(ModuleVector const& h) {
    int const n = h.n();
    int const m = h.l();
    CoefficientTable const coeffs(n, m);
    auto const means = conditional_means(h, m);

    HoeffdingDecomposition out;
    out.n = n;
    out.m = m;
    out.mean = means[0][0];
    out.components.push_back(ModuleVector::constant(n, m, out.mean));
    for (int l = 1; l <= m; ++l) {
        out.kernels.push_back(kernel_from_means(coeffs, means, l));
        out.components.push_back(u_statistic_lift(out.kernels.back(), m));
    }
    return out;
}

ModuleVector character_projection_oracle(ModuleVector const& f, int l, int ceiling) {
    int const n = f.n();
    int const m = f.l();
    if (l < 0 || l > m || 2 * l > n) throw std::domain_error("oracle shape outside [0, m]");

    // weights[K][K'] = sum of chi(x) over the x with x^-1 K = K'; integer
    // accumulation keeps the n!-term sum exact and cheap.
    std::size_t const size = f.size();
    std::vector<std::int64_t> weights(size * size, 0);
    auto const subsets = enumerate_subsets(n, m);
    for (Permutation const& x : enumerate_permutations(n, ceiling)) {
        std::int64_t const chi = two_row_character(l, x);
        if (chi == 0) continue;
        Permutation const x_inv = x.inverse();
        for (std::size_t k = 0; k < size; ++k) {
            weights[k * size + rank_of_mask(n, x_inv.apply_to_mask(subsets[k].mask()))] += chi;
        }
    }

    Rational const factor = Rational(static_cast<unsigned long>(dimension(n, l))) /
                            Rational(static_cast<unsigned long>(factorial(n)));
    ModuleVector out(n, m);
    for (std::size_t k = 0; k < size; ++k) {
        Rational total = 0;
        for (std::size_t j = 0; j < size; ++j) {
            std::int64_t const w = weights[k * size + j];
            if (w != 0) total += Rational(static_cast<long>(w)) * f.at(j);
        }
        out.at(k) = factor * total;
    }
    return out;
}

}  // namespace hs
