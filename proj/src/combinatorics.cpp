#include "hoeffspecht/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hs {

namespace {

void require_n(int n) {
    if (n < 1 || n > kMaxN) {
        throw std::domain_error("population size " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxN) + "]");
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s) {
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return value;
}

std::vector<int> parse_int_list(std::string_view text, char sep) {
    std::vector<int> out;
    text = trim(text);
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        out.push_back(parse_int(text.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string join(std::vector<int> const& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::domain_error("factorial out of 64-bit range");
    std::uint64_t result = 1;
    for (int i = 2; i <= n; ++i) result *= static_cast<std::uint64_t>(i);
    return result;
}

// ---------------------------------------------------------------------------
// Subset
// ---------------------------------------------------------------------------

Subset::Subset(int n, std::vector<int> const& elements) : n_(n) {
    require_n(n);
    for (int e : elements) {
        if (e < 1 || e > n) {
            throw std::domain_error("subset element " + std::to_string(e) + " outside [1, " +
                                    std::to_string(n) + "]");
        }
        std::uint32_t bit = 1u << (e - 1);
        if (mask_ & bit) throw std::domain_error("repeated subset element " + std::to_string(e));
        mask_ |= bit;
    }
}

Subset Subset::from_mask(int n, std::uint32_t mask) {
    require_n(n);
    if (n < 32 && (mask >> n) != 0) throw std::domain_error("subset mask exceeds [n]");
    return Subset(FromMask{}, n, mask);
}

Subset Subset::full(int n) {
    require_n(n);
    return Subset(FromMask{}, n, static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

Subset Subset::parse(int n, std::string_view text) {
    text = trim(text);
    if (text == "{}") return empty(n);
    return Subset(n, parse_int_list(text, ','));
}

int Subset::size() const noexcept { return std::popcount(mask_); }

bool Subset::contains(int element) const noexcept {
    return element >= 1 && element <= n_ && (mask_ >> (element - 1)) & 1u;
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int k = 1; k <= n_; ++k) {
        if (contains(k)) out.push_back(k);
    }
    return out;
}

Subset Subset::complement() const { return Subset(FromMask{}, n_, full(n_).mask_ & ~mask_); }

Subset Subset::with(int element) const {
    if (element < 1 || element > n_) throw std::domain_error("element outside [n]");
    return Subset(FromMask{}, n_, mask_ | (1u << (element - 1)));
}

Subset Subset::without(int element) const {
    if (element < 1 || element > n_) throw std::domain_error("element outside [n]");
    return Subset(FromMask{}, n_, mask_ & ~(1u << (element - 1)));
}

std::size_t Subset::rank() const {
    int const l = size();
    std::uint64_t r = 0;
    int previous = 0;
    int i = 0;
    for (int c = 1; c <= n_; ++c) {
        if (!contains(c)) continue;
        ++i;
        for (int v = previous + 1; v < c; ++v) r += binomial(n_ - v, l - i);
        previous = c;
    }
    return static_cast<std::size_t>(r);
}

std::string Subset::to_string() const { return join(elements(), ','); }

std::vector<Subset> enumerate_subsets(int n, int l) {
    require_n(n);
    if (l < 0 || l > n) {
        throw std::domain_error("subset size " + std::to_string(l) + " outside [0, " +
                                std::to_string(n) + "]");
    }
    std::vector<Subset> out;
    out.reserve(static_cast<std::size_t>(binomial(n, l)));
    for (std::uint32_t mask : submasks_of_size(Subset::full(n).mask(), l)) {
        out.push_back(Subset::from_mask(n, mask));
    }
    return out;
}

Subset subset_from_rank(int n, int l, std::size_t rank) {
    require_n(n);
    if (l < 0 || l > n || rank >= binomial(n, l)) throw std::domain_error("subset rank out of range");
    std::uint32_t mask = 0;
    std::uint64_t r = rank;
    int v = 1;
    for (int i = 1; i <= l; ++i) {
        while (true) {
            std::uint64_t block = binomial(n - v, l - i);
            if (r < block) break;
            r -= block;
            ++v;
        }
        mask |= 1u << (v - 1);
        ++v;
    }
    return Subset::from_mask(n, mask);
}

std::vector<std::uint32_t> submasks_of_size(std::uint32_t within, int l) {
    std::vector<int> bits;
    for (int b = 0; b < 32; ++b) {
        if ((within >> b) & 1u) bits.push_back(b);
    }
    int const k = static_cast<int>(bits.size());
    std::vector<std::uint32_t> out;
    if (l < 0 || l > k) return out;
    out.reserve(static_cast<std::size_t>(binomial(k, l)));
    std::vector<int> idx(static_cast<std::size_t>(l));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::uint32_t mask = 0;
        for (int i : idx) mask |= 1u << bits[static_cast<std::size_t>(i)];
        out.push_back(mask);
        int pos = l - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - l + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < l; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    int const n = static_cast<int>(images_.size());
    require_n(n);
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            throw std::domain_error("image sequence is not a permutation of 1.." + std::to_string(n));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    require_n(n);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, std::vector<std::vector<int>> const& cycles) {
    Permutation result = identity(n);
    for (auto const& cycle : cycles) {
        std::vector<int> images = identity(n).images_;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i];
            int to = cycle[(i + 1) % cycle.size()];
            if (from < 1 || from > n || to < 1 || to > n) throw std::domain_error("cycle entry outside [n]");
            images[static_cast<std::size_t>(from - 1)] = to;
        }
        result = result * Permutation(std::move(images));
    }
    return result;
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a == b) throw std::domain_error("transposition needs two distinct points");
    return from_cycles(n, {{a, b}});
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t a = 0; a < images_.size(); ++a) {
        inv[static_cast<std::size_t>(images_[a] - 1)] = static_cast<int>(a + 1);
    }
    return Permutation(std::move(inv));
}

std::uint32_t Permutation::apply_to_mask(std::uint32_t mask) const noexcept {
    std::uint32_t out = 0;
    while (mask) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        out |= 1u << (images_[static_cast<std::size_t>(b)] - 1);
    }
    return out;
}

int Permutation::fixed_points() const noexcept {
    int count = 0;
    for (std::size_t a = 0; a < images_.size(); ++a) {
        if (images_[a] == static_cast<int>(a + 1)) ++count;
    }
    return count;
}

std::string Permutation::to_string() const {
    std::string out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int start = 1; start <= n(); ++start) {
        if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
        out += '(';
        int a = start;
        bool first = true;
        while (!seen[static_cast<std::size_t>(a)]) {
            seen[static_cast<std::size_t>(a)] = true;
            if (!first) out += ' ';
            out += std::to_string(a);
            first = false;
            a = (*this)(a);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(Permutation const& x, Permutation const& y) {
    if (x.n() != y.n()) throw std::domain_error("composing permutations of different degree");
    std::vector<int> images(static_cast<std::size_t>(x.n()));
    for (int a = 1; a <= x.n(); ++a) images[static_cast<std::size_t>(a - 1)] = x(y(a));
    return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// Cycle types
// ---------------------------------------------------------------------------

int CycleType::n() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string CycleType::to_string() const { return join(parts, '-'); }

CycleType CycleType::parse(std::string_view text) {
    CycleType type{parse_int_list(text, '-')};
    if (type.parts.empty()) throw std::invalid_argument("empty cycle type");
    for (std::size_t i = 0; i < type.parts.size(); ++i) {
        if (type.parts[i] < 1 || (i && type.parts[i] > type.parts[i - 1])) {
            throw std::invalid_argument("cycle type parts must be positive and weakly decreasing: '" +
                                        std::string(text) + "'");
        }
    }
    return type;
}

CycleType cycle_type(Permutation const& x) {
    CycleType type;
    std::vector<bool> seen(static_cast<std::size_t>(x.n()) + 1, false);
    for (int start = 1; start <= x.n(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int length = 0;
        for (int a = start; !seen[static_cast<std::size_t>(a)]; a = x(a)) {
            seen[static_cast<std::size_t>(a)] = true;
            ++length;
        }
        type.parts.push_back(length);
    }
    std::sort(type.parts.begin(), type.parts.end(), std::greater<>());
    return type;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<CycleType>& out) {
    if (remaining == 0) {
        out.push_back(CycleType{prefix});
        return;
    }
    for (int part = 1; part <= std::min(remaining, max_part); ++part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<CycleType> partitions(int n) {
    require_n(n);
    std::vector<CycleType> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

std::uint64_t class_size(CycleType const& type) {
    int const n = type.n();
    std::uint64_t centralizer = 1;
    std::size_t i = 0;
    while (i < type.parts.size()) {
        std::size_t j = i;
        while (j < type.parts.size() && type.parts[j] == type.parts[i]) ++j;
        auto const multiplicity = static_cast<int>(j - i);
        for (int k = 0; k < multiplicity; ++k) centralizer *= static_cast<std::uint64_t>(type.parts[i]);
        centralizer *= factorial(multiplicity);
        i = j;
    }
    return factorial(n) / centralizer;
}

Permutation representative(CycleType const& type) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int part : type.parts) {
        std::vector<int> cycle(static_cast<std::size_t>(part));
        std::iota(cycle.begin(), cycle.end(), next);
        next += part;
        if (part > 1) cycles.push_back(std::move(cycle));
    }
    return Permutation::from_cycles(type.n(), cycles);
}

std::uint64_t fixed_subset_count(CycleType const& type, int l) {
    int const n = type.n();
    if (l < 0 || l > n) throw std::domain_error("subset size outside [0, n]");
    std::vector<std::uint64_t> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = 1;
    int degree = 0;
    for (int part : type.parts) {
        for (int k = degree; k >= 0; --k) {
            poly[static_cast<std::size_t>(k + part)] += poly[static_cast<std::size_t>(k)];
        }
        degree += part;
    }
    return poly[static_cast<std::size_t>(l)];
}

std::uint64_t fixed_subset_count(Permutation const& x, int l) {
    return fixed_subset_count(cycle_type(x), l);
}

Subset apply_perm_to_subset(Permutation const& x, Subset const& s) {
    if (x.n() != s.n()) throw std::domain_error("permutation and subset have different degree");
    return Subset::from_mask(s.n(), x.apply_to_mask(s.mask()));
}

// ---------------------------------------------------------------------------
// Permutation enumeration
// ---------------------------------------------------------------------------

PermutationRange::iterator::iterator(int n) : current_(Permutation::identity(n)), done_(false) {}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
    std::vector<int> images = current_.images();
    if (std::next_permutation(images.begin(), images.end())) {
        current_ = Permutation(std::move(images));
    } else {
        done_ = true;
    }
    return *this;
}

PermutationRange enumerate_permutations(int n, int ceiling) {
    require_n(n);
    if (n > ceiling) {
        throw ResourceError("enumerating S_" + std::to_string(n) + " exceeds the brute-force ceiling " +
                            std::to_string(ceiling));
    }
    return PermutationRange(n);
}

// ---------------------------------------------------------------------------
// Tableaux
// ---------------------------------------------------------------------------

Tableau::Tableau(std::vector<int> top_row, std::vector<int> bottom_row)
    : top_(std::move(top_row)), bottom_(std::move(bottom_row)) {
    int const n = this->n();
    int const m = this->m();
    if (m < 1 || 2 * m > n) {
        throw std::domain_error("tableau shape (" + std::to_string(n - m) + "," + std::to_string(m) +
                                ") needs 1 <= m <= n/2");
    }
    std::vector<int> all = top_;
    all.insert(all.end(), bottom_.begin(), bottom_.end());
    std::sort(all.begin(), all.end());
    for (int k = 0; k < n; ++k) {
        if (all[static_cast<std::size_t>(k)] != k + 1) {
            throw std::domain_error("tableau entries must be exactly 1.." + std::to_string(n));
        }
    }
}

Tableau Tableau::parse(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw std::invalid_argument("tableau needs 'top;bottom'");
    return Tableau(parse_int_list(text.substr(0, semi), ','), parse_int_list(text.substr(semi + 1), ','));
}

std::string Tableau::to_string() const { return join(top_, ',') + ";" + join(bottom_, ','); }

std::vector<Column> columns(Tableau const& t) {
    std::vector<Column> out;
    auto const& top = t.top_row();
    auto const& bottom = t.bottom_row();
    for (std::size_t k = 0; k < top.size(); ++k) {
        out.push_back(Column{top[k], k < bottom.size() ? bottom[k] : 0});
    }
    return out;
}

Tabloid tabloid_of(Tableau const& t) { return Tabloid{Subset(t.n(), t.bottom_row())}; }

Tableau apply_perm_to_tableau(Permutation const& x, Tableau const& t) {
    if (x.n() != t.n()) throw std::domain_error("permutation and tableau have different degree");
    auto map = [&](std::vector<int> row) {
        for (int& v : row) v = x(v);
        return row;
    };
    return Tableau(map(t.top_row()), map(t.bottom_row()));
}

std::vector<Tableau> standard_tableaux(int n, int l) {
    if (l < 1 || 2 * l > n) throw std::domain_error("standard tableaux need 1 <= l <= n/2");
    std::vector<Tableau> out;
    for (Subset const& bottom : enumerate_subsets(n, l)) {
        std::vector<int> b = bottom.elements();
        std::vector<int> top = bottom.complement().elements();
        bool ok = true;
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (top[k] >= b[k]) {
                ok = false;
                break;
            }
        }
        if (ok) out.emplace_back(std::move(top), std::move(b));
    }
    return out;
}

std::uint64_t standard_tableau_count(int n, int l) {
    require_n(n);
    if (l < 0 || 2 * l > n) throw std::domain_error("standard tableau count needs 0 <= l <= n/2");
    if (l == 0) return 1;
    return standard_tableaux(n, l).size();
}

}  // namespace hs
