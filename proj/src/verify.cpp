#include "hoeffspecht/verify.hpp"

#include "hoeffspecht/characters.hpp"
#include "hoeffspecht/specht.hpp"
#include "hoeffspecht/text_format.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hs {

namespace {

std::string serialize(ModuleVector const& v) {
    std::ostringstream out;
    write_module_vector(out, v);
    return out.str();
}

std::string describe_input(std::string const& label, ModuleVector const& v) {
    return label + "\n" + serialize(v);
}

VerificationReport make_report(std::string suite, RunConfig const& config) {
    config.validate();
    VerificationReport report;
    report.suite = std::move(suite);
    report.n = config.n;
    report.m = config.m;
    report.seed = config.seed;
    report.trials = config.trials;
    return report;
}

std::vector<ModuleVector> indicator_images(int n, int m, int l) {
    std::vector<ModuleVector> images;
    for (Subset const& s : enumerate_subsets(n, m)) images.push_back(project(indicator(n, s), l));
    return images;
}

/// Kernel-route value of the l-th isotypic component at one m-subset,
/// using only pointwise conditional expectations.
Rational pointwise_component(ModuleVector const& f, CoefficientTable const& coeffs, Subset const& where, int l) {
    int const n = f.n();
    Rational const global_mean = conditional_expectation(f, Subset::empty(n));
    Rational total = 0;
    for (std::uint32_t inner : submasks_of_size(where.mask(), l)) {
        Rational kernel = 0;
        for (int a = 1; a <= l; ++a) {
            Rational sum = 0;
            for (std::uint32_t sub : submasks_of_size(inner, a)) {
                sum += conditional_expectation(f, Subset::from_mask(n, sub)) - global_mean;
            }
            kernel += coeffs.N(l, a) * sum;
        }
        total += coeffs.d(coeffs.m(), l) * kernel;
    }
    return total;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base, int trial) {
    return base + static_cast<std::uint64_t>(trial) * 0x9E3779B97F4A7C15ULL;
}

ModuleVector random_module_vector(int n, int m, std::uint64_t seed) {
    Lcg rng(seed);
    ModuleVector v(n, m);
    for (std::size_t i = 0; i < v.size(); ++i) {
        int const p = rng.uniform(-9, 9);
        int const q = rng.uniform(1, 9);
        v.at(i) = Rational(p) / Rational(q);
    }
    return v;
}

Permutation random_permutation(int n, Lcg& rng) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(rng.uniform(0, i))]);
    }
    return Permutation(std::move(images));
}

Tableau random_tableau(int n, int m, Lcg& rng) {
    auto const shuffled = random_permutation(n, rng);
    auto const& images = shuffled.images();
    std::vector<int> top(images.begin(), images.end() - m);
    std::vector<int> bottom(images.end() - m, images.end());
    return Tableau(std::move(top), std::move(bottom));
}

void RunConfig::validate() const {
    if (m < 1 || 2 * m > n || n > kMaxN) {
        throw std::domain_error("run configuration needs 1 <= m <= n/2 (got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
    }
    if (trials < 0) throw std::domain_error("trial count must be non-negative");
}

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](CheckResult const& c) { return c.passed; });
}

CheckResult const* VerificationReport::find(std::string const& name) const {
    for (auto const& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

CheckResult& VerificationReport::slot(std::string const& name) {
    for (auto& c : checks) {
        if (c.name == name) return c;
    }
    checks.push_back(CheckResult{name, true, 0, {}});
    return checks.back();
}

void VerificationReport::print(std::ostream& out) const {
    out << "suite " << suite << " n=" << n << " m=" << m << " seed=" << seed << " trials=" << trials << '\n';
    for (auto const& c : checks) {
        out << "  " << (c.passed ? "PASS" : "FAIL") << ' ' << c.name << " (" << c.evaluations << " evaluations)\n";
        if (!c.passed && !c.failure.empty()) {
            std::istringstream lines(c.failure);
            std::string line;
            while (std::getline(lines, line)) out << "    | " << line << '\n';
        }
    }
    for (auto const& note : notes) out << "  note: " << note << '\n';
    out << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["n"] = n;
    j["m"] = m;
    j["seed"] = seed;
    j["trials"] = trials;
    j["passed"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (auto const& c : checks) {
        nlohmann::ordered_json entry;
        entry["name"] = c.name;
        entry["passed"] = c.passed;
        entry["evaluations"] = c.evaluations;
        if (!c.passed) entry["failure"] = c.failure;
        j["checks"].push_back(std::move(entry));
    }
    j["notes"] = notes;
    return j.dump(2);
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

VerificationReport verify_decomposition(RunConfig const& config) {
    auto report = make_report("decomposition", config);
    int const n = config.n;
    int const m = config.m;

    {
        auto const constant = ModuleVector::constant(n, m, Rational(7, 3));
        auto const d = decompose(constant);
        bool ok = d.mean == Rational(7, 3);
        for (int l = 1; l <= m; ++l) ok = ok && is_zero(d.component(l)) && is_zero(d.kernel(l));
        report.record("constant_input", ok, [&] { return describe_input("constant input", constant); });
    }

    std::vector<std::pair<std::string, ModuleVector>> inputs;
    for (int t = 0; t < config.trials; ++t) {
        inputs.emplace_back("trial " + std::to_string(t), random_module_vector(n, m, trial_seed(config.seed, t)));
    }
    if (config.include_indicators) {
        for (Subset const& s : enumerate_subsets(n, m)) {
            inputs.emplace_back("indicator {" + s.to_string() + "}", indicator(n, s));
        }
    }

    std::uint64_t partner_seed = ~config.seed;
    for (auto const& [label, h] : inputs) {
        auto fail = [&, &label = label, &h = h] { return describe_input(label, h); };
        auto const d = decompose(h);

        report.record("reconstruction", d.reconstruct() == h, fail);

        bool orthogonal = true;
        for (int i = 0; i <= m; ++i) {
            for (int j = i + 1; j <= m; ++j) {
                orthogonal = orthogonal && sgn(inner_product(d.component(i), d.component(j))) == 0;
            }
        }
        report.record("orthogonality", orthogonal, fail);

        bool degenerate = true;
        for (int l = 1; l <= m; ++l) degenerate = degenerate && is_completely_degenerate(d.kernel(l));
        report.record("kernel_degeneracy", degenerate, fail);

        bool consistent = true;
        for (int l = 0; l <= m; ++l) consistent = consistent && project(h, l) == d.component(l);
        report.record("project_matches_decompose", consistent, fail);

        bool idempotent = true;
        for (int l = 0; l <= m; ++l) {
            auto const again = decompose(d.component(l));
            for (int j = 0; j <= m; ++j) {
                idempotent = idempotent && (j == l ? again.component(j) == d.component(l) : is_zero(again.component(j)));
            }
        }
        report.record("idempotence", idempotent, fail);

        auto const partner = random_module_vector(n, m, partner_seed++);
        auto const dp = decompose(partner);
        Rational expansion = d.mean * dp.mean;
        for (int l = 1; l <= m; ++l) expansion += inner_product(d.component(l), dp.component(l));
        report.record("covariance_expansion", inner_product(h, partner) == expansion, [&, &label = label, &h = h] {
            return describe_input(label, h) + describe_input("partner", partner);
        });
    }
    return report;
}

VerificationReport verify_equivalence(RunConfig const& config) {
    auto report = make_report("equivalence", config);
    int const n = config.n;
    int const m = config.m;
    if (n > config.ceiling) {
        throw ResourceError("equivalence suite needs n <= ceiling (" + std::to_string(config.ceiling) + ")");
    }
    CoefficientTable const coeffs(n, m);
    auto const subsets = enumerate_subsets(n, m);
    Rational const n_factorial(static_cast<unsigned long>(factorial(n)));

    // prod_{r=1}^{m-1} (n-r)/(n-r-1)
    Rational fixed_point_factor = 1;
    for (int r = 1; r <= m - 1; ++r) fixed_point_factor *= Rational(n - r) / Rational(n - r - 1);

    for (int t = 0; t < config.trials; ++t) {
        auto const f = random_module_vector(n, m, trial_seed(config.seed, t));
        auto fail = [&] { return describe_input("trial " + std::to_string(t), f); };

        for (int l = 0; l <= m; ++l) {
            auto const oracle = character_projection_oracle(f, l, config.ceiling);
            report.record("oracle_matches_kernel_l" + std::to_string(l), oracle == project(f, l), fail);
            if (l == 0) continue;
            bool pointwise = true;
            for (std::size_t k = 0; k < subsets.size() && pointwise; ++k) {
                pointwise = oracle.at(k) == pointwise_component(f, coeffs, subsets[k], l);
            }
            report.record("cexp_pointwise_l" + std::to_string(l), pointwise, fail);
        }

        // (n-1)/n! sum_x (fix(x) - 1) f(x K) against the one-point conditional means.
        Rational const global_mean = mean(f);
        std::vector<Rational> lhs(subsets.size(), Rational(0));
        for (Permutation const& x : enumerate_permutations(n, config.ceiling)) {
            int const weight = x.fixed_points() - 1;
            if (weight == 0) continue;
            for (std::size_t k = 0; k < subsets.size(); ++k) {
                lhs[k] += weight * f[Subset::from_mask(n, x.apply_to_mask(subsets[k].mask()))];
            }
        }
        bool display = true;
        for (std::size_t k = 0; k < subsets.size(); ++k) {
            Rational rhs = 0;
            for (int s : subsets[k].elements()) {
                rhs += conditional_expectation(f, Subset(n, {s})) - global_mean;
            }
            display = display && Rational(n - 1) * lhs[k] / n_factorial == fixed_point_factor * rhs;
        }
        report.record("fixed_point_display", display, fail);
    }

    for (int l = 0; l <= m; ++l) {
        auto const images = indicator_images(n, m, l);
        report.record("image_rank_l" + std::to_string(l), rank_of_span(images) == dimension(n, l));
    }
    return report;
}

Subset shifted_index_set(int n, int m, int r) {
    if (r < 0 || r > m || 2 * m - r > n) throw std::domain_error("overlap r outside [0, m]");
    std::vector<int> elements;
    for (int i = 1; i <= r; ++i) elements.push_back(i);
    for (int i = m + 1; i <= 2 * m - r; ++i) elements.push_back(i);
    return Subset(n, elements);
}

Rational shifted_permutation_average(ModuleVector const& f, ModuleVector const& h, Subset const& k, int ceiling) {
    if (!f.same_shape(h) || k.n() != f.n() || k.size() != f.l()) {
        throw std::domain_error("shifted average needs vectors and index set of one shape");
    }
    int const n = f.n();
    std::uint32_t const base = Subset::full(f.l()).mask();
    Rational total = 0;
    for (Permutation const& x : enumerate_permutations(n, ceiling)) {
        total += f[Subset::from_mask(n, x.apply_to_mask(base))] * h[Subset::from_mask(n, x.apply_to_mask(k.mask()))];
    }
    return total / Rational(static_cast<unsigned long>(factorial(n)));
}

VerificationReport verify_shift_orthogonality(RunConfig const& config) {
    auto report = make_report("shift", config);
    int const n = config.n;
    int const m = config.m;
    if (n > config.ceiling) {
        throw ResourceError("shift suite needs n <= ceiling (" + std::to_string(config.ceiling) + ")");
    }
    if (m < 2) report.notes.push_back("m = 1 has no pair of distinct orders j != l in [1, m]; nothing to assert");

    for (int t = 0; t < config.trials; ++t) {
        auto const seed_f = trial_seed(config.seed, 2 * t);
        auto const seed_h = trial_seed(config.seed, 2 * t + 1);
        auto const df = decompose(random_module_vector(n, m, seed_f));
        auto const dh = decompose(random_module_vector(n, m, seed_h));
        for (int j = 1; j <= m; ++j) {
            for (int l = 1; l <= m; ++l) {
                if (j == l) continue;
                for (int r = 0; r <= m; ++r) {
                    Subset const k = shifted_index_set(n, m, r);
                    Rational const value = shifted_permutation_average(df.component(j), dh.component(l), k, config.ceiling);
                    report.record("shift_orthogonal_j" + std::to_string(j) + "_l" + std::to_string(l) + "_r" +
                                      std::to_string(r),
                                  sgn(value) == 0, [&] {
                                      return "trial " + std::to_string(t) + ": average " + to_string(value) + "\n" +
                                             describe_input("f", df.component(j)) + describe_input("h", dh.component(l));
                                  });
                }
            }
        }
        if (t == 0) {
            // Same order on both sides: no orthogonality is claimed.
            for (int r = 0; r <= m; ++r) {
                Rational const value =
                    shifted_permutation_average(df.component(1), dh.component(1), shifted_index_set(n, m, r), config.ceiling);
                report.notes.push_back("control j=l=1 r=" + std::to_string(r) + ": average " + to_string(value) +
                                       " (not asserted)");
            }
        }
    }
    return report;
}

VerificationReport verify_specht(RunConfig const& config) {
    auto report = make_report("specht", config);
    int const n = config.n;
    int const m = config.m;
    Lcg rng(config.seed);

    {
        auto const v = polytabloid(Tableau({1, 2, 3, 4}, {5, 6}));
        ModuleVector expected(6, 2);
        expected[Subset(6, {5, 6})] += 1;
        expected[Subset(6, {1, 6})] -= 1;
        expected[Subset(6, {2, 5})] -= 1;
        expected[Subset(6, {1, 2})] += 1;
        report.record("reference_polytabloid", v == expected, [&] { return describe_input("got", v); });
    }

    for (int l = 1; 2 * l <= n; ++l) {
        auto const basis = specht_basis(n, l);
        bool const ok = basis.size() == standard_tableau_count(n, l) && rank_of_span(basis) == dimension(n, l);
        report.record("basis_rank", ok, [&] { return "l=" + std::to_string(l); });

        int const pairs = std::max(config.trials, 1);
        for (int p = 0; p < pairs; ++p) {
            auto const x = random_permutation(n, rng);
            auto const t = random_tableau(n, l, rng);
            report.record("polytabloid_equivariance", act(x, polytabloid(t)) == polytabloid(apply_perm_to_tableau(x, t)),
                          [&] { return "x=" + x.to_string() + " t=" + t.to_string(); });
        }
    }

    for (int l = 1; l <= m; ++l) {
        auto const basis = specht_basis(n, l);
        std::vector<ModuleVector> lifted;
        for (auto const& v : basis) {
            auto const lift = lift_to_hoeffding(v, m);
            auto const x = random_permutation(n, rng);
            report.record("lift_equivariance", lift_to_hoeffding(act(x, v), m) == act(x, lift),
                          [&] { return "x=" + x.to_string() + "\n" + serialize(v); });

            auto const d = decompose(lift);
            bool in_space = true;
            for (int j = 0; j <= m; ++j) in_space = in_space && (j == l ? d.component(j) == lift : is_zero(d.component(j)));
            report.record("lift_in_hoeffding_space", in_space, [&] { return serialize(v); });
            lifted.push_back(lift);
        }

        auto const images = indicator_images(n, m, l);
        auto const dim = dimension(n, l);
        auto both = lifted;
        both.insert(both.end(), images.begin(), images.end());
        std::size_t const r_lift = rank_of_span(lifted);
        std::size_t const r_image = rank_of_span(images);
        std::size_t const r_both = rank_of_span(both);
        report.record("span_identity", r_lift == dim && r_image == dim && r_both == dim, [&] {
            return "l=" + std::to_string(l) + " ranks lifted=" + std::to_string(r_lift) + " image=" +
                   std::to_string(r_image) + " union=" + std::to_string(r_both) + " expected=" + std::to_string(dim);
        });
    }
    return report;
}

}  // namespace hs
