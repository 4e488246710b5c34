#pragma once

/**
 * @file verify.hpp
 * @brief Exact verification suites relating Hoeffding spaces, isotypic
 *        projections and two-block Specht modules.
 *
 * Each suite is deterministic in (n, m, seed, trials): inputs come from the
 * 64-bit LCG below, and every check is an exact rational identity.
 */

#include "hoeffspecht/combinatorics.hpp"
#include "hoeffspecht/hoeffding.hpp"
#include "hoeffspecht/module_vector.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hs {

/// Knuth's MMIX LCG: state' = 6364136223846793005 * state + 1442695040888963407
/// (mod 2^64); each draw returns the high 32 bits of the new state.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint32_t next() {
        state_ = 6364136223846793005ULL * state_ + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state_ >> 32);
    }
    /// Uniform on [lo, hi] up to modulo bias.
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint32_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Seed of trial t derived from a base seed (base + t * golden-ratio constant).
std::uint64_t trial_seed(std::uint64_t base, int trial);

/// Entries p/q in canonical subset order, p uniform on [-9, 9], q on [1, 9];
/// two draws per entry (numerator first).
ModuleVector random_module_vector(int n, int m, std::uint64_t seed);

/// Fisher-Yates shuffle of the identity driven by rng.
Permutation random_permutation(int n, Lcg& rng);

/// Random tableau of shape (n-m, m): a shuffled 1..n split into rows.
Tableau random_tableau(int n, int m, Lcg& rng);

struct RunConfig {
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    int ceiling = kDefaultOracleCeiling;
    /// Also run the decomposition suite on every indicator vector.
    bool include_indicators = false;

    /// Throws std::domain_error unless 1 <= m <= n/2 and trials >= 0.
    void validate() const;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t evaluations = 0;
    std::string failure;   // first failing input, serialized
};

struct VerificationReport {
    std::string suite;
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;   // informational, never asserted

    bool passed() const;
    CheckResult const* find(std::string const& name) const;

    /// Records one evaluation of a named check. `describe` is only called on
    /// the first failure of that check.
    template <class Describe>
    void record(std::string const& name, bool ok, Describe&& describe) {
        CheckResult& check = slot(name);
        ++check.evaluations;
        if (!ok && check.passed) {
            check.passed = false;
            check.failure = describe();
        }
    }
    void record(std::string const& name, bool ok) {
        record(name, ok, [] { return std::string{}; });
    }

    void print(std::ostream& out) const;
    std::string to_json() const;

private:
    CheckResult& slot(std::string const& name);
};

VerificationReport verify_decomposition(RunConfig const& config);
VerificationReport verify_equivalence(RunConfig const& config);
VerificationReport verify_shift_orthogonality(RunConfig const& config);
VerificationReport verify_specht(RunConfig const& config);

/// (1/n!) sum over x in S_n of f(x [m]) * h(x k) for a fixed m-subset k.
Rational shifted_permutation_average(ModuleVector const& f, ModuleVector const& h, Subset const& k,
                                     int ceiling = kDefaultOracleCeiling);

/// The index set {1..r, m+1..2m-r} with r points shared with [m].
Subset shifted_index_set(int n, int m, int r);

}  // namespace hs
