#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cohen {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string notes;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

// Sizes of the graded pieces of the square-free algebra.
SuiteReport suite_basis();
// Closed shuffle expansion agrees with the recursive bracket.
SuiteReport suite_shuffle();
// Iterated commutators of units 1 + r*y are 1 + (prod r)*bracket,
// with and without integer powers on the entries.
SuiteReport suite_lemma2_10(uint64_t seed);
// The defining relation families hold in the representation.
SuiteReport suite_relations(uint64_t seed);
// (1 + y_block)^{p^r} = 1 over Z/p^r.
SuiteReport suite_torsion();
// Bracket span ranks and the multilinear-primitives intersection.
SuiteReport suite_lie_ranks();
SuiteReport suite_lie_primitives();
SuiteReport suite_lie();
// Brackets pair with their dual monomials by the identity matrix.
SuiteReport suite_pairing();
// The evaluation matrix on basis monomials has full column rank.
SuiteReport suite_theta_inj();
// Evaluation turns products into convolutions, exactly.
SuiteReport suite_theta_mul(uint64_t seed);
// Evaluations of represented words commute with comultiplication.
SuiteReport suite_coalg(uint64_t seed);
// Lifting kernel elements into higher equalizer subgroups.
SuiteReport suite_lift(uint64_t seed);
// Matrices natural in the module are exactly the slot permutations.
SuiteReport suite_naturality();

std::vector<std::string> suite_names();

// nullopt for an unknown suite name; "all" runs everything.
std::optional<std::vector<SuiteReport>> run_suites(const std::string& name, uint64_t seed);

// The thirteen reports in acceptance order.
std::vector<SuiteReport> run_all_suites(uint64_t seed);

} // namespace cohen
