#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gradedmf/stability.hpp"

namespace gmf {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long checked = 0;
    std::vector<std::string> failures;

    void fail(const std::string& msg) {
        pass = false;
        if (failures.size() < 32) failures.push_back(msg);
    }
};

// Kernel/image and weight-system consistency on random and scanned inputs.
SuiteResult algebra_suite(std::uint64_t seed);

// Unit, associativity and curvature identities of the composition sign, plus
// m1^2 = 0 and the Leibniz rule on seeded random morphisms. `count` is the
// total number of random morphisms exercised across h <= h_max.
SuiteResult cdg_suite(int h_max, long count, std::uint64_t seed);

// Cone Maurer-Cartan <-> closedness equivalence on random degree-0 maps.
SuiteResult cone_suite(int h_max, long count, std::uint64_t seed);

// Functor relations: {2h/h} = [2], shift inverses, Serre order, hom-dim
// invariance, central charge additivity and sign under shift.
SuiteResult functor_suite(int h_max, long count, std::uint64_t seed);

// Decomposition round-trips on random base-changed sums, per_h objects each.
SuiteResult decompose_suite(int h_max, long per_h, std::uint64_t seed);

// Serre duality grid for every h <= h_max.
SuiteResult serre_suite(int h_max, int tag_range, bool parallel = true);

// Bridgeland axioms for every h <= h_max.
SuiteResult stability_suite(int h_max, int i_window, int corpus, std::uint64_t seed,
                            bool parallel = true);

// Quiver side: equivalence evidence, lattice identities, K0 functoriality.
SuiteResult quiver_suite(int h_max, std::uint64_t seed, bool parallel = true);

std::vector<SuiteResult> run_all_suites(int h_max, std::uint64_t seed, bool parallel = true);

} // namespace gmf
