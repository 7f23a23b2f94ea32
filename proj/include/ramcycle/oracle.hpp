#pragma once

#include <cstdint>
#include <vector>

#include "ramcycle/profile.hpp"
#include "ramcycle/rational.hpp"

namespace ramcycle {

// Hard cap for brute-force enumeration; larger degrees belong to the
// class-algebra engine.
constexpr int kOracleMaxDegree = 8;
constexpr double kOracleCostBound = 1e8;

struct FactorizationCount {
    uint64_t raw_tuples = 0;
    Rational weighted{0};
    uint64_t connected_raw = 0;
    Rational connected_weighted{0};
};

// |C_I| in S_d.
BigInt conjugacy_class_size(const Profile& I, int d);

// Counts tuples (sigma_1..sigma_k, tau_1..tau_r) with sigma_j of cycle type
// I_j, tau_i transpositions and product equal to the identity; the connected
// fields keep only transitive tuples. Marks never enter the count.
FactorizationCount count_factorizations(const CoverSpec& spec);

// Convenience: connected weighted count for raw constraint/simple data.
Rational connected_weighted_count(int degree, const std::vector<Profile>& constraints, int r);

// Reconstructs the disconnected weighted count as a sum over splittings into
// connected pieces (degree, Euler characteristic, profile parts and the
// ordered simple points all distributed); must agree with
// count_factorizations(spec).weighted.
Rational decompose_disconnected(const CoverSpec& spec);

}  // namespace ramcycle
