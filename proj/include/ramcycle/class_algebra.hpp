#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramcycle/profile.hpp"
#include "ramcycle/rational.hpp"

namespace ramcycle {

constexpr int kClassAlgebraMaxDegree = 9;

// Center of the symmetric-group algebra in the class-sum basis, with the
// multiplication-by-transpositions matrix.
struct ClassAlgebraTable {
    int degree = 1;
    std::vector<std::vector<int>> basis;  // partitions of d, reverse-lexicographic
    std::vector<BigInt> class_sizes;
    // cutjoin[mu][lambda] = #{(t,g): t transposition, g in C_lambda, t*g = rep(mu)},
    // so T*K_lambda = sum_mu cutjoin[mu][lambda] K_mu.
    std::vector<std::vector<BigInt>> cutjoin;

    int index_of(const std::vector<int>& partition) const;
    std::string serialize() const;  // deterministic, versioned JSON
    static ClassAlgebraTable deserialize(const std::string& json);
};

// Structure constants by representative-product enumeration.
ClassAlgebraTable build_table(int d);
// Same matrix from the closed-form split/merge rule; cross-check only.
std::vector<std::vector<BigInt>> cutjoin_split_merge(const ClassAlgebraTable& t);

// Cached build: consults RAMCYCLE_CACHE_DIR when set.
const ClassAlgebraTable& table_for(int d);

// (1/d!) x coefficient of the identity class in K_{I1} K_{I2} T^r. Zero when
// the total parity is odd.
Rational disconnected_double_hurwitz(int d, const Profile& I1, const Profile& I2, int r);

}  // namespace ramcycle
