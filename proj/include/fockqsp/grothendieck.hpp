#pragma once

#include <map>
#include <string>
#include <vector>

#include "fockqsp/linkage.hpp"
#include "fockqsp/operators.hpp"

namespace fockqsp {

/// Exact weight multiplicities of a Weyl module, over all lattice
/// points of its support (doubled coordinates).
struct CharacterTable {
    LieType type;
    std::map<std::vector<long long>, long long> mult;

    long long mass() const;
    long long at(const std::vector<long long>& coords_d) const;
};

/// Decomposition of Delta(lambda) (x) Delta(omega_1): lambda +- eps_i
/// when dominant, plus lambda itself in type B when lambda_N > 0.
std::map<Weight, long long> tensor_natural(LieType type, const Weight& lambda);

/// Weyl character of Delta(lambda) by the alternating sum over the
/// finite Weyl group (Racah recursion). Practical bound rank <= 4.
CharacterTable weyl_character(LieType type, const Weight& lambda);

/// Independent fallback oracle for the same table (test cross-check).
CharacterTable freudenthal_character(LieType type, const Weight& lambda);

/// Weyl dimension of Delta(lambda), computed exactly.
long long weyl_dim(LieType type, const Weight& lambda);

/// Character-based decomposition of ch(Delta(lambda)) * ch(Delta(omega_1))
/// by greedy highest-weight peeling; throws PeelingFailure on any
/// negative intermediate multiplicity.
std::map<Weight, long long> tensor_oracle(LieType type, const Weight& lambda);

struct CheckReport {
    bool pass = true;
    std::string detail;
};

/// Theorem-level comparison: operator aggregate, projected and evaluated
/// at v = 1, against the tensor rule, plus the unique-class clause for
/// linked output pairs.
CheckReport check_theorem(LieType type, int ell, const Weight& lambda);

/// Iterated comparison at the stabilized rank: iterated_sum at v = 1
/// against reps-fold tensor_natural.
CheckReport check_iterated(LieType type, int ell, const Weight& lambda, int reps);

}  // namespace fockqsp
