#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fockqsp/fockseq.hpp"

namespace fockqsp {

/// Root-datum families. B splits by which Fock space its weights embed
/// into: B_INT weights have half-integer coordinates and rho-shift onto
/// integer sequences, B_HALF weights have integer coordinates and
/// rho-shift onto half-integer sequences.
enum class LieFamily : uint8_t { A, C, B_INT, B_HALF };

const char* family_name(LieFamily f);
std::optional<LieFamily> family_from_name(const std::string& s);

struct LieType {
    LieFamily family;
    int rank;
    friend bool operator==(const LieType& a, const LieType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator!=(const LieType& a, const LieType& b) { return !(a == b); }
};

/// Support of the sequences this family's rho-shifted weights live on.
Support support_of(LieFamily f);
/// Parity (mod 2) of doubled weight coordinates for this family.
int coord_parity(LieFamily f);

/// Length-N coordinate vector with exact doubled entries.
struct Weight {
    LieType type;
    std::vector<long long> coords_d;

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.type == b.type && a.coords_d == b.coords_d;
    }
    friend bool operator<(const Weight& a, const Weight& b) {
        if (a.type.family != b.type.family) return a.type.family < b.type.family;
        if (a.type.rank != b.type.rank) return a.type.rank < b.type.rank;
        return a.coords_d < b.coords_d;
    }
    std::string to_string() const;
};

Weight rho(LieType type);
/// lambda + rho, as raw doubled coordinates.
std::vector<long long> rho_shift(const Weight& w);

bool is_dominant(const Weight& w);  // throws ParityMismatch on bad coords

/// Basis sequence of the rho-shifted weight; requires dominance.
Sequence embed(const Weight& w);
/// Inverse of embed on its image, nullopt outside it.
std::optional<Weight> extract(LieType type, const Sequence& a);

/// a^(m): shift by m ell-steps, result(i) = a(i + m*ell).
Sequence shift(const Sequence& a, long long m, int ell);

struct Stabilization {
    long long m;
    Weight weight;  // rank m*ell + charge
};

/// Smallest shift m with m*ell > n' + reserve (n' the magnitude of the
/// leftmost zero in the mandatory-1 region) together with the dominant
/// weight of rank m*ell + charge whose shifted embedding is a.
Stabilization stabilize(const Sequence& a, long long reserve, int ell, LieFamily family);

/// Partition view of a charge-0 integer sequence (type A convenience).
std::vector<long long> seq_to_partition(const Sequence& a);

/// Residue class pbar mod r in the dual lattice of a sequence support.
struct ResidueClass {
    int r;
    long long value_d;  // normalized to [0, 2r)
    Support seq_support;

    ResidueClass(int modulus, long long rep_d, Support s);

    ResidueClass theta() const;  // negation
    bool linked_to(const ResidueClass& o) const;
    bool contains(long long d) const;
    friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
        return a.r == b.r && a.value_d == b.value_d && a.seq_support == b.seq_support;
    }
    friend bool operator!=(const ResidueClass& a, const ResidueClass& b) { return !(a == b); }
    std::string to_string() const;  // "3/2 mod 5" style
};

/// All residue classes of the dual lattice mod r, ascending.
std::vector<ResidueClass> all_classes(int r, Support s);

/// All dominant weights of the type with first coordinate <= bound
/// (doubled), in lexicographic order.
std::vector<Weight> dominant_weights_up_to(LieType type, long long max_coord_d);

}  // namespace fockqsp
