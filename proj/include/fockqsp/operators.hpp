#pragma once

#include <optional>
#include <vector>

#include "fockqsp/weights.hpp"

namespace fockqsp {

enum class IndexClass : uint8_t { FIXED, THETA_LINKED, STANDARD };

/// FIXED if Theta(pbar) = pbar, THETA_LINKED if Theta(pbar) is adjacent
/// to pbar in the cyclic diagram, STANDARD otherwise.
IndexClass classify_index(const ResidueClass& pbar);

enum class OpKind : uint8_t {
    E_HAT,
    F_HAT,
    K_HAT,
    K_HAT_INV,
    B_HAT,
    L_HAT,
    L_HAT_INV,
    B_HAT_Z,
};

/// Shape of the B-generator at a fixed index: STANDARD is the bare
/// e/f combination, NONSTANDARD adds the identity summand.
enum class BVariant : uint8_t { STANDARD, NONSTANDARD };

struct OperatorSpec {
    OpKind kind;
    ResidueClass pbar;
    BVariant variant = BVariant::STANDARD;
    long long z_d = 0;  // B_HAT_Z only; doubled position with z = 1/2 mod r

    int r() const { return pbar.r; }
};

OperatorSpec op_E(const ResidueClass& pbar);
OperatorSpec op_F(const ResidueClass& pbar);
OperatorSpec op_K(const ResidueClass& pbar);
OperatorSpec op_K_inv(const ResidueClass& pbar);
OperatorSpec op_L(const ResidueClass& pbar);
OperatorSpec op_L_inv(const ResidueClass& pbar);
OperatorSpec op_B(const ResidueClass& pbar, BVariant variant);
OperatorSpec op_B_z(const ResidueClass& pbar, long long z_d);

FockVector apply(const OperatorSpec& op, const FockVector& x);
FockVector apply_basis(const OperatorSpec& op, const Sequence& a);

/// Index set, modulus and fixed-index shape of the quantum symmetric
/// pair acting for a family at a given ell.
struct QSPConfig {
    Support support;
    int r;
    // Type B with odd ell uses the nonstandard generator at the
    // half-integer-line fixed index; type C and the even-ell cases do not.
    bool nonstandard_offline_fixed = false;

    BVariant variant_for(const ResidueClass& pbar) const;
    OperatorSpec make_B(const ResidueClass& pbar) const;
};

QSPConfig qsp_config(LieFamily family, int ell);

/// Theorem-level aggregate: the sum of all B-generators applied to the
/// embedded weight, with the family-specific substitutions (B^[1/2] when
/// the last coordinate vanishes on half-integer sequences, the naive
/// identity summand for integer sequences at even ell).
FockVector apply_sum_B(LieType type, int ell, const Weight& lambda);

/// Per-class contributions of apply_sum_B, for the uniqueness clause.
/// The bool marks the naive identity summand (present only for B_INT at
/// even ell), which belongs to no class.
struct SumBParts {
    std::vector<std::pair<ResidueClass, FockVector>> by_class;
    bool naive_identity;
};
SumBParts apply_sum_B_parts(LieType type, int ell, const Weight& lambda);

/// Drop every basis sequence outside the embedded image of the type.
FockVector project_embedded(LieType type, const FockVector& x);

/// Extract weights and evaluate coefficients at v = 1; throws
/// NegativeMultiplicity if any value is negative.
std::map<Weight, long long> eval_decomposition(const FockVector& x, LieType type);

/// Coefficients d_{lambda,mu}(v) of the r-fold operator sum applied to
/// the shifted embedding at the stabilized rank of `type`; asserts all
/// coefficients are nonnegative.
std::map<Weight, Laurent> iterated_sum(LieType type, int ell, const Weight& lambda, int reps);

/// One comparison of a B-generator against its type-A composite
/// (E K^-1 + F and the twisted fixed-index forms). Returns the first
/// failing sample index, or nullopt when all agree.
std::optional<size_t> check_typeA_identity(const QSPConfig& cfg, const ResidueClass& pbar,
                                           const std::vector<FockVector>& samples);

/// Same identity for B^[z] with the delta-gated identity term; checked
/// per basis vector of each sample.
std::optional<size_t> check_typeA_identity_z(const QSPConfig& cfg, long long z_d,
                                             const std::vector<FockVector>& samples);

}  // namespace fockqsp
