#pragma once

#include <vector>

#include "fockqsp/weights.hpp"

namespace fockqsp {

enum class RootFamily : uint8_t { A, C, B };
enum class RootKind : uint8_t { PLUS_IJ, MINUS_IJ, SINGLE_I };

/// Positive root: eps_i - eps_j, eps_i + eps_j (i < j), or the single-index
/// root (2 eps_i in type C, eps_i in type B).
struct Root {
    RootFamily family;
    RootKind kind;
    int i, j;  // 1-based; j unused for SINGLE_I
};

RootFamily root_family(LieFamily f);
std::vector<Root> positive_roots(RootFamily fam, int rank);

int d_alpha(const Root& root);
int ell_alpha(const Root& root, int ell);

/// Exact pairing (v, alpha^vee) of a uniform-parity doubled point.
long long pairing_point(const std::vector<long long>& point_d, const Root& root);

/// Affine reflection s_{alpha,k} acting linearly on rho-shifted points:
/// v -> v - ((v, alpha^vee) - k * ell_alpha) * alpha.
std::vector<long long> reflect_point(const std::vector<long long>& point_d, const Root& root,
                                     long long k, int ell);

/// Typed wrappers that reject roots from the wrong family.
long long pairing(const Weight& v, const Root& root);
Weight reflect(const Weight& v, const Root& root, long long k, int ell);

struct LinkageContext {
    LieType type;
    int ell;
    LinkageContext(LieType t, int l);
};

/// Unique representative of the W_ell-orbit of a rho-shifted point,
/// computed by folding into a fundamental domain. Appends the progress
/// measure after each affine fold to `fold_measures` when given; the
/// measure strictly decreases.
std::vector<long long> canonical_point(const std::vector<long long>& point_d,
                                       const LinkageContext& ctx,
                                       std::vector<long long>* fold_measures = nullptr);

/// Exact linkage decision on dominant weights via canonical forms.
bool linked(const Weight& lambda, const Weight& mu, const LinkageContext& ctx);

/// Independent cross-check: breadth-first orbit search over finite-Weyl
/// orbit representatives inside a coordinate box. radius_d = 0 picks the
/// default of max coordinate magnitude + 2*ell.
bool linked_bfs(const Weight& lambda, const Weight& mu, const LinkageContext& ctx,
                long long radius_d = 0);

/// Which pair of moving-operator images a linkage lemma compares.
enum class MovePairKind : uint8_t {
    E_E,       // e_r vs e_s, r != s
    F_F,       // f_r vs f_s, r != s
    E_F,       // e_r vs f_s, s != r + 1
    E_F_ADJ,   // e_{r-1} vs f_r (the excluded case above)
    E_VS_ID,   // e_r vs the weight itself (type B only)
    F_VS_ID,   // f_r vs the weight itself (type B only)
};

struct LinkagePrediction {
    bool two_sided;   // false: lemma proves only linked => congruence
    bool predicted;   // the congruence value
};

/// Closed-form linkage predicate of the applicable lemma. r_d/s_d are
/// doubled dual-lattice move indices; s_d is ignored for the adjacent
/// and identity cases. Throws CaseInapplicable when the named moves are
/// not defined or do not stay in the embedded image.
LinkagePrediction predict_linkage(MovePairKind kind, const Weight& lambda, long long r_d,
                                  long long s_d, int ell);

}  // namespace fockqsp
