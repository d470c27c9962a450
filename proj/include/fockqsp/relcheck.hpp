#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fockqsp/operators.hpp"

namespace fockqsp {

enum class RelName : uint8_t {
    L_COMMUTE,
    L_INVERSE,
    LB_CASE,
    B_COMMUTE,
    B_THETA_COMMUTATOR,
    SERRE_PLAIN,
    SERRE_FIXED_RIGHT,
    SERRE_FIXED_LEFT,
    SERRE_THETA_DEFORMED,
    A_KK,
    A_KE,
    A_KF,
    A_EF_COMMUTATOR,
    A_SERRE_E,
    A_SERRE_F,
};

const char* rel_name(RelName n);

struct RelationInstance {
    RelName name;
    std::vector<ResidueClass> indices;
    int lb_case = 0;    // 1..5 for LB_CASE instances
    int exponent = 0;   // v-power for LB_CASE / K-conjugation instances
    std::string to_string() const;
};

/// v-power case of the L-B commutation table for the pair (p, q);
/// returns {case number 1..5, exponent}.
std::pair<int, int> lb_exponent(const ResidueClass& p, const ResidueClass& q);

/// Every relation of the symmetric-pair presentation instantiated for
/// every applicable index tuple mod r. Throws ModulusTooSmall for r <= 3.
std::vector<RelationInstance> enumerate_relations(Support support, int r);

/// Chevalley-style relations of the type A action for all index pairs.
std::vector<RelationInstance> enumerate_typeA_relations(Support support, int r);

struct RelationViolation {
    RelationInstance instance;
    size_t sample;
    std::string detail;
};

/// Evaluates both sides of the relation on every sample and compares
/// exactly; returns the first violation if any.
std::optional<RelationViolation> check_relation(const RelationInstance& inst,
                                                const QSPConfig& cfg,
                                                const std::vector<FockVector>& samples);

struct SuiteReport {
    long long relations_checked = 0;  // distinct relation families
    long long instances = 0;
    std::vector<RelationViolation> failures;
    bool ok() const { return failures.empty(); }
};

SuiteReport run_suite(const std::vector<RelationInstance>& instances, const QSPConfig& cfg,
                      const std::vector<FockVector>& samples);

}  // namespace fockqsp
