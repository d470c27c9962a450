#include "fockqsp/relcheck.hpp"

#include <set>

namespace fockqsp {

const char* rel_name(RelName n) {
    switch (n) {
        case RelName::L_COMMUTE: return "L_COMMUTE";
        case RelName::L_INVERSE: return "L_INVERSE";
        case RelName::LB_CASE: return "LB_CASE";
        case RelName::B_COMMUTE: return "B_COMMUTE";
        case RelName::B_THETA_COMMUTATOR: return "B_THETA_COMMUTATOR";
        case RelName::SERRE_PLAIN: return "SERRE_PLAIN";
        case RelName::SERRE_FIXED_RIGHT: return "SERRE_FIXED_RIGHT";
        case RelName::SERRE_FIXED_LEFT: return "SERRE_FIXED_LEFT";
        case RelName::SERRE_THETA_DEFORMED: return "SERRE_THETA_DEFORMED";
        case RelName::A_KK: return "A_KK";
        case RelName::A_KE: return "A_KE";
        case RelName::A_KF: return "A_KF";
        case RelName::A_EF_COMMUTATOR: return "A_EF_COMMUTATOR";
        case RelName::A_SERRE_E: return "A_SERRE_E";
        case RelName::A_SERRE_F: return "A_SERRE_F";
    }
    return "?";
}

std::string RelationInstance::to_string() const {
    std::string s = rel_name(name);
    s += "(";
    for (size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ", ";
        s += indices[i].to_string();
    }
    s += ")";
    if (name == RelName::LB_CASE) s += " case " + std::to_string(lb_case);
    return s;
}

std::pair<int, int> lb_exponent(const ResidueClass& p, const ResidueClass& q) {
    const ResidueClass tq = q.theta();
    switch (classify_index(p)) {
        case IndexClass::STANDARD:
            if (p == q) return {1, 2};
            if (p == tq) return {2, -2};
            if (p.linked_to(q)) return {3, -1};
            if (p.linked_to(tq)) return {4, 1};
            return {5, 0};
        case IndexClass::THETA_LINKED:
            if (p == q) return {1, 3};
            if (p == tq) return {2, -3};
            if (p.linked_to(q) && q != p.theta()) return {3, -1};
            if (p.linked_to(tq) && q != p) return {4, 1};
            return {5, 0};
        case IndexClass::FIXED: return {1, 0};
    }
    return {5, 0};
}

std::vector<RelationInstance> enumerate_relations(Support support, int r) {
    if (r <= 3) fail(ErrorCode::ModulusTooSmall, "symmetric pair needs r > 3");
    const std::vector<ResidueClass> classes = all_classes(r, support);
    std::vector<ResidueClass> nonfixed;
    for (const auto& p : classes)
        if (classify_index(p) != IndexClass::FIXED) nonfixed.push_back(p);

    std::vector<RelationInstance> out;
    for (size_t i = 0; i < nonfixed.size(); ++i)
        for (size_t j = i + 1; j < nonfixed.size(); ++j)
            out.push_back({RelName::L_COMMUTE, {nonfixed[i], nonfixed[j]}});
    for (const auto& p : nonfixed) out.push_back({RelName::L_INVERSE, {p}});
    for (const auto& q : nonfixed)
        for (const auto& p : classes) {
            auto [case_no, e] = lb_exponent(p, q);
            out.push_back({RelName::LB_CASE, {q, p}, case_no, e});
        }
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j) {
            const ResidueClass& p = classes[i];
            const ResidueClass& q = classes[j];
            const bool theta_pair = q == p.theta();
            if (p.linked_to(q)) {
                if (theta_pair) {
                    out.push_back({RelName::SERRE_THETA_DEFORMED, {p, q}});
                    out.push_back({RelName::SERRE_THETA_DEFORMED, {q, p}});
                } else {
                    auto serre_of = [&](const ResidueClass& x, const ResidueClass& y) {
                        const bool xf = classify_index(x) == IndexClass::FIXED;
                        const bool yf = classify_index(y) == IndexClass::FIXED;
                        if (xf) return RelName::SERRE_FIXED_LEFT;
                        if (yf) return RelName::SERRE_FIXED_RIGHT;
                        return RelName::SERRE_PLAIN;
                    };
                    out.push_back({serre_of(p, q), {p, q}});
                    out.push_back({serre_of(q, p), {q, p}});
                }
            } else if (theta_pair) {
                out.push_back({RelName::B_THETA_COMMUTATOR, {p, q}});
            } else {
                out.push_back({RelName::B_COMMUTE, {p, q}});
            }
        }
    return out;
}

namespace {

// Cartan pairing of the cyclic affine diagram: 2 on the diagonal, -1 on
// edges, 0 otherwise (r > 3 keeps the cases disjoint).
int affine_cartan(const ResidueClass& p, const ResidueClass& q) {
    if (p == q) return 2;
    if (p.linked_to(q)) return -1;
    return 0;
}

}  // namespace

std::vector<RelationInstance> enumerate_typeA_relations(Support support, int r) {
    if (r <= 3) fail(ErrorCode::ModulusTooSmall, "type A relation suite needs r > 3");
    const std::vector<ResidueClass> classes = all_classes(r, support);
    std::vector<RelationInstance> out;
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j)
            out.push_back({RelName::A_KK, {classes[i], classes[j]}});
    for (const auto& p : classes)
        for (const auto& q : classes) {
            const int a = affine_cartan(p, q);
            out.push_back({RelName::A_KE, {p, q}, 0, a});
            out.push_back({RelName::A_KF, {p, q}, 0, -a});
            out.push_back({RelName::A_EF_COMMUTATOR, {p, q}});
            if (p != q) {
                out.push_back({RelName::A_SERRE_E, {p, q}});
                out.push_back({RelName::A_SERRE_F, {p, q}});
            }
        }
    return out;
}

namespace {

Laurent v_minus_vinv() { return Laurent::power(1) - Laurent::power(-1); }

FockVector serre_lhs(const OperatorSpec& x, const OperatorSpec& y, const FockVector& s) {
    FockVector ys = apply(y, s);
    FockVector xs = apply(x, s);
    FockVector lhs = apply(x, apply(x, ys));
    lhs -= quantum_int(2) * apply(x, apply(y, xs));
    lhs += apply(y, apply(x, xs));
    return lhs;
}

}  // namespace

std::optional<RelationViolation> check_relation(const RelationInstance& inst,
                                                const QSPConfig& cfg,
                                                const std::vector<FockVector>& samples) {
    for (size_t si = 0; si < samples.size(); ++si) {
        const FockVector& s = samples[si];
        bool ok = true;
        std::string detail;
        try {
            switch (inst.name) {
                case RelName::L_COMMUTE: {
                    const auto &p = inst.indices[0], &q = inst.indices[1];
                    ok = apply(op_L(p), apply(op_L(q), s)) == apply(op_L(q), apply(op_L(p), s));
                    break;
                }
                case RelName::L_INVERSE: {
                    const auto& p = inst.indices[0];
                    ok = apply(op_L(p), apply(op_L(p.theta()), s)) == s;
                    break;
                }
                case RelName::LB_CASE: {
                    const auto &q = inst.indices[0], &p = inst.indices[1];
                    FockVector lhs = apply(op_L(q), apply(cfg.make_B(p), s));
                    FockVector rhs =
                        Laurent::power(inst.exponent) * apply(cfg.make_B(p), apply(op_L(q), s));
                    ok = lhs == rhs;
                    break;
                }
                case RelName::B_COMMUTE: {
                    const OperatorSpec bp = cfg.make_B(inst.indices[0]);
                    const OperatorSpec bq = cfg.make_B(inst.indices[1]);
                    ok = apply(bp, apply(bq, s)) == apply(bq, apply(bp, s));
                    break;
                }
                case RelName::B_THETA_COMMUTATOR: {
                    const auto &p = inst.indices[0], &q = inst.indices[1];
                    const OperatorSpec bp = cfg.make_B(p), bq = cfg.make_B(q);
                    FockVector lhs = apply(bp, apply(bq, s)) - apply(bq, apply(bp, s));
                    FockVector rhs = (apply(op_L(p), s) - apply(op_L(q), s)).div_exact(v_minus_vinv());
                    ok = lhs == rhs;
                    break;
                }
                case RelName::SERRE_PLAIN:
                case RelName::SERRE_FIXED_RIGHT: {
                    ok = serre_lhs(cfg.make_B(inst.indices[0]), cfg.make_B(inst.indices[1]), s)
                             .is_zero();
                    break;
                }
                case RelName::SERRE_FIXED_LEFT: {
                    const OperatorSpec bq = cfg.make_B(inst.indices[1]);
                    ok = serre_lhs(cfg.make_B(inst.indices[0]), bq, s) == apply(bq, s);
                    break;
                }
                case RelName::SERRE_THETA_DEFORMED: {
                    const auto &p = inst.indices[0], &q = inst.indices[1];
                    FockVector lhs = serre_lhs(cfg.make_B(p), cfg.make_B(q), s);
                    FockVector inner = Laurent::power(1) * apply(op_L(p), s);
                    inner += Laurent::power(-2) * apply(op_L(p.theta()), s);
                    FockVector rhs = -quantum_int(2) * apply(cfg.make_B(p), inner);
                    ok = lhs == rhs;
                    break;
                }
                case RelName::A_KK: {
                    const auto &p = inst.indices[0], &q = inst.indices[1];
                    ok = apply(op_K(p), apply(op_K(q), s)) == apply(op_K(q), apply(op_K(p), s));
                    break;
                }
                case RelName::A_KE: {
                    const auto &p = inst.indices[0], &q = inst.indices[1];
                    FockVector lhs = apply(op_K(p), apply(op_E(q), s));
                    FockVector rhs = Laurent::power(inst.exponent) * apply(op_E(q), apply(op_K(p), s));
                    ok = lhs == rhs;
                    break;
                }
                case RelName::A_KF: {
                    const auto &p = inst.indices[0], &q = inst.indices[1];
                    FockVector lhs = apply(op_K(p), apply(op_F(q), s));
                    FockVector rhs = Laurent::power(inst.exponent) * apply(op_F(q), apply(op_K(p), s));
                    ok = lhs == rhs;
                    break;
                }
                case RelName::A_EF_COMMUTATOR: {
                    const auto &p = inst.indices[0], &q = inst.indices[1];
                    FockVector lhs = apply(op_E(p), apply(op_F(q), s));
                    lhs -= apply(op_F(q), apply(op_E(p), s));
                    if (p == q) {
                        FockVector rhs =
                            (apply(op_K(p), s) - apply(op_K_inv(p), s)).div_exact(v_minus_vinv());
                        ok = lhs == rhs;
                    } else {
                        ok = lhs.is_zero();
                    }
                    break;
                }
                case RelName::A_SERRE_E:
                case RelName::A_SERRE_F: {
                    const bool is_e = inst.name == RelName::A_SERRE_E;
                    const auto &p = inst.indices[0], &q = inst.indices[1];
                    const OperatorSpec xp = is_e ? op_E(p) : op_F(p);
                    const OperatorSpec xq = is_e ? op_E(q) : op_F(q);
                    if (p.linked_to(q)) {
                        ok = serre_lhs(xp, xq, s).is_zero();
                    } else {
                        ok = apply(xp, apply(xq, s)) == apply(xq, apply(xp, s));
                    }
                    break;
                }
            }
        } catch (const Error& e) {
            ok = false;
            detail = e.what();
        }
        if (!ok) return RelationViolation{inst, si, detail};
    }
    return std::nullopt;
}

SuiteReport run_suite(const std::vector<RelationInstance>& instances, const QSPConfig& cfg,
                      const std::vector<FockVector>& samples) {
    SuiteReport report;
    std::set<RelName> names;
    for (const auto& inst : instances) {
        names.insert(inst.name);
        ++report.instances;
        if (auto v = check_relation(inst, cfg, samples)) report.failures.push_back(*v);
    }
    report.relations_checked = static_cast<long long>(names.size());
    return report;
}

}  // namespace fockqsp
