#include "fockqsp/operators.hpp"

namespace fockqsp {

IndexClass classify_index(const ResidueClass& pbar) {
    ResidueClass th = pbar.theta();
    if (th == pbar) return IndexClass::FIXED;
    if (th.linked_to(pbar)) return IndexClass::THETA_LINKED;
    return IndexClass::STANDARD;
}

OperatorSpec op_E(const ResidueClass& pbar) { return {OpKind::E_HAT, pbar}; }
OperatorSpec op_F(const ResidueClass& pbar) { return {OpKind::F_HAT, pbar}; }
OperatorSpec op_K(const ResidueClass& pbar) { return {OpKind::K_HAT, pbar}; }
OperatorSpec op_K_inv(const ResidueClass& pbar) { return {OpKind::K_HAT_INV, pbar}; }
OperatorSpec op_L(const ResidueClass& pbar) { return {OpKind::L_HAT, pbar}; }
OperatorSpec op_L_inv(const ResidueClass& pbar) { return {OpKind::L_HAT_INV, pbar}; }

OperatorSpec op_B(const ResidueClass& pbar, BVariant variant) {
    return {OpKind::B_HAT, pbar, variant};
}

OperatorSpec op_B_z(const ResidueClass& pbar, long long z_d) {
    if (pbar.seq_support != Support::HALF)
        fail(ErrorCode::SupportMismatch, "B^[z] needs half-integer sequences");
    if (classify_index(pbar) != IndexClass::FIXED || !pbar.contains(0))
        fail(ErrorCode::BadInput, "B^[z] is defined at the fixed class of 0");
    const long long m = 2LL * pbar.r;
    if (((z_d - 1) % m + m) % m != 0)
        fail(ErrorCode::BadInput, "B^[z] needs z = 1/2 mod r");
    return {OpKind::B_HAT_Z, pbar, BVariant::NONSTANDARD, z_d};
}

namespace {

// Sum over j in the class within the window range of coeff(j) * move(j).
template <typename Move, typename Coeff>
void accumulate_moves(FockVector& out, const Sequence& a, const ResidueClass& cls,
                      const Laurent& scale, Move&& move, Coeff&& coeff) {
    auto [lo, hi] = a.move_range_d();
    const long long m = 2LL * cls.r;
    long long j = lo + ((cls.value_d - lo) % m + m) % m;
    for (; j <= hi; j += m) {
        auto moved = move(j, a);
        if (!moved) continue;
        Laurent c = scale * Laurent::power(static_cast<int>(coeff(j)));
        out.add_term(*moved, c);
    }
}

void add_E_part(FockVector& out, const Sequence& a, const ResidueClass& cls, int r,
                const Laurent& scale) {
    accumulate_moves(
        out, a, cls, scale, [](long long j, const Sequence& s) { return move_e(j, s); },
        [&](long long j) { return stat_R(StatKind::E_MINUS_F, r, j, a); });
}

void add_F_part(FockVector& out, const Sequence& a, const ResidueClass& cls, int r,
                const Laurent& scale) {
    accumulate_moves(
        out, a, cls, scale, [](long long j, const Sequence& s) { return move_f(j, s); },
        [&](long long j) { return stat_L(StatKind::F_MINUS_E, r, j, a); });
}

}  // namespace

FockVector apply_basis(const OperatorSpec& op, const Sequence& a) {
    if (a.support() != op.pbar.seq_support)
        fail(ErrorCode::SupportMismatch, "apply: sequence support does not match the operator");
    const int r = op.r();
    const ResidueClass& p = op.pbar;
    FockVector out(a.support());
    switch (op.kind) {
        case OpKind::E_HAT: add_E_part(out, a, p, r, Laurent(1)); break;
        case OpKind::F_HAT: add_F_part(out, a, p, r, Laurent(1)); break;
        case OpKind::K_HAT:
            out.add_term(a, Laurent::power(static_cast<int>(stat_T(StatKind::F_MINUS_E, r,
                                                                   p.value_d, a))));
            break;
        case OpKind::K_HAT_INV:
            out.add_term(a, Laurent::power(static_cast<int>(-stat_T(StatKind::F_MINUS_E, r,
                                                                    p.value_d, a))));
            break;
        case OpKind::L_HAT:
        case OpKind::L_HAT_INV: {
            const ResidueClass& q = op.kind == OpKind::L_HAT ? p : p.theta();
            long long e = stat_T(StatKind::F_MINUS_E, r, q.value_d, a) +
                          stat_T(StatKind::E_MINUS_F, r, q.theta().value_d, a);
            out.add_term(a, Laurent::power(static_cast<int>(e)));
            break;
        }
        case OpKind::B_HAT: {
            if (classify_index(p) != IndexClass::FIXED) {
                const ResidueClass th = p.theta();
                Laurent pref = Laurent::power(
                    static_cast<int>(stat_T(StatKind::E_MINUS_F, r, th.value_d, a)));
                add_E_part(out, a, p, r, pref);
                add_F_part(out, a, th, r, Laurent(1));
            } else {
                long long t = stat_T(StatKind::E_MINUS_F, r, p.value_d, a);
                add_E_part(out, a, p, r, Laurent::power(static_cast<int>(t - 1)));
                add_F_part(out, a, p, r, Laurent(1));
                if (op.variant == BVariant::NONSTANDARD)
                    out.add_term(a, Laurent::power(static_cast<int>(t)));
            }
            break;
        }
        case OpKind::B_HAT_Z: {
            long long t = stat_T(StatKind::E_MINUS_F, r, p.value_d, a);
            add_E_part(out, a, p, r, Laurent::power(static_cast<int>(t - 1)));
            add_F_part(out, a, p, r, Laurent(1));
            if (a.at_d(op.z_d) == 0) out.add_term(a, Laurent::power(static_cast<int>(t)));
            break;
        }
    }
    return out;
}

FockVector apply(const OperatorSpec& op, const FockVector& x) {
    if (x.support() != op.pbar.seq_support)
        fail(ErrorCode::SupportMismatch, "apply: vector support does not match the operator");
    FockVector out(x.support());
    for (const auto& [a, c] : x.terms()) out += c * apply_basis(op, a);
    return out;
}

BVariant QSPConfig::variant_for(const ResidueClass& pbar) const {
    if (pbar.contains(0)) return BVariant::NONSTANDARD;
    return nonstandard_offline_fixed ? BVariant::NONSTANDARD : BVariant::STANDARD;
}

OperatorSpec QSPConfig::make_B(const ResidueClass& pbar) const {
    return op_B(pbar, variant_for(pbar));
}

QSPConfig qsp_config(LieFamily family, int ell) {
    if (ell <= 3) fail(ErrorCode::ConstraintViolated, "operators need ell > 3");
    switch (family) {
        case LieFamily::A: return {Support::INT, ell, false};
        case LieFamily::C: return {Support::INT, ell, false};
        case LieFamily::B_INT:
        case LieFamily::B_HALF: {
            const Support s = support_of(family);
            if (ell % 2 == 1) return {s, ell, family == LieFamily::B_INT};
            if (ell / 2 <= 3)
                fail(ErrorCode::ConstraintViolated, "type B with even ell needs ell/2 > 3");
            return {s, ell / 2, false};
        }
    }
    fail(ErrorCode::BadInput, "qsp_config: unknown family");
}

SumBParts apply_sum_B_parts(LieType type, int ell, const Weight& lambda) {
    if (type.family == LieFamily::A)
        fail(ErrorCode::BadInput, "apply_sum_B: type A has no symmetric pair action");
    if (!is_dominant(lambda)) fail(ErrorCode::NotDominant, "apply_sum_B: weight not dominant");
    const QSPConfig cfg = qsp_config(type.family, ell);
    const Sequence a = embed(lambda);
    const bool substitute_z = type.family == LieFamily::B_HALF && !lambda.coords_d.empty() &&
                              lambda.coords_d.back() == 0;
    SumBParts parts{{}, false};
    for (const ResidueClass& p : all_classes(cfg.r, cfg.support)) {
        OperatorSpec op =
            substitute_z && p.contains(0) ? op_B_z(p, 1) : cfg.make_B(p);
        parts.by_class.emplace_back(p, apply_basis(op, a));
    }
    parts.naive_identity = type.family == LieFamily::B_INT && ell % 2 == 0;
    return parts;
}

FockVector apply_sum_B(LieType type, int ell, const Weight& lambda) {
    SumBParts parts = apply_sum_B_parts(type, ell, lambda);
    FockVector out(support_of(type.family));
    for (auto& [cls, v] : parts.by_class) out += v;
    if (parts.naive_identity) out += FockVector::basis(embed(lambda));
    return out;
}

FockVector project_embedded(LieType type, const FockVector& x) {
    if (x.support() != support_of(type.family))
        fail(ErrorCode::SupportMismatch, "project_embedded: support mismatch");
    FockVector out(x.support());
    for (const auto& [a, c] : x.terms())
        if (extract(type, a)) out.add_term(a, c);
    return out;
}

std::map<Weight, long long> eval_decomposition(const FockVector& x, LieType type) {
    std::map<Weight, long long> out;
    for (const auto& [a, c] : x.terms()) {
        auto w = extract(type, a);
        if (!w) fail(ErrorCode::BadInput, "eval_decomposition: basis outside the embedded image");
        long long m = c.eval_one().to_int64();
        if (m == 0) continue;
        if (m < 0) fail(ErrorCode::NegativeMultiplicity, "eval_decomposition: negative value for " +
                                                             w->to_string());
        out[*w] += m;
    }
    return out;
}

std::map<Weight, Laurent> iterated_sum(LieType type, int ell, const Weight& lambda, int reps) {
    if (!is_dominant(lambda)) fail(ErrorCode::NotDominant, "iterated_sum: weight not dominant");
    const QSPConfig cfg = qsp_config(type.family, ell);
    const long long m = type.rank / ell;
    const long long z_d = 1 - 2 * m * ell;  // z = 1/2 - m*ell, doubled
    const bool naive_identity = type.family == LieFamily::B_INT && ell % 2 == 0;

    std::vector<OperatorSpec> round_ops;
    for (const ResidueClass& p : all_classes(cfg.r, cfg.support)) {
        if (type.family == LieFamily::B_HALF && p.contains(0))
            round_ops.push_back(op_B_z(p, z_d));
        else
            round_ops.push_back(cfg.make_B(p));
    }

    FockVector x = FockVector::basis(shift(embed(lambda), m, ell));
    for (int step = 0; step < reps; ++step) {
        FockVector next(cfg.support);
        for (const OperatorSpec& op : round_ops) next += apply(op, x);
        if (naive_identity) next += x;
        x = next;
    }

    std::map<Weight, Laurent> out;
    for (const auto& [b, c] : x.terms()) {
        auto w = extract(type, shift(b, -m, ell));
        if (!w)
            fail(ErrorCode::BadInput,
                 "iterated_sum: output left the shifted embedding (rank too small)");
        for (const auto& [e, coeff] : c.terms())
            if (coeff.is_negative())
                fail(ErrorCode::NegativeCoefficient,
                     "iterated_sum: negative coefficient at " + w->to_string());
        out[*w] += c;
    }
    return out;
}

namespace {

FockVector typeA_composite(const ResidueClass& pbar, BVariant variant, const FockVector& x) {
    const ResidueClass th = pbar.theta();
    if (classify_index(pbar) != IndexClass::FIXED) {
        // E_p K_{theta(p)}^-1 + F_{theta(p)}
        return apply(op_E(pbar), apply(op_K_inv(th), x)) + apply(op_F(th), x);
    }
    FockVector out = Laurent::power(-1) * apply(op_E(pbar), apply(op_K_inv(pbar), x));
    out += apply(op_F(pbar), x);
    if (variant == BVariant::NONSTANDARD) out += apply(op_K_inv(pbar), x);
    return out;
}

}  // namespace

std::optional<size_t> check_typeA_identity(const QSPConfig& cfg, const ResidueClass& pbar,
                                           const std::vector<FockVector>& samples) {
    for (size_t i = 0; i < samples.size(); ++i) {
        const BVariant variant = cfg.variant_for(pbar);
        FockVector lhs = apply(cfg.make_B(pbar), samples[i]);
        FockVector rhs = typeA_composite(pbar, variant, samples[i]);
        if (lhs != rhs) return i;
        // L_p = K_p K_{theta(p)}^-1 on the same sample.
        if (classify_index(pbar) != IndexClass::FIXED) {
            FockVector l = apply(op_L(pbar), samples[i]);
            FockVector kk = apply(op_K(pbar), apply(op_K_inv(pbar.theta()), samples[i]));
            if (l != kk) return i;
        }
    }
    return std::nullopt;
}

std::optional<size_t> check_typeA_identity_z(const QSPConfig& cfg, long long z_d,
                                             const std::vector<FockVector>& samples) {
    const ResidueClass zero(cfg.r, 0, Support::HALF);
    const OperatorSpec bz = op_B_z(zero, z_d);
    for (size_t i = 0; i < samples.size(); ++i) {
        for (const auto& [a, c] : samples[i].terms()) {
            FockVector basis = FockVector::basis(a);
            FockVector lhs = apply_basis(bz, a);
            FockVector rhs = Laurent::power(-1) * apply(op_E(zero), apply(op_K_inv(zero), basis));
            rhs += apply(op_F(zero), basis);
            if (a.at_d(z_d) == 0) rhs += apply(op_K_inv(zero), basis);
            if (lhs != rhs) return i;
        }
    }
    return std::nullopt;
}

}  // namespace fockqsp
