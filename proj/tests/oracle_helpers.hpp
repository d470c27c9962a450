#pragma once

// Test-side oracles: naive reimplementations over dense position arrays,
// independent of the window-scan logic in the library.

#include <map>

#include "fockqsp/operators.hpp"

namespace oracle {

using namespace fockqsp;

// Dense value lookup straight from the window semantics.
inline int value_at(const Sequence& a, long long d) {
    if (d < a.left_d()) return 1;
    long long idx = (d - a.left_d()) / 2;
    if (idx >= a.window_len()) return 0;
    return a.bits()[static_cast<size_t>(idx)] - '0';
}

inline bool e_ok(const Sequence& a, long long j_d) {
    return value_at(a, j_d + 1) == 1 && value_at(a, j_d - 1) == 0;
}
inline bool f_ok(const Sequence& a, long long j_d) {
    return value_at(a, j_d - 1) == 1 && value_at(a, j_d + 1) == 0;
}

// Scan bound: far enough out that no move or statistic survives.
inline std::pair<long long, long long> wide_range(const Sequence& a, int r) {
    long long lo = a.left_d() - 8LL * r - 10;
    long long hi = a.left_d() + 2 * a.window_len() + 8LL * r + 10;
    return {lo, hi};
}

inline long long naive_count(StatKind kind, const Sequence& a, long long k_d) {
    switch (kind) {
        case StatKind::E: return e_ok(a, k_d) ? 1 : 0;
        case StatKind::F: return f_ok(a, k_d) ? 1 : 0;
        case StatKind::E_MINUS_F: return (e_ok(a, k_d) ? 1 : 0) - (f_ok(a, k_d) ? 1 : 0);
        case StatKind::F_MINUS_E: return (f_ok(a, k_d) ? 1 : 0) - (e_ok(a, k_d) ? 1 : 0);
    }
    return 0;
}

inline long long naive_R(StatKind kind, int r, long long j_d, const Sequence& a) {
    auto [lo, hi] = wide_range(a, r);
    (void)lo;
    long long total = 0;
    for (long long k = j_d + 2LL * r; k <= hi; k += 2LL * r) total += naive_count(kind, a, k);
    return total;
}

inline long long naive_L(StatKind kind, int r, long long j_d, const Sequence& a) {
    auto [lo, hi] = wide_range(a, r);
    (void)hi;
    long long total = 0;
    for (long long k = j_d - 2LL * r; k >= lo; k -= 2LL * r) total += naive_count(kind, a, k);
    return total;
}

inline long long naive_T(StatKind kind, int r, long long pbar_d, const Sequence& a) {
    auto [lo, hi] = wide_range(a, r);
    const long long m = 2LL * r;
    long long first = lo + ((pbar_d - lo) % m + m) % m;
    long long total = 0;
    for (long long k = first; k <= hi; k += m) total += naive_count(kind, a, k);
    return total;
}

// Direct per-term recomputation of a B-generator on a basis sequence,
// straight from the printed formulas.
inline FockVector naive_B(const QSPConfig& cfg, const ResidueClass& pbar, const Sequence& a,
                          bool z_gate = false, long long z_d = 0) {
    const int r = cfg.r;
    FockVector out(a.support());
    auto [lo, hi] = wide_range(a, r);
    const bool fixed = classify_index(pbar) == IndexClass::FIXED;
    const ResidueClass th = pbar.theta();
    const long long t_pref =
        fixed ? naive_T(StatKind::E_MINUS_F, r, pbar.value_d, a)
              : naive_T(StatKind::E_MINUS_F, r, th.value_d, a);
    for (long long j = lo; j <= hi; ++j) {
        if (((j % 2) + 2) % 2 != dual_parity(a.support())) continue;
        if (pbar.contains(j) && e_ok(a, j)) {
            long long e = t_pref + (fixed ? -1 : 0) + naive_R(StatKind::E_MINUS_F, r, j, a);
            out.add_term(*move_e(j, a), Laurent::power(static_cast<int>(e)));
        }
        const ResidueClass& fcls = fixed ? pbar : th;
        if (fcls.contains(j) && f_ok(a, j)) {
            long long e = naive_L(StatKind::F_MINUS_E, r, j, a);
            out.add_term(*move_f(j, a), Laurent::power(static_cast<int>(e)));
        }
    }
    if (fixed) {
        bool add_identity = z_gate ? value_at(a, z_d) == 0
                                   : cfg.variant_for(pbar) == BVariant::NONSTANDARD;
        if (add_identity)
            out.add_term(a, Laurent::power(static_cast<int>(
                                naive_T(StatKind::E_MINUS_F, r, pbar.value_d, a))));
    }
    return out;
}

}  // namespace oracle
