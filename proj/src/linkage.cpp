#include "fockqsp/linkage.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace fockqsp {

RootFamily root_family(LieFamily f) {
    switch (f) {
        case LieFamily::A: return RootFamily::A;
        case LieFamily::C: return RootFamily::C;
        case LieFamily::B_INT:
        case LieFamily::B_HALF: return RootFamily::B;
    }
    return RootFamily::A;
}

std::vector<Root> positive_roots(RootFamily fam, int rank) {
    std::vector<Root> out;
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j) {
            out.push_back(Root{fam, RootKind::MINUS_IJ, i, j});
            if (fam != RootFamily::A) out.push_back(Root{fam, RootKind::PLUS_IJ, i, j});
        }
    if (fam != RootFamily::A)
        for (int i = 1; i <= rank; ++i) out.push_back(Root{fam, RootKind::SINGLE_I, i, 0});
    return out;
}

int d_alpha(const Root& root) {
    switch (root.family) {
        case RootFamily::A: return 1;
        case RootFamily::C: return root.kind == RootKind::SINGLE_I ? 2 : 1;
        case RootFamily::B: return root.kind == RootKind::SINGLE_I ? 1 : 2;
    }
    return 1;
}

int ell_alpha(const Root& root, int ell) { return ell / std::gcd(ell, d_alpha(root)); }

long long pairing_point(const std::vector<long long>& p, const Root& root) {
    auto at = [&](int idx) { return p[static_cast<size_t>(idx - 1)]; };
    long long doubled;
    switch (root.kind) {
        case RootKind::MINUS_IJ: doubled = at(root.i) - at(root.j); break;
        case RootKind::PLUS_IJ: doubled = at(root.i) + at(root.j); break;
        case RootKind::SINGLE_I:
            // C: beta_i^vee = eps_i; B: beta_i^vee = 2 eps_i, so the
            // doubled coordinate is already the pairing.
            if (root.family == RootFamily::B) return at(root.i);
            doubled = at(root.i);
            break;
        default: doubled = 0;
    }
    if (doubled % 2 != 0) fail(ErrorCode::ParityMismatch, "pairing: non-integral value");
    return doubled / 2;
}

std::vector<long long> reflect_point(const std::vector<long long>& p, const Root& root,
                                     long long k, int ell) {
    long long t = pairing_point(p, root) - k * ell_alpha(root, ell);
    std::vector<long long> out = p;
    auto add = [&](int idx, long long v) { out[static_cast<size_t>(idx - 1)] += v; };
    switch (root.kind) {
        case RootKind::MINUS_IJ:
            add(root.i, -2 * t);
            add(root.j, 2 * t);
            break;
        case RootKind::PLUS_IJ:
            add(root.i, -2 * t);
            add(root.j, -2 * t);
            break;
        case RootKind::SINGLE_I:
            add(root.i, root.family == RootFamily::C ? -4 * t : -2 * t);
            break;
    }
    return out;
}

long long pairing(const Weight& v, const Root& root) {
    if (root_family(v.type.family) != root.family)
        fail(ErrorCode::FamilyMismatch, "pairing: root from a different family");
    return pairing_point(v.coords_d, root);
}

Weight reflect(const Weight& v, const Root& root, long long k, int ell) {
    if (root_family(v.type.family) != root.family)
        fail(ErrorCode::FamilyMismatch, "reflect: root from a different family");
    return Weight{v.type, reflect_point(v.coords_d, root, k, ell)};
}

LinkageContext::LinkageContext(LieType t, int l) : type(t), ell(l) {
    if (ell <= 3) fail(ErrorCode::ConstraintViolated, "linkage needs ell > 3");
    if ((type.family == LieFamily::B_INT || type.family == LieFamily::B_HALF) && ell % 2 == 0 &&
        ell / 2 <= 3)
        fail(ErrorCode::ConstraintViolated, "type B with even ell needs ell/2 > 3");
}

namespace {

// Translation-lattice shape of W_ell = W |x L: either L = c * Z^N or
// L = c * D_N (even coordinate sums), with c in undoubled units.
struct LatticeShape {
    bool even_sum;
    int c;
};

LatticeShape lattice_shape(const LinkageContext& ctx) {
    const bool even = ctx.ell % 2 == 0;
    switch (ctx.type.family) {
        case LieFamily::C: return even ? LatticeShape{false, ctx.ell} : LatticeShape{true, ctx.ell};
        case LieFamily::B_INT:
        case LieFamily::B_HALF:
            return even ? LatticeShape{true, ctx.ell / 2} : LatticeShape{false, ctx.ell};
        case LieFamily::A: return LatticeShape{false, ctx.ell};  // not used on this path
    }
    return LatticeShape{false, ctx.ell};
}

long long sum_sq(const std::vector<long long>& v) {
    long long s = 0;
    for (long long x : v) s += x * x;
    return s;
}

void sort_abs_desc(std::vector<long long>& v) {
    for (long long& x : v)
        if (x < 0) x = -x;
    std::sort(v.rbegin(), v.rend());
}

}  // namespace

std::vector<long long> canonical_point(const std::vector<long long>& point_d,
                                       const LinkageContext& ctx,
                                       std::vector<long long>* fold_measures) {
    std::vector<long long> v = point_d;
    if (v.empty()) return v;
    if (ctx.type.family == LieFamily::A) {
        // W_ell = S_N |x ell * {sum zero}: the sorted residues mod ell
        // plus the total sum determine the orbit.
        const long long m = 2LL * ctx.ell;
        long long total = std::accumulate(v.begin(), v.end(), 0LL);
        for (long long& x : v) x = (x % m + m) % m;
        long long res_total = std::accumulate(v.begin(), v.end(), 0LL);
        std::sort(v.rbegin(), v.rend());
        v[0] += total - res_total;
        return v;
    }
    const LatticeShape shape = lattice_shape(ctx);
    const long long c_d = 2LL * shape.c;
    if (!shape.even_sum || v.size() == 1) {
        // Coordinates decouple: fold each into [0, c] doubled units
        // ([0, 2c] for the rank-one even-sum lattice 2cZ), then sort.
        const long long m = shape.even_sum ? 2 * c_d : c_d;
        for (long long& x : v) {
            x = (x % m + m) % m;
            x = std::min(x, m - x);
        }
        std::sort(v.rbegin(), v.rend());
        return v;
    }
    // Even-sum lattice: fold into the closed alcove
    // { x_1 >= ... >= x_N >= 0, x_1 + x_2 <= c } of the scaled affine
    // Weyl group. Each affine fold strictly decreases the sum of squares.
    long long measure = sum_sq(v);
    for (;;) {
        sort_abs_desc(v);
        if (v[0] + v[1] <= c_d) break;
        const long long a = v[0], b = v[1];
        v[0] = c_d - b;
        v[1] = c_d - a;
        long long next = sum_sq(v);
        if (next >= measure)
            fail(ErrorCode::ConstraintViolated, "canonical_point: progress measure did not drop");
        measure = next;
        if (fold_measures) fold_measures->push_back(measure);
    }
    return v;
}

bool linked(const Weight& lambda, const Weight& mu, const LinkageContext& ctx) {
    if (lambda.type != mu.type || lambda.type != ctx.type)
        fail(ErrorCode::TypeMismatch, "linked: mismatched types");
    if (!is_dominant(lambda) || !is_dominant(mu))
        fail(ErrorCode::NotDominant, "linked: weights must be dominant");
    return canonical_point(rho_shift(lambda), ctx) == canonical_point(rho_shift(mu), ctx);
}

namespace {

// BFS states are finite-Weyl orbit representatives; for B/C that is the
// sorted absolute-value vector, for A the sorted vector. The set of
// affine reflections is closed under Weyl conjugation, so connectivity
// in this quotient decides orbit equality.
std::vector<long long> weyl_rep(const LieFamily fam, std::vector<long long> v) {
    if (fam == LieFamily::A)
        std::sort(v.rbegin(), v.rend());
    else
        sort_abs_desc(v);
    return v;
}

}  // namespace

bool linked_bfs(const Weight& lambda, const Weight& mu, const LinkageContext& ctx,
                long long radius_d) {
    if (lambda.type != mu.type || lambda.type != ctx.type)
        fail(ErrorCode::TypeMismatch, "linked_bfs: mismatched types");
    const std::vector<long long> start = rho_shift(lambda);
    const std::vector<long long> goal_pt = rho_shift(mu);
    if (radius_d == 0) {
        for (long long x : start) radius_d = std::max(radius_d, std::llabs(x));
        for (long long x : goal_pt) radius_d = std::max(radius_d, std::llabs(x));
        radius_d += 4LL * ctx.ell;  // 2*ell in undoubled units
    }
    const auto roots = positive_roots(root_family(ctx.type.family), ctx.type.rank);
    const std::vector<long long> goal = weyl_rep(ctx.type.family, goal_pt);

    std::set<std::vector<long long>> seen;
    std::deque<std::vector<long long>> queue;
    auto push = [&](std::vector<long long> rep) {
        if (seen.insert(rep).second) queue.push_back(std::move(rep));
    };
    push(weyl_rep(ctx.type.family, start));
    while (!queue.empty()) {
        std::vector<long long> cur = queue.front();
        queue.pop_front();
        if (cur == goal) return true;
        for (const Root& root : roots) {
            const int la = ell_alpha(root, ctx.ell);
            // |pairing| and the reflection step are each bounded by the
            // box diameter, so this covers every in-box target.
            const long long kmax = 2 * radius_d / la + 2;
            for (long long k = -kmax; k <= kmax; ++k) {
                std::vector<long long> next = reflect_point(cur, root, k, ctx.ell);
                bool in_box = true;
                for (long long x : next)
                    if (std::llabs(x) > radius_d) {
                        in_box = false;
                        break;
                    }
                if (!in_box) continue;
                push(weyl_rep(ctx.type.family, std::move(next)));
            }
        }
    }
    return false;
}

namespace {

// r in c + m*Z on doubled values: c2 = 2c, modulus m undoubled.
bool congruent(long long r_d, long long c2, long long m) {
    const long long m2 = 2 * m;
    return ((r_d - c2) % m2 + m2) % m2 == 0;
}

bool in_image(LieType type, const std::optional<Sequence>& s) {
    return s && extract(type, *s).has_value();
}

}  // namespace

LinkagePrediction predict_linkage(MovePairKind kind, const Weight& lambda, long long r_d,
                                  long long s_d, int ell) {
    const LieFamily fam = lambda.type.family;
    if (fam == LieFamily::A)
        fail(ErrorCode::CaseInapplicable, "predict_linkage: no type A lemma cases");
    if (!is_dominant(lambda)) fail(ErrorCode::NotDominant, "predict_linkage: not dominant");
    const Sequence a = embed(lambda);
    const bool is_b = fam != LieFamily::C;
    const bool even = ell % 2 == 0;
    const long long h = ell / 2;

    auto require = [&](bool ok, const char* what) {
        if (!ok) fail(ErrorCode::CaseInapplicable, std::string("predict_linkage: ") + what);
    };

    switch (kind) {
        case MovePairKind::E_E:
            require(r_d != s_d, "E_E needs r != s");
            require(in_image(lambda.type, move_e(r_d, a)), "e_r image undefined");
            require(in_image(lambda.type, move_e(s_d, a)), "e_s image undefined");
            break;
        case MovePairKind::F_F:
            require(r_d != s_d, "F_F needs r != s");
            require(in_image(lambda.type, move_f(r_d, a)), "f_r image undefined");
            require(in_image(lambda.type, move_f(s_d, a)), "f_s image undefined");
            break;
        case MovePairKind::E_F:
            require(s_d != r_d + 2, "E_F excludes s = r + 1");
            require(in_image(lambda.type, move_e(r_d, a)), "e_r image undefined");
            require(in_image(lambda.type, move_f(s_d, a)), "f_s image undefined");
            break;
        case MovePairKind::E_F_ADJ:
            require(in_image(lambda.type, move_e(r_d - 2, a)), "e_{r-1} image undefined");
            require(in_image(lambda.type, move_f(r_d, a)), "f_r image undefined");
            break;
        case MovePairKind::E_VS_ID:
            require(is_b, "identity comparison is a type B lemma");
            require(in_image(lambda.type, move_e(r_d, a)), "e_r image undefined");
            break;
        case MovePairKind::F_VS_ID:
            require(is_b, "identity comparison is a type B lemma");
            require(in_image(lambda.type, move_f(r_d, a)), "f_r image undefined");
            break;
    }

    const long long mod = (is_b && even) ? h : ell;
    switch (kind) {
        case MovePairKind::E_E:
        case MovePairKind::F_F: return {true, congruent(r_d, s_d, mod)};
        case MovePairKind::E_F: return {true, congruent(r_d, -s_d, mod)};
        case MovePairKind::E_F_ADJ:
            if (!is_b) {
                // r in 1/2 + ell*Z for odd ell, 1/2 + (ell/2)*Z for even.
                return {true, congruent(r_d, 1, even ? h : ell)};
            }
            if (!even) {
                if (fam == LieFamily::B_INT) return {true, congruent(r_d, 1, ell)};
                return {true, congruent(r_d, ell + 1, ell)};  // r in (ell+1)/2 + ell*Z
            }
            if (fam == LieFamily::B_INT) {
                if (h % 2 == 1) return {true, congruent(r_d, 1, h)};
                // ell/2 even: only "linked => r in 1/2 + hZ or (ell+2)/4 + hZ".
                return {false, congruent(r_d, 1, h) || congruent(r_d, (ell + 2) / 2, h)};
            }
            if (h % 2 == 1) return {false, congruent(r_d, (ell + 2) / 2, h)};
            return {true, false};  // ell/2 even, half-integer sequences: never linked
        case MovePairKind::E_VS_ID:
        case MovePairKind::F_VS_ID:
            if (!even) {
                if (fam == LieFamily::B_INT) return {true, congruent(r_d, ell, ell)};
                return {true, congruent(r_d, 0, ell)};
            }
            if (fam == LieFamily::B_INT) return {true, false};
            return {true, congruent(r_d, 0, h)};
    }
    fail(ErrorCode::CaseInapplicable, "predict_linkage: unreachable");
}

}  // namespace fockqsp
