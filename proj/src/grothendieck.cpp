#include "fockqsp/grothendieck.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fockqsp {

long long CharacterTable::mass() const {
    long long total = 0;
    for (const auto& [w, m] : mult) total += m;
    return total;
}

long long CharacterTable::at(const std::vector<long long>& coords_d) const {
    auto it = mult.find(coords_d);
    return it == mult.end() ? 0 : it->second;
}

std::map<Weight, long long> tensor_natural(LieType type, const Weight& lambda) {
    if (!is_dominant(lambda)) fail(ErrorCode::NotDominant, "tensor_natural: not dominant");
    if (type.family == LieFamily::A)
        fail(ErrorCode::BadInput, "tensor_natural: defined for types B and C");
    std::map<Weight, long long> out;
    for (size_t i = 0; i < lambda.coords_d.size(); ++i) {
        for (long long sgn : {2LL, -2LL}) {
            Weight w = lambda;
            w.coords_d[i] += sgn;
            if (is_dominant(w)) out[w] += 1;
        }
    }
    const bool type_b = type.family == LieFamily::B_INT || type.family == LieFamily::B_HALF;
    if (type_b && !lambda.coords_d.empty() && lambda.coords_d.back() > 0) out[lambda] += 1;
    return out;
}

namespace {

// Finite Weyl group elements as their action on a coordinate vector;
// sign() is the determinant.
struct WeylElement {
    std::vector<int> perm;   // image index: out[i] = signs[i] * x[perm[i]]
    std::vector<int> signs;  // +-1; all +1 in type A
    int sign;
};

std::vector<WeylElement> weyl_group(LieFamily fam, int rank) {
    if (rank > 4) fail(ErrorCode::RankTooLarge, "weyl_group: rank above the practical bound");
    std::vector<int> base(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) base[static_cast<size_t>(i)] = i;
    std::vector<WeylElement> out;
    const bool signed_perms = fam != LieFamily::A;
    std::vector<int> perm = base;
    do {
        // Permutation parity by counting inversions.
        int inv = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        const int psign = inv % 2 == 0 ? 1 : -1;
        const int nmasks = signed_perms ? 1 << rank : 1;
        for (int mask = 0; mask < nmasks; ++mask) {
            WeylElement w;
            w.perm = perm;
            w.signs.assign(static_cast<size_t>(rank), 1);
            int s = psign;
            for (int i = 0; i < rank; ++i)
                if (mask >> i & 1) {
                    w.signs[static_cast<size_t>(i)] = -1;
                    s = -s;
                }
            w.sign = s;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<long long> apply_weyl(const WeylElement& w, const std::vector<long long>& x) {
    std::vector<long long> out(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        out[i] = w.signs[i] * x[static_cast<size_t>(w.perm[i])];
    return out;
}

std::vector<long long> dominantize(LieFamily fam, std::vector<long long> v) {
    if (fam == LieFamily::A) {
        std::sort(v.rbegin(), v.rend());
    } else {
        for (long long& x : v)
            if (x < 0) x = -x;
        std::sort(v.rbegin(), v.rend());
    }
    return v;
}

// nu <= lambda in the root order (lambda - nu a nonnegative integral
// combination of simple roots), both dominant.
bool below(LieFamily fam, const std::vector<long long>& nu, const std::vector<long long>& lam) {
    long long partial = 0;
    for (size_t i = 0; i < nu.size(); ++i) {
        partial += lam[i] - nu[i];
        if (partial < 0) return false;
        if (partial % 2 != 0) return false;  // doubled coords: need integral coefficients
    }
    switch (fam) {
        case LieFamily::A: return partial == 0;
        case LieFamily::C: return partial % 4 == 0;  // last simple root is 2 eps_N
        case LieFamily::B_INT:
        case LieFamily::B_HALF: return true;
    }
    return false;
}

struct DominantMults {
    LieFamily fam;
    std::vector<long long> lam;  // rho-unshifted dominant top weight (doubled)
    std::vector<long long> rho_d;
    std::vector<WeylElement> group;
    std::map<std::vector<long long>, long long> memo;

    long long mult(const std::vector<long long>& nu_dom) {
        if (nu_dom == lam) return 1;
        if (!below(fam, nu_dom, lam)) return 0;
        auto it = memo.find(nu_dom);
        if (it != memo.end()) return it->second;
        // Racah: m(nu) = -sum_{w != 1} sign(w) m(nu + rho - w rho).
        long long m = 0;
        for (const WeylElement& w : group) {
            std::vector<long long> wrho = apply_weyl(w, rho_d);
            if (wrho == rho_d) continue;  // identity (rho is regular dominant)
            std::vector<long long> xi = nu_dom;
            for (size_t i = 0; i < xi.size(); ++i) xi[i] += rho_d[i] - wrho[i];
            m -= w.sign * mult(dominantize(fam, std::move(xi)));
        }
        memo.emplace(nu_dom, m);
        return m;
    }
};

}  // namespace

CharacterTable weyl_character(LieType type, const Weight& lambda) {
    if (!is_dominant(lambda)) fail(ErrorCode::NotDominant, "weyl_character: not dominant");
    if (type.rank > 4) fail(ErrorCode::RankTooLarge, "weyl_character: rank above practical bound");
    DominantMults dm{type.family, lambda.coords_d, rho(type).coords_d,
                     weyl_group(type.family, type.rank), {}};
    CharacterTable table{type, {}};
    const long long bound = lambda.coords_d.empty() ? 0 : lambda.coords_d.front();
    for (const Weight& nu : dominant_weights_up_to(type, bound)) {
        if (!below(type.family, nu.coords_d, lambda.coords_d)) continue;
        long long m = dm.mult(nu.coords_d);
        if (m == 0) continue;
        std::set<std::vector<long long>> orbit;
        for (const WeylElement& w : dm.group) orbit.insert(apply_weyl(w, nu.coords_d));
        for (const auto& pt : orbit) table.mult[pt] = m;
    }
    return table;
}

namespace {

long long dot_d(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<long long> root_vector_d(const Root& r, size_t n) {
    std::vector<long long> v(n, 0);
    switch (r.kind) {
        case RootKind::MINUS_IJ:
            v[static_cast<size_t>(r.i - 1)] = 2;
            v[static_cast<size_t>(r.j - 1)] = -2;
            break;
        case RootKind::PLUS_IJ:
            v[static_cast<size_t>(r.i - 1)] = 2;
            v[static_cast<size_t>(r.j - 1)] = 2;
            break;
        case RootKind::SINGLE_I:
            v[static_cast<size_t>(r.i - 1)] = r.family == RootFamily::C ? 4 : 2;
            break;
    }
    return v;
}

}  // namespace

CharacterTable freudenthal_character(LieType type, const Weight& lambda) {
    if (!is_dominant(lambda)) fail(ErrorCode::NotDominant, "freudenthal: not dominant");
    const auto roots = positive_roots(root_family(type.family), type.rank);
    const std::vector<long long> rho_d = rho(type).coords_d;
    const std::vector<long long>& lam = lambda.coords_d;
    std::vector<long long> lam_rho = lam;
    for (size_t i = 0; i < lam_rho.size(); ++i) lam_rho[i] += rho_d[i];
    const long long top_norm = dot_d(lam_rho, lam_rho);

    std::map<std::vector<long long>, long long> memo;
    std::function<long long(const std::vector<long long>&)> mult =
        [&](const std::vector<long long>& nu_dom) -> long long {
        if (nu_dom == lam) return 1;
        if (!below(type.family, nu_dom, lam)) return 0;
        auto it = memo.find(nu_dom);
        if (it != memo.end()) return it->second;
        long long rhs = 0;
        for (const Root& r : roots) {
            const std::vector<long long> alpha = root_vector_d(r, nu_dom.size());
            std::vector<long long> mu = nu_dom;
            for (;;) {
                for (size_t i = 0; i < mu.size(); ++i) mu[i] += alpha[i];
                long long m = mult(dominantize(type.family, mu));
                if (m == 0) {
                    // Weights of a module form unbroken alpha-strings, so
                    // the first zero above nu ends the contributions.
                    break;
                }
                rhs += m * dot_d(mu, alpha);
            }
        }
        std::vector<long long> nu_rho = nu_dom;
        for (size_t i = 0; i < nu_rho.size(); ++i) nu_rho[i] += rho_d[i];
        const long long denom = top_norm - dot_d(nu_rho, nu_rho);
        if (denom <= 0 || (2 * rhs) % denom != 0)
            fail(ErrorCode::BadInput, "freudenthal: degenerate recursion");
        long long m = 2 * rhs / denom;
        memo.emplace(nu_dom, m);
        return m;
    };

    CharacterTable table{type, {}};
    const long long bound = lam.empty() ? 0 : lam.front();
    const auto group = weyl_group(type.family, type.rank);
    for (const Weight& nu : dominant_weights_up_to(type, bound)) {
        if (!below(type.family, nu.coords_d, lam)) continue;
        long long m = mult(nu.coords_d);
        if (m == 0) continue;
        std::set<std::vector<long long>> orbit;
        for (const WeylElement& w : group) orbit.insert(apply_weyl(w, nu.coords_d));
        for (const auto& pt : orbit) table.mult[pt] = m;
    }
    return table;
}

long long weyl_dim(LieType type, const Weight& lambda) {
    if (!is_dominant(lambda)) fail(ErrorCode::NotDominant, "weyl_dim: not dominant");
    const auto roots = positive_roots(root_family(type.family), type.rank);
    const std::vector<long long> lam_rho = rho_shift(lambda);
    const std::vector<long long> rho_d = rho(type).coords_d;
    BigInt num(1), den(1);
    for (const Root& r : roots) {
        num *= BigInt(pairing_point(lam_rho, r));
        den *= BigInt(pairing_point(rho_d, r));
    }
    bool ok = false;
    BigInt q = BigInt::div_exact(num, den, &ok);
    if (!ok) fail(ErrorCode::BadInput, "weyl_dim: non-integral quotient");
    return q.to_int64();
}

std::map<Weight, long long> tensor_oracle(LieType type, const Weight& lambda) {
    if (type.rank > 4) fail(ErrorCode::RankTooLarge, "tensor_oracle: rank above practical bound");
    // omega_1 has integral coordinates (1, 0, ..., 0) whatever lattice
    // lambda lives on; in the B_INT family its character is computed in
    // the sibling integral-coordinate family.
    LieType omega_type = type;
    if (type.family == LieFamily::B_INT) omega_type.family = LieFamily::B_HALF;
    Weight omega1{omega_type, std::vector<long long>(static_cast<size_t>(type.rank), 0)};
    omega1.coords_d[0] = 2;
    const CharacterTable a = weyl_character(type, lambda);
    const CharacterTable b = weyl_character(omega_type, omega1);
    CharacterTable prod{type, {}};
    for (const auto& [x, mx] : a.mult)
        for (const auto& [y, my] : b.mult) {
            std::vector<long long> z = x;
            for (size_t i = 0; i < z.size(); ++i) z[i] += y[i];
            prod.mult[z] += mx * my;
        }
    // Greedy highest-weight peeling, lexicographically largest dominant
    // entry first (a linear extension of dominance).
    std::map<Weight, long long> out;
    for (;;) {
        bool found = false;
        std::vector<long long> best;
        for (const auto& [pt, m] : prod.mult) {
            if (m == 0) continue;
            Weight w{type, pt};
            if (!is_dominant(w)) continue;
            if (!found || pt > best) {
                best = pt;
                found = true;
            }
        }
        if (!found) break;
        long long m = prod.mult[best];
        if (m < 0) fail(ErrorCode::PeelingFailure, "tensor_oracle: negative top multiplicity");
        Weight nu{type, best};
        const CharacterTable ch = weyl_character(type, nu);
        for (const auto& [pt, cm] : ch.mult) {
            long long& entry = prod.mult[pt];
            entry -= m * cm;
            if (entry < 0) fail(ErrorCode::PeelingFailure, "tensor_oracle: negative remainder");
        }
        out[nu] += m;
    }
    for (const auto& [pt, m] : prod.mult)
        if (m != 0) fail(ErrorCode::PeelingFailure, "tensor_oracle: nonzero residue");
    return out;
}

namespace {

std::string multiset_to_string(const std::map<Weight, long long>& ms) {
    std::string s = "{";
    bool first = true;
    for (const auto& [w, m] : ms) {
        if (!first) s += ", ";
        first = false;
        s += w.to_string() + ":" + std::to_string(m);
    }
    return s + "}";
}

}  // namespace

CheckReport check_theorem(LieType type, int ell, const Weight& lambda) {
    CheckReport report;
    SumBParts parts = apply_sum_B_parts(type, ell, lambda);
    FockVector total(support_of(type.family));
    for (const auto& [cls, v] : parts.by_class) total += v;
    if (parts.naive_identity) total += FockVector::basis(embed(lambda));

    const auto decomposition = eval_decomposition(project_embedded(type, total), type);
    const auto expected = tensor_natural(type, lambda);
    if (decomposition != expected) {
        report.pass = false;
        report.detail = lambda.to_string() + ": got " + multiset_to_string(decomposition) +
                        ", expected " + multiset_to_string(expected);
        return report;
    }

    // Uniqueness clause: linked output weights must come from one class.
    std::map<Weight, std::vector<ResidueClass>> sources;
    for (const auto& [w, m] : decomposition) sources[w];
    for (const auto& [cls, v] : parts.by_class)
        for (const auto& [a, c] : v.terms())
            if (auto w = extract(type, a); w && decomposition.count(*w))
                sources[*w].push_back(cls);
    const LinkageContext ctx(type, ell);
    std::vector<Weight> ws;
    for (const auto& [w, src] : sources) {
        ws.push_back(w);
        if (src.size() > 1) {
            report.pass = false;
            report.detail = lambda.to_string() + ": " + w.to_string() + " produced by " +
                            std::to_string(src.size()) + " classes";
            return report;
        }
    }
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i + 1; j < ws.size(); ++j) {
            if (!linked(ws[i], ws[j], ctx)) continue;
            const auto& si = sources[ws[i]];
            const auto& sj = sources[ws[j]];
            if (si.size() != 1 || sj.size() != 1 || si[0] != sj[0]) {
                report.pass = false;
                report.detail = lambda.to_string() + ": linked outputs " + ws[i].to_string() +
                                ", " + ws[j].to_string() + " not from a unique class";
                return report;
            }
        }
    return report;
}

CheckReport check_iterated(LieType type, int ell, const Weight& lambda, int reps) {
    CheckReport report;
    const auto d = iterated_sum(type, ell, lambda, reps);
    std::map<Weight, long long> lhs;
    for (const auto& [w, poly] : d) {
        long long m = poly.eval_one().to_int64();
        if (m != 0) lhs[w] = m;
    }
    std::map<Weight, long long> rhs{{lambda, 1}};
    for (int s = 0; s < reps; ++s) {
        std::map<Weight, long long> next;
        for (const auto& [w, m] : rhs)
            for (const auto& [nu, k] : tensor_natural(type, w)) next[nu] += m * k;
        rhs = std::move(next);
    }
    if (lhs != rhs) {
        report.pass = false;
        report.detail = lambda.to_string() + " reps " + std::to_string(reps) + ": got " +
                        multiset_to_string(lhs) + ", expected " + multiset_to_string(rhs);
    }
    return report;
}

}  // namespace fockqsp
