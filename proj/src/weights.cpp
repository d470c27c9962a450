#include "fockqsp/weights.hpp"

#include <algorithm>

namespace fockqsp {

const char* family_name(LieFamily f) {
    switch (f) {
        case LieFamily::A: return "A";
        case LieFamily::C: return "C";
        case LieFamily::B_INT: return "B_INT";
        case LieFamily::B_HALF: return "B_HALF";
    }
    return "?";
}

std::optional<LieFamily> family_from_name(const std::string& s) {
    if (s == "A") return LieFamily::A;
    if (s == "C") return LieFamily::C;
    if (s == "B_INT") return LieFamily::B_INT;
    if (s == "B_HALF") return LieFamily::B_HALF;
    return std::nullopt;
}

Support support_of(LieFamily f) {
    return f == LieFamily::B_HALF ? Support::HALF : Support::INT;
}

int coord_parity(LieFamily f) {
    // B_INT weights are strictly half-integral, everything else integral.
    return f == LieFamily::B_INT ? 1 : 0;
}

std::string Weight::to_string() const {
    std::string s = family_name(type.family);
    s += std::to_string(type.rank);
    s += "(";
    for (size_t i = 0; i < coords_d.size(); ++i) {
        if (i) s += ",";
        long long d = coords_d[i];
        if (d % 2 == 0)
            s += std::to_string(d / 2);
        else
            s += std::to_string(d) + "/2";
    }
    s += ")";
    return s;
}

Weight rho(LieType type) {
    Weight w{type, std::vector<long long>(static_cast<size_t>(type.rank), 0)};
    const int N = type.rank;
    for (int i = 0; i < N; ++i) {
        switch (type.family) {
            case LieFamily::A: w.coords_d[static_cast<size_t>(i)] = -2LL * i; break;
            case LieFamily::C: w.coords_d[static_cast<size_t>(i)] = 2LL * (N - i); break;
            case LieFamily::B_INT:
            case LieFamily::B_HALF: w.coords_d[static_cast<size_t>(i)] = 2LL * (N - i) - 1; break;
        }
    }
    return w;
}

std::vector<long long> rho_shift(const Weight& w) {
    Weight r = rho(w.type);
    std::vector<long long> out = w.coords_d;
    for (size_t i = 0; i < out.size(); ++i) out[i] += r.coords_d[i];
    return out;
}

namespace {
void check_parity(const Weight& w) {
    const int par = coord_parity(w.type.family);
    for (long long d : w.coords_d)
        if (((d % 2) + 2) % 2 != par)
            fail(ErrorCode::ParityMismatch, "weight coordinates have the wrong parity for " +
                                                std::string(family_name(w.type.family)));
    if (static_cast<int>(w.coords_d.size()) != w.type.rank)
        fail(ErrorCode::BadInput, "weight length differs from rank");
}
}  // namespace

bool is_dominant(const Weight& w) {
    check_parity(w);
    const auto& c = w.coords_d;
    for (size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] < c[i + 1]) return false;
    // P^+ in type A (polynomial weights), X^+ otherwise.
    if (!c.empty() && c.back() < 0) return false;
    return true;
}

Sequence embed(const Weight& w) {
    if (!is_dominant(w)) fail(ErrorCode::NotDominant, "embed: weight not dominant");
    std::vector<long long> shifted = rho_shift(w);
    // Mandatory all-1 region ends just below `floor_d`.
    long long floor_d = 0;
    switch (w.type.family) {
        case LieFamily::A: floor_d = -2LL * w.type.rank + 2; break;
        case LieFamily::C:
        case LieFamily::B_INT: floor_d = 2; break;
        case LieFamily::B_HALF: floor_d = 1; break;
    }
    long long hi = floor_d - 2;
    for (long long d : shifted) hi = std::max(hi, d);
    std::string bits(static_cast<size_t>((hi - floor_d) / 2 + 1), '0');
    for (long long d : shifted) bits[static_cast<size_t>((d - floor_d) / 2)] = '1';
    return Sequence(support_of(w.type.family), floor_d, std::move(bits));
}

std::optional<Weight> extract(LieType type, const Sequence& a) {
    if (a.support() != support_of(type.family))
        fail(ErrorCode::SupportMismatch, "extract: sequence support does not match family");
    long long floor_d = 0;
    switch (type.family) {
        case LieFamily::A: floor_d = -2LL * type.rank + 2; break;
        case LieFamily::C:
        case LieFamily::B_INT: floor_d = 2; break;
        case LieFamily::B_HALF: floor_d = 1; break;
    }
    // The first zero of a canonical sequence sits at left_d; everything
    // below floor_d must be 1.
    if (a.left_d() < floor_d) return std::nullopt;
    std::vector<long long> positions;
    for (long long i = 0; i < a.window_len(); ++i)
        if (a.bits()[static_cast<size_t>(i)] == '1') positions.push_back(a.left_d() + 2 * i);
    // All-1 run between floor_d and the window is implicit.
    for (long long d = a.left_d() - 2; d >= floor_d; d -= 2) positions.push_back(d);
    if (static_cast<int>(positions.size()) != type.rank) return std::nullopt;
    std::sort(positions.rbegin(), positions.rend());
    Weight r = rho(type);
    Weight out{type, std::move(positions)};
    for (size_t i = 0; i < out.coords_d.size(); ++i) out.coords_d[i] -= r.coords_d[i];
    if (!is_dominant(out)) return std::nullopt;
    return out;
}

Sequence shift(const Sequence& a, long long m, int ell) { return a.shifted_d(2 * m * ell); }

Stabilization stabilize(const Sequence& a, long long reserve, int ell, LieFamily family) {
    if (family == LieFamily::A) fail(ErrorCode::BadInput, "stabilize: not defined for type A");
    const long long k = a.charge();
    if (k < 0 || k >= ell) fail(ErrorCode::ChargeOutOfRange, "stabilize: charge not in [0, ell)");
    // n' is the magnitude of the leftmost zero when it lies in the
    // mandatory-1 region; a canonical sequence has its first zero at
    // left_d. With no such zero the sentinel -1 (resp. -1/2) makes m=0
    // admissible at reserve 0.
    const long long boundary_d = family == LieFamily::B_HALF ? 1 : 2;
    long long nprime_d;
    if (a.left_d() >= boundary_d)
        nprime_d = family == LieFamily::B_HALF ? -1 : -2;
    else
        nprime_d = -a.left_d();
    long long m = 0;
    while (2 * m * ell <= nprime_d + 2 * reserve) ++m;
    Sequence unshifted = shift(a, -m, ell);
    LieType type{family, static_cast<int>(m * ell + k)};
    auto w = extract(type, unshifted);
    if (!w) fail(ErrorCode::BadInput, "stabilize: sequence is not a shifted embedding");
    return Stabilization{m, *w};
}

std::vector<long long> seq_to_partition(const Sequence& a) {
    if (a.support() != Support::INT || a.charge() != 0)
        fail(ErrorCode::BadInput, "seq_to_partition: needs an integer sequence of charge 0");
    // lambda_i = (position of the i-th rightmost 1) + (i - 1).
    std::vector<long long> parts;
    long long i = 0;
    for (long long d = a.left_d() + 2 * (a.window_len() - 1); d >= a.left_d(); d -= 2) {
        if (a.at_d(d) == 1) {
            parts.push_back(d / 2 + i);
            ++i;
        }
    }
    // Below the window everything is 1, giving zero parts from there on.
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

ResidueClass::ResidueClass(int modulus, long long rep_d, Support s)
    : r(modulus), value_d(0), seq_support(s) {
    if (modulus < 1) fail(ErrorCode::BadInput, "ResidueClass: modulus must be positive");
    const long long m = 2LL * modulus;
    value_d = ((rep_d % m) + m) % m;
    if (((value_d % 2) + 2) % 2 != dual_parity(s))
        fail(ErrorCode::SupportMismatch, "ResidueClass: representative off the dual lattice");
}

ResidueClass ResidueClass::theta() const {
    return ResidueClass(r, -value_d, seq_support);
}

bool ResidueClass::linked_to(const ResidueClass& o) const {
    if (r != o.r || seq_support != o.seq_support) return false;
    const long long m = 2LL * r;
    long long diff = ((value_d - o.value_d) % m + m) % m;
    return diff == 2 || diff == m - 2;
}

bool ResidueClass::contains(long long d) const {
    const long long m = 2LL * r;
    return ((d - value_d) % m + m) % m == 0;
}

std::string ResidueClass::to_string() const {
    std::string s = value_d % 2 == 0 ? std::to_string(value_d / 2)
                                     : std::to_string(value_d) + "/2";
    return s + " mod " + std::to_string(r);
}

std::vector<ResidueClass> all_classes(int r, Support s) {
    std::vector<ResidueClass> out;
    for (long long d = dual_parity(s); d < 2LL * r; d += 2) out.emplace_back(r, d, s);
    return out;
}

std::vector<Weight> dominant_weights_up_to(LieType type, long long max_coord_d) {
    std::vector<Weight> out;
    std::vector<long long> cur(static_cast<size_t>(type.rank), 0);
    const long long lo = coord_parity(type.family);  // smallest admissible coordinate
    long long top = max_coord_d;
    if (((top - lo) % 2 + 2) % 2 != 0) --top;  // align to the family parity
    auto rec = [&](auto&& self, int i, long long bound) -> void {
        if (i == type.rank) {
            out.push_back(Weight{type, cur});
            return;
        }
        for (long long d = bound; d >= lo; d -= 2) {
            cur[static_cast<size_t>(i)] = d;
            self(self, i + 1, d);
        }
    };
    rec(rec, 0, top);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fockqsp
