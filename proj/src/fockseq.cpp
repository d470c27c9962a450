#include "fockqsp/fockseq.hpp"

#include <algorithm>

namespace fockqsp {

namespace {
// Count of lattice points d with lo <= d <= hi and d ≡ parity mod 2.
long long count_lattice(long long lo, long long hi, int parity) {
    if (lo > hi) return 0;
    long long first = lo + (((parity - lo) % 2 + 2) % 2);
    if (first > hi) return 0;
    return (hi - first) / 2 + 1;
}
}  // namespace

Sequence::Sequence(Support support, long long left_d, std::string bits)
    : support_(support), left_d_(left_d), bits_(std::move(bits)) {
    if (((left_d_ % 2 + 2) % 2) != lattice_parity(support_))
        fail(ErrorCode::SupportMismatch, "Sequence: window start off the support lattice");
    for (char b : bits_)
        if (b != '0' && b != '1') fail(ErrorCode::BadInput, "Sequence: bits must be 0/1");
    size_t lead = 0;
    while (lead < bits_.size() && bits_[lead] == '1') ++lead;
    if (lead) {
        bits_.erase(0, lead);
        left_d_ += 2 * static_cast<long long>(lead);
    }
    while (!bits_.empty() && bits_.back() == '0') bits_.pop_back();
}

int Sequence::at_d(long long d) const {
    if (((d % 2 + 2) % 2) != lattice_parity(support_))
        fail(ErrorCode::SupportMismatch, "Sequence::at_d: position off the support lattice");
    if (d < left_d_) return 1;
    long long idx = (d - left_d_) / 2;
    if (idx >= window_len()) return 0;
    return bits_[static_cast<size_t>(idx)] - '0';
}

long long Sequence::charge() const {
    const int par = lattice_parity(support_);
    // Positives: the all-1 tail below the window plus 1-bits inside it.
    long long ones_pos = count_lattice(1, left_d_ - 2, par);
    long long zeros_nonpos = count_lattice(left_d_ + 2 * window_len(), 0, par);
    for (long long i = 0; i < window_len(); ++i) {
        long long d = left_d_ + 2 * i;
        char b = bits_[static_cast<size_t>(i)];
        if (d > 0 && b == '1') ++ones_pos;
        if (d <= 0 && b == '0') ++zeros_nonpos;
    }
    return ones_pos - zeros_nonpos;
}

Sequence Sequence::shifted_d(long long delta_d) const {
    return Sequence(support_, left_d_ - delta_d, bits_);
}

std::pair<long long, long long> Sequence::move_range_d() const {
    return {left_d_ - 1, left_d_ + 2 * window_len() - 1};
}

Sequence Sequence::with_swap(long long from_d, long long to_d) const {
    long long lo = std::min({left_d_, from_d, to_d});
    long long hi = std::max({left_d_ + 2 * (window_len() - 1), from_d, to_d});
    std::string buf;
    buf.reserve(static_cast<size_t>((hi - lo) / 2 + 1));
    for (long long d = lo; d <= hi; d += 2) buf.push_back(static_cast<char>('0' + at_d(d)));
    buf[static_cast<size_t>((from_d - lo) / 2)] = '0';
    buf[static_cast<size_t>((to_d - lo) / 2)] = '1';
    return Sequence(support_, lo, std::move(buf));
}

std::optional<Sequence> move_e(long long i_d, const Sequence& a) {
    if (((i_d % 2 + 2) % 2) != dual_parity(a.support()))
        fail(ErrorCode::SupportMismatch, "move_e: index off the dual lattice");
    if (a.at_d(i_d + 1) == 1 && a.at_d(i_d - 1) == 0) return a.with_swap(i_d + 1, i_d - 1);
    return std::nullopt;
}

std::optional<Sequence> move_f(long long i_d, const Sequence& a) {
    if (((i_d % 2 + 2) % 2) != dual_parity(a.support()))
        fail(ErrorCode::SupportMismatch, "move_f: index off the dual lattice");
    if (a.at_d(i_d - 1) == 1 && a.at_d(i_d + 1) == 0) return a.with_swap(i_d - 1, i_d + 1);
    return std::nullopt;
}

namespace {

inline bool e_defined(const Sequence& a, long long k_d) {
    return a.at_d(k_d + 1) == 1 && a.at_d(k_d - 1) == 0;
}
inline bool f_defined(const Sequence& a, long long k_d) {
    return a.at_d(k_d - 1) == 1 && a.at_d(k_d + 1) == 0;
}

long long count_kind(StatKind kind, const Sequence& a, long long k_d) {
    switch (kind) {
        case StatKind::E: return e_defined(a, k_d) ? 1 : 0;
        case StatKind::F: return f_defined(a, k_d) ? 1 : 0;
        case StatKind::E_MINUS_F:
            return (e_defined(a, k_d) ? 1 : 0) - (f_defined(a, k_d) ? 1 : 0);
        case StatKind::F_MINUS_E:
            return (f_defined(a, k_d) ? 1 : 0) - (e_defined(a, k_d) ? 1 : 0);
    }
    return 0;
}

void check_stat_args(int r, long long j_d, const Sequence& a) {
    if (r < 1) fail(ErrorCode::BadInput, "counting statistic needs r >= 1");
    if (((j_d % 2 + 2) % 2) != dual_parity(a.support()))
        fail(ErrorCode::SupportMismatch, "counting statistic index off the dual lattice");
}

}  // namespace

long long stat_R(StatKind kind, int r, long long j_d, const Sequence& a) {
    check_stat_args(r, j_d, a);
    auto [lo, hi] = a.move_range_d();
    const long long m = 2LL * r;
    long long k = j_d + m;
    if (k < lo) k += (lo - k + m - 1) / m * m;
    long long total = 0;
    for (; k <= hi; k += m) total += count_kind(kind, a, k);
    return total;
}

long long stat_L(StatKind kind, int r, long long j_d, const Sequence& a) {
    check_stat_args(r, j_d, a);
    auto [lo, hi] = a.move_range_d();
    const long long m = 2LL * r;
    long long k = j_d - m;
    if (k > hi) k -= (k - hi + m - 1) / m * m;
    long long total = 0;
    for (; k >= lo; k -= m) total += count_kind(kind, a, k);
    return total;
}

long long stat_T(StatKind kind, int r, long long pbar_d, const Sequence& a) {
    check_stat_args(r, pbar_d, a);
    auto [lo, hi] = a.move_range_d();
    const long long m = 2LL * r;
    long long first = lo + ((pbar_d - lo) % m + m) % m;
    long long total = 0;
    for (long long k = first; k <= hi; k += m) total += count_kind(kind, a, k);
    return total;
}

void FockVector::add_term(const Sequence& a, const Laurent& c) {
    if (a.support() != support_) fail(ErrorCode::SupportMismatch, "FockVector: mixed supports");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    if (o.support_ != support_) fail(ErrorCode::SupportMismatch, "FockVector: mixed supports");
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    if (o.support_ != support_) fail(ErrorCode::SupportMismatch, "FockVector: mixed supports");
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

FockVector operator*(const Laurent& c, const FockVector& x) {
    FockVector out(x.support());
    if (c.is_zero()) return out;
    for (const auto& [a, coeff] : x.terms_) out.terms_.emplace(a, c * coeff);
    return out;
}

FockVector FockVector::div_exact(const Laurent& d) const {
    FockVector out(support_);
    for (const auto& [a, c] : terms_) out.terms_.emplace(a, Laurent::div_exact(c, d));
    return out;
}

std::string Sequence::to_string() const {
    std::string s = support_ == Support::INT ? "Z[" : "H[";
    s += std::to_string(left_d_);
    s += "]:";
    s += bits_.empty() ? "(empty)" : bits_;
    return s;
}

}  // namespace fockqsp
