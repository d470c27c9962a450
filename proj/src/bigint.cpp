#include "fockqsp/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace fockqsp {

namespace {
// Keep the fast path away from the INT64_MIN edge so negation is always safe.
constexpr long long kSmallMax = (1LL << 62);
}  // namespace

std::vector<uint32_t> BigInt::mag_of(unsigned long long v) {
    std::vector<uint32_t> m;
    while (v) {
        m.push_back(static_cast<uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
    return m;
}

// After this, the value lives in (sign_, mag_); zero keeps mag_ empty and
// sign_ 0, so callers branch on sign_ before touching magnitudes.
void BigInt::promote() {
    if (big()) return;
    long long v = small_;
    sign_ = (v > 0) - (v < 0);
    unsigned long long a = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    mag_ = mag_of(a);
    small_ = 0;
}

void BigInt::normalize() {
    if (!big()) return;
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) {
        small_ = 0;
        sign_ = 0;
        return;
    }
    if (mag_.size() <= 2) {
        unsigned long long a = mag_[0];
        if (mag_.size() == 2) a |= static_cast<unsigned long long>(mag_[1]) << 32;
        if (a <= static_cast<unsigned long long>(kSmallMax)) {
            small_ = sign_ < 0 ? -static_cast<long long>(a) : static_cast<long long>(a);
            sign_ = 0;
            mag_.clear();
        }
    }
}

bool BigInt::fits_int64() const {
    if (!big()) return true;
    if (mag_.size() > 2) return false;
    unsigned long long a = mag_[0];
    if (mag_.size() == 2) a |= static_cast<unsigned long long>(mag_[1]) << 32;
    if (sign_ < 0) return a <= (1ULL << 63);
    return a < (1ULL << 63);
}

long long BigInt::to_int64() const {
    if (!big()) return small_;
    if (!fits_int64()) throw std::overflow_error("BigInt::to_int64: out of range");
    unsigned long long a = mag_[0];
    if (mag_.size() == 2) a |= static_cast<unsigned long long>(mag_[1]) << 32;
    return sign_ < 0 ? -static_cast<long long>(a) : static_cast<long long>(a);
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(std::max(a.size(), b.size()) + 1, 0);
    unsigned long long carry = 0;
    for (size_t i = 0; i < out.size(); ++i) {
        unsigned long long s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size(), 0);
    long long borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        long long s = static_cast<long long>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += 1LL << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(s);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        unsigned long long carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            unsigned long long s = static_cast<unsigned long long>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
            carry = s >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            unsigned long long s = out[k] + carry;
            out[k] = static_cast<uint32_t>(s & 0xffffffffu);
            carry = s >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Binary long division on magnitudes. Numbers here stay a few hundred
// bits at most, so the O(bits * limbs) cost is irrelevant.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.assign(a.size(), 0);
    r.clear();
    for (size_t bit = a.size() * 32; bit-- > 0;) {
        // r = (r << 1) | a.bit(bit)
        uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
        for (size_t i = 0; i < r.size(); ++i) {
            uint32_t next = r[i] >> 31;
            r[i] = (r[i] << 1) | carry;
            carry = next;
        }
        if (carry) r.push_back(carry);
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[bit / 32] |= 1u << (bit % 32);
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (out.big())
        out.sign_ = -out.sign_;
    else
        out.small_ = -out.small_;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (!big() && !o.big()) {
        long long s;
        if (!__builtin_add_overflow(small_, o.small_, &s) && s <= kSmallMax && s >= -kSmallMax) {
            small_ = s;
            return *this;
        }
    }
    BigInt a = *this, b = o;
    a.promote();
    b.promote();
    if (a.sign_ == 0) {
        *this = o;
        return *this;
    }
    if (b.sign_ == 0) return *this;
    if (a.sign_ == b.sign_) {
        a.mag_ = add_mag(a.mag_, b.mag_);
    } else {
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) {
            *this = BigInt(0);
            return *this;
        }
        if (c > 0) {
            a.mag_ = sub_mag(a.mag_, b.mag_);
        } else {
            a.mag_ = sub_mag(b.mag_, a.mag_);
            a.sign_ = b.sign_;
        }
    }
    a.normalize();
    *this = a;
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (!a.big() && !b.big()) {
        long long p;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p) && p <= kSmallMax && p >= -kSmallMax)
            return BigInt(p);
    }
    BigInt x = a, y = b;
    x.promote();
    y.promote();
    BigInt out;
    out.sign_ = x.sign_ * y.sign_;
    out.mag_ = BigInt::mul_mag(x.mag_, y.mag_);
    out.normalize();
    return out;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    *this = *this * o;
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt::divmod: division by zero");
    if (!a.big() && !b.big()) {
        q = BigInt(a.small_ / b.small_);
        r = BigInt(a.small_ % b.small_);
        return;
    }
    BigInt x = a, y = b;
    x.promote();
    y.promote();
    if (x.sign_ == 0) {
        q = BigInt(0);
        r = BigInt(0);
        return;
    }
    std::vector<uint32_t> qm, rm;
    divmod_mag(x.mag_, y.mag_, qm, rm);
    q = BigInt(0);
    r = BigInt(0);
    if (!qm.empty()) {
        q.mag_ = std::move(qm);
        q.sign_ = x.sign_ * y.sign_;
        q.normalize();
    }
    if (!rm.empty()) {
        r.mag_ = std::move(rm);
        r.sign_ = x.sign_;
        r.normalize();
    }
}

BigInt BigInt::div_exact(const BigInt& a, const BigInt& b, bool* ok) {
    BigInt q, r;
    divmod(a, b, q, r);
    *ok = r.is_zero();
    return q;
}

int BigInt::cmp(const BigInt& o) const {
    if (!big() && !o.big()) return (small_ > o.small_) - (small_ < o.small_);
    BigInt a = *this, b = o;
    a.promote();
    b.promote();
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ < 0 ? -c : c;
}

std::string BigInt::to_string() const {
    if (!big()) return std::to_string(small_);
    std::string digits;
    BigInt v = *this;
    if (v.sign_ < 0) v.sign_ = 1;
    const BigInt base(1000000000LL);
    while (!v.is_zero()) {
        BigInt q, r;
        divmod(v, base, q, r);
        long long chunk = r.to_int64();
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        v = q;
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (is_negative()) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(const std::string& s) {
    BigInt out(0);
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i == s.size()) throw std::invalid_argument("BigInt::from_string: empty");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt::from_string: bad digit");
        out = out * BigInt(10) + BigInt(s[i] - '0');
    }
    return neg ? -out : out;
}

}  // namespace fockqsp
