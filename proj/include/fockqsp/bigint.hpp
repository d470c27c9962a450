#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fockqsp {

// Signed arbitrary-precision integer with an inline int64 fast path.
// Values stay on the fast path until an operation overflows, at which
// point they are promoted to a little-endian base-2^32 magnitude.
// Coefficients in this project are almost always tiny, so the fast
// path is the one that matters.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v) : small_(v) {}

    static BigInt from_string(const std::string& s);

    bool is_zero() const { return big() ? false : small_ == 0; }
    bool is_negative() const { return big() ? sign_ < 0 : small_ < 0; }
    bool fits_int64() const;
    long long to_int64() const;  // throws if out of range
    std::string to_string() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division; remainder has the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    // Quotient of an exact division; sets *ok=false if b does not divide a.
    static BigInt div_exact(const BigInt& a, const BigInt& b, bool* ok);

    int cmp(const BigInt& o) const;  // -1, 0, 1
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.cmp(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.cmp(b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.cmp(b) >= 0; }

  private:
    // Fast path: mag_ empty, value in small_. Big path: |value| in mag_
    // (no leading zero limbs, at least 1 limb), sign in sign_.
    long long small_ = 0;
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    bool big() const { return !mag_.empty(); }
    void promote();
    void normalize();
    static std::vector<uint32_t> mag_of(unsigned long long v);

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace fockqsp
