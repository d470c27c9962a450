#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fockqsp/bigint.hpp"
#include "fockqsp/error.hpp"

namespace fockqsp {

/// Laurent polynomial in one variable v over the integers, kept as a
/// sorted sparse list of (exponent, nonzero coefficient) terms.
///
/// Everything the operators produce lives in Z[v, v^-1]; the exact
/// division below doubles as a relation-failure detector, so it never
/// truncates.
class Laurent {
  public:
    using Term = std::pair<int, BigInt>;

    Laurent() = default;
    explicit Laurent(long long constant) {
        if (constant != 0) terms_.emplace_back(0, BigInt(constant));
    }

    static Laurent monomial(long long coeff, int exp) {
        Laurent p;
        if (coeff != 0) p.terms_.emplace_back(exp, BigInt(coeff));
        return p;
    }
    static Laurent monomial(BigInt coeff, int exp) {
        Laurent p;
        if (!coeff.is_zero()) p.terms_.emplace_back(exp, std::move(coeff));
        return p;
    }
    /// v^exp
    static Laurent power(int exp) { return monomial(1LL, exp); }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    int min_exp() const;
    int max_exp() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    /// Exact quotient; throws NotDivisible when none exists and
    /// DivisionByZero for a zero divisor.
    static Laurent div_exact(const Laurent& a, const Laurent& b);

    /// Sum of all coefficients (the value at v = 1).
    BigInt eval_one() const;

    /// Substitute v -> v^-1.
    Laurent bar() const;

    std::string to_string() const;  // e.g. "v^2 - 2 + v^-2"

  private:
    std::vector<Term> terms_;  // ascending exponent, no zero coefficients
};

/// [n]_v = (v^n - v^-n)/(v - v^-1); zero for n = 0.
Laurent quantum_int(int n);
/// [n]_v!
Laurent quantum_factorial(int n);
/// [k over n]_v by the product formula; always a genuine Laurent polynomial.
Laurent quantum_binomial(int k, int n);

}  // namespace fockqsp
