#include "fockqsp/laurent.hpp"

#include <algorithm>

namespace fockqsp {

int Laurent::min_exp() const {
    if (terms_.empty()) fail(ErrorCode::BadInput, "min_exp of zero polynomial");
    return terms_.front().first;
}

int Laurent::max_exp() const {
    if (terms_.empty()) fail(ErrorCode::BadInput, "max_exp of zero polynomial");
    return terms_.back().first;
}

Laurent Laurent::operator-() const {
    Laurent out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae && b != be) {
        if (a->first < b->first) {
            merged.push_back(*a++);
        } else if (b->first < a->first) {
            merged.push_back(*b++);
        } else {
            BigInt c = a->second + b->second;
            if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    merged.insert(merged.end(), a, ae);
    merged.insert(merged.end(), b, be);
    terms_ = std::move(merged);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    if (a.terms_.empty() || b.terms_.empty()) return out;
    // Monomial factors dominate in practice; shift directly.
    if (a.terms_.size() == 1) {
        out.terms_.reserve(b.terms_.size());
        for (const auto& [e, c] : b.terms_) {
            BigInt p = a.terms_[0].second * c;
            out.terms_.emplace_back(e + a.terms_[0].first, std::move(p));
        }
        return out;
    }
    if (b.terms_.size() == 1) return b * a;
    for (const auto& [ea, ca] : a.terms_) {
        Laurent row;
        row.terms_.reserve(b.terms_.size());
        for (const auto& [eb, cb] : b.terms_) row.terms_.emplace_back(ea + eb, ca * cb);
        out += row;
    }
    return out;
}

Laurent Laurent::div_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "Laurent division by zero");
    if (a.is_zero()) return Laurent();
    // Ascending-exponent elimination. If q*b = a exactly then the
    // quotient term exponents never exceed max_exp(a) - max_exp(b);
    // crossing that bound (or a failed coefficient division) means no
    // exact quotient exists.
    const int cap = a.max_exp() - b.max_exp();
    Laurent rem = a, quot;
    const int be = b.min_exp();
    const BigInt& bc = b.terms_.front().second;
    while (!rem.is_zero()) {
        int qe = rem.min_exp() - be;
        if (qe > cap) fail(ErrorCode::NotDivisible, "no exact Laurent quotient");
        bool ok = false;
        BigInt qc = BigInt::div_exact(rem.terms_.front().second, bc, &ok);
        if (!ok) fail(ErrorCode::NotDivisible, "no exact Laurent quotient");
        Laurent t = Laurent::monomial(std::move(qc), qe);
        rem -= t * b;
        quot += t;
    }
    return quot;
}

BigInt Laurent::eval_one() const {
    BigInt s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Laurent Laurent::bar() const {
    Laurent out;
    out.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        out.terms_.emplace_back(-it->first, it->second);
    return out;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt abs = c.is_negative() ? -c : c;
        if (s.empty())
            s += c.is_negative() ? "-" : "";
        else
            s += c.is_negative() ? " - " : " + ";
        std::string coeff = abs.to_string();
        if (e == 0) {
            s += coeff;
        } else {
            if (coeff != "1") s += coeff + "*";
            s += e == 1 ? "v" : "v^" + std::to_string(e);
        }
    }
    return s;
}

Laurent quantum_int(int n) {
    if (n < 0) fail(ErrorCode::BadInput, "quantum_int: n < 0");
    Laurent out;
    for (int e = n - 1; e >= 1 - n; e -= 2) out += Laurent::power(e);
    return out;
}

Laurent quantum_factorial(int n) {
    if (n < 0) fail(ErrorCode::BadInput, "quantum_factorial: n < 0");
    Laurent out(1);
    for (int m = 1; m <= n; ++m) out *= quantum_int(m);
    return out;
}

Laurent quantum_binomial(int k, int n) {
    if (n < 0) fail(ErrorCode::BadInput, "quantum_binomial: n < 0");
    Laurent num(1), den(1);
    for (int m = 1; m <= n; ++m) {
        num *= Laurent::power(k + 1 - m) - Laurent::power(-k - 1 + m);
        den *= Laurent::power(m) - Laurent::power(-m);
    }
    return Laurent::div_exact(num, den);
}

}  // namespace fockqsp
