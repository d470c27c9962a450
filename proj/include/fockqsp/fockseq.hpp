#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fockqsp/error.hpp"
#include "fockqsp/laurent.hpp"

namespace fockqsp {

/// Support lattice of a sequence: the integers Z or the half-integers H.
/// All positions are stored doubled (2*i) so both cases are exact ints;
/// INT sequences live on even doubled positions, HALF on odd ones.
enum class Support : uint8_t { INT, HALF };

inline const char* support_name(Support s) { return s == Support::INT ? "INT" : "HALF"; }

/// Parity of doubled positions on the support lattice (0 even / 1 odd).
inline int lattice_parity(Support s) { return s == Support::INT ? 0 : 1; }
/// Parity of doubled positions in the dual lattice, where the moving
/// operators e_j / f_j are indexed.
inline int dual_parity(Support s) { return s == Support::INT ? 1 : 0; }

/// A charged {0,1}-sequence: value 1 at every position left of the
/// window, the stored bits inside it, and 0 to the right. Canonical
/// form has bits empty or starting with '0' and ending with '1', which
/// makes representatives unique.
class Sequence {
  public:
    Sequence(Support support, long long left_d, std::string bits);

    Support support() const { return support_; }
    long long left_d() const { return left_d_; }
    const std::string& bits() const { return bits_; }
    long long window_len() const { return static_cast<long long>(bits_.size()); }

    /// Value at doubled position d (must lie on the support lattice).
    int at_d(long long d) const;

    long long charge() const;

    /// Content translation: result(i) = (*this)(i + delta), with delta
    /// given doubled. The charge drops by delta.
    Sequence shifted_d(long long delta_d) const;

    /// Doubled dual-lattice range [lo, hi] outside of which no e- or
    /// f-move exists.
    std::pair<long long, long long> move_range_d() const;

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.support_ == b.support_ && a.left_d_ == b.left_d_ && a.bits_ == b.bits_;
    }
    friend bool operator<(const Sequence& a, const Sequence& b) {
        if (a.left_d_ != b.left_d_) return a.left_d_ < b.left_d_;
        return a.bits_ < b.bits_;
    }

    std::string to_string() const;

  private:
    Support support_;
    long long left_d_;
    std::string bits_;  // '0'/'1'

    Sequence with_swap(long long from_d, long long to_d) const;
    friend std::optional<Sequence> move_e(long long, const Sequence&);
    friend std::optional<Sequence> move_f(long long, const Sequence&);
};

/// e_i: moves the 1 at i+1/2 to i-1/2 when possible. i doubled, dual lattice.
std::optional<Sequence> move_e(long long i_d, const Sequence& a);
/// f_i: moves the 1 at i-1/2 to i+1/2 when possible.
std::optional<Sequence> move_f(long long i_d, const Sequence& a);

enum class StatKind : uint8_t { E, F, E_MINUS_F, F_MINUS_E };

/// R_r^kind(j, a): counting statistic over k in j + r*Z_{>0}.
long long stat_R(StatKind kind, int r, long long j_d, const Sequence& a);
/// L_r^kind(j, a): over k in j - r*Z_{>0}.
long long stat_L(StatKind kind, int r, long long j_d, const Sequence& a);
/// T_r^kind(pbar, a): over the whole residue class pbar mod r.
/// pbar_d is any doubled representative of the class.
long long stat_T(StatKind kind, int r, long long pbar_d, const Sequence& a);

/// Finite formal linear combination of sequences with Laurent coefficients.
class FockVector {
  public:
    explicit FockVector(Support support) : support_(support) {}

    Support support() const { return support_; }
    const std::map<Sequence, Laurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Sequence& a, const Laurent& c);

    FockVector& operator+=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

    friend FockVector operator*(const Laurent& c, const FockVector& x);

    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.support_ == b.support_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

    static FockVector basis(const Sequence& a) {
        FockVector x(a.support());
        x.add_term(a, Laurent(1));
        return x;
    }

    /// Coefficient-wise exact division, for commutator right-hand sides.
    FockVector div_exact(const Laurent& d) const;

  private:
    Support support_;
    std::map<Sequence, Laurent> terms_;
};

}  // namespace fockqsp
