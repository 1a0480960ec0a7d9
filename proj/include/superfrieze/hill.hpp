#pragma once

#include <vector>

#include "superfrieze/matrix.hpp"
#include "superfrieze/scalar.hpp"

namespace superfrieze {

/// A pair of sequences (V, W) standing for V + xi*W, where xi is the formal
/// odd symbol of the sequence space. xi is structural: it is never a ring
/// generator, so it cannot collide with odd coefficients. Each component
/// keeps its own contiguous support range.
class SuperSequencePair {
  public:
    SuperSequencePair() = default;
    SuperSequencePair(int v_base, std::vector<SuperScalar> v,
                      int w_base, std::vector<SuperScalar> w)
        : v_base_(v_base), w_base_(w_base), v_(std::move(v)), w_(std::move(w)) {}

    int v_lo() const { return v_base_; }
    int v_hi() const { return v_base_ + static_cast<int>(v_.size()) - 1; }
    int w_lo() const { return w_base_; }
    int w_hi() const { return w_base_ + static_cast<int>(w_.size()) - 1; }

    /// Common range where both components are defined: [lo, hi].
    int lo() const { return std::max(v_lo(), w_lo()); }
    int hi() const { return std::min(v_hi(), w_hi()); }

    const SuperScalar& v_at(int i) const;
    const SuperScalar& w_at(int i) const;

    bool has_v(int i) const { return i >= v_lo() && i <= v_hi(); }
    bool has_w(int i) const { return i >= w_lo() && i <= w_hi(); }

  private:
    int v_base_ = 0, w_base_ = 0;
    std::vector<SuperScalar> v_, w_;
};

/// Equality of two pairs on an explicit index window.
bool equal_on(const SuperSequencePair& a, const SuperSequencePair& b, int lo, int hi);

/// (T V)_i = V_{i-1} applied to both components.
SuperSequencePair shift_T(const SuperSequencePair& s);

SuperSequencePair negate(const SuperSequencePair& s);

/// The odd shift: output V_i = W_i, output W_i = -V_{i-1}. Its square is -T.
SuperSequencePair super_shift(const SuperSequencePair& s);

/// Parity inversion: swaps the two components.
SuperSequencePair parity_invert(const SuperSequencePair& s);

/// Action of (k, lambda): V_i -> V_{i+k} - lambda W_{i+k},
/// W_i -> lambda V_{i+k-1} + W_{i+k}. lambda must be odd.
SuperSequencePair group_action(int k, const SuperScalar& lambda, const SuperSequencePair& s);

/// (anti)periodic potential of period n: a_{i+n} = a_i, beta_{i+n} = -beta_i.
struct HillCoefficients {
    int n = 0;
    std::vector<SuperScalar> a;    // even, stored phases 0..n-1
    std::vector<SuperScalar> beta; // odd

    HillCoefficients() = default;
    HillCoefficients(std::vector<SuperScalar> a_in, std::vector<SuperScalar> beta_in);

    SuperScalar a_at(int i) const;
    SuperScalar beta_at(int i) const;

    friend bool operator==(const HillCoefficients&, const HillCoefficients&) = default;
};

/// The 3x3 transfer step ((0,1,0),(-1,a,-beta),(0,beta,1)), block (2,1).
SuperMatrix transfer_matrix(const SuperScalar& a, const SuperScalar& beta);

/// Coefficients plus the cached one-period transfer matrices.
class HillSystem {
  public:
    explicit HillSystem(HillCoefficients coeffs);

    const HillCoefficients& coeffs() const { return coeffs_; }
    /// Transfer matrix at any integer index (antiperiodic beta handled).
    SuperMatrix transfer_at(int i) const;

  private:
    HillCoefficients coeffs_;
    std::vector<SuperMatrix> transfer_; // phases 0..n-1
};

/// Pointwise potential product: (beta_i + xi a_i)(V_i + xi W_i)
///   = beta_i V_i + xi (a_i V_i - beta_i W_i).
SuperSequencePair apply_potential(const HillCoefficients& c, const SuperSequencePair& s);

/// Explicit action of the order-3/2 Sturm-Liouville operator:
/// output V_i = W_i - W_{i-1} - beta_i V_{i-1},
/// output W_i = V_i - a_i V_{i-1} + V_{i-2} + beta_i W_{i-1}.
SuperSequencePair apply_sturm_liouville(const HillCoefficients& c, const SuperSequencePair& s);

/// Same operator assembled as super_shift^3 + potential*super_shift^2 + parity_invert.
/// Kept as an independent code path; tests compare the two.
SuperSequencePair apply_sturm_liouville_operator_form(const HillCoefficients& c,
                                                      const SuperSequencePair& s);

/// Iterates the transfer recurrence from init = (V_{from-2}, V_{from-1}, W_{from-1}).
SuperSequencePair propagate(const HillCoefficients& c,
                            const SuperScalar& v_m2, const SuperScalar& v_m1,
                            const SuperScalar& w_m1, int from, int steps);

/// Ordered product A_{i+n-1} ... A_{i+1} A_i.
SuperMatrix monodromy(const HillSystem& sys, int i = 0);

/// Exact equality with diag(-1,-1,1).
bool check_hill_condition(const SuperMatrix& m);

/// Entries of the symbolic monodromy minus diag(-1,-1,1) over fresh
/// generators a1..an (even) and b1..bn (odd); zero entries dropped.
std::vector<SuperScalar> supervariety_equations(int n);

/// Period-n coefficient data of the experimental order-5/2 operator;
/// all four lists extend periodically.
struct FifthHalfOperator {
    int n = 0;
    std::vector<SuperScalar> a, a_prime;       // even
    std::vector<SuperScalar> beta, beta_prime; // odd

    FifthHalfOperator(std::vector<SuperScalar> a_in, std::vector<SuperScalar> a_prime_in,
                      std::vector<SuperScalar> beta_in, std::vector<SuperScalar> beta_prime_in);

    SuperScalar a_at(int i) const { return a[mod(i)]; }
    SuperScalar a_prime_at(int i) const { return a_prime[mod(i)]; }
    SuperScalar beta_at(int i) const { return beta[mod(i)]; }
    SuperScalar beta_prime_at(int i) const { return beta_prime[mod(i)]; }

  private:
    int mod(int i) const { return ((i % n) + n) % n; }
};

/// The 5x5 step matrix of the order-5/2 recurrence at index i, block (3,2).
SuperMatrix fifth_half_step(const FifthHalfOperator& op, int i);

/// Propagation only (no closure checks): init holds
/// (V_{from-3}, V_{from-2}, V_{from-1}, W_{from-2}, W_{from-1}).
SuperSequencePair propagate_5_2(const FifthHalfOperator& op,
                                const std::vector<SuperScalar>& init, int from, int steps);

/// Residual pair of the order-5/2 recurrence applied to a sequence:
/// even slot V_i - (V_{i-3} - a'_i V_{i-2} + a_i V_{i-1} + beta_i W_{i-1}),
/// odd slot  W_i - (-W_{i-2} + (a'_i - 1) W_{i-1} + beta'_i V_{i-1}).
SuperSequencePair apply_5_2_residual(const FifthHalfOperator& op, const SuperSequencePair& s);

} // namespace superfrieze
