#include "superfrieze/hill.hpp"

#include <algorithm>

#include "superfrieze/errors.hpp"

namespace superfrieze {

const SuperScalar& SuperSequencePair::v_at(int i) const {
    if (!has_v(i)) throw InsufficientSupport("V at index " + std::to_string(i));
    return v_[static_cast<std::size_t>(i - v_base_)];
}

const SuperScalar& SuperSequencePair::w_at(int i) const {
    if (!has_w(i)) throw InsufficientSupport("W at index " + std::to_string(i));
    return w_[static_cast<std::size_t>(i - w_base_)];
}

bool equal_on(const SuperSequencePair& a, const SuperSequencePair& b, int lo, int hi) {
    for (int i = lo; i <= hi; ++i)
        if (a.v_at(i) != b.v_at(i) || a.w_at(i) != b.w_at(i)) return false;
    return true;
}

namespace {

std::vector<SuperScalar> slice_v(const SuperSequencePair& s, int lo, int hi) {
    std::vector<SuperScalar> r;
    for (int i = lo; i <= hi; ++i) r.push_back(s.v_at(i));
    return r;
}

std::vector<SuperScalar> slice_w(const SuperSequencePair& s, int lo, int hi) {
    std::vector<SuperScalar> r;
    for (int i = lo; i <= hi; ++i) r.push_back(s.w_at(i));
    return r;
}

} // namespace

SuperSequencePair shift_T(const SuperSequencePair& s) {
    return {s.v_lo() + 1, slice_v(s, s.v_lo(), s.v_hi()),
            s.w_lo() + 1, slice_w(s, s.w_lo(), s.w_hi())};
}

SuperSequencePair negate(const SuperSequencePair& s) {
    auto v = slice_v(s, s.v_lo(), s.v_hi());
    auto w = slice_w(s, s.w_lo(), s.w_hi());
    for (auto& x : v) x = -x;
    for (auto& x : w) x = -x;
    return {s.v_lo(), std::move(v), s.w_lo(), std::move(w)};
}

SuperSequencePair super_shift(const SuperSequencePair& s) {
    auto v = slice_w(s, s.w_lo(), s.w_hi());
    auto w = slice_v(s, s.v_lo(), s.v_hi());
    for (auto& x : w) x = -x;
    return {s.w_lo(), std::move(v), s.v_lo() + 1, std::move(w)};
}

SuperSequencePair parity_invert(const SuperSequencePair& s) {
    return {s.w_lo(), slice_w(s, s.w_lo(), s.w_hi()),
            s.v_lo(), slice_v(s, s.v_lo(), s.v_hi())};
}

SuperSequencePair group_action(int k, const SuperScalar& lambda, const SuperSequencePair& s) {
    if (!lambda.is_odd()) throw ParityMismatch("group action parameter must be odd");
    const int lo = s.lo(), hi = s.hi();
    // output V_i needs index i+k, output W_i needs i+k-1 and i+k
    const int out_v_lo = lo - k, out_v_hi = hi - k;
    const int out_w_lo = lo - k + 1, out_w_hi = hi - k;
    std::vector<SuperScalar> v, w;
    for (int i = out_v_lo; i <= out_v_hi; ++i)
        v.push_back(s.v_at(i + k) - lambda * s.w_at(i + k));
    for (int i = out_w_lo; i <= out_w_hi; ++i)
        w.push_back(lambda * s.v_at(i + k - 1) + s.w_at(i + k));
    return {out_v_lo, std::move(v), out_w_lo, std::move(w)};
}

HillCoefficients::HillCoefficients(std::vector<SuperScalar> a_in,
                                   std::vector<SuperScalar> beta_in)
    : n(static_cast<int>(a_in.size())), a(std::move(a_in)), beta(std::move(beta_in)) {
    if (n < 3 || static_cast<int>(beta.size()) != n)
        throw DimensionMismatch("Hill coefficients need matching lists of length n >= 3");
    for (const auto& x : a)
        if (!x.is_even()) throw ParityMismatch("even coefficient list contains odd terms");
    for (const auto& x : beta)
        if (!x.is_odd()) throw ParityMismatch("odd coefficient list contains even terms");
}

SuperScalar HillCoefficients::a_at(int i) const {
    const int k = ((i % n) + n) % n;
    return a[static_cast<std::size_t>(k)];
}

SuperScalar HillCoefficients::beta_at(int i) const {
    const int k = ((i % n) + n) % n;
    const long q = (static_cast<long>(i) - k) / n;
    const SuperScalar& b = beta[static_cast<std::size_t>(k)];
    return (q % 2 == 0) ? b : -b;
}

SuperMatrix transfer_matrix(const SuperScalar& a, const SuperScalar& beta) {
    if (!a.is_even()) throw ParityMismatch("transfer coefficient a must be even");
    if (!beta.is_odd()) throw ParityMismatch("transfer coefficient beta must be odd");
    SuperMatrix m(3, 3, {2, 1});
    m.set(0, 1, SuperScalar::one());
    m.set(1, 0, -SuperScalar::one());
    m.set(1, 1, a);
    m.set(1, 2, -beta);
    m.set(2, 1, beta);
    m.set(2, 2, SuperScalar::one());
    return m;
}

HillSystem::HillSystem(HillCoefficients coeffs) : coeffs_(std::move(coeffs)) {
    transfer_.reserve(static_cast<std::size_t>(coeffs_.n));
    for (int k = 0; k < coeffs_.n; ++k)
        transfer_.push_back(transfer_matrix(coeffs_.a[k], coeffs_.beta[k]));
}

SuperMatrix HillSystem::transfer_at(int i) const {
    const int n = coeffs_.n;
    const int k = ((i % n) + n) % n;
    const long q = (static_cast<long>(i) - k) / n;
    if (q % 2 == 0) return transfer_[static_cast<std::size_t>(k)];
    return transfer_matrix(coeffs_.a[k], -coeffs_.beta[k]);
}

SuperSequencePair apply_potential(const HillCoefficients& c, const SuperSequencePair& s) {
    const int lo = s.lo(), hi = s.hi();
    std::vector<SuperScalar> v, w;
    for (int i = lo; i <= hi; ++i) {
        v.push_back(c.beta_at(i) * s.v_at(i));
        w.push_back(c.a_at(i) * s.v_at(i) - c.beta_at(i) * s.w_at(i));
    }
    return {lo, std::move(v), lo, std::move(w)};
}

SuperSequencePair apply_sturm_liouville(const HillCoefficients& c, const SuperSequencePair& s) {
    const int lo = std::max(s.v_lo() + 2, s.w_lo() + 1);
    const int hi = std::min(s.v_hi(), s.w_hi());
    if (lo > hi) throw InsufficientSupport("need two extra indices of lookback");
    std::vector<SuperScalar> v, w;
    for (int i = lo; i <= hi; ++i) {
        v.push_back(s.w_at(i) - s.w_at(i - 1) - c.beta_at(i) * s.v_at(i - 1));
        w.push_back(s.v_at(i) - c.a_at(i) * s.v_at(i - 1) + s.v_at(i - 2) +
                    c.beta_at(i) * s.w_at(i - 1));
    }
    return {lo, std::move(v), lo, std::move(w)};
}

SuperSequencePair apply_sturm_liouville_operator_form(const HillCoefficients& c,
                                                      const SuperSequencePair& s) {
    const SuperSequencePair t2 = super_shift(super_shift(s));
    const SuperSequencePair t3 = super_shift(t2);
    const SuperSequencePair ut2 = apply_potential(c, t2);
    const SuperSequencePair pi = parity_invert(s);

    const int lo = std::max({t3.lo(), ut2.lo(), pi.lo()});
    const int hi = std::min({t3.hi(), ut2.hi(), pi.hi()});
    if (lo > hi) throw InsufficientSupport("operator form needs wider support");
    std::vector<SuperScalar> v, w;
    for (int i = lo; i <= hi; ++i) {
        v.push_back(t3.v_at(i) + ut2.v_at(i) + pi.v_at(i));
        w.push_back(t3.w_at(i) + ut2.w_at(i) + pi.w_at(i));
    }
    return {lo, std::move(v), lo, std::move(w)};
}

SuperSequencePair propagate(const HillCoefficients& c,
                            const SuperScalar& v_m2, const SuperScalar& v_m1,
                            const SuperScalar& w_m1, int from, int steps) {
    if (steps < 0) throw InputError("propagate needs steps >= 0");
    if (!v_m2.is_even() || !v_m1.is_even()) throw ParityMismatch("initial V values must be even");
    if (!w_m1.is_odd()) throw ParityMismatch("initial W value must be odd");

    std::vector<SuperScalar> v{v_m2, v_m1};
    std::vector<SuperScalar> w{w_m1};
    SuperScalar v_prev = v_m2, v_cur = v_m1, w_cur = w_m1;
    for (int i = from; i < from + steps; ++i) {
        const SuperScalar v_next = c.a_at(i) * v_cur - v_prev - c.beta_at(i) * w_cur;
        const SuperScalar w_next = c.beta_at(i) * v_cur + w_cur;
        v_prev = v_cur;
        v_cur = v_next;
        w_cur = w_next;
        v.push_back(v_cur);
        w.push_back(w_cur);
    }
    return {from - 2, std::move(v), from - 1, std::move(w)};
}

SuperMatrix monodromy(const HillSystem& sys, int i) {
    SuperMatrix m = sys.transfer_at(i);
    for (int k = 1; k < sys.coeffs().n; ++k) m = mat_mul(sys.transfer_at(i + k), m);
    return m;
}

bool check_hill_condition(const SuperMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) return false;
    const SuperScalar one = SuperScalar::one();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const SuperScalar& e = m.at(r, c);
            if (r != c) {
                if (!e.is_zero()) return false;
            } else if (e != (r == 2 ? one : -one)) {
                return false;
            }
        }
    return true;
}

std::vector<SuperScalar> supervariety_equations(int n) {
    if (n < 3) throw InputError("supervariety equations need n >= 3");
    std::vector<SuperScalar> a, b;
    for (int k = 1; k <= n; ++k) {
        a.push_back(sc_even("a", k));
        b.push_back(sc_odd("b", k));
    }
    const HillSystem sys(HillCoefficients(std::move(a), std::move(b)));
    const SuperMatrix m = monodromy(sys, 0);

    SuperMatrix target = SuperMatrix::identity(3, {2, 1});
    target.set(0, 0, -SuperScalar::one());
    target.set(1, 1, -SuperScalar::one());

    std::vector<SuperScalar> eqs;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            SuperScalar e = m.at(r, c) - target.at(r, c);
            if (!e.is_zero()) eqs.push_back(std::move(e));
        }
    return eqs;
}

FifthHalfOperator::FifthHalfOperator(std::vector<SuperScalar> a_in,
                                     std::vector<SuperScalar> a_prime_in,
                                     std::vector<SuperScalar> beta_in,
                                     std::vector<SuperScalar> beta_prime_in)
    : n(static_cast<int>(a_in.size())), a(std::move(a_in)), a_prime(std::move(a_prime_in)),
      beta(std::move(beta_in)), beta_prime(std::move(beta_prime_in)) {
    if (n < 1 || static_cast<int>(a_prime.size()) != n ||
        static_cast<int>(beta.size()) != n || static_cast<int>(beta_prime.size()) != n)
        throw DimensionMismatch("order-5/2 operator needs four lists of equal length");
    for (const auto& x : a)
        if (!x.is_even()) throw ParityMismatch("a list must be even");
    for (const auto& x : a_prime)
        if (!x.is_even()) throw ParityMismatch("a' list must be even");
    for (const auto& x : beta)
        if (!x.is_odd()) throw ParityMismatch("beta list must be odd");
    for (const auto& x : beta_prime)
        if (!x.is_odd()) throw ParityMismatch("beta' list must be odd");
}

SuperMatrix fifth_half_step(const FifthHalfOperator& op, int i) {
    SuperMatrix m(5, 5, {3, 2});
    const SuperScalar one = SuperScalar::one();
    m.set(0, 1, one);
    m.set(1, 2, one);
    m.set(2, 0, one);
    m.set(2, 1, -op.a_prime_at(i));
    m.set(2, 2, op.a_at(i));
    m.set(2, 4, op.beta_at(i));
    m.set(3, 4, one);
    m.set(4, 2, op.beta_prime_at(i));
    m.set(4, 3, -one);
    m.set(4, 4, op.a_prime_at(i) - one);
    return m;
}

SuperSequencePair propagate_5_2(const FifthHalfOperator& op,
                                const std::vector<SuperScalar>& init, int from, int steps) {
    if (init.size() != 5) throw DimensionMismatch("order-5/2 propagation needs a 5-vector");
    for (int k = 0; k < 3; ++k)
        if (!init[k].is_even()) throw ParityMismatch("first three initial values must be even");
    for (int k = 3; k < 5; ++k)
        if (!init[k].is_odd()) throw ParityMismatch("last two initial values must be odd");
    if (steps < 0) throw InputError("propagate needs steps >= 0");

    std::vector<SuperScalar> state = init; // (V_{i-3}, V_{i-2}, V_{i-1}, W_{i-2}, W_{i-1})
    std::vector<SuperScalar> v{state[0], state[1], state[2]};
    std::vector<SuperScalar> w{state[3], state[4]};
    for (int i = from; i < from + steps; ++i) {
        const SuperMatrix step = fifth_half_step(op, i);
        std::vector<SuperScalar> next(5);
        for (int r = 0; r < 5; ++r) {
            SuperScalar s;
            for (int c = 0; c < 5; ++c)
                if (!step.at(r, c).is_zero()) s += step.at(r, c) * state[static_cast<std::size_t>(c)];
            next[static_cast<std::size_t>(r)] = std::move(s);
        }
        state = std::move(next);
        v.push_back(state[2]);
        w.push_back(state[4]);
    }
    return {from - 3, std::move(v), from - 2, std::move(w)};
}

SuperSequencePair apply_5_2_residual(const FifthHalfOperator& op, const SuperSequencePair& s) {
    const int lo = std::max(s.v_lo() + 3, s.w_lo() + 2);
    const int hi = std::min(s.v_hi(), s.w_hi());
    if (lo > hi) throw InsufficientSupport("need three extra indices of lookback");
    std::vector<SuperScalar> v, w;
    for (int i = lo; i <= hi; ++i) {
        v.push_back(s.v_at(i) - (s.v_at(i - 3) - op.a_prime_at(i) * s.v_at(i - 2) +
                                 op.a_at(i) * s.v_at(i - 1) + op.beta_at(i) * s.w_at(i - 1)));
        w.push_back(s.w_at(i) - (-s.w_at(i - 2) + (op.a_prime_at(i) - SuperScalar::one()) * s.w_at(i - 1) +
                                 op.beta_prime_at(i) * s.v_at(i - 1)));
    }
    return {lo, std::move(v), lo, std::move(w)};
}

} // namespace superfrieze
