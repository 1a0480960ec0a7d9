#include "superfrieze/continuants.hpp"

#include <functional>

#include "superfrieze/errors.hpp"

namespace superfrieze {

ContinuantSpec symbolic_continuant_spec(ContinuantFamily family, int n) {
    ContinuantSpec spec;
    spec.family = family;
    for (int k = 1; k <= n; ++k) {
        spec.a.push_back(sc_even("a", k));
        spec.beta.push_back(sc_odd("b", k));
    }
    return spec;
}

SuperScalar continuant_classical(const std::vector<SuperScalar>& a) {
    for (const auto& x : a)
        if (!x.is_even()) throw ParityMismatch("classical continuant entries must be even");
    SuperScalar k_pp = SuperScalar::one(); // K()
    if (a.empty()) return k_pp;
    SuperScalar k_p = a[0]; // K(a1)
    for (std::size_t i = 1; i < a.size(); ++i) {
        SuperScalar k = a[i] * k_p - k_pp;
        k_pp = std::move(k_p);
        k_p = std::move(k);
    }
    return k_p;
}

namespace {

void validate(const ContinuantSpec& spec) {
    if (spec.a.size() != spec.beta.size())
        throw DimensionMismatch("continuant spec lists must have equal length");
    if (spec.a.empty()) throw InputError("continuant spec must be nonempty");
    for (const auto& x : spec.a)
        if (!x.is_even()) throw ParityMismatch("a entries must be even");
    for (const auto& x : spec.beta)
        if (!x.is_odd()) throw ParityMismatch("beta entries must be odd");
}

// v_k, w_k over the first k symbols, by the joint recurrence
//   v_k = a_k v_{k-1} - v_{k-2} - b_k w_{k-1},  w_k = b_k v_{k-1} + w_{k-1}.
std::pair<SuperScalar, SuperScalar> even_odd_pair(const ContinuantSpec& spec, int upto) {
    SuperScalar v_pp = SuperScalar::zero(), v_p = SuperScalar::one(), w_p = SuperScalar::zero();
    for (int i = 0; i < upto; ++i) {
        SuperScalar v = spec.a[static_cast<std::size_t>(i)] * v_p - v_pp -
                        spec.beta[static_cast<std::size_t>(i)] * w_p;
        SuperScalar w = spec.beta[static_cast<std::size_t>(i)] * v_p + w_p;
        v_pp = std::move(v_p);
        v_p = std::move(v);
        w_p = std::move(w);
    }
    return {v_p, w_p};
}

// Bracket family: B_br(k) = -b_k B_ev(k-1) + B_br(k-1) for k >= 3 with
// B_br(2) = b1 b2 + 1, and the companion even-ended windows
// B_ev(k) = a_k B_ev(k-1) - B_ev(k-2) + b_k B_br(k-1) for k >= 3 with
// B_ev(1) = b1, B_ev(2) = a2 b1 + b2. (The sign of the odd term differs
// from the plain families because the window opens on a bare odd symbol;
// cross-validated against the Euler rule and the determinant form.)
SuperScalar bracket_recurrence(const ContinuantSpec& spec) {
    const int n = static_cast<int>(spec.a.size());
    const auto& a = spec.a;
    const auto& b = spec.beta;
    if (n == 1) return b[0];
    SuperScalar ev_p = b[0];                    // B_ev(1)
    SuperScalar ev = a[1] * b[0] + b[1];        // B_ev(2)
    SuperScalar br = b[0] * b[1] + 1;           // B_br(2)
    if (n == 2) return br;
    for (int k = 3; k <= n; ++k) {
        const auto& ak = a[static_cast<std::size_t>(k - 1)];
        const auto& bk = b[static_cast<std::size_t>(k - 1)];
        SuperScalar br_next = -(bk * ev) + br;
        SuperScalar ev_next = ak * ev - ev_p + bk * br;
        ev_p = std::move(ev);
        ev = std::move(ev_next);
        br = std::move(br_next);
    }
    return br;
}

} // namespace

SuperScalar supercontinuant_recurrence(const ContinuantSpec& spec) {
    validate(spec);
    const int n = static_cast<int>(spec.a.size());
    switch (spec.family) {
    case ContinuantFamily::EvenK:
        return even_odd_pair(spec, n).first;
    case ContinuantFamily::OddK:
        return even_odd_pair(spec, n).second;
    case ContinuantFamily::BracketK:
        return bracket_recurrence(spec);
    }
    throw InputError("unknown family");
}

namespace {

// Slot sequence of a family: slot s carries symbol sym[s] (1-based index
// into a/beta). EvenK: 1 1 2 2 ... n n; OddK drops the last slot;
// BracketK drops the first and last.
std::vector<int> slot_symbols(const ContinuantSpec& spec) {
    const int n = static_cast<int>(spec.a.size());
    if (spec.family == ContinuantFamily::BracketK && n == 1) return {1};
    std::vector<int> sym;
    for (int i = 1; i <= n; ++i) {
        sym.push_back(i);
        sym.push_back(i);
    }
    if (spec.family == ContinuantFamily::OddK) sym.pop_back();
    if (spec.family == ContinuantFamily::BracketK) {
        sym.pop_back();
        sym.erase(sym.begin());
    }
    return sym;
}

} // namespace

SuperScalar supercontinuant_euler(const ContinuantSpec& spec) {
    validate(spec);
    const std::vector<int> sym = slot_symbols(spec);
    const int len = static_cast<int>(sym.size());
    SuperScalar total;

    // walk all tilings by dots (1), dashes (2) and long dashes (4)
    std::function<void(int, const SuperScalar&)> walk = [&](int pos, const SuperScalar& acc) {
        if (pos == len) {
            total += acc;
            return;
        }
        // dot: the slot's odd symbol survives, multiplied in slot order
        walk(pos + 1, acc * spec.beta[static_cast<std::size_t>(sym[static_cast<std::size_t>(pos)] - 1)]);
        if (pos + 2 <= len) {
            const int s0 = sym[static_cast<std::size_t>(pos)], s1 = sym[static_cast<std::size_t>(pos + 1)];
            if (s0 == s1)
                walk(pos + 2, acc * spec.a[static_cast<std::size_t>(s0 - 1)]);
            else if (s1 == s0 + 1)
                walk(pos + 2, acc);
        }
        if (pos + 4 <= len) {
            const int s0 = sym[static_cast<std::size_t>(pos)], s1 = sym[static_cast<std::size_t>(pos + 1)];
            const int s2 = sym[static_cast<std::size_t>(pos + 2)], s3 = sym[static_cast<std::size_t>(pos + 3)];
            if (s0 == s1 && s2 == s3 && s2 == s0 + 1) walk(pos + 4, -acc);
        }
    };
    walk(0, SuperScalar::one());
    return total;
}

SuperMatrix continuant_matrix(const ContinuantSpec& spec) {
    validate(spec);
    const int n = static_cast<int>(spec.a.size());
    const auto& a = spec.a;
    const auto& b = spec.beta;
    SuperMatrix m(n, n);
    const SuperScalar one = SuperScalar::one();

    // shared tridiagonal-plus-fill core on rows/columns [lo, hi)
    auto fill_core = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            m.set(i, i, a[static_cast<std::size_t>(i)]);
            if (i + 1 < hi) m.set(i + 1, i, -one);
            for (int j = i + 1; j < hi; ++j) {
                SuperScalar e = b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
                if (j == i + 1) e -= one;
                m.set(i, j, std::move(e));
            }
        }
    };

    switch (spec.family) {
    case ContinuantFamily::EvenK:
        fill_core(0, n);
        break;
    case ContinuantFamily::OddK:
        fill_core(0, n - 1);
        for (int i = 0; i + 1 < n; ++i) m.set(i, n - 1, b[static_cast<std::size_t>(i)]);
        if (n >= 2) m.set(n - 1, n - 2, -one);
        m.set(n - 1, n - 1, b[static_cast<std::size_t>(n - 1)]);
        break;
    case ContinuantFamily::BracketK:
        if (n == 1) {
            m.set(0, 0, b[0]);
            break;
        }
        fill_core(1, n - 1);
        for (int j = 0; j + 1 < n; ++j) m.set(0, j, b[static_cast<std::size_t>(j)]);
        m.set(0, n - 1, one);
        for (int i = 1; i + 1 < n; ++i) m.set(i, n - 1, b[static_cast<std::size_t>(i)]);
        m.set(1, 0, -one);
        m.set(n - 1, n - 2, -one);
        m.set(n - 1, n - 1, b[static_cast<std::size_t>(n - 1)]);
        break;
    }
    return m;
}

SuperScalar supercontinuant_determinant(const ContinuantSpec& spec) {
    return det_first_column(continuant_matrix(spec));
}

SuperMatrix berezinian_block_matrix(int n) {
    if (n < 1) throw InputError("berezinian form needs n >= 1");
    std::vector<SuperScalar> a, b;
    for (int k = 1; k <= n; ++k) {
        a.push_back(sc_even("a", k));
        b.push_back(sc_odd("b", k));
    }
    SuperMatrix m(2 * n, 2 * n, {n, n});
    const SuperScalar one = SuperScalar::one();
    for (int i = 0; i < n; ++i) {
        m.set(i, i, a[static_cast<std::size_t>(i)]);
        if (i + 1 < n) {
            m.set(i, i + 1, -one);
            m.set(i + 1, i, -one);
        }
        // odd blocks: diag(-b_i) upper-right, triangular fill of b_j lower-left
        m.set(i, n + i, -b[static_cast<std::size_t>(i)]);
        for (int j = i; j < n; ++j) m.set(n + i, j, b[static_cast<std::size_t>(j)]);
        m.set(n + i, n + i, one);
    }
    return m;
}

SuperScalar supercontinuant_berezinian(int n) {
    return berezinian(berezinian_block_matrix(n));
}

std::int64_t term_count(ContinuantFamily family, int n) {
    if (n < 1) throw InputError("term_count needs n >= 1");
    return static_cast<std::int64_t>(
        supercontinuant_recurrence(symbolic_continuant_spec(family, n)).term_count());
}

std::pair<SuperScalar, SuperScalar> frieze_entry_as_continuant(
    const std::vector<SuperScalar>& a, const std::vector<SuperScalar>& beta, int j, int i) {
    if (a.size() != beta.size()) throw DimensionMismatch("window lists must match");
    if (j < 0 || i < j || i >= static_cast<int>(a.size()))
        throw InputError("window [j, i] out of range");
    ContinuantSpec even_spec{ContinuantFamily::EvenK, {}, {}};
    for (int k = j; k <= i; ++k) {
        even_spec.a.push_back(a[static_cast<std::size_t>(k)]);
        even_spec.beta.push_back(beta[static_cast<std::size_t>(k)]);
    }
    ContinuantSpec odd_spec = even_spec;
    odd_spec.family = ContinuantFamily::OddK;
    return {supercontinuant_recurrence(even_spec), supercontinuant_recurrence(odd_spec)};
}

} // namespace superfrieze
