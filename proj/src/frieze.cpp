#include "superfrieze/frieze.hpp"

#include <sstream>

#include "superfrieze/errors.hpp"

namespace superfrieze {

std::string FriezeIndex::str() const {
    auto half = [](int d) {
        if (d % 2 == 0) return std::to_string(d / 2);
        return std::to_string(d) + "/2";
    };
    return "(" + half(i2) + "," + half(j2) + ")";
}

bool check_diamond(const Diamond& d) {
    for (const SuperScalar* s : {&d.top, &d.left, &d.right, &d.bottom})
        if (!s->is_even()) throw ParityMismatch("even diamond entry has odd terms");
    for (const SuperScalar* s : {&d.upper_left, &d.upper_right, &d.lower_left, &d.lower_right})
        if (!s->is_odd()) throw ParityMismatch("odd diamond entry has even terms");

    const SuperScalar one = SuperScalar::one();
    if (d.left * d.right - d.top * d.bottom != one + d.lower_right * d.upper_left) return false;
    if (d.left * d.lower_right - d.bottom * d.upper_left != d.lower_left) return false;
    if (d.top * d.lower_right - d.right * d.upper_left != d.upper_right) return false;
    return true;
}

SuperMatrix diamond_to_osp(const Diamond& d) {
    if (!check_diamond(d)) throw RuleViolation("diamond does not satisfy the frieze rule");
    SuperMatrix m(3, 3, {2, 1});
    m.set(0, 0, -d.top);
    m.set(0, 1, d.left);
    m.set(0, 2, d.upper_left);
    m.set(1, 0, -d.right);
    m.set(1, 1, d.bottom);
    m.set(1, 2, d.lower_right);
    m.set(2, 0, d.upper_right);
    m.set(2, 1, -d.lower_left);
    m.set(2, 2, SuperScalar::one() + d.upper_right * (-d.lower_left));
    return m;
}

Diamond osp_to_diamond(const SuperMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3)
        throw DimensionMismatch("osp_to_diamond needs a 3x3 matrix");
    Diamond d;
    d.top = -m.at(0, 0);
    d.left = m.at(0, 1);
    d.upper_left = m.at(0, 2);
    d.right = -m.at(1, 0);
    d.bottom = m.at(1, 1);
    d.lower_right = m.at(1, 2);
    d.upper_right = m.at(2, 0);
    d.lower_left = -m.at(2, 1);
    return d;
}

const SuperScalar& Superfrieze::f(int p, int q) const {
    auto it = f_.find({p, q});
    if (it == f_.end())
        throw InputError("even entry " + FriezeIndex{2 * p, 2 * q}.str() + " not stored");
    return it->second;
}

const SuperScalar& Superfrieze::phi2(int p2, int q2) const {
    auto it = phi_.find({p2, q2});
    if (it == phi_.end())
        throw InputError("odd entry " + FriezeIndex{p2, q2}.str() + " not stored");
    return it->second;
}

HillCoefficients Superfrieze::first_rows() const {
    std::vector<SuperScalar> a, beta;
    for (int i = 0; i < n_; ++i) {
        a.push_back(f(i, i));
        beta.push_back(phi2(2 * i, 2 * i));
    }
    return HillCoefficients(std::move(a), std::move(beta));
}

Superfrieze frieze_from_first_rows(const std::vector<SuperScalar>& a,
                                   const std::vector<SuperScalar>& beta, int m) {
    if (m < 1) throw InputError("width must be at least 1");
    const int n = m + 3;
    if (static_cast<int>(a.size()) != n || static_cast<int>(beta.size()) != n)
        throw DimensionMismatch("first rows must have length n = m + 3");
    const HillCoefficients c(a, beta); // validates parities

    Superfrieze fz(m);
    // integer diagonals over two periods
    for (int j = 0; j < 2 * n; ++j) {
        SuperScalar f_pp = -SuperScalar::one(); // f_{j,i-2}
        SuperScalar f_p = SuperScalar::zero();  // f_{j,i-1}
        SuperScalar w_p = SuperScalar::zero();  // phi_{j,i-1}
        fz.f_[{j, j - 3}] = f_pp;
        fz.f_[{j, j - 2}] = f_p;
        fz.phi_[{2 * j, 2 * (j - 2)}] = w_p;
        for (int i = j - 1; i <= j + m + 2; ++i) {
            SuperScalar f_i = c.a_at(i) * f_p - f_pp - c.beta_at(i) * w_p;
            SuperScalar w_i = c.beta_at(i) * f_p + w_p;
            fz.f_[{j, i}] = f_i;
            fz.phi_[{2 * j, 2 * i}] = w_i;
            f_pp = std::move(f_p);
            f_p = std::move(f_i);
            w_p = std::move(w_i);
        }
    }
    // half-integer odd entries between consecutive diagonals:
    // phi_{j-1/2, i+1/2} = f_{j,i} phi_{j-1,i} - f_{j-1,i} phi_{j,i}
    for (int j = 1; j < 2 * n; ++j)
        for (int i = j - 2; i <= j + m + 1; ++i) {
            const SuperScalar v = fz.f(j, i) * fz.phi2(2 * (j - 1), 2 * i) -
                                  fz.f(j - 1, i) * fz.phi2(2 * j, 2 * i);
            fz.phi_[{2 * j - 1, 2 * i + 1}] = v;
        }
    return fz;
}

std::optional<Diamond> diamond_at(const Superfrieze& fz, int p, int q) {
    if (!fz.has_f(p, q) || !fz.has_f(p - 1, q) || !fz.has_f(p, q + 1) || !fz.has_f(p - 1, q + 1))
        return std::nullopt;
    if (!fz.has_phi2(2 * p - 1, 2 * q + 1) || !fz.has_phi2(2 * p, 2 * q + 2) ||
        !fz.has_phi2(2 * p - 2, 2 * q + 2) || !fz.has_phi2(2 * p - 1, 2 * q + 3))
        return std::nullopt;
    Diamond d;
    d.top = fz.f(p, q);
    d.left = fz.f(p - 1, q);
    d.right = fz.f(p, q + 1);
    d.bottom = fz.f(p - 1, q + 1);
    d.upper_left = fz.phi2(2 * p - 1, 2 * q + 1);
    d.upper_right = fz.phi2(2 * p, 2 * q + 2);
    d.lower_left = fz.phi2(2 * p - 2, 2 * q + 2);
    d.lower_right = fz.phi2(2 * p - 1, 2 * q + 3);
    return d;
}

std::optional<std::string> first_diamond_violation(const Superfrieze& fz) {
    int checked = 0;
    for (const auto& [key, val] : fz.f_entries()) {
        const auto [p, q] = key;
        const auto d = diamond_at(fz, p, q);
        if (!d) continue;
        ++checked;
        if (!check_diamond(*d))
            return "diamond with top f" + FriezeIndex{2 * p, 2 * q}.str();
    }
    if (checked == 0) return "no complete diamond stored";
    return std::nullopt;
}

std::optional<std::string> first_closure_violation(const Superfrieze& fz) {
    const int m = fz.width(), n = fz.period();
    const SuperScalar one = SuperScalar::one();
    for (int j = 0; j < 2 * n; ++j) {
        if (fz.f(j, j + m) != one) return "f" + FriezeIndex{2 * j, 2 * (j + m)}.str() + " != 1";
        if (!fz.f(j, j + m + 1).is_zero())
            return "f" + FriezeIndex{2 * j, 2 * (j + m + 1)}.str() + " != 0";
        if (!fz.phi2(2 * j, 2 * (j + m + 1)).is_zero())
            return "phi" + FriezeIndex{2 * j, 2 * (j + m + 1)}.str() + " != 0";
    }
    // implied half-integer zeros on the bottom boundary
    for (int j = 1; j < 2 * n; ++j) {
        const int i2 = 2 * j - 1, j2 = 2 * (j + m + 1) + 1;
        if (fz.has_phi2(i2, j2) && !fz.phi2(i2, j2).is_zero())
            return "phi" + FriezeIndex{i2, j2}.str() + " != 0";
    }
    return std::nullopt;
}

std::optional<std::string> first_glide_violation(const Superfrieze& fz) {
    if (first_closure_violation(fz)) throw NotClosed("glide symmetry is defined for closed friezes");
    const int m = fz.width();
    int checked_f = 0, checked_phi_int = 0, checked_phi_half = 0;
    for (const auto& [key, val] : fz.f_entries()) {
        const auto [p, q] = key;
        const std::pair<int, int> partner{q - m - 1, p - 2};
        auto it = fz.f_entries().find(partner);
        if (it == fz.f_entries().end()) continue;
        ++checked_f;
        if (val != it->second) return "f" + FriezeIndex{2 * p, 2 * q}.str();
    }
    for (const auto& [key, val] : fz.phi_entries()) {
        const auto [p2, q2] = key;
        if (p2 % 2 == 0) {
            // integer phi_{i,j} = phi_{j-m-3/2, i-3/2}
            const std::pair<int, int> partner{q2 - 2 * m - 3, p2 - 3};
            auto it = fz.phi_entries().find(partner);
            if (it == fz.phi_entries().end()) continue;
            ++checked_phi_int;
            if (val != it->second) return "phi" + FriezeIndex{p2, q2}.str();
        } else {
            // phi_{i+1/2, j+1/2} = -phi_{j-m-1, i-1} with p2 = 2i+1, q2 = 2j+1
            const int i = (p2 - 1) / 2, j = (q2 - 1) / 2;
            const std::pair<int, int> partner{2 * (j - m - 1), 2 * (i - 1)};
            auto it = fz.phi_entries().find(partner);
            if (it == fz.phi_entries().end()) continue;
            ++checked_phi_half;
            if (val != -it->second) return "phi" + FriezeIndex{p2, q2}.str();
        }
    }
    if (checked_f == 0 || checked_phi_int == 0 || checked_phi_half == 0)
        return "stored domain too small for the glide check";
    return std::nullopt;
}

std::optional<std::string> first_periodicity_violation(const Superfrieze& fz) {
    if (first_closure_violation(fz)) throw NotClosed("periodicity is defined for closed friezes");
    const int n = fz.period();
    int checked = 0;
    for (const auto& [key, val] : fz.f_entries()) {
        const auto [p, q] = key;
        auto it = fz.f_entries().find({p + n, q + n});
        if (it == fz.f_entries().end()) continue;
        ++checked;
        if (val != it->second) return "f" + FriezeIndex{2 * p, 2 * q}.str();
    }
    for (const auto& [key, val] : fz.phi_entries()) {
        const auto [p2, q2] = key;
        auto it = fz.phi_entries().find({p2 + 2 * n, q2 + 2 * n});
        if (it == fz.phi_entries().end()) continue;
        ++checked;
        if (it->second != -val) return "phi" + FriezeIndex{p2, q2}.str();
    }
    if (checked == 0) return "stored domain too small for the periodicity check";
    return std::nullopt;
}

std::optional<std::string> first_pairing_violation(const Superfrieze& fz) {
    const int m = fz.width(), n = fz.period();
    for (int i = 0; i < 2 * n; ++i) {
        if (fz.has_phi2(2 * i, 2 * i) && fz.has_phi2(2 * i + 1, 2 * i + 1) &&
            fz.phi2(2 * i, 2 * i) != fz.phi2(2 * i + 1, 2 * i + 1))
            return "first row at i=" + std::to_string(i);
        if (fz.has_phi2(2 * i, 2 * (i + m)) && fz.has_phi2(2 * i - 1, 2 * (i + m) - 1) &&
            fz.phi2(2 * i, 2 * (i + m)) != -fz.phi2(2 * i - 1, 2 * (i + m) - 1))
            return "last row at i=" + std::to_string(i);
    }
    return std::nullopt;
}

bool check_all_diamonds(const Superfrieze& fz) { return !first_diamond_violation(fz); }
bool check_closure(const Superfrieze& fz) { return !first_closure_violation(fz); }
bool check_glide(const Superfrieze& fz) { return !first_glide_violation(fz); }
bool check_periodicity(const Superfrieze& fz) { return !first_periodicity_violation(fz); }
bool first_row_pairing(const Superfrieze& fz) { return !first_pairing_violation(fz); }

bool diagonal_satisfies_hill(const Superfrieze& fz, int j) {
    const HillCoefficients c = fz.first_rows();
    const int m = fz.width();
    // South-East recurrence along diagonal j
    for (int i = j - 1; i <= j + m + 2; ++i) {
        if (!fz.has_f(j, i) || !fz.has_f(j, i - 1) || !fz.has_f(j, i - 2)) continue;
        if (fz.f(j, i) != c.a_at(i) * fz.f(j, i - 1) - fz.f(j, i - 2) -
                              c.beta_at(i) * fz.phi2(2 * j, 2 * (i - 1)))
            return false;
        if (fz.phi2(2 * j, 2 * i) !=
            c.beta_at(i) * fz.f(j, i - 1) + fz.phi2(2 * j, 2 * (i - 1)))
            return false;
    }
    // North-East dual recurrence: V*_i = f_{i+2,j}, W*_i = phi_{i+3/2,j+1/2},
    // transfer with the sign of the odd coefficient flipped
    int checked = 0;
    for (int i = j - m - 3; i <= j + 3; ++i) {
        if (!fz.has_f(i + 2, j) || !fz.has_f(i + 1, j) || !fz.has_f(i, j)) continue;
        if (!fz.has_phi2(2 * i + 3, 2 * j + 1) || !fz.has_phi2(2 * i + 1, 2 * j + 1)) continue;
        ++checked;
        const SuperScalar& v_i = fz.f(i + 2, j);
        const SuperScalar& v_p = fz.f(i + 1, j);
        const SuperScalar& v_pp = fz.f(i, j);
        const SuperScalar& w_i = fz.phi2(2 * i + 3, 2 * j + 1);
        const SuperScalar& w_p = fz.phi2(2 * i + 1, 2 * j + 1);
        if (v_i != c.a_at(i) * v_p - v_pp + c.beta_at(i) * w_p) return false;
        if (w_i != -(c.beta_at(i) * v_p) + w_p) return false;
    }
    return checked > 0;
}

Superfrieze frieze_from_hill(const HillSystem& sys) {
    if (!check_hill_condition(monodromy(sys, 0)))
        throw NotHill("frieze_from_hill needs monodromy diag(-1,-1,1)");
    const int n = sys.coeffs().n;
    Superfrieze fz = frieze_from_first_rows(sys.coeffs().a, sys.coeffs().beta, n - 3);
    if (!check_closure(fz))
        throw NotHill("internal error: hill condition held but frieze failed to close");
    return fz;
}

HillCoefficients coefficients_from_diagonal(const std::vector<SuperScalar>& v,
                                            const std::vector<SuperScalar>& w) {
    const int n = static_cast<int>(v.size());
    const int m = n - 3;
    if (m < 1 || static_cast<int>(w.size()) != n)
        throw DimensionMismatch("diagonal window needs two lists of length n = m + 3 >= 4");
    const SuperScalar one = SuperScalar::one();
    if (v.front() != one || v[static_cast<std::size_t>(n - 2)] != one ||
        !v.back().is_zero() || !w.front().is_zero() || !w.back().is_zero())
        throw InputError("diagonal window must carry closed boundary values "
                         "(V_{-1}=V_m=1, V_{m+1}=0, W_{-1}=W_{m+1}=0)");

    // v[k] = V_{k-1}, w[k] = W_{k-1}; V_{-2} = 0 and W_{-2} = 0 implied.
    auto V = [&](int i) { return i < -1 ? SuperScalar::zero() : v[static_cast<std::size_t>(i + 1)]; };
    auto W = [&](int i) { return i < -1 ? SuperScalar::zero() : w[static_cast<std::size_t>(i + 1)]; };

    std::vector<SuperScalar> a, beta;
    for (int i = 0; i <= m + 1; ++i) {
        SuperScalar inv;
        try {
            inv = V(i - 1).inverse();
        } catch (const NotInvertible&) {
            throw NotGeneric("diagonal entry V_" + std::to_string(i - 1) +
                             " has no invertible body");
        }
        const SuperScalar b = (W(i) - W(i - 1)) * inv;
        a.push_back((V(i) + V(i - 2) + b * W(i - 1)) * inv);
        beta.push_back(b);
    }

    // The remaining phase sits where this diagonal has its boundary zeros;
    // recover it from the neighbouring diagonal, propagated from (-1, 0, 0).
    SuperScalar f_pp = -one, f_p = SuperScalar::zero(), w_p = SuperScalar::zero();
    SuperScalar f_keep, w_keep;
    for (int i = 0; i <= m + 1; ++i) {
        SuperScalar f_i = a[static_cast<std::size_t>(i)] * f_p - f_pp -
                          beta[static_cast<std::size_t>(i)] * w_p;
        SuperScalar w_i = beta[static_cast<std::size_t>(i)] * f_p + w_p;
        if (i == m) f_keep = f_i; // f_{1,m}
        f_pp = std::move(f_p);
        f_p = std::move(f_i);
        w_p = std::move(w_i);
    }
    // now f_p = f_{1,m+1}, w_p = phi_{1,m+1}
    SuperScalar inv_last;
    try {
        inv_last = f_p.inverse();
    } catch (const NotInvertible&) {
        throw NotGeneric("neighbouring diagonal entry has no invertible body");
    }
    const SuperScalar beta_last = -(w_p * inv_last);
    const SuperScalar a_last = (f_keep + beta_last * w_p) * inv_last;
    a.push_back(a_last);
    beta.push_back(beta_last);
    return HillCoefficients(std::move(a), std::move(beta));
}

Superfrieze laurent_expand(const std::vector<SuperScalar>& v_interior,
                           const std::vector<SuperScalar>& w_interior) {
    const int m = static_cast<int>(v_interior.size());
    if (m < 1 || static_cast<int>(w_interior.size()) != m + 1)
        throw DimensionMismatch("free diagonal needs m even values and m+1 odd values");
    std::vector<SuperScalar> v{SuperScalar::one()};
    v.insert(v.end(), v_interior.begin(), v_interior.end());
    v.push_back(SuperScalar::one());
    v.push_back(SuperScalar::zero());
    std::vector<SuperScalar> w{SuperScalar::zero()};
    w.insert(w.end(), w_interior.begin(), w_interior.end());
    w.push_back(SuperScalar::zero());
    const HillCoefficients c = coefficients_from_diagonal(v, w);
    return frieze_from_first_rows(c.a, c.beta, m);
}

std::vector<ClosureResidual> closure_equation_residuals(const std::vector<SuperScalar>& a,
                                                        const std::vector<SuperScalar>& beta,
                                                        int m) {
    const int n = m + 3;
    const HillCoefficients c(a, beta);
    std::vector<ClosureResidual> out;
    const SuperScalar one = SuperScalar::one();
    for (int j = 0; j < n; ++j) {
        SuperScalar f_pp = -one, f_p = SuperScalar::zero(), w_p = SuperScalar::zero();
        SuperScalar f_m, w_m;
        for (int i = j - 1; i <= j + m + 1; ++i) {
            SuperScalar f_i = c.a_at(i) * f_p - f_pp - c.beta_at(i) * w_p;
            SuperScalar w_i = c.beta_at(i) * f_p + w_p;
            if (i == j + m) f_m = f_i;
            f_pp = std::move(f_p);
            f_p = std::move(f_i);
            w_p = std::move(w_i);
        }
        out.push_back({j, "f_eq_one", f_m - one});
        out.push_back({j, "f_eq_zero", f_p});
        out.push_back({j, "phi_eq_zero", w_p});
    }
    return out;
}

std::string render_text(const Superfrieze& fz) {
    // Row order: even(-2), odd(-1), even(-1), odd(0), even(0), ... The even
    // row of depth d holds entries f(p, p+d) on columns 2(p+q); the odd row
    // of depth e holds the entries at doubled (p2, p2 + 2e) on columns
    // p2 + q2 - 1, which interleave with the even columns.
    const int m = fz.width();
    std::map<int, std::map<int, std::string>> rows; // visual row -> col -> text
    int col_lo = 0;
    auto place = [&](int vis, int col, const std::string& s) {
        rows[vis][col] = s;
        col_lo = std::min(col_lo, col);
    };
    for (const auto& [key, val] : fz.f_entries()) {
        const auto [p, q] = key;
        const int d = q - p;
        if (d < -2 || d > m + 1) continue;
        place(2 * (d + 2) + 1, 2 * (p + q), val.str());
    }
    for (const auto& [key, val] : fz.phi_entries()) {
        const auto [p2, q2] = key;
        if ((q2 - p2) % 2 != 0) continue;
        const int e = (q2 - p2) / 2;
        if (e < -1 || e > m + 1) continue;
        place(2 * (e + 2), p2 + q2 - 1, val.str());
    }

    std::size_t cell = 1;
    for (const auto& [vis, row] : rows)
        for (const auto& [col, s] : row) cell = std::max(cell, s.size());
    cell += 2;

    std::ostringstream os;
    for (const auto& [vis, row] : rows) {
        std::string line;
        for (const auto& [col, s] : row) {
            const std::size_t pos = static_cast<std::size_t>(col - col_lo) * (cell / 2 + 1);
            if (line.size() < pos) line.resize(pos, ' ');
            line += s;
        }
        os << line << "\n";
    }
    return os.str();
}

} // namespace superfrieze
