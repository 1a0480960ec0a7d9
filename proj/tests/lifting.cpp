#include "lifting.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace superfrieze::testing {

namespace {

using Mat = std::vector<std::vector<Rat>>;
using Vec = std::vector<Rat>;

// Row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> echelon(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        const Rat inv = Rat(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<Vec> kernel_basis(Mat m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    const auto pivots = echelon(m);
    std::vector<Vec> basis;
    for (std::size_t col = 0; col < cols; ++col) {
        if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
        Vec v(cols, Rat(0));
        v[col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// One particular solution of A x = b; free variables are set to zero.
std::optional<Vec> particular_solution(Mat a, const Vec& b) {
    const std::size_t rows = a.size();
    if (rows == 0) return Vec{};
    const std::size_t cols = a[0].size();
    for (std::size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
    const auto pivots = echelon(a);
    // inconsistent if a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec x(cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    return x;
}

Rat coefficient_of(const SuperScalar& s, const SuperMonomial& m) {
    auto it = s.terms().find(m);
    return it == s.terms().end() ? Rat(0) : it->second;
}

// Coefficient of the bare odd generator g in s.
Rat linear_coefficient(const SuperScalar& s, const GeneratorId& g) {
    SuperMonomial m;
    m.odd.push_back(g);
    return coefficient_of(s, m);
}

SuperMatrix monodromy_target() {
    SuperMatrix t = SuperMatrix::identity(3, {2, 1});
    t.set(0, 0, -SuperScalar::one());
    t.set(1, 1, -SuperScalar::one());
    return t;
}

} // namespace

std::vector<long> random_triangulation_quiddity(std::mt19937& rng, int n) {
    std::vector<int> polygon(static_cast<std::size_t>(n));
    std::vector<long> count(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) polygon[static_cast<std::size_t>(k)] = k;
    while (polygon.size() > 3) {
        const std::size_t at = rng() % polygon.size();
        const std::size_t prev = (at + polygon.size() - 1) % polygon.size();
        const std::size_t next = (at + 1) % polygon.size();
        count[static_cast<std::size_t>(polygon[prev])]++;
        count[static_cast<std::size_t>(polygon[at])]++;
        count[static_cast<std::size_t>(polygon[next])]++;
        polygon.erase(polygon.begin() + static_cast<std::ptrdiff_t>(at));
    }
    for (const int v : polygon) count[static_cast<std::size_t>(v)]++;
    return count;
}

HillCoefficients lift_classical_quiddity(std::mt19937& rng, const std::vector<long>& quiddity) {
    const int n = static_cast<int>(quiddity.size());

    // classical sanity: the even quiddity already has monodromy -Id
    std::vector<SuperScalar> a0, zero_beta;
    for (const long q : quiddity) {
        a0.push_back(SuperScalar(q));
        zero_beta.push_back(SuperScalar::zero());
    }
    if (!check_hill_condition(monodromy(HillSystem(HillCoefficients(a0, zero_beta)), 0)))
        throw std::runtime_error("quiddity is not a closed classical frieze");

    // odd directions: kernel of the linearized odd monodromy entries
    std::vector<SuperScalar> sym_beta;
    std::vector<GeneratorId> probes;
    for (int k = 1; k <= n; ++k) {
        probes.push_back(odd_gen("p", k));
        sym_beta.push_back(SuperScalar::generator(probes.back()));
    }
    const SuperMatrix m_lin = monodromy(HillSystem(HillCoefficients(a0, sym_beta)), 0);
    Mat lin(4, Vec(static_cast<std::size_t>(n)));
    const std::pair<int, int> odd_slots[4] = {{2, 0}, {2, 1}, {0, 2}, {1, 2}};
    for (std::size_t r = 0; r < 4; ++r)
        for (int k = 0; k < n; ++k)
            lin[r][static_cast<std::size_t>(k)] = linear_coefficient(
                m_lin.at(odd_slots[r].first, odd_slots[r].second), probes[static_cast<std::size_t>(k)]);
    const std::vector<Vec> kernel = kernel_basis(lin);
    if (kernel.size() != static_cast<std::size_t>(n - 2))
        throw std::runtime_error("unexpected odd kernel dimension");

    // random combination of kernel directions over fresh odd generators
    const int used = 1 + static_cast<int>(rng() % kernel.size());
    std::vector<SuperScalar> beta(static_cast<std::size_t>(n), SuperScalar::zero());
    for (int j = 0; j < used; ++j) {
        const SuperScalar theta = sc_odd("t", j + 1);
        Vec dir(static_cast<std::size_t>(n), Rat(0));
        // guarantee independence by anchoring on the j-th basis vector
        for (std::size_t k = 0; k < kernel.size(); ++k) {
            const long w = (k == static_cast<std::size_t>(j)) ? 1 : static_cast<long>(rng() % 3);
            if (w == 0) continue;
            for (int i = 0; i < n; ++i)
                dir[static_cast<std::size_t>(i)] += Rat(w) * kernel[k][static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < n; ++i)
            beta[static_cast<std::size_t>(i)] += dir[static_cast<std::size_t>(i)] * theta;
    }

    // rational Jacobian of the upper even entries at the classical point
    Mat jac(3, Vec(static_cast<std::size_t>(n)));
    const std::pair<int, int> even_slots[3] = {{0, 0}, {0, 1}, {1, 0}};
    for (int k = 0; k < n; ++k) {
        // product with the k-th factor differentiated (a single 1 at (1,1))
        SuperMatrix d(3, 3, {2, 1});
        d.set(1, 1, SuperScalar::one());
        SuperMatrix acc = k == 0 ? d : transfer_matrix(a0[0], SuperScalar::zero());
        for (int i = 1; i < n; ++i) {
            const SuperMatrix f = i == k ? d : transfer_matrix(a0[static_cast<std::size_t>(i)],
                                                               SuperScalar::zero());
            acc = mat_mul(f, acc);
        }
        for (std::size_t r = 0; r < 3; ++r)
            jac[r][static_cast<std::size_t>(k)] =
                coefficient_of(acc.at(even_slots[r].first, even_slots[r].second), SuperMonomial{});
    }

    // exact Newton: kill the lowest soul degree of the residual each round
    std::vector<SuperScalar> a = a0;
    const SuperMatrix target = monodromy_target();
    const Mat lin2(lin.begin(), lin.begin() + 2);
    for (int round = 0; round <= n + 2; ++round) {
        const SuperMatrix mon = monodromy(HillSystem(HillCoefficients(a, beta)), 0);
        if (mon == target) return HillCoefficients(a, beta);

        // odd corrections against the two bottom-row entries
        std::map<SuperMonomial, Vec> odd_res;
        for (std::size_t r = 0; r < 2; ++r) {
            const SuperScalar res = mon.at(odd_slots[r].first, odd_slots[r].second);
            for (const auto& [mono, c] : res.terms()) {
                auto [it, fresh] = odd_res.try_emplace(mono, Vec(2, Rat(0)));
                it->second[r] = c;
            }
        }
        for (const auto& [mono, c] : odd_res) {
            const auto x = particular_solution(lin2, {-c[0], -c[1]});
            if (!x) throw std::runtime_error("odd correction system is inconsistent");
            for (int k = 0; k < n; ++k) {
                if ((*x)[static_cast<std::size_t>(k)] == 0) continue;
                beta[static_cast<std::size_t>(k)] +=
                    (*x)[static_cast<std::size_t>(k)] * SuperScalar::from_terms({{mono, Rat(1)}});
            }
        }

        // even corrections against the three marker entries
        std::map<SuperMonomial, Vec> even_res;
        for (std::size_t r = 0; r < 3; ++r) {
            const SuperScalar res =
                mon.at(even_slots[r].first, even_slots[r].second) -
                target.at(even_slots[r].first, even_slots[r].second);
            for (const auto& [mono, c] : res.terms()) {
                auto [it, fresh] = even_res.try_emplace(mono, Vec(3, Rat(0)));
                it->second[r] = c;
            }
        }
        for (const auto& [mono, c] : even_res) {
            const auto x = particular_solution(jac, {-c[0], -c[1], -c[2]});
            if (!x) throw std::runtime_error("even correction system is inconsistent");
            for (int k = 0; k < n; ++k) {
                if ((*x)[static_cast<std::size_t>(k)] == 0) continue;
                a[static_cast<std::size_t>(k)] +=
                    (*x)[static_cast<std::size_t>(k)] * SuperScalar::from_terms({{mono, Rat(1)}});
            }
        }
    }
    throw std::runtime_error("nilpotent correction did not converge");
}

} // namespace superfrieze::testing
