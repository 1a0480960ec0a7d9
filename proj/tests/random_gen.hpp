#pragma once

#include <random>
#include <vector>

#include "superfrieze/scalar.hpp"

namespace superfrieze::testing {

/// Seeded generator of random SuperScalars over a small generator pool.
class RandomScalars {
  public:
    explicit RandomScalars(unsigned seed) : rng_(seed) {
        for (int k = 1; k <= 3; ++k) evens_.push_back(even_gen("e", k));
        for (int k = 1; k <= 4; ++k) odds_.push_back(odd_gen("o", k));
    }

    std::mt19937& rng() { return rng_; }

    Rat coeff() {
        static const int nums[] = {1, -1, 2, -2, 3, -3, 5, 1, -1, 2};
        static const int dens[] = {1, 1, 1, 2, 1, 1, 3, 2, 1, 1};
        const int k = pick(10);
        return Rat(nums[k], dens[k]);
    }

    SuperMonomial monomial(bool laurent = true) {
        SuperMonomial m;
        const int ne = pick(3);
        for (int t = 0; t < ne; ++t) {
            const int e = laurent ? pick(5) - 2 : pick(3);
            if (e != 0) m.even[evens_[static_cast<std::size_t>(pick(3))]] += e;
        }
        for (auto it = m.even.begin(); it != m.even.end();)
            it = it->second == 0 ? m.even.erase(it) : std::next(it);
        std::vector<GeneratorId> pool = odds_;
        const int no = pick(4);
        for (int t = 0; t < no && !pool.empty(); ++t) {
            const auto at = pool.begin() + pick(static_cast<int>(pool.size()));
            m.odd.insert(std::upper_bound(m.odd.begin(), m.odd.end(), *at), *at);
            pool.erase(at);
        }
        return m;
    }

    SuperScalar scalar(int max_terms = 4, bool laurent = true) {
        SuperScalar s;
        const int nt = pick(max_terms + 1);
        for (int t = 0; t < nt; ++t)
            s += SuperScalar::from_terms({{monomial(laurent), coeff()}});
        return s;
    }

    /// Homogeneous scalar of the requested parity (possibly zero).
    SuperScalar homogeneous(Parity p, int max_terms = 3) {
        SuperScalar s;
        const int nt = 1 + pick(max_terms);
        for (int t = 0; t < nt; ++t) {
            SuperMonomial m = monomial();
            if ((m.odd.size() % 2 == 0) != (p == Parity::Even)) {
                if (p == Parity::Odd && m.odd.empty()) m.odd.push_back(odds_[0]);
                else if (!m.odd.empty()) m.odd.erase(m.odd.begin());
                else continue;
            }
            s += SuperScalar::from_terms({{m, coeff()}});
        }
        return s;
    }

    /// Nonzero monomial-unit-body invertible scalar.
    SuperScalar invertible() {
        SuperMonomial unit;
        const int e = pick(5) - 2;
        if (e != 0) unit.even[evens_[static_cast<std::size_t>(pick(3))]] = e;
        SuperScalar s = SuperScalar::from_terms({{unit, coeff()}});
        const int extra = pick(3);
        for (int t = 0; t < extra; ++t) {
            SuperMonomial m = monomial();
            if (m.odd.empty()) m.odd.push_back(odds_[static_cast<std::size_t>(pick(4))]);
            s += SuperScalar::from_terms({{m, coeff()}});
        }
        return s;
    }

    int pick(int n) { return static_cast<int>(rng_() % static_cast<unsigned>(n)); }

  private:
    std::mt19937 rng_;
    std::vector<GeneratorId> evens_, odds_;
};

} // namespace superfrieze::testing
