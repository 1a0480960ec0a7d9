#include "superfrieze/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "superfrieze/errors.hpp"

namespace superfrieze {

SuperMatrix SuperMatrix::identity(int n, std::pair<int, int> block) {
    SuperMatrix m(n, n, block);
    for (int i = 0; i < n; ++i) m.set(i, i, SuperScalar::one());
    return m;
}

std::string SuperMatrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << (r ? "\n[" : "[");
        for (int c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << at(r, c).str();
        }
        os << "]";
    }
    return os.str();
}

SuperMatrix mat_mul(const SuperMatrix& m, const SuperMatrix& n) {
    if (m.cols() != n.rows())
        throw DimensionMismatch("mat_mul " + std::to_string(m.cols()) + " vs " +
                                std::to_string(n.rows()));
    SuperMatrix r(m.rows(), n.cols(), m.block());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < n.cols(); ++j) {
            SuperScalar s;
            for (int k = 0; k < m.cols(); ++k) s += m.at(i, k) * n.at(k, j);
            r.set(i, j, std::move(s));
        }
    return r;
}

SuperMatrix mat_sub(const SuperMatrix& m, const SuperMatrix& n) {
    if (m.rows() != n.rows() || m.cols() != n.cols())
        throw DimensionMismatch("mat_sub");
    SuperMatrix r(m.rows(), m.cols(), m.block());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.set(i, j, m.at(i, j) - n.at(i, j));
    return r;
}

namespace {

SuperMatrix minor_of(const SuperMatrix& m, int skip_row, int skip_col) {
    SuperMatrix r(m.rows() - 1, m.cols() - 1);
    int ri = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (i == skip_row) continue;
        int rj = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (j == skip_col) continue;
            r.set(ri, rj, m.at(i, j));
            ++rj;
        }
        ++ri;
    }
    return r;
}

} // namespace

SuperScalar det_first_column(const SuperMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("det of non-square matrix");
    const int n = m.rows();
    if (n == 0) return SuperScalar::one();
    if (n == 1) return m.at(0, 0);
    SuperScalar s;
    for (int r = 0; r < n; ++r) {
        if (m.at(r, 0).is_zero()) continue;
        const SuperScalar cof = m.at(r, 0) * det_first_column(minor_of(m, r, 0));
        s += (r % 2 == 0) ? cof : -cof;
    }
    return s;
}

SuperScalar det_permutation_sum(const SuperMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("det of non-square matrix");
    const int n = m.rows();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    SuperScalar s;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        SuperScalar p = SuperScalar::one();
        for (int i = 0; i < n; ++i) p = p * m.at(i, perm[i]);
        s += (inv % 2 == 0) ? p : -p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return s;
}

namespace {

// Adjugate-based inverse for a square block of even commuting entries.
SuperMatrix even_inverse(const SuperMatrix& d, const SuperScalar& det_inv) {
    const int n = d.rows();
    SuperMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SuperScalar cof = det_first_column(minor_of(d, i, j));
            if ((i + j) % 2 == 1) cof = -cof;
            inv.set(j, i, cof * det_inv);
        }
    return inv;
}

} // namespace

SuperScalar berezinian(const SuperMatrix& m) {
    const auto [p, q] = m.block();
    if (p + q != m.rows() || m.rows() != m.cols())
        throw DimensionMismatch("berezinian needs a declared square block split");

    SuperMatrix a(p, p), b(p, q), c(q, p), d(q, q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) a.set(i, j, m.at(i, j));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) b.set(i, j, m.at(i, p + j));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < p; ++j) c.set(i, j, m.at(p + i, j));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) d.set(i, j, m.at(p + i, p + j));

    const SuperScalar det_d = det_first_column(d);
    const SuperScalar det_d_inv = det_d.inverse(); // throws NotInvertible
    const SuperMatrix d_inv = even_inverse(d, det_d_inv);
    const SuperMatrix schur = mat_sub(a, mat_mul(b, mat_mul(d_inv, c)));
    return det_first_column(schur) * det_d_inv;
}

bool is_osp12(const SuperMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) return false;
    if (m.block() != std::pair<int, int>{2, 1}) return false;

    const SuperScalar &a = m.at(0, 0), &b = m.at(0, 1), &gamma = m.at(0, 2);
    const SuperScalar &c = m.at(1, 0), &d = m.at(1, 1), &delta = m.at(1, 2);
    const SuperScalar &alpha = m.at(2, 0), &beta = m.at(2, 1), &e = m.at(2, 2);

    if (!a.is_even() || !b.is_even() || !c.is_even() || !d.is_even() || !e.is_even())
        return false;
    if (!gamma.is_odd() || !delta.is_odd() || !alpha.is_odd() || !beta.is_odd())
        return false;

    const SuperScalar one = SuperScalar::one();
    if (a * d - b * c != one - alpha * beta) return false;
    if (e != one + alpha * beta) return false;
    if (-(a * delta) + c * gamma != alpha) return false;
    if (-(b * delta) + d * gamma != beta) return false;
    return true;
}

SuperMatrix osp_inverse(const SuperMatrix& m) {
    if (!is_osp12(m)) throw NotInGroup("osp_inverse requires an OSp(1|2) element");
    SuperMatrix r(3, 3, {2, 1});
    r.set(0, 0, m.at(1, 1));
    r.set(0, 1, -m.at(0, 1));
    r.set(0, 2, -m.at(2, 1));
    r.set(1, 0, -m.at(1, 0));
    r.set(1, 1, m.at(0, 0));
    r.set(1, 2, m.at(2, 0));
    r.set(2, 0, m.at(1, 2));
    r.set(2, 1, -m.at(0, 2));
    r.set(2, 2, m.at(2, 2));
    return r;
}

} // namespace superfrieze
