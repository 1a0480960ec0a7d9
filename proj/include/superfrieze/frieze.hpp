#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superfrieze/hill.hpp"
#include "superfrieze/matrix.hpp"
#include "superfrieze/scalar.hpp"

namespace superfrieze {

/// Position in the frieze plane with doubled coordinates, so half-integer
/// indices are exact: the entry lives at (i, j) = (i2/2, j2/2). The first
/// index numbers South-East diagonals, the second North-East diagonals.
/// Integer positions hold an even entry f and an odd entry phi; positions
/// with both coordinates half-integer hold phi only.
struct FriezeIndex {
    int i2 = 0;
    int j2 = 0;
    friend bool operator==(const FriezeIndex&, const FriezeIndex&) = default;
    friend auto operator<=>(const FriezeIndex&, const FriezeIndex&) = default;
    std::string str() const;
};

/// One elementary diamond, fields named by position:
///            top
///   upper_left  upper_right
/// left                  right
///   lower_left  lower_right
///           bottom
struct Diamond {
    SuperScalar top, left, right, bottom;          // even
    SuperScalar upper_left, upper_right,
                lower_left, lower_right;           // odd
};

/// All three frieze-rule relations hold exactly. Throws ParityMismatch on
/// entries of the wrong parity.
bool check_diamond(const Diamond& d);

/// The OSp(1|2) element associated with a diamond; requires check_diamond.
SuperMatrix diamond_to_osp(const Diamond& d);

/// Inverse direction of the correspondence.
Diamond osp_to_diamond(const SuperMatrix& m);

/// A superfrieze of width m >= 1 and period n = m+3, stored over two
/// periods of South-East diagonals (including the boundary rows of 0's,
/// 1's and the internal row of -1's). Immutable once constructed.
class Superfrieze {
  public:
    int width() const { return m_; }
    int period() const { return n_; }

    bool has_f(int p, int q) const { return f_.count({p, q}) != 0; }
    bool has_phi2(int p2, int q2) const { return phi_.count({p2, q2}) != 0; }
    const SuperScalar& f(int p, int q) const;
    /// Odd entry by doubled indices; integer positions are (2i, 2j).
    const SuperScalar& phi2(int p2, int q2) const;

    const std::map<std::pair<int, int>, SuperScalar>& f_entries() const { return f_; }
    const std::map<std::pair<int, int>, SuperScalar>& phi_entries() const { return phi_; }

    /// Reads the first two non-trivial rows (a_i, beta_i for i in [0, n)).
    HillCoefficients first_rows() const;

    friend bool operator==(const Superfrieze&, const Superfrieze&) = default;

    friend Superfrieze frieze_from_first_rows(const std::vector<SuperScalar>& a,
                                              const std::vector<SuperScalar>& beta, int m);

  private:
    Superfrieze(int m) : m_(m), n_(m + 3) {}
    int m_, n_;
    std::map<std::pair<int, int>, SuperScalar> f_;   // integer (p, q)
    std::map<std::pair<int, int>, SuperScalar> phi_; // doubled (p2, q2)
};

/// Builds the frieze from the first two non-trivial rows by propagating the
/// transfer recurrence along South-East diagonals from (-1, 0, 0) and
/// filling half-integer odd entries from the product formula. No division
/// occurs, so no genericity condition is enforced here.
Superfrieze frieze_from_first_rows(const std::vector<SuperScalar>& a,
                                   const std::vector<SuperScalar>& beta, int m);

/// Detailed check results: empty optional means the property holds; the
/// string names the first offending position.
std::optional<std::string> first_diamond_violation(const Superfrieze& fz);
std::optional<std::string> first_closure_violation(const Superfrieze& fz);
std::optional<std::string> first_glide_violation(const Superfrieze& fz);      // throws NotClosed
std::optional<std::string> first_periodicity_violation(const Superfrieze& fz); // throws NotClosed
std::optional<std::string> first_pairing_violation(const Superfrieze& fz);

bool check_all_diamonds(const Superfrieze& fz);
bool check_closure(const Superfrieze& fz);
bool check_glide(const Superfrieze& fz);
bool check_periodicity(const Superfrieze& fz);
bool first_row_pairing(const Superfrieze& fz);

/// The stored diamond with top entry f(p, q); fails when a member is
/// outside the stored domain.
std::optional<Diamond> diamond_at(const Superfrieze& fz, int p, int q);

/// The South-East diagonal satisfies the transfer recurrence with the
/// first-row potential, and the North-East diagonal satisfies the dual
/// recurrence with the sign of the odd coefficients flipped.
bool diagonal_satisfies_hill(const Superfrieze& fz, int j);

/// Frieze attached to a Hill system; requires the monodromy condition.
Superfrieze frieze_from_hill(const HillSystem& sys);

/// Recovers a full period of coefficients from one closed South-East
/// diagonal window: v = (V_{-1}, V_0, ..., V_{m+1}), w likewise, with the
/// boundary values V_{-1} = 1, V_m = 1, V_{m+1} = 0, W_{-1} = W_{m+1} = 0.
/// Interior even entries must have invertible bodies (throws NotGeneric).
HillCoefficients coefficients_from_diagonal(const std::vector<SuperScalar>& v,
                                            const std::vector<SuperScalar>& w);

/// Frieze over a free diagonal: pass the m interior even values and the
/// m+1 interior odd values (fresh generators for the generic chart). Every
/// entry is then a Laurent polynomial in the diagonal data; the only
/// divisions performed are by the interior even values.
Superfrieze laurent_expand(const std::vector<SuperScalar>& v_interior,
                           const std::vector<SuperScalar>& w_interior);

/// Residuals of the closure equations (f_{j,j+m} - 1, f_{j,j+m+1},
/// phi_{j,j+m+1} for one period): the polynomial system cutting out the
/// variety of closed friezes, reported per equation.
struct ClosureResidual {
    int j;
    std::string kind; // "f_eq_one", "f_eq_zero", "phi_eq_zero"
    SuperScalar value;
};
std::vector<ClosureResidual> closure_equation_residuals(const std::vector<SuperScalar>& a,
                                                        const std::vector<SuperScalar>& beta,
                                                        int m);

/// Staggered plaintext rendering of the stored fundamental domain.
std::string render_text(const Superfrieze& fz);

} // namespace superfrieze
