#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "superfrieze/matrix.hpp"
#include "superfrieze/scalar.hpp"

namespace superfrieze {

/// The three supercontinuant families:
///   EvenK    K(a1 b1b1 | ... | an bnbn)            -- the even entries v_n
///   OddK     K(a1 b1b1 | ... | a_{n-1} | bn)       -- the odd entries w_n
///   BracketK K(b1 | a2 b2b2 | ... | bn)            -- bracketed ends
enum class ContinuantFamily { EvenK, OddK, BracketK };

struct ContinuantSpec {
    ContinuantFamily family = ContinuantFamily::EvenK;
    std::vector<SuperScalar> a;    // a_1..a_n (slot 1 of BracketK is unused)
    std::vector<SuperScalar> beta; // b_1..b_n
};

/// Fully symbolic spec over generators a1..an, b1..bn.
ContinuantSpec symbolic_continuant_spec(ContinuantFamily family, int n);

/// Classical continuant by the three-term recurrence.
SuperScalar continuant_classical(const std::vector<SuperScalar>& a);

/// Supercontinuant by the family's defining recurrences.
SuperScalar supercontinuant_recurrence(const ContinuantSpec& spec);

/// Supercontinuant by the generalized Euler rule: tile the slot sequence
/// with dots, dashes (same symbol -> a_i, consecutive symbols -> 1) and
/// aligned long dashes (b_i b_i b_{i+1} b_{i+1} -> -1); surviving odd
/// factors multiply in slot order.
SuperScalar supercontinuant_euler(const ContinuantSpec& spec);

/// Supercontinuant as a first-column-expanded determinant of the family's
/// tridiagonal-plus-fill matrix.
SuperScalar supercontinuant_determinant(const ContinuantSpec& spec);

/// Matrix of the determinant formula, exposed for inspection.
SuperMatrix continuant_matrix(const ContinuantSpec& spec);

/// The even supercontinuant over a1..an, b1..bn as the Berezinian of a
/// 2n x 2n block supermatrix (tridiagonal even block, triangular odd fill).
SuperScalar supercontinuant_berezinian(int n);
SuperMatrix berezinian_block_matrix(int n);

/// Number of monomials of the fully symbolic supercontinuant.
std::int64_t term_count(ContinuantFamily family, int n);

/// The pair (f_{j,i}, phi_{j,i}) of the frieze built on the given first
/// rows, as (EvenK, OddK) supercontinuants over the window a_j..a_i.
std::pair<SuperScalar, SuperScalar> frieze_entry_as_continuant(
    const std::vector<SuperScalar>& a, const std::vector<SuperScalar>& beta, int j, int i);

} // namespace superfrieze
