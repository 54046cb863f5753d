#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lashlab/slope.hpp"

namespace lashlab {

using IntMatrix = std::vector<std::vector<Int>>;

/// A rational surgery presentation: one surgery coefficient per component
/// (infinity = 1/0 allowed, meaning trivial filling) together with the
/// symmetric integer linking matrix (zero diagonal) of the components.
struct RationalSurgeryDiagram {
    std::vector<Slope> coefficients;
    IntMatrix linking;

    RationalSurgeryDiagram(std::vector<Slope> coefficients_, IntMatrix linking_);
};

enum class SurgeryVariant { S3, S1xS2 };

/// The 16-component surgery description of the r-surgery on the 1/b1-lashing
/// K(a3, a2, a1, m, b1), transcribed verbatim.  Component 1 carries
/// A = [0, a1, -a2, a3] = (a1 a2 a3 + a1 + a3)/(a2 a3 + 1); the S1xS2
/// variant replaces it by [0, a1, -a2, a3 + 1].  b1, b2 or m equal to zero
/// produce infinity coefficients on the corresponding components.
RationalSurgeryDiagram family_surgery_diagram(const Int& a1, const Int& a2, const Int& a3,
                                              const Int& m, const Int& b1, const Int& b2,
                                              const Slope& r, SurgeryVariant variant);

/// Integer presentation matrix of H_1 of the surgered manifold: row i is
/// p_i on the diagonal and q_i * lk_ij elsewhere, where coefficient i is
/// p_i/q_i in canonical form.  An infinity coefficient (1, 0) yields the
/// standard basis row e_i.
IntMatrix h1_presentation(const RationalSurgeryDiagram& d);

/// Invariant factors d_1 | d_2 | ... (positive, including any 1s) and the
/// free rank of the cokernel.
struct SmithDecomposition {
    std::vector<Int> invariant_factors;
    std::size_t free_rank;
};

/// Exact Smith normal form over the integers.  Pivoting picks the entry of
/// smallest non-zero magnitude, ties broken by lowest row then column, so
/// intermediate states are reproducible.
SmithDecomposition smith_normal_form(IntMatrix m);

/// A finitely generated abelian group Z^free_rank + Z/d_1 + ... with the
/// torsion orders in a divisibility chain, each >= 2.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_finite() const { return free_rank == 0; }
    Int order() const;  // throws when infinite
    std::string str() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Structure of H_1 of the surgered manifold, via Smith normal form of the
/// presentation matrix.
AbelianGroup h1_group(const RationalSurgeryDiagram& d);

/// |det| of the presentation matrix, or nullopt when the determinant
/// vanishes (infinite first homology).
std::optional<Int> h1_order(const RationalSurgeryDiagram& d);

/// The published closed form for |H_1| at a1 = a2 = a3 = m = 1:
/// |-389 - r - b1 (563 + 778 b2) - b1^2 (204 + 563 b2 + 389 b2^2)|.
Int closed_form_order(const Int& b1, const Int& b2, const Int& r);

/// Exact determinant of a square integer matrix (Bareiss elimination).
Int determinant(IntMatrix m);

/// Plain-text serialization: component count on the first line, then one
/// line per component "id p/q lk: v1 ... vn".
void write_diagram(std::ostream& os, const RationalSurgeryDiagram& d);

} // namespace lashlab
