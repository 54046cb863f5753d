#pragma once

#include <string>
#include <vector>

#include "lashlab/bigint.hpp"

namespace lashlab {

/// A word in the braid group B_strands.  Letter v stands for the generator
/// sigma_|v| raised to sign(v); 1 <= |v| <= strands - 1.
struct BraidWord {
    int strands;
    std::vector<int> letters;

    BraidWord(int strands_, std::vector<int> letters_);

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

    std::string str() const;
    /// Parses whitespace-separated signed non-zero integers.
    static BraidWord parse(const std::string& text, int strands);
};

/// The 3-braid  alpha = sigma_{bar n}^{eps_n a_n} ... sigma_2^{a_2} sigma_1^{-a_1}
/// with eps_i = (-1)^i and bar i = 1 for odd i, 2 for even i.  Zero exponents
/// contribute no letters.
BraidWord alpha_form(const std::vector<int>& a);

/// The 3-braid  omega = sigma_1^{z_1} sigma_2^{-z_2} sigma_1^{z_3} ...,
/// the sign pattern opposite to alpha's.
BraidWord omega_form(const std::vector<int>& z);

/// Deletes adjacent inverse pairs (v, -v) until none remain.
BraidWord free_reduce(BraidWord w);

BraidWord inverse(const BraidWord& w);         // reverse order, negate letters
BraidWord mirror(const BraidWord& w);          // negate letters in place
BraidWord reverse_word(const BraidWord& w);    // reverse order
BraidWord generator_swap(const BraidWord& w);  // sigma_1 <-> sigma_2; 3-strand only
BraidWord concat(const BraidWord& u, const BraidWord& v);

/// Result of expressing a two-bridge plat as sigma_1^{-1} alpha omega.
struct PlatDecomposition {
    BraidWord alpha;
    BraidWord omega;
    bool certificate_ok;
    std::string detail;  // human-readable certificate breakdown
};

/// Constructive plat decomposition: given an alternating 3-braid xi (empty,
/// or starting with a power of sigma_1) and alpha-form coefficients a_prime
/// (n' >= 3, all positive) defining alpha', returns (alpha, omega) with
///   xi = sigma_1^{-1} alpha omega   freely,
/// alpha in alpha-form and omega in omega-form, both with >= 3 twist regions
/// and positive coefficients.  The certificate re-checks all of the above.
PlatDecomposition decompose_two_bridge(const BraidWord& xi, const std::vector<int>& a_prime);

/// Seifert genus of the closure of a positive braid on `strands` strands of
/// word length `length`: (length - strands + 1)/2.  Rejects inputs whose
/// closure is not a knot.
Int genus_positive_closure(const Int& strands, const Int& length);

/// Underlying permutation of the strands; image[i] is the endpoint of the
/// strand starting at position i (0-based).
std::vector<int> permutation(const BraidWord& w);

/// True when the closure is a knot, i.e. the permutation is a single cycle.
bool closure_is_knot(const BraidWord& w);

} // namespace lashlab
