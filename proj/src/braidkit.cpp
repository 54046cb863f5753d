#include "lashlab/braidkit.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lashlab {

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
    if (strands < 2)
        throw std::invalid_argument("BraidWord: need at least two strands");
    for (int v : letters)
        if (v == 0 || std::abs(v) > strands - 1)
            throw std::invalid_argument("BraidWord: letter out of range for strand count");
}

std::string BraidWord::str() const {
    std::string s;
    for (int v : letters) {
        if (!s.empty())
            s += " ";
        s += std::to_string(v);
    }
    return s;
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
    std::istringstream in(text);
    std::vector<int> letters;
    int v;
    while (in >> v)
        letters.push_back(v);
    if (!in.eof())
        throw std::invalid_argument("BraidWord: cannot parse '" + text + "'");
    return BraidWord(strands, std::move(letters));
}

namespace {

void append_power(std::vector<int>& letters, int generator, int exponent) {
    int letter = exponent < 0 ? -generator : generator;
    for (int k = 0; k < std::abs(exponent); ++k)
        letters.push_back(letter);
}

void require_nonnegative(const std::vector<int>& coeffs, const char* who) {
    if (coeffs.empty())
        throw std::invalid_argument(std::string(who) + ": coefficient list must be non-empty");
    for (int c : coeffs)
        if (c < 0)
            throw std::invalid_argument(std::string(who) + ": coefficients are non-negative");
}

} // namespace

BraidWord alpha_form(const std::vector<int>& a) {
    require_nonnegative(a, "alpha_form");
    std::vector<int> letters;
    for (int i = static_cast<int>(a.size()); i >= 1; --i) {
        int generator = (i % 2 == 1) ? 1 : 2;
        int sign = (i % 2 == 0) ? 1 : -1;  // eps_i = (-1)^i
        append_power(letters, generator, sign * a[i - 1]);
    }
    return BraidWord(3, std::move(letters));
}

BraidWord omega_form(const std::vector<int>& z) {
    require_nonnegative(z, "omega_form");
    std::vector<int> letters;
    for (int i = 1; i <= static_cast<int>(z.size()); ++i) {
        int generator = (i % 2 == 1) ? 1 : 2;
        int sign = (i % 2 == 1) ? 1 : -1;  // -eps_i
        append_power(letters, generator, sign * z[i - 1]);
    }
    return BraidWord(3, std::move(letters));
}

BraidWord free_reduce(BraidWord w) {
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (int v : w.letters) {
        if (!out.empty() && out.back() == -v)
            out.pop_back();
        else
            out.push_back(v);
    }
    w.letters = std::move(out);
    return w;
}

BraidWord inverse(const BraidWord& w) {
    std::vector<int> letters(w.letters.rbegin(), w.letters.rend());
    for (int& v : letters)
        v = -v;
    return BraidWord(w.strands, std::move(letters));
}

BraidWord mirror(const BraidWord& w) {
    std::vector<int> letters = w.letters;
    for (int& v : letters)
        v = -v;
    return BraidWord(w.strands, std::move(letters));
}

BraidWord reverse_word(const BraidWord& w) {
    return BraidWord(w.strands, std::vector<int>(w.letters.rbegin(), w.letters.rend()));
}

BraidWord generator_swap(const BraidWord& w) {
    if (w.strands != 3)
        throw std::invalid_argument("generator_swap: defined on 3-strand words only");
    std::vector<int> letters = w.letters;
    for (int& v : letters)
        v = (v > 0) ? 3 - v : -(3 - (-v));
    return BraidWord(w.strands, std::move(letters));
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
    if (u.strands != v.strands)
        throw std::invalid_argument("concat: strand counts differ");
    std::vector<int> letters = u.letters;
    letters.insert(letters.end(), v.letters.begin(), v.letters.end());
    return BraidWord(u.strands, std::move(letters));
}

namespace {

struct Block {
    int generator;  // 1 or 2
    int sign;       // +1 or -1
    int count;
};

std::vector<Block> blocks_of(const BraidWord& w) {
    std::vector<Block> blocks;
    for (int v : w.letters) {
        int g = std::abs(v);
        int s = v > 0 ? 1 : -1;
        if (!blocks.empty() && blocks.back().generator == g && blocks.back().sign == s)
            ++blocks.back().count;
        else
            blocks.push_back({g, s, 1});
    }
    return blocks;
}

// Alternating in the Conway normal form sense: maximal twist regions
// alternate between the generators, sigma_1 letters all of one sign and
// sigma_2 letters all of the other.
bool is_alternating(const BraidWord& w) {
    if (w.strands != 3)
        return false;
    int sign1 = 0, sign2 = 0;
    for (int v : w.letters) {
        int g = std::abs(v);
        int s = v > 0 ? 1 : -1;
        int& seen = (g == 1) ? sign1 : sign2;
        if (seen == 0)
            seen = s;
        else if (seen != s)
            return false;
    }
    return sign1 == 0 || sign2 == 0 || sign1 == -sign2;
}

// Parses a word in the twist-region normal forms: alpha-form reads right to left
// as sigma_1^{-a_1}, sigma_2^{+a_2}, ...; omega-form reads left to right as
// sigma_1^{+z_1}, sigma_2^{-z_2}, ....  Returns the region coefficients or
// empty on a pattern mismatch.
std::vector<int> parse_form_star(const BraidWord& w, bool omega) {
    std::vector<Block> blocks = blocks_of(w);
    if (!omega)
        std::reverse(blocks.begin(), blocks.end());
    std::vector<int> coeffs;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        int want_generator = (i % 2 == 0) ? 1 : 2;
        int want_sign = (want_generator == 1) ? (omega ? 1 : -1) : (omega ? -1 : 1);
        if (blocks[i].generator != want_generator || blocks[i].sign != want_sign)
            return {};
        coeffs.push_back(blocks[i].count);
    }
    return coeffs;
}

} // namespace

PlatDecomposition decompose_two_bridge(const BraidWord& xi, const std::vector<int>& a_prime) {
    if (xi.strands != 3)
        throw std::invalid_argument("decompose_two_bridge: xi must be a 3-braid");
    if (!is_alternating(xi))
        throw std::invalid_argument("decompose_two_bridge: xi is not an alternating 3-braid");
    if (!xi.empty() && std::abs(xi.letters.front()) != 1)
        throw std::invalid_argument(
            "decompose_two_bridge: xi must begin with a power of sigma_1 (or be empty)");
    if (a_prime.size() < 3)
        throw std::invalid_argument("decompose_two_bridge: a_prime needs n' >= 3 regions");
    for (int c : a_prime)
        if (c < 1)
            throw std::invalid_argument("decompose_two_bridge: a_prime coefficients are positive");

    BraidWord alpha_prime = alpha_form(a_prime);
    BraidWord sigma1(3, {1});

    BraidWord alpha(3, {});
    BraidWord omega(3, {});
    if (xi.empty()) {
        alpha = alpha_prime;
        omega = concat(inverse(alpha_prime), sigma1);
    } else if (xi.letters.front() < 0) {
        // xi = sigma_1^{-1} xi'
        BraidWord xi_rest(3, std::vector<int>(xi.letters.begin() + 1, xi.letters.end()));
        alpha = concat(xi_rest, alpha_prime);
        omega = inverse(alpha_prime);
    } else {
        alpha = alpha_prime;
        omega = concat(concat(inverse(alpha_prime), sigma1), xi);
    }

    PlatDecomposition out{alpha, omega, false, ""};

    BraidWord lhs = free_reduce(
        concat(concat(BraidWord(3, {-1}), alpha), omega));
    BraidWord rhs = free_reduce(xi);
    bool word_ok = lhs.letters == rhs.letters;

    std::vector<int> a_coeffs = parse_form_star(alpha, /*omega=*/false);
    std::vector<int> z_coeffs = parse_form_star(omega, /*omega=*/true);
    bool alpha_ok = a_coeffs.size() >= 3;
    bool omega_ok = z_coeffs.size() >= 3;

    out.certificate_ok = word_ok && alpha_ok && omega_ok;
    std::ostringstream detail;
    detail << "free_identity=" << (word_ok ? "ok" : "FAIL")
           << " alpha_form_n=" << a_coeffs.size() << (alpha_ok ? "" : " FAIL")
           << " omega_form_r=" << z_coeffs.size() << (omega_ok ? "" : " FAIL");
    out.detail = detail.str();
    return out;
}

Int genus_positive_closure(const Int& strands, const Int& length) {
    if (strands < 2 || length < 0)
        throw std::invalid_argument("genus_positive_closure: need strands >= 2, length >= 0");
    Int chi = length - strands + 1;
    if (chi < 0 || chi % 2 != 0)
        throw std::invalid_argument(
            "genus_positive_closure: closure is not a knot (length - strands + 1 must be even "
            "and non-negative)");
    return chi / 2;
}

std::vector<int> permutation(const BraidWord& w) {
    std::vector<int> image(w.strands);
    std::iota(image.begin(), image.end(), 0);
    for (int v : w.letters) {
        int k = std::abs(v) - 1;  // crossing swaps positions k, k+1
        for (int& pos : image) {
            if (pos == k)
                pos = k + 1;
            else if (pos == k + 1)
                pos = k;
        }
    }
    return image;
}

bool closure_is_knot(const BraidWord& w) {
    std::vector<int> image = permutation(w);
    int seen = 0;
    int pos = 0;
    do {
        pos = image[pos];
        ++seen;
    } while (pos != 0 && seen <= w.strands);
    return seen == w.strands;
}

} // namespace lashlab
