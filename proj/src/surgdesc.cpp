#include "lashlab/surgdesc.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include "lashlab/contfrac.hpp"

namespace lashlab {

RationalSurgeryDiagram::RationalSurgeryDiagram(std::vector<Slope> coefficients_,
                                               IntMatrix linking_)
    : coefficients(std::move(coefficients_)), linking(std::move(linking_)) {
    std::size_t n = coefficients.size();
    if (linking.size() != n)
        throw std::invalid_argument(
            "RationalSurgeryDiagram: coefficient count must equal linking dimension");
    for (std::size_t i = 0; i < n; ++i) {
        if (linking[i].size() != n)
            throw std::invalid_argument("RationalSurgeryDiagram: linking matrix not square");
        if (linking[i][i] != 0)
            throw std::invalid_argument("RationalSurgeryDiagram: linking diagonal must be zero");
        for (std::size_t j = i + 1; j < n; ++j)
            if (linking[i][j] != linking[j][i])
                throw std::invalid_argument("RationalSurgeryDiagram: linking matrix not symmetric");
    }
}

namespace {

// Off-diagonal linking numbers of the 16-component diagram, all clockwise
// oriented in the published picture.  The diagonal is held separately as the
// parameterized surgery coefficients.
constexpr int kFamilyLinking[16][16] = {
    {0, 0, 0, -1, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 0},
    {0, 0, 0, -1, 1, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1},
    {0, 0, 0, 0, -1, -1, 1, 0, 0, 0, 0, -1, 1, -1, 1, -1},
    {-1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, -1, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1},
    {0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0},
};

} // namespace

RationalSurgeryDiagram family_surgery_diagram(const Int& a1, const Int& a2, const Int& a3,
                                              const Int& m, const Int& b1, const Int& b2,
                                              const Slope& r, SurgeryVariant variant) {
    if (a1 < 0 || a2 < 0 || a3 < 0 || m < 0 || b1 < 0 || b2 < 0)
        throw std::invalid_argument("family_surgery_diagram: parameters are non-negative");

    ContinuedFraction acf;
    acf.coeffs = {0, a1, -a2, variant == SurgeryVariant::S1xS2 ? Int(a3 + 1) : a3};
    Slope A = cf_eval(acf);

    std::vector<Slope> coeffs = {
        A,
        Slope(m, 1),
        Slope(1, 1),
        Slope(-1, 1),
        Slope(1, 1),
        Slope(-1, 1),
        Slope(-a1 - 1, 1),
        Slope(-a3, 1),
        Slope(1, 1),
        Slope(1, m),
        Slope(a2, 1),
        Slope(-1, b2),
        Slope(1, b1),
        r,
        Slope(-1, b1),
        Slope(1, b2),
    };

    IntMatrix lk(16, std::vector<Int>(16, 0));
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            lk[i][j] = kFamilyLinking[i][j];
    return RationalSurgeryDiagram(std::move(coeffs), std::move(lk));
}

IntMatrix h1_presentation(const RationalSurgeryDiagram& d) {
    std::size_t n = d.coefficients.size();
    IntMatrix b(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        b[i][i] = d.coefficients[i].num();
        const Int& q = d.coefficients[i].den();
        if (q == 0)
            continue;  // trivial filling: the row is already e_i
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                b[i][j] = q * d.linking[i][j];
    }
    return b;
}

SmithDecomposition smith_normal_form(IntMatrix m) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (const auto& row : m)
        if (row.size() != cols)
            throw std::invalid_argument("smith_normal_form: ragged matrix");

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest non-zero magnitude, lowest row then column on ties
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (!found || abs_int(m[i][j]) < abs_int(m[pi][pj])))
                    pi = i, pj = j, found = true;
        if (!found)
            break;
        std::swap(m[t], m[pi]);
        if (pj != t)
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(m[i][t], m[i][pj]);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows && clean; ++i) {
            if (m[i][t] == 0)
                continue;
            Int q = m[i][t] / m[t][t];
            if (q != 0)
                for (std::size_t j = t; j < cols; ++j)
                    m[i][j] -= q * m[t][j];
            if (m[i][t] != 0)
                clean = false;  // remainder is a smaller pivot; reselect
        }
        for (std::size_t j = t + 1; j < cols && clean; ++j) {
            if (m[t][j] == 0)
                continue;
            Int q = m[t][j] / m[t][t];
            if (q != 0)
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] -= q * m[i][t];
            if (m[t][j] != 0)
                clean = false;
        }
        if (!clean)
            continue;

        // force the divisibility chain before advancing
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (std::size_t k = t; k < cols; ++k)
                        m[t][k] += m[i][k];
                    divides = false;
                }
        if (divides)
            ++t;
    }

    SmithDecomposition out;
    for (std::size_t k = 0; k < t; ++k)
        out.invariant_factors.push_back(abs_int(m[k][k]));
    out.free_rank = rows - t;
    return out;
}

Int AbelianGroup::order() const {
    if (!is_finite())
        throw std::logic_error("AbelianGroup::order: group is infinite");
    Int o = 1;
    for (const Int& d : torsion)
        o *= d;
    return o;
}

std::string AbelianGroup::str() const {
    if (free_rank == 0 && torsion.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < free_rank; ++i) {
        if (!s.empty())
            s += " + ";
        s += "Z";
    }
    for (const Int& d : torsion) {
        if (!s.empty())
            s += " + ";
        s += "Z/" + d.str();
    }
    return s;
}

AbelianGroup h1_group(const RationalSurgeryDiagram& d) {
    SmithDecomposition snf = smith_normal_form(h1_presentation(d));
    AbelianGroup g;
    g.free_rank = snf.free_rank;
    for (const Int& f : snf.invariant_factors)
        if (f >= 2)
            g.torsion.push_back(f);
    return g;
}

std::optional<Int> h1_order(const RationalSurgeryDiagram& d) {
    Int det = determinant(h1_presentation(d));
    if (det == 0)
        return std::nullopt;
    return abs_int(det);
}

Int closed_form_order(const Int& b1, const Int& b2, const Int& r) {
    return abs_int(-389 - r - b1 * (563 + 778 * b2) -
                   b1 * b1 * (204 + 563 * b2 + 389 * b2 * b2));
}

Int determinant(IntMatrix m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix must be square");
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination; every division is exact.
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

void write_diagram(std::ostream& os, const RationalSurgeryDiagram& d) {
    std::size_t n = d.coefficients.size();
    os << n << "\n";
    for (std::size_t i = 0; i < n; ++i) {
        os << (i + 1) << " " << d.coefficients[i] << " lk:";
        for (std::size_t j = 0; j < n; ++j)
            os << " " << d.linking[i][j];
        os << "\n";
    }
}

} // namespace lashlab
