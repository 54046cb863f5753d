#pragma once

#include <iosfwd>
#include <string>

#include "lashlab/bigint.hpp"

namespace lashlab {

/// A point of the projective rational line: a reduced fraction num/den with
/// den >= 0, where den == 0 encodes the slope infinity (stored as 1/0).
/// Slopes are the common currency for curves on the once-punctured torus,
/// rational tangle coefficients, and Dehn surgery coefficients.
class Slope {
public:
    Slope() : num_(0), den_(1) {}
    Slope(Int num, Int den);

    static Slope infinity() { return Slope(1, 0); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0 && den_ != 0; }

    Slope operator-() const { return is_infinite() ? *this : Slope(-num_, den_); }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

    std::string str() const;

    /// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
    /// malformed input or the excluded value 0/0.
    static Slope parse(const std::string& text);

private:
    Int num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

} // namespace lashlab
