#include "lashlab/slope.hpp"

#include <ostream>
#include <stdexcept>

namespace lashlab {

Slope::Slope(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ == 0 && den_ == 0)
        throw std::invalid_argument("Slope: 0/0 is not a point of the projective line");
    Int g = gcd_int(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_ == 0)
        num_ = 1;
}

std::string Slope::str() const {
    return num_.str() + "/" + den_.str();
}

Slope Slope::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Slope(Int(text), 1);
        return Slope(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("Slope: cannot parse '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Slope& s) {
    return os << s.str();
}

} // namespace lashlab
