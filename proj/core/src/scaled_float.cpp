#include "relosc/scaled_float.hpp"

#include <cstdio>
#include <stdexcept>

namespace relosc {

ScaledFloat operator/(const ScaledFloat& a, const ScaledFloat& b) {
    if (b.is_zero()) throw std::domain_error("ScaledFloat: division by zero");
    if (a.is_zero()) return ScaledFloat();
    return ScaledFloat(a.mantissa() / b.mantissa(), a.exponent() - b.exponent());
}

std::string ScaledFloat::to_string() const {
    char buf[64];
    if (is_zero()) return "0";
    if (e_ >= -512 && e_ <= 512) {
        std::snprintf(buf, sizeof buf, "%.17g", to_double());
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g*2^%lld", m_, static_cast<long long>(e_));
    return buf;
}

} // namespace relosc
