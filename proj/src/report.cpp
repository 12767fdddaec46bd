#include "qgen/report.hpp"

#include <cmath>
#include <cstdio>

namespace qgen {

std::string fmt_float(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0; // fold -0
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string fmt_g17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_complex_label(Complex v) {
    if (v.imag() == 0.0) return fmt_g17(v.real());
    std::string s = fmt_g17(v.real());
    if (v.imag() >= 0.0) s += "+";
    s += fmt_g17(v.imag());
    s += "i";
    return s;
}

} // namespace qgen
