#pragma once

#include <string>

#include "qgen/qcore.hpp"

namespace qgen {

/// Canonical float rendering: 17 significant digits, scientific notation,
/// negative zero normalized.  Used everywhere a float enters serialized
/// output, so repeated runs are byte-identical.
std::string fmt_float(double v);

/// Shorter round-trip rendering for parameter-point labels.
std::string fmt_g17(double v);

std::string fmt_complex_label(Complex v);

} // namespace qgen
