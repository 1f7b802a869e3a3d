#include "bez/poly.hpp"

namespace bez {

std::string coeff_to_string(const Int& v) { return v.str(); }
std::string coeff_to_string(const Rat& v) { return rat_to_string(v); }

}  // namespace bez
