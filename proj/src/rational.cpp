#include "seqdiv/rational.hpp"

#include <sstream>

namespace seqdiv {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (rat_den(r) != 1) os << '/' << rat_den(r);
    return os.str();
}

double rat_double(const Rat& r) { return static_cast<double>(r); }

bool has_dyadic_or_triadic_denominator(const Rat& r) {
    Int den = rat_den(r);
    while ((den & 1) == 0) den >>= 1;
    return den == 1 || den == 3;
}

}  // namespace seqdiv
