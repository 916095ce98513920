#include "algknot/rat.hpp"

#include <ostream>

namespace algknot {

Rat Rat::from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (int_sign(den) <= 0) throw Error("rational denominator must be positive: " + s);
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw Error("bad rational literal: " + s);
    }
}

std::string Rat::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) return rat_pow(b.inverse(), -e);
    Rat acc(1), base = b;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

}  // namespace algknot
