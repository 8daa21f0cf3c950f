#include "symmod/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace symmod {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("malformed rational literal: " + s);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

double to_double(const Rat& x) { return x.get_d(); }

Rat rat_pow(const Rat& base, unsigned exp) {
    Rat r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

Rat factorial(unsigned m) {
    Rat r = 1;
    for (unsigned t = 2; t <= m; ++t) r *= t;
    return r;
}

Rat factorial_vec(const std::vector<int>& m) {
    Rat r = 1;
    for (int mi : m) r *= factorial(static_cast<unsigned>(mi));
    return r;
}

Rat pochhammer(const Rat& x, unsigned m) {
    Rat r = 1;
    for (unsigned t = 0; t < m; ++t) r *= x + static_cast<long>(t);
    return r;
}

Rat pochhammer_vec(const Rat& x, const std::vector<int>& m) {
    Rat r = 1;
    for (int mi : m) r *= pochhammer(x, static_cast<unsigned>(mi));
    return r;
}

} // namespace symmod
