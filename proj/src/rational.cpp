#include "colorlab/rational.hpp"

namespace colorlab {

Rational rat_from_string(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t start = (s[0] == '-') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) throw IoError("bad rational: '" + text + "'");
            return Rational(BigInt(text));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw IoError("bad rational: '" + text + "'");
        BigInt d(den);
        if (d == 0) throw IoError("bad rational (zero denominator): '" + text + "'");
        return Rational(BigInt(num), d);
    } catch (const std::exception& e) {
        throw IoError(std::string("bad rational: '") + text + "': " + e.what());
    }
}

Rational rat_pow(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw PreconditionError("rat_pow: zero to negative power");
        return 1 / rat_pow(base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

} // namespace colorlab
