#include "hopfforms/rational.hpp"

namespace hopfforms {

std::string rat_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

Rational rat_from_string(std::string_view s) {
    auto parse_int = [](std::string_view t) -> Int {
        if (t.empty()) throw ParseError("empty integer in rational literal");
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw ParseError("sign without digits in rational literal");
        for (size_t j = i; j < t.size(); ++j) {
            if (t[j] < '0' || t[j] > '9')
                throw ParseError("invalid character in rational literal: " + std::string(t));
        }
        return Int(std::string(t));
    };
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(s));
    }
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational literal: " + std::string(s));
    return Rational(num, den);
}

}  // namespace hopfforms
