#include "gkz/numbers.hpp"

#include <sstream>

namespace gkz {

Rat parse_rational(const std::string& s) {
    auto bad = [&](const char* why) {
        throw std::invalid_argument("invalid rational '" + s + "': " + why);
    };
    if (s.empty()) bad("empty");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(s));
        }
        if (slash == 0 || slash + 1 >= s.size()) bad("missing numerator or denominator");
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) bad("zero denominator");
        return Rat(p, q);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        bad("not a number");
    }
    return Rat(0);  // unreachable
}

std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << num(q);
    if (den(q) != 1) os << '/' << den(q);
    return os.str();
}

std::string to_string(const QVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

std::string to_string(const ZVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

} // namespace gkz
