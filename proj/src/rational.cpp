#include "mgdiv/rational.hpp"

#include <ostream>

#include "mgdiv/errors.hpp"

namespace mgdiv {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Rat::Rat(long long num, long long den) {
    require(den != 0, errc::malformed_input, "rational with zero denominator");
    mpz_class n(std::to_string(num));
    mpz_class d(std::to_string(den));
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    require(is_integer_literal(num) && is_integer_literal(den), errc::malformed_input,
            "not a rational: \"" + text + "\"");
    mpz_class d(den);
    require(sgn(d) > 0, errc::malformed_input,
            "rational with nonpositive denominator: \"" + text + "\"");
    mpq_class v(mpz_class(num), d);
    v.canonicalize();
    return Rat(std::move(v));
}

std::string Rat::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::operator-() const {
    mpq_class r = -v_;
    return Rat(std::move(r));
}

Rat& Rat::operator/=(const Rat& o) {
    require(!o.is_zero(), errc::malformed_input, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace mgdiv
