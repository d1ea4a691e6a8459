#include "mainspectra/surd.hpp"

#include <cmath>
#include <sstream>

namespace mainspectra {

namespace {

using Wide = __int128;

std::strong_ordering cmp(Wide x, Wide y) {
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string rational_str(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
    if (v < 0) return std::nullopt;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
    while (r > 0 && static_cast<Wide>(r) * r > v) --r;
    while (static_cast<Wide>(r + 1) * (r + 1) <= v) ++r;
    if (static_cast<Wide>(r) * r == v) return r;
    return std::nullopt;
}

Surd::Surd(std::int64_t s_, std::int64_t D_, int sign_) : s(s_), D(D_), sign(sign_ >= 0 ? 1 : -1) {
    if (D < 0) throw Error("surd with negative discriminant");
}

std::optional<Rational> Surd::rational() const {
    if (auto root = exact_sqrt(D)) return Rational(s + sign * *root, 2);
    return std::nullopt;
}

double Surd::approx() const {
    return (static_cast<double>(s) + sign * std::sqrt(static_cast<double>(D))) / 2.0;
}

std::string Surd::str() const {
    if (auto r = rational()) return rational_str(*r);
    std::ostringstream os;
    os << '(' << s << (sign > 0 ? "+" : "-") << "√" << D << ")/2";
    return os.str();
}

std::strong_ordering Surd::operator<=>(const Rational& r) const {
    // (s + sign*sqrt(D))/2 vs p/q  <=>  sign*q*sqrt(D) vs 2p - s*q  (q > 0)
    const Wide q = r.denominator();
    const Wide rhs = 2 * static_cast<Wide>(r.numerator()) - static_cast<Wide>(s) * q;
    const Wide lhs_sq = q * q * static_cast<Wide>(D);
    if (sign > 0) {
        if (rhs < 0) return std::strong_ordering::greater;
        return cmp(lhs_sq, rhs * rhs);
    }
    if (rhs > 0) return std::strong_ordering::less;
    return cmp(rhs * rhs, lhs_sq);
}

bool operator==(const Surd& x, const Surd& y) {
    auto rx = x.rational();
    auto ry = y.rational();
    if (rx || ry) return rx && ry && *rx == *ry;
    return x.s == y.s && x.D == y.D && x.sign == y.sign;
}

}  // namespace mainspectra
