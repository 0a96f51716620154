#include "fpf/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace fpf {

LaurentPoly LaurentPoly::monomial(BigInt c, int e) {
    LaurentPoly p;
    p.set(e, c);
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<long>& low_to_high, int low_exp) {
    LaurentPoly p;
    for (size_t i = 0; i < low_to_high.size(); ++i) p.set(low_exp + (int)i, low_to_high[i]);
    return p;
}

BigInt LaurentPoly::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::set(int e, const BigInt& c) {
    if (c == 0)
        c_.erase(e);
    else
        c_[e] = c;
}

int LaurentPoly::min_exp() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no degree");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no degree");
    return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.c_) r.set(e, r.coeff(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    std::map<int, BigInt> acc;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) acc[e1 + e2] += c1 * c2;
    LaurentPoly r;
    for (const auto& [e, c] : acc) r.set(e, c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

BigInt LaurentPoly::eval(long x) const {
    BigInt s = 0;
    for (const auto& [e, c] : c_) {
        if (e < 0 && x != 1 && x != -1) throw std::domain_error("negative exponent at non-unit point");
        BigInt p = 1;
        for (int i = 0; i < std::abs(e); ++i) p *= x;  // x = +-1 makes 1/x = x
        s += c * p;
    }
    return s;
}

LaurentPoly LaurentPoly::normalized_from_zero() const {
    if (is_zero()) return *this;
    LaurentPoly r = shifted(-min_exp());
    if (r.c_.rbegin()->second < 0) r = -r;
    return r;
}

// Representative of the class {+-t^k p}: lowest exponent 0, positive leading
// coefficient.  For symmetric p this is the usual "t^4 - t^3 + t^2 - t + 1" form.
LaurentPoly LaurentPoly::symmetric_normalized() const { return normalized_from_zero(); }

bool LaurentPoly::is_symmetric() const {
    if (is_zero()) return true;
    int lo = min_exp(), hi = max_exp();
    for (const auto& [e, c] : c_)
        if (coeff(lo + hi - e) != c) return false;
    return true;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly rem = *this, q;
    const int dlo = d.min_exp(), dhi = d.max_exp();
    const BigInt lead = d.coeff(dhi);
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= dhi - dlo) {
        int e = rem.max_exp();
        BigInt c = rem.coeff(e);
        if (c % lead != 0) throw std::domain_error("inexact polynomial division");
        LaurentPoly term = monomial(c / lead, e - dhi);
        q += term;
        rem -= term * d;
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto [e, c] = *it;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a;
        os << var;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

}  // namespace fpf
