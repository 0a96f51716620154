#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace fpf {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in t with integer coefficients; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { set(0, c); }  // NOLINT: constants convert implicitly
    static LaurentPoly monomial(BigInt c, int e);
    static LaurentPoly t() { return monomial(1, 1); }
    static LaurentPoly from_coeffs(const std::vector<long>& low_to_high, int low_exp = 0);

    BigInt coeff(int e) const;
    void set(int e, const BigInt& c);
    const std::map<int, BigInt>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int min_exp() const;
    int max_exp() const;
    int span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

    LaurentPoly shifted(int k) const;  // multiply by t^k
    LaurentPoly substitute_inverse() const;  // p(1/t)
    BigInt eval(long x) const;  // requires min_exp >= 0 unless x = +-1
    // Multiply by +-t^k so the lowest exponent is 0 and the leading coefficient is positive.
    LaurentPoly normalized_from_zero() const;
    LaurentPoly symmetric_normalized() const;  // same representative; idempotent
    bool is_symmetric() const;

    // Exact division by a polynomial; throws if not exact.
    LaurentPoly divided_by(const LaurentPoly& d) const;

    std::string str(const std::string& var = "t") const;  // "t^4 - t^3 + t^2 - t + 1"

private:
    std::map<int, BigInt> c_;
};

}  // namespace fpf
