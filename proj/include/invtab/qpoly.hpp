#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace invtab {

using bigint = boost::multiprecision::cpp_int;

// Polynomial in q with non-negative integer coefficients, stored dense from
// degree 0.  Canonical form has no trailing zero coefficients except that the
// zero polynomial keeps a single 0.
class qpolynomial {
public:
    qpolynomial() : coeff_{0} {}
    explicit qpolynomial(bigint constant) : coeff_{std::move(constant)} {}
    explicit qpolynomial(std::vector<bigint> coeff) : coeff_(std::move(coeff)) {
        trim();
    }

    static qpolynomial monomial(int degree, bigint c = 1) {
        std::vector<bigint> v(degree + 1, 0);
        v[degree] = std::move(c);
        return qpolynomial(std::move(v));
    }

    const std::vector<bigint>& coefficients() const { return coeff_; }
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    bool is_zero() const { return coeff_.size() == 1 && coeff_[0] == 0; }

    const bigint& operator[](int d) const {
        static const bigint zero = 0;
        return d <= degree() ? coeff_[d] : zero;
    }

    bigint eval_at_one() const {
        bigint s = 0;
        for (const bigint& c : coeff_) s += c;
        return s;
    }

    qpolynomial& operator+=(const qpolynomial& o) {
        if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size(), 0);
        for (std::size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
        trim();
        return *this;
    }

    friend qpolynomial operator+(qpolynomial a, const qpolynomial& b) {
        a += b;
        return a;
    }

    friend qpolynomial operator*(const qpolynomial& a, const qpolynomial& b) {
        if (a.is_zero() || b.is_zero()) return qpolynomial();
        std::vector<bigint> c(a.coeff_.size() + b.coeff_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeff_.size(); ++i)
            for (std::size_t j = 0; j < b.coeff_.size(); ++j)
                c[i + j] += a.coeff_[i] * b.coeff_[j];
        return qpolynomial(std::move(c));
    }

    qpolynomial& operator*=(const qpolynomial& o) { return *this = *this * o; }

    bool operator==(const qpolynomial&) const = default;

    // Space-separated coefficients from degree 0.
    std::string machine() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < coeff_.size(); ++i) {
            if (i) os << ' ';
            os << coeff_[i];
        }
        return os.str();
    }

    // Human form such as "1 + 3q + 5q^2"; zero prints "0".
    std::string pretty() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int d = 0; d <= degree(); ++d) {
            if (coeff_[d] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (d == 0) {
                os << coeff_[d];
            } else {
                if (coeff_[d] != 1) os << coeff_[d];
                os << 'q';
                if (d > 1) os << '^' << d;
            }
        }
        return os.str();
    }

private:
    void trim() {
        if (coeff_.empty()) coeff_.push_back(0);
        while (coeff_.size() > 1 && coeff_.back() == 0) coeff_.pop_back();
    }

    std::vector<bigint> coeff_;
};

}  // namespace invtab
