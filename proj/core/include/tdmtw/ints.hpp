#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace tdm {

/// Arbitrary-precision integer. Matrix entries, bounds, weights and objective
/// values all use this type; subdeterminants outgrow machine words quickly.
using Int = mpz_class;

/// Integer extended with -infinity. Used for dynamic-programming values where
/// -infinity marks partial assignments with no feasible extension.
/// Arithmetic is absorbing: -inf + x = -inf.
class ExtInt {
public:
    ExtInt() : finite_(false), value_(0) {}
    static ExtInt neg_inf() { return ExtInt(); }
    static ExtInt of(Int v) {
        ExtInt e;
        e.finite_ = true;
        e.value_ = std::move(v);
        return e;
    }

    bool finite() const { return finite_; }
    const Int& value() const {
        if (!finite_) throw std::logic_error("ExtInt: value() on -inf");
        return value_;
    }

    ExtInt operator+(const ExtInt& o) const {
        if (!finite_ || !o.finite_) return neg_inf();
        return of(value_ + o.value_);
    }
    ExtInt operator+(const Int& v) const {
        if (!finite_) return neg_inf();
        return of(value_ + v);
    }
    ExtInt operator-(const Int& v) const {
        if (!finite_) return neg_inf();
        return of(value_ - v);
    }
    ExtInt& operator+=(const ExtInt& o) {
        *this = *this + o;
        return *this;
    }

    bool operator==(const ExtInt& o) const {
        if (finite_ != o.finite_) return false;
        return !finite_ || value_ == o.value_;
    }
    bool operator!=(const ExtInt& o) const { return !(*this == o); }
    bool operator<(const ExtInt& o) const {
        if (!finite_) return o.finite_;
        if (!o.finite_) return false;
        return value_ < o.value_;
    }
    bool operator>(const ExtInt& o) const { return o < *this; }
    bool operator<=(const ExtInt& o) const { return !(o < *this); }
    bool operator>=(const ExtInt& o) const { return !(*this < o); }

    std::string str() const { return finite_ ? value_.get_str() : "-inf"; }

private:
    bool finite_;
    Int value_;
};

inline ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

}  // namespace tdm
