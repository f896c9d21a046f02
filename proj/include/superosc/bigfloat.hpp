#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace superosc {

// Variable-precision real used by the solver escalation ladder. Precision is
// per-value; helpers below convert the spec's bit counts to mpfr decimal digits.
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>>;

inline unsigned bits_to_digits10(int bits) {
    // digits10 = bits * log10(2), rounded up with one guard digit
    return static_cast<unsigned>(bits * 0.3010299956639812) + 2;
}

class BigFloatPrecisionGuard {
public:
    explicit BigFloatPrecisionGuard(int bits)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(bits_to_digits10(bits));
    }
    ~BigFloatPrecisionGuard() { BigFloat::default_precision(saved_); }

    BigFloatPrecisionGuard(const BigFloatPrecisionGuard&) = delete;
    BigFloatPrecisionGuard& operator=(const BigFloatPrecisionGuard&) = delete;

private:
    unsigned saved_;
};

}  // namespace superosc
