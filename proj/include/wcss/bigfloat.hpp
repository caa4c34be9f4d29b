#pragma once

#include <mpfr.h>

#include <utility>

namespace wcss {

// Thin RAII value type over MPFR, just wide enough for the determinant
// evaluations.  Binary operations round to the precision of the left operand.
class bigfloat {
public:
    explicit bigfloat(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    bigfloat(double d, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, d, MPFR_RNDN);
    }
    bigfloat(const bigfloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    bigfloat(bigfloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    bigfloat& operator=(bigfloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~bigfloat() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend bigfloat operator+(const bigfloat& a, const bigfloat& b) {
        bigfloat r(a.prec());
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend bigfloat operator-(const bigfloat& a, const bigfloat& b) {
        bigfloat r(a.prec());
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend bigfloat operator*(const bigfloat& a, const bigfloat& b) {
        bigfloat r(a.prec());
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend bigfloat operator/(const bigfloat& a, const bigfloat& b) {
        bigfloat r(a.prec());
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend bool abs_less(const bigfloat& a, const bigfloat& b) {
        return mpfr_cmpabs(a.v_, b.v_) < 0;
    }

    static bigfloat pow_ui(const bigfloat& base, unsigned long e) {
        bigfloat r(base.prec());
        mpfr_pow_ui(r.v_, base.v_, e, MPFR_RNDN);
        return r;
    }
    static bigfloat factorial(unsigned long n, mpfr_prec_t prec) {
        bigfloat r(prec);
        mpfr_fac_ui(r.v_, n, MPFR_RNDN);
        return r;
    }
    // Lower incomplete gamma for integer shape, via Gamma(s) - Gamma(s, x).
    // At working precisions of hundreds of bits the subtraction is harmless.
    static bigfloat lower_gamma(unsigned long s, const bigfloat& x) {
        bigfloat full(x.prec());
        bigfloat sf(static_cast<double>(s), x.prec());
        mpfr_gamma(full.v_, sf.v_, MPFR_RNDN);
        bigfloat upper(x.prec());
        mpfr_gamma_inc(upper.v_, sf.v_, x.v_, MPFR_RNDN);
        return full - upper;
    }

private:
    mpfr_t v_;
};

} // namespace wcss
