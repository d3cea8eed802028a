#include "mirrorcalc/field.hpp"

namespace mirrorcalc::exactlin {

namespace {
Field g_field = Field::rationals();
}

Field Field::prime(long p) {
    if (p < 2 || p >= (1L << 31)) throw FieldError("prime modulus out of range");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw FieldError("modulus is not prime");
    return Field{FieldKind::Prime, p};
}

const Field& session_field() { return g_field; }
void set_session_field(const Field& f) { g_field = f; }

Scalar::Scalar(long num, long den) : v_(num, den) {
    if (den == 0) throw FieldError("zero denominator");
    v_.canonicalize();
    reduce();
}

Scalar Scalar::from_mpq(const mpq_class& q) {
    Scalar s;
    s.v_ = q;
    s.v_.canonicalize();
    s.reduce();
    return s;
}

void Scalar::reduce() {
    if (session_field().kind != FieldKind::Prime) return;
    const long p = session_field().p;
    mpz_class den = v_.get_den();
    mpz_class num = v_.get_num();
    if (den != 1) {
        // fold the denominator in via its inverse mod p
        mpz_class inv, pz(p);
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
            throw FieldError("denominator not invertible mod p");
        num *= inv;
    }
    mpz_class r = num % p;
    if (r < 0) r += p;
    v_ = mpq_class(r);
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.v_ = -v_;
    r.reduce();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r;
    r.v_ = v_ + o.v_;
    r.reduce();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r;
    r.v_ = v_ - o.v_;
    r.reduce();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    r.v_ = v_ * o.v_;
    r.reduce();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    Scalar r;
    if (session_field().kind == FieldKind::Prime) {
        mpz_class inv, pz(session_field().p);
        mpz_class num = v_.get_num();
        if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()) == 0)
            throw FieldError("element not invertible mod p");
        r.v_ = mpq_class(inv);
        r.reduce();
    } else {
        r.v_ = 1 / v_;
    }
    return r;
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace mirrorcalc::exactlin
