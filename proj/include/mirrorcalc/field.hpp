#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mirrorcalc::exactlin {

enum class FieldKind { Rationals, Prime };

struct Field {
    FieldKind kind = FieldKind::Rationals;
    long p = 0;  // modulus when kind == Prime, 2 <= p < 2^31

    static Field rationals() { return Field{FieldKind::Rationals, 0}; }
    static Field prime(long p);
    bool operator==(const Field&) const = default;
};

// The ground field is fixed once per session (default: rationals). Every
// Scalar created afterwards lives in that field; mixing fields within one
// session is not representable and hence cannot occur.
const Field& session_field();
void set_session_field(const Field& f);

// Test helper: switches the session field for one scope.
class ScopedField {
public:
    explicit ScopedField(const Field& f) : saved_(session_field()) { set_session_field(f); }
    ~ScopedField() { set_session_field(saved_); }
    ScopedField(const ScopedField&) = delete;
    ScopedField& operator=(const ScopedField&) = delete;

private:
    Field saved_;
};

// Exact field element. Over the rationals this is an arbitrary-precision
// fraction; over F_p it is the canonical representative in [0, p).
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) { reduce(); }
    Scalar(long num, long den);
    static Scalar from_mpq(const mpq_class& q);

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }

    const mpq_class& value() const { return v_; }
    std::string str() const;

private:
    void reduce();
    mpq_class v_;
};

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mirrorcalc::exactlin
