#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cthopf {

/// Thrown when operands of a scalar operation disagree on their field.
struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("scalar inverse of zero") {}
};

enum class FieldKind : std::uint8_t { Rational, Prime };

/// Field descriptor shared by every scalar of an algebra: Q or GF(p).
struct Field {
    FieldKind kind = FieldKind::Rational;
    std::uint64_t p = 0;  // modulus, Prime only

    static Field rational() { return Field{FieldKind::Rational, 0}; }
    static Field prime(std::uint64_t p);  // throws std::invalid_argument if p is not prime

    bool operator==(const Field&) const = default;
    std::string str() const;
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element. Rational payloads are kept canonical by GMP
/// (gcd(|num|,den)=1, den>0, zero = 0/1); prime residues live in [0,p-1].
/// Immutable in practice: all arithmetic returns fresh values.
class Scalar {
  public:
    Scalar() : f_(Field::rational()) {}  // rational zero; prefer Scalar::zero(field)

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(long v, const Field& f);
    static Scalar of_rational(mpq_class q);  // canonicalizes
    /// Parses "a" or "a/b" (rationals, canonicalized) or a residue digit
    /// string (prime fields, reduced mod p). Throws std::invalid_argument.
    static Scalar parse(const std::string& text, const Field& f);

    const Field& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws DivisionByZero on zero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "a" or "a/b" for rationals, the residue in decimal for prime fields.
    std::string str() const;

    const mpq_class& rational_value() const;  // Rational only
    std::uint64_t residue() const { return r_; }

  private:
    Scalar(Field f, mpq_class q) : f_(f), q_(std::move(q)) {}
    Scalar(Field f, std::uint64_t r) : f_(f), r_(r) {}
    void require_same_field(const Scalar& o) const;

    Field f_;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

}  // namespace cthopf
