#include "cthopf/scalar.hpp"

namespace cthopf {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// inverse of a mod p, p prime, a != 0
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid over signed 128-bit intermediates
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit with the standard witness set
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("GF(p) modulus " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t(1) << 63)) throw std::invalid_argument("GF(p) modulus too large");
    return Field{FieldKind::Prime, p};
}

std::string Field::str() const {
    return kind == FieldKind::Rational ? std::string("Q") : "GF(" + std::to_string(p) + ")";
}

Scalar Scalar::zero(const Field& f) {
    if (f.kind == FieldKind::Rational) return Scalar(f, mpq_class(0));
    return Scalar(f, std::uint64_t(0));
}

Scalar Scalar::one(const Field& f) {
    if (f.kind == FieldKind::Rational) return Scalar(f, mpq_class(1));
    return Scalar(f, std::uint64_t(1 % f.p));
}

Scalar Scalar::of_int(long v, const Field& f) {
    if (f.kind == FieldKind::Rational) return Scalar(f, mpq_class(v));
    long long r = static_cast<long long>(v) % static_cast<long long>(f.p);
    if (r < 0) r += f.p;
    return Scalar(f, static_cast<std::uint64_t>(r));
}

Scalar Scalar::of_rational(mpq_class q) {
    q.canonicalize();
    return Scalar(Field::rational(), std::move(q));
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
    if (text.empty()) throw std::invalid_argument("empty scalar literal");
    if (f.kind == FieldKind::Rational) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal '" + text + "'");
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        q.canonicalize();
        return Scalar(f, std::move(q));
    }
    mpz_class z;
    if (z.set_str(text, 10) != 0) throw std::invalid_argument("bad residue literal '" + text + "'");
    mpz_class m = z % mpz_class(static_cast<unsigned long>(f.p));
    if (m < 0) m += mpz_class(static_cast<unsigned long>(f.p));
    return Scalar(f, static_cast<std::uint64_t>(m.get_ui()));
}

bool Scalar::is_zero() const {
    if (f_.kind == FieldKind::Rational) return mpq_sgn(q_.get_mpq_t()) == 0;
    return r_ == 0;
}

bool Scalar::is_one() const {
    if (f_.kind == FieldKind::Rational) return q_ == 1;
    return r_ == 1 % f_.p;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (!(f_ == o.f_)) throw FieldMismatch("scalar fields differ: " + f_.str() + " vs " + o.f_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    if (f_.kind == FieldKind::Rational) return Scalar(f_, mpq_class(q_ + o.q_));
    std::uint64_t s = r_ + o.r_;  // p < 2^63 guaranteed by mulmod use elsewhere; sum cannot wrap for p < 2^63
    if (s >= f_.p) s -= f_.p;
    return Scalar(f_, s);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    if (f_.kind == FieldKind::Rational) return Scalar(f_, mpq_class(q_ - o.q_));
    std::uint64_t s = r_ >= o.r_ ? r_ - o.r_ : r_ + f_.p - o.r_;
    return Scalar(f_, s);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (f_.kind == FieldKind::Rational) return Scalar(f_, mpq_class(q_ * o.q_));
    return Scalar(f_, mulmod(r_, o.r_, f_.p));
}

Scalar Scalar::operator-() const {
    if (f_.kind == FieldKind::Rational) return Scalar(f_, mpq_class(-q_));
    return Scalar(f_, r_ == 0 ? 0 : f_.p - r_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (f_.kind == FieldKind::Rational) return Scalar(f_, mpq_class(1 / q_));
    return Scalar(f_, invmod(r_, f_.p));
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(f_ == o.f_)) return false;
    if (f_.kind == FieldKind::Rational) return q_ == o.q_;
    return r_ == o.r_;
}

std::string Scalar::str() const {
    if (f_.kind == FieldKind::Rational) return q_.get_str();
    return std::to_string(r_);
}

const mpq_class& Scalar::rational_value() const {
    if (f_.kind != FieldKind::Rational) throw FieldMismatch("rational_value on prime-field scalar");
    return q_;
}

}  // namespace cthopf
