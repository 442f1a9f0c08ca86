#ifndef ULAB_FIELD_HPP
#define ULAB_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ulab/errors.hpp"

namespace ulab {

// ---------------------------------------------------------------------------
// Field descriptors
// ---------------------------------------------------------------------------

enum class FieldKind { prime, rationals };

// Runtime description of the coefficient field: F_p (p prime, p < 2^16)
// or the rationals.
struct FieldSpec {
    FieldKind kind = FieldKind::prime;
    std::uint32_t p = 2;

    static FieldSpec prime(std::uint32_t p);
    static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }

    bool is_prime_field() const { return kind == FieldKind::prime; }
    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const;
    // Accepts "Q" or "Fp" with p decimal, e.g. "F2", "F101".
    static FieldSpec parse(const std::string& text);
};

bool is_prime_u32(std::uint32_t n);

// ---------------------------------------------------------------------------
// F_p elements
// ---------------------------------------------------------------------------

// Element of a prime field, canonical residue in [0, p).  Each element
// carries its modulus; operations on mismatched moduli throw.
class Fp {
public:
    Fp() = default; // unusable sentinel (p = 0); containers only
    Fp(std::int64_t v, std::uint32_t p) : p_(p) {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    // element of the same field with value n mod p
    Fp make(std::int64_t n) const { return Fp(n, p_); }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp operator+(const Fp& o) const {
        check(o);
        std::uint32_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return raw(static_cast<std::uint32_t>(
                       (std::uint64_t(v_) * o.v_) % p_),
                   p_);
    }
    Fp inverse() const {
        if (v_ == 0) throw PreconditionError("Fp: inverse of zero");
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0, p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const { check(o); return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(v_); }

private:
    static Fp raw(std::uint32_t v, std::uint32_t p) {
        Fp e; e.v_ = v; e.p_ = p; return e;
    }
    void check(const Fp& o) const {
        if (p_ != o.p_) throw PreconditionError("Fp: mixed-field operands");
    }
    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

// ---------------------------------------------------------------------------
// Rational elements
// ---------------------------------------------------------------------------

// Exact rational, always kept in lowest terms with positive denominator
// (cpp_rational canonicalizes on construction).
class Rat {
public:
    using rational = boost::multiprecision::cpp_rational;

    Rat() : v_(0) {}
    Rat(std::int64_t n) : v_(n) {}
    Rat(std::int64_t num, std::int64_t den) : v_(rational(num) / den) {
        if (den == 0) throw PreconditionError("Rat: zero denominator");
    }
    explicit Rat(rational v) : v_(std::move(v)) {}

    const rational& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rat make(std::int64_t n) const { return Rat(n); }

    Rat operator-() const { return Rat(rational(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(rational(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(rational(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(rational(v_ * o.v_)); }
    Rat inverse() const {
        if (is_zero()) throw PreconditionError("Rat: inverse of zero");
        return Rat(rational(1 / v_));
    }
    Rat operator/(const Rat& o) const { return *this * o.inverse(); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }

    std::string to_string() const { return v_.str(); }

private:
    rational v_;
};

// All p elements of F_p in canonical order 0, 1, ..., p-1.
// Rationals are rejected: coefficient enumeration needs a finite field.
std::vector<Fp> field_elements(const FieldSpec& spec);

} // namespace ulab

#endif
