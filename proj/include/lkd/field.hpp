#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lkd {

/// The base field: either the rationals or a prime field F_p with a word-size p.
struct FieldSpec {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return {}; }
    /// Throws std::invalid_argument unless p is prime and below 2^63.
    static FieldSpec prime(std::uint64_t p);

    bool is_prime() const { return kind == Kind::prime; }
    /// "Q" or "F<p>".
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime_number(std::uint64_t n);

/// A field element in canonical form. Over F_p the value is an integer in [0, p).
/// Scalars do not carry their field; they are always interpreted through a FieldSpec.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Reduce an arbitrary rational into the canonical representative of `field`.
    /// Throws std::domain_error if the denominator vanishes mod p.
    static Scalar in_field(const FieldSpec& field, const mpq_class& v);
    /// Accepts "n", "-n" and "a/b".
    static Scalar parse(const FieldSpec& field, std::string_view text);

    const mpq_class& value() const { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }
    /// "a/b" for non-integral rationals, decimal integer otherwise.
    std::string str() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

private:
    mpq_class value_{0};
};

}  // namespace lkd
