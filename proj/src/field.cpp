#include "lkd/field.hpp"

#include <stdexcept>

namespace lkd {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // Deterministic witness set for all 64-bit n.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (1ULL << 63U) || !is_prime_number(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not a supported prime");
    }
    FieldSpec f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

std::string FieldSpec::name() const {
    return kind == Kind::rationals ? std::string("Q") : "F" + std::to_string(p);
}

Scalar Scalar::in_field(const FieldSpec& field, const mpq_class& v) {
    if (!field.is_prime()) return Scalar(v);
    mpz_class p(std::to_string(field.p));
    mpz_class num = v.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = v.get_den() % p;
    if (den == 0) throw std::domain_error("denominator vanishes in " + field.name());
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = num * inv % p;
    return Scalar(mpq_class(r));
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    mpq_class q;
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            q = mpq_class(mpz_class(s, 10));
        } else {
            mpz_class num(s.substr(0, slash), 10);
            mpz_class den(s.substr(slash + 1), 10);
            if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
            q = mpq_class(num, den);
            q.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed scalar '" + s + "'");
    }
    return in_field(field, q);
}

std::string Scalar::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_str();
}

}  // namespace lkd
