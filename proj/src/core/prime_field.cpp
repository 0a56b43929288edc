#include "enr/core/prime_field.hpp"

namespace enr {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
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

Fp Fp::from_rational(std::uint64_t p, const Rational& r) {
    Integer m = mod_floor(r.den(), Integer(static_cast<unsigned long>(p)));
    if (m == 0) throw ArithmeticError("denominator " + r.den().get_str() + " not invertible mod " + std::to_string(p));
    Integer n = mod_floor(r.num(), Integer(static_cast<unsigned long>(p)));
    return Fp(p, static_cast<std::int64_t>(n.get_ui())) / Fp(p, static_cast<std::int64_t>(m.get_ui()));
}

Fp Fp::inv() const {
    if (v_ == 0) throw ArithmeticError("inverse of zero in F_" + std::to_string(p_));
    return pow(p_ - 2);
}

Fp Fp::pow(std::uint64_t e) const {
    Fp r(p_, static_cast<std::int64_t>(powmod(v_, e, p_)));
    return r;
}

bool Fp::is_square() const {
    if (v_ == 0 || p_ == 2) return true;
    return pow((p_ - 1) / 2).is_one();
}

}  // namespace enr
