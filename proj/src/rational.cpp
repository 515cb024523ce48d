#include "rrb/rational.hpp"

#include <climits>
#include <numeric>
#include <ostream>

#include "rrb/error.hpp"

namespace rrb {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = INT64_MAX;

u128 gcd128(u128 a, u128 b) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class mpz_from_u128(u128 v) {
    std::uint64_t words[2] = {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    return z;
}

mpz_class mpz_from_i128(i128 v) {
    mpz_class z = mpz_from_u128(abs128(v));
    if (v < 0) z = -z;
    return z;
}

bool fits_small(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != LONG_MIN;
}

}  // namespace

Rational::Rational(long long value) {
    if (value == LLONG_MIN) {
        assign_big(mpq_class(mpz_class(static_cast<long>(value))));
    } else {
        num_ = value;
    }
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    assign_big(std::move(q));
    normalize_big();
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    assign_big(std::move(c));
    normalize_big();
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::assign_big(mpq_class q) {
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

void Rational::normalize_big() {
    if (!big_) return;
    const mpz_class& n = big_->get_num();
    const mpz_class& d = big_->get_den();
    if (fits_small(n) && fits_small(d)) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
    }
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) -> mpz_class {
        std::size_t pos = 0;
        if (!part.empty() && (part[0] == '-' || part[0] == '+')) pos = 1;
        if (pos == part.size()) throw ParseError("malformed rational \"" + std::string(text) + "\"");
        for (std::size_t i = pos; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw ParseError("malformed rational \"" + std::string(text) + "\"");
            }
        }
        std::string digits(part.substr(part[0] == '+' ? 1 : 0));
        return mpz_class(digits, 10);
    };
    auto slash = text.find('/');
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        std::string_view d = text.substr(slash + 1);
        if (!d.empty() && (d[0] == '-' || d[0] == '+')) {
            throw ParseError("malformed rational \"" + std::string(text) + "\"");
        }
        den = parse_int(d);
        if (den == 0) throw ParseError("malformed rational \"" + std::string(text) + "\": zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

std::string Rational::str() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational Rational::operator-() const {
    Rational r(*this);
    if (r.big_) {
        *r.big_ = -*r.big_;
    } else {
        r.num_ = -r.num_;
    }
    return r;
}

namespace {

// Reduces n/d (d > 0) in place and reports whether it fits the inline form.
bool reduce_fits(i128& n, u128& d) {
    u128 g = gcd128(abs128(n), d);
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= g;
    }
    return abs128(n) <= static_cast<u128>(kMax) && d <= static_cast<u128>(kMax);
}

}  // namespace

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(num_, o.num_, &s) && s != INT64_MIN) {
                num_ = s;
                return *this;
            }
        }
        i128 n;
        u128 d;
        if (den_ == o.den_) {
            n = static_cast<i128>(num_) + o.num_;
            d = static_cast<u128>(den_);
        } else {
            n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
            d = static_cast<u128>(den_) * static_cast<u128>(o.den_);
        }
        if (reduce_fits(n, d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
        } else {
            assign_big(mpq_class(mpz_from_i128(n), mpz_from_u128(d)));
        }
        return *this;
    }
    mpq_class q = to_mpq() + o.to_mpq();
    assign_big(std::move(q));
    normalize_big();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t p;
            if (!__builtin_mul_overflow(num_, o.num_, &p) && p != INT64_MIN) {
                num_ = p;
                return *this;
            }
        }
        std::uint64_t g1 = std::gcd(static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_),
                                    static_cast<std::uint64_t>(o.den_));
        std::uint64_t g2 = std::gcd(static_cast<std::uint64_t>(o.num_ < 0 ? -o.num_ : o.num_),
                                    static_cast<std::uint64_t>(den_));
        i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) *
                 (o.num_ / static_cast<std::int64_t>(g2));
        u128 d = static_cast<u128>(den_ / static_cast<std::int64_t>(g2)) *
                 static_cast<u128>(o.den_ / static_cast<std::int64_t>(g1));
        if (abs128(n) <= static_cast<u128>(kMax) && d <= static_cast<u128>(kMax)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
        } else {
            assign_big(mpq_class(mpz_from_i128(n), mpz_from_u128(d)));
        }
        return *this;
    }
    mpq_class q = to_mpq() * o.to_mpq();
    assign_big(std::move(q));
    normalize_big();
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_) {
        Rational r;
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = num_ < 0 ? -num_ : num_;
        return r;
    }
    return Rational(mpq_class(1) / *big_);
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    // Canonical forms differ in representation only if values differ.
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace rrb
