#include "flatsys/length.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "flatsys/errors.hpp"

namespace flatsys {

namespace {

using i128 = __int128;

// floor(sqrt(n)) for n >= 0.
i128 isqrt128(i128 n) {
    if (n < 0) return 0;
    i128 x = static_cast<i128>(std::sqrt(static_cast<double>(n)));
    while (x > 0 && x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

}  // namespace

std::pair<int64_t, int64_t> square_part(int64_t n) {
    int64_t s = 1, f = 1;
    for (int64_t p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2) f *= p;
    }
    f *= n;  // leftover prime
    return {s, f};
}

Length Length::integer(int64_t v) {
    Length out;
    out.add_term(1, v);
    return out;
}

Length Length::radical(int64_t steps, int64_t norm2) {
    auto [s, f] = square_part(norm2);
    Length out;
    out.add_term(f, steps * s);
    return out;
}

void Length::add_term(int64_t radicand, int64_t coeff) {
    if (coeff == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                               [](const Term& t, int64_t r) { return t.radicand < r; });
    if (it != terms_.end() && it->radicand == radicand) {
        it->coeff += coeff;
        if (it->coeff == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{radicand, coeff});
    }
}

bool Length::is_integer() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand == 1);
}

int64_t Length::integer_value() const { return terms_.empty() ? 0 : terms_[0].coeff; }

Length Length::operator+(const Length& rhs) const {
    Length out = *this;
    for (const auto& t : rhs.terms_) out.add_term(t.radicand, t.coeff);
    return out;
}

Length Length::operator-(const Length& rhs) const {
    Length out = *this;
    for (const auto& t : rhs.terms_) out.add_term(t.radicand, -t.coeff);
    return out;
}

Length Length::times(int64_t k) const {
    Length out;
    if (k == 0) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff *= k;
    return out;
}

Length Length::squared() const {
    Length out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        out.add_term(1, terms_[i].coeff * terms_[i].coeff * terms_[i].radicand);
        for (size_t j = i + 1; j < terms_.size(); ++j) {
            auto [s, f] = square_part(terms_[i].radicand * terms_[j].radicand);
            out.add_term(f, 2 * terms_[i].coeff * terms_[j].coeff * s);
        }
    }
    return out;
}

double Length::to_double() const {
    long double v = 0.0L;
    for (const auto& t : terms_)
        v += static_cast<long double>(t.coeff) * sqrtl(static_cast<long double>(t.radicand));
    return static_cast<double>(v);
}

std::string Length::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        int64_t c = terms_[i].coeff;
        if (i == 0) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        int64_t ac = c < 0 ? -c : c;
        if (terms_[i].radicand == 1) {
            out += std::to_string(ac);
        } else {
            if (ac != 1) out += std::to_string(ac) + "*";
            out += "sqrt(" + std::to_string(terms_[i].radicand) + ")";
        }
    }
    return out;
}

int Length::sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return terms_[0].coeff > 0 ? 1 : -1;
    long double v = 0.0L;
    long double scale = 0.0L;
    for (const auto& t : terms_) {
        long double x =
            static_cast<long double>(t.coeff) * sqrtl(static_cast<long double>(t.radicand));
        v += x;
        scale += fabsl(x);
    }
    if (fabsl(v) > 1e-9L * std::max(scale, 1.0L)) return v > 0 ? 1 : -1;
    // Interval refinement: bracket each sqrt(d) by r/2^k <= sqrt(d) < (r+1)/2^k.
    for (int k = 20; k <= 56; k += 12) {
        i128 lo = 0, hi = 0;
        i128 pow = i128{1} << k;
        for (const auto& t : terms_) {
            i128 r = isqrt128(i128{t.radicand} * pow * pow);
            if (t.coeff > 0) {
                lo += i128{t.coeff} * r;
                hi += i128{t.coeff} * (r + 1);
            } else {
                lo += i128{t.coeff} * (r + 1);
                hi += i128{t.coeff} * r;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw NearTie("length comparison unresolved at 128-bit interval precision: " + to_string());
}

std::strong_ordering Length::operator<=>(const Length& rhs) const {
    if (terms_ == rhs.terms_) return std::strong_ordering::equal;
    int s = (*this - rhs).sign();
    // Distinct canonical representations have distinct values.
    if (s == 0) throw NearTie("distinct representations compared equal");
    return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace flatsys
