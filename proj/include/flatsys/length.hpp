#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace flatsys {

// Exact value of the form sum_i c_i * sqrt(d_i) with d_i squarefree, distinct,
// ascending and c_i nonzero integers. Saddle-connection lengths and their sums
// live in this set; the sqrt(d) for distinct squarefree d are linearly
// independent over Q, so the representation is canonical.
//
// Ordering is exact: a fast long-double pass decides when the gap exceeds
// 1e-9, identical representations are equal, and remaining near-ties are
// resolved by integer interval refinement of the square roots (the escape
// hatch for adversarial inputs; throws NearTie if 128-bit precision runs out).
class Length {
public:
    struct Term {
        int64_t radicand;  // squarefree, >= 1
        int64_t coeff;     // nonzero
        bool operator==(const Term&) const = default;
    };

    Length() = default;  // zero
    static Length integer(int64_t v);
    // steps * sqrt(norm2); norm2 need not be squarefree.
    static Length radical(int64_t steps, int64_t norm2);

    bool is_zero() const { return terms_.empty(); }
    bool is_integer() const;
    int64_t integer_value() const;  // requires is_integer()
    bool is_single_term() const { return terms_.size() == 1; }

    const std::vector<Term>& terms() const { return terms_; }

    Length operator+(const Length& rhs) const;
    Length operator-(const Length& rhs) const;
    Length times(int64_t k) const;
    Length squared() const;

    double to_double() const;
    std::string to_string() const;  // "2", "3*sqrt(2)", "1+sqrt(2)"

    std::strong_ordering operator<=>(const Length& rhs) const;
    bool operator==(const Length& rhs) const { return terms_ == rhs.terms_; }

private:
    void add_term(int64_t radicand, int64_t coeff);
    int sign() const;  // exact sign of the represented value

    std::vector<Term> terms_;
};

// n = s^2 * f with f squarefree; returns {s, f}.
std::pair<int64_t, int64_t> square_part(int64_t n);

}  // namespace flatsys
