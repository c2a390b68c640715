#pragma once

// Fermat reals with rational data: little-oh polynomials r + Σ c_i t^(a_i)
// taken modulo o(t) as t -> 0+.
//
// Text form: `r + c*t^(p/q) + ...`. Coefficients are integers or fractions
// p/q, optionally followed by `*`; the exponent may be an integer or a
// parenthesized fraction; `t` alone means exponent 1.

#include <nestlab/error.hpp>
#include <nestlab/relation.hpp>

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nestlab {

using Rational = mpq_class;

struct FermatTerm
{
    Rational exponent;
    Rational coefficient;

    friend bool operator==(const FermatTerm&, const FermatTerm&) = default;
};

/// Uncanonicalized representative: any list of terms, exponent 0 meaning a constant.
struct RawLittleOh
{
    std::vector<FermatTerm> terms;
};

/// Canonical form: standard part plus terms with distinct exponents in (0, 1],
/// ascending, all coefficients nonzero. Default-constructs to zero.
class FermatReal
{
public:
    FermatReal() = default;
    explicit FermatReal(Rational standard_part) : standard_(std::move(standard_part)) {}

    [[nodiscard]] const Rational& standard_part() const noexcept { return standard_; }
    [[nodiscard]] const std::vector<FermatTerm>& terms() const noexcept { return terms_; }

    friend bool operator==(const FermatReal&, const FermatReal&) = default;

private:
    friend FermatReal canonicalize(const RawLittleOh& raw);

    Rational standard_;
    std::vector<FermatTerm> terms_;
};

/// Merges equal exponents, drops zero coefficients and every exponent > 1.
/// Throws InputError on a negative exponent.
FermatReal canonicalize(const RawLittleOh& raw);
RawLittleOh representative(const FermatReal& x);
FermatReal monomial(const Rational& coefficient, const Rational& exponent);

[[nodiscard]] bool is_zero(const FermatReal& x);
FermatReal add(const FermatReal& x, const FermatReal& y);
FermatReal negate(const FermatReal& x);
FermatReal subtract(const FermatReal& x, const FermatReal& y);
/// Product of representatives, then canonicalized.
FermatReal mul(const FermatReal& x, const FermatReal& y);
/// Term-by-term product, exponents added, nothing dropped.
RawLittleOh mul_raw(const RawLittleOh& x, const RawLittleOh& y);

enum class Comparison { less, equal, greater };

std::string_view to_string(Comparison c);

/// Sign of the lowest-exponent coefficient of x - y (the standard part counts as exponent 0).
Comparison compare(const FermatReal& x, const FermatReal& y);
/// compare(x, y) == less. Throws InputError when x == y.
bool lt_f(const FermatReal& x, const FermatReal& y);
[[nodiscard]] bool in_monad(const FermatReal& x, const Rational& r);

/// Least common multiple of the exponent denominators (1 when there are none).
unsigned long exponent_lcm(const FermatReal& x);
unsigned long exponent_lcm(std::span<const FermatReal> xs);

/// Exact value of the canonical representative at t = s^d. Throws InputError
/// unless d is a positive multiple of exponent_lcm(x) and 0 < s < 1.
Rational sample_at_root(const FermatReal& x, const Rational& s, unsigned long d);
/// Exact value at t, which must be s^D for rational s in (0, 1) with
/// D = exponent_lcm(x); otherwise InputError naming D.
Rational sample_at(const FermatReal& x, const Rational& t);

/// Strict linear order on sample indices given by lt_f. Throws InputError
/// naming the first pair of equal points.
Relation sample_order(std::span<const FermatReal> points);

/// Throws InputError with the column of the first offending character.
FermatReal parse_fermat(std::string_view text);
/// Canonical text; parse_fermat(to_string(x)) == x.
std::string to_string(const FermatReal& x);

} // namespace nestlab
