#include <nestlab/fermat.hpp>

#include <algorithm>
#include <cctype>
#include <map>

namespace nestlab {

namespace {

struct RationalLess
{
    bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

Rational power(const Rational& base, unsigned long exponent)
{
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    Rational out(num, den);
    out.canonicalize();
    return out;
}

} // namespace

FermatReal canonicalize(const RawLittleOh& raw)
{
    std::map<Rational, Rational, RationalLess> merged;
    for (const auto& term : raw.terms) {
        if (sgn(term.exponent) < 0) {
            throw InputError("negative exponent " + term.exponent.get_str());
        }
        if (term.exponent > 1) {
            continue;
        }
        merged[term.exponent] += term.coefficient;
    }
    FermatReal out;
    for (auto& [exponent, coefficient] : merged) {
        if (sgn(coefficient) == 0) {
            continue;
        }
        if (sgn(exponent) == 0) {
            out.standard_ = coefficient;
        } else {
            out.terms_.push_back(FermatTerm{exponent, coefficient});
        }
    }
    return out;
}

RawLittleOh representative(const FermatReal& x)
{
    RawLittleOh raw;
    if (sgn(x.standard_part()) != 0) {
        raw.terms.push_back(FermatTerm{0, x.standard_part()});
    }
    raw.terms.insert(raw.terms.end(), x.terms().begin(), x.terms().end());
    return raw;
}

FermatReal monomial(const Rational& coefficient, const Rational& exponent)
{
    return canonicalize(RawLittleOh{{FermatTerm{exponent, coefficient}}});
}

bool is_zero(const FermatReal& x)
{
    return sgn(x.standard_part()) == 0 && x.terms().empty();
}

FermatReal add(const FermatReal& x, const FermatReal& y)
{
    RawLittleOh raw = representative(x);
    const RawLittleOh other = representative(y);
    raw.terms.insert(raw.terms.end(), other.terms.begin(), other.terms.end());
    return canonicalize(raw);
}

FermatReal negate(const FermatReal& x)
{
    RawLittleOh raw = representative(x);
    for (auto& term : raw.terms) {
        term.coefficient = -term.coefficient;
    }
    return canonicalize(raw);
}

FermatReal subtract(const FermatReal& x, const FermatReal& y)
{
    return add(x, negate(y));
}

RawLittleOh mul_raw(const RawLittleOh& x, const RawLittleOh& y)
{
    RawLittleOh out;
    for (const auto& a : x.terms) {
        for (const auto& b : y.terms) {
            out.terms.push_back(FermatTerm{a.exponent + b.exponent, a.coefficient * b.coefficient});
        }
    }
    return out;
}

FermatReal mul(const FermatReal& x, const FermatReal& y)
{
    return canonicalize(mul_raw(representative(x), representative(y)));
}

std::string_view to_string(Comparison c)
{
    switch (c) {
    case Comparison::less: return "less";
    case Comparison::equal: return "equal";
    case Comparison::greater: return "greater";
    }
    return "equal";
}

Comparison compare(const FermatReal& x, const FermatReal& y)
{
    const FermatReal d = subtract(x, y);
    if (is_zero(d)) {
        return Comparison::equal;
    }
    const Rational& leading =
        sgn(d.standard_part()) != 0 ? d.standard_part() : d.terms().front().coefficient;
    return sgn(leading) < 0 ? Comparison::less : Comparison::greater;
}

bool lt_f(const FermatReal& x, const FermatReal& y)
{
    const Comparison c = compare(x, y);
    if (c == Comparison::equal) {
        throw InputError("lt_f is defined on distinct Fermat reals, got " + to_string(x) + " twice");
    }
    return c == Comparison::less;
}

bool in_monad(const FermatReal& x, const Rational& r)
{
    return x.standard_part() == r;
}

unsigned long exponent_lcm(const FermatReal& x)
{
    return exponent_lcm(std::span<const FermatReal>(&x, 1));
}

unsigned long exponent_lcm(std::span<const FermatReal> xs)
{
    mpz_class acc = 1;
    for (const auto& x : xs) {
        for (const auto& term : x.terms()) {
            mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), term.exponent.get_den_mpz_t());
        }
    }
    if (!acc.fits_ulong_p()) {
        throw InputError("exponent denominators have a common multiple that is too large");
    }
    return acc.get_ui();
}

Rational sample_at_root(const FermatReal& x, const Rational& s, unsigned long d)
{
    const unsigned long lcm = exponent_lcm(x);
    if (d == 0 || d % lcm != 0) {
        throw InputError("sampling root power " + std::to_string(d) + " is not a multiple of "
                         + std::to_string(lcm));
    }
    if (sgn(s) <= 0 || s >= 1) {
        throw InputError("sampling root " + s.get_str() + " is outside (0, 1)");
    }
    Rational value = x.standard_part();
    for (const auto& term : x.terms()) {
        const mpz_class scaled = term.exponent.get_num() * static_cast<unsigned long>(d)
                                 / term.exponent.get_den();
        value += term.coefficient * power(s, scaled.get_ui());
    }
    return value;
}

Rational sample_at(const FermatReal& x, const Rational& t)
{
    const unsigned long d = exponent_lcm(x);
    if (sgn(t) <= 0 || t >= 1) {
        throw InputError("sample point " + t.get_str() + " is outside (0, 1)");
    }
    mpz_class num;
    mpz_class den;
    const bool exact_num = mpz_root(num.get_mpz_t(), t.get_num_mpz_t(), d) != 0;
    const bool exact_den = mpz_root(den.get_mpz_t(), t.get_den_mpz_t(), d) != 0;
    if (!exact_num || !exact_den) {
        throw InputError("sample point " + t.get_str() + " is not s^D for a rational s, D = "
                         + std::to_string(d));
    }
    Rational s(num, den);
    s.canonicalize();
    return sample_at_root(x, s, d);
}

Relation sample_order(std::span<const FermatReal> points)
{
    if (points.empty()) {
        throw InputError("a sample needs at least one point");
    }
    Relation order(FiniteSpace(points.size()));
    for (std::size_t a = 0; a < points.size(); ++a) {
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            switch (compare(points[a], points[b])) {
            case Comparison::less: order.set(a, b); break;
            case Comparison::greater: order.set(b, a); break;
            case Comparison::equal:
                throw InputError("sample points " + std::to_string(a) + " and " + std::to_string(b)
                                 + " are equal (" + to_string(points[a]) + ")");
            }
        }
    }
    return order;
}

namespace {

class Parser
{
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FermatReal parse()
    {
        RawLittleOh raw;
        skip_space();
        bool negative = accept('-');
        if (!negative) {
            accept('+');
        }
        while (true) {
            FermatTerm term = parse_term();
            if (negative) {
                term.coefficient = -term.coefficient;
            }
            raw.terms.push_back(std::move(term));
            skip_space();
            if (at_end()) {
                break;
            }
            if (accept('+')) {
                negative = false;
            } else if (accept('-')) {
                negative = true;
            } else {
                fail("expected '+' or '-'");
            }
        }
        return canonicalize(raw);
    }

private:
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    [[noreturn]] void fail(const std::string& message) const
    {
        throw InputError("fermat expression '" + std::string(text_) + "', column "
                         + std::to_string(pos_ + 1) + ": " + message);
    }

    mpz_class integer()
    {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a number");
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Rational fraction(bool allow_sign)
    {
        bool negative = false;
        if (allow_sign) {
            negative = accept('-');
        }
        const mpz_class num = integer();
        mpz_class den = 1;
        if (accept('/')) {
            den = integer();
            if (den == 0) {
                fail("zero denominator");
            }
        }
        Rational q(num, den);
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }

    Rational exponent()
    {
        if (accept('(')) {
            Rational e = fraction(true);
            expect(')');
            return e;
        }
        return Rational(integer());
    }

    FermatTerm parse_term()
    {
        skip_space();
        Rational coefficient = 1;
        bool has_coefficient = false;
        if (accept('(')) {
            coefficient = fraction(true);
            expect(')');
            has_coefficient = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            coefficient = fraction(false);
            has_coefficient = true;
        }
        const bool star = has_coefficient && accept('*');
        skip_space();
        if (peek() != 't') {
            if (!has_coefficient || star) {
                fail("expected 't'");
            }
            return FermatTerm{0, coefficient};
        }
        ++pos_;
        Rational e = 1;
        if (accept('^')) {
            e = exponent();
        }
        return FermatTerm{e, coefficient};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string term_text(const FermatTerm& term, bool first)
{
    std::string s;
    const bool negative = sgn(term.coefficient) < 0;
    if (first) {
        s += negative ? "-" : "";
    } else {
        s += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(term.coefficient);
    if (magnitude != 1) {
        s += magnitude.get_str() + "*";
    }
    s += "t";
    if (term.exponent != 1) {
        s += "^(" + term.exponent.get_str() + ")";
    }
    return s;
}

} // namespace

FermatReal parse_fermat(std::string_view text)
{
    return Parser(text).parse();
}

std::string to_string(const FermatReal& x)
{
    std::string s;
    const bool has_standard = sgn(x.standard_part()) != 0;
    if (has_standard || x.terms().empty()) {
        s = x.standard_part().get_str();
    }
    bool first = !has_standard;
    for (const auto& term : x.terms()) {
        s += term_text(term, first);
        first = false;
    }
    return s;
}

} // namespace nestlab
