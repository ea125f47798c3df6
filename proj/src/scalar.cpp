#include "skewcfc/scalar.hpp"

#include "skewcfc/errors.hpp"

#include <cctype>
#include <optional>

namespace skewcfc {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

// Cursor over a literal; positions are reported relative to `base`.
struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t base = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base + pos); }

    std::string digits()
    {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

// [digits ['/' digits]] ['i'] ; at least one of the number or 'i' must be present.
// Returns {value, is_imaginary}.
std::optional<std::pair<Rational, bool>> unsigned_term(Cursor& c)
{
    std::size_t start = c.pos;
    std::string num = c.digits();
    Rational value(1);
    if (!num.empty()) {
        std::string den = "1";
        if (c.peek() == '/') {
            ++c.pos;
            den = c.digits();
            if (den.empty())
                c.fail("expected denominator digits");
        }
        mpz_class d(den);
        if (d == 0)
            c.fail("zero denominator");
        value = Rational(mpz_class(num), d);
        value.canonicalize();
    }
    bool imag = false;
    if (c.peek() == 'i') {
        ++c.pos;
        imag = true;
    }
    if (c.pos == start)
        return std::nullopt;
    if (num.empty() && !imag)
        return std::nullopt;
    return std::pair{value, imag};
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num))
        throw ParseError("malformed rational numerator '" + std::string(text) + "'", 0);
    if (!all_digits(den))
        throw ParseError("malformed rational denominator '" + std::string(text) + "'",
                         text.size() - body.size() + slash + 1);
    mpz_class d{std::string(den)};
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'", text.size() - body.size() + slash + 1);
    Rational r(mpz_class(std::string(num)), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string rational_to_fraction(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_to_short(const Rational& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return rational_to_fraction(r);
}

GaussianRational GaussianRational::fraction(long num, long den)
{
    if (den == 0)
        throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return {r};
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    Rational n = norm2();
    return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    if (o.is_zero())
        throw DivisionByZero();
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b)
{
    int c = cmp(a.re_, b.re_);
    if (c == 0)
        c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string GaussianRational::to_literal() const
{
    if (sgn(im_) == 0)
        return rational_to_short(re_);
    std::string im = rational_to_short(im_) + "i";
    if (sgn(re_) == 0)
        return im;
    return rational_to_short(re_) + (sgn(im_) > 0 ? "+" : "") + im;
}

GaussianRational parse_gaussian(std::string_view text)
{
    Cursor c{text};
    Rational re(0), im(0);
    bool seen_re = false, seen_im = false;
    bool first = true;
    while (!c.done()) {
        bool negative = false;
        if (c.peek() == '+' || c.peek() == '-') {
            negative = c.peek() == '-';
            ++c.pos;
        }
        else if (!first) {
            c.fail("expected '+' or '-'");
        }
        auto term = unsigned_term(c);
        if (!term)
            c.fail("expected a number or 'i'");
        Rational v = negative ? Rational(-term->first) : term->first;
        if (term->second) {
            if (seen_im)
                c.fail("duplicate imaginary part");
            im = v;
            seen_im = true;
        }
        else {
            if (seen_re || seen_im)
                c.fail("real part must come first and only once");
            re = v;
            seen_re = true;
        }
        first = false;
    }
    if (first)
        c.fail("empty number");
    return {re, im};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z)
{
    return os << z.to_literal();
}

} // namespace skewcfc
