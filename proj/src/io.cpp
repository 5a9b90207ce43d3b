#include "msym/io.hpp"

#include <cctype>
#include <sstream>

namespace msym {

namespace {

// ---- formatting -----------------------------------------------------------

std::string coeff_text(const Coeff& c, bool with_factor)
{
    const Coeff a = c.abs();
    std::string s = a.str();
    if (with_factor && s.find('/') != std::string::npos)
        s = "(" + s + ")";
    return s;
}

// Assemble a signed term list: parts are (coefficient, body) with the body
// possibly empty (constant term).
std::string join_terms(const std::vector<std::pair<Coeff, std::string>>& parts, TextStyle style)
{
    if (parts.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, body] : parts) {
        const bool neg = c.is_negative();
        if (first) {
            if (neg)
                out += "-";
        } else {
            if (style == TextStyle::pretty)
                out += neg ? " - " : " + ";
            else
                out += neg ? "-" : "+";
        }
        first = false;
        const bool unit_coeff = c.abs().is_one();
        if (body.empty()) {
            out += coeff_text(c, false);
        } else if (unit_coeff) {
            out += body;
        } else {
            out += coeff_text(c, true);
            out += "*";
            out += body;
        }
    }
    return out;
}

std::string monomial_body(const Monomial& mu)
{
    std::string out;
    for (std::size_t i = 0; i < mu.arity(); ++i) {
        const std::uint32_t e = mu.exponent(i);
        if (e == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "y" + std::to_string(i + 1);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::string slot_monomial_body(const SlotMonomial& mu)
{
    // Factors ascending by family, then slot: x1(1), x1(2), ..., x2(1), ...
    std::string out;
    for (std::size_t i = 1; i <= mu.families(); ++i) {
        for (std::size_t j = 1; j <= mu.slots(); ++j) {
            const std::uint32_t e = mu.exponent(i, j);
            if (e == 0)
                continue;
            if (!out.empty())
                out += "*";
            out += "x" + std::to_string(i) + "(" + std::to_string(j) + ")";
            if (e > 1)
                out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::string orbit_body(const OrbitIndex& alpha, TextStyle style)
{
    std::string out = "E{";
    bool first = true;
    for (const auto& [mu, mult] : alpha.entries()) {
        if (!first)
            out += style == TextStyle::pretty ? ", " : ",";
        first = false;
        out += monomial_body(mu);
        out += ":" + std::to_string(mult);
    }
    out += "}";
    return out;
}

std::string gen_monomial_body(const GenMonomial& mono, bool rational_form)
{
    std::string out;
    for (const auto& [s, e] : mono.factors()) {
        if (!out.empty())
            out += "*";
        if (rational_form)
            out += "e" + std::to_string(s.index) + "[" + monomial_body(s.mu) + "]";
        else
            out += "e[" + std::to_string(s.index) + ";" + monomial_body(s.mu) + "]";
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::string emonomial_body(const EMonomial& mu)
{
    std::string out;
    for (std::uint32_t i = 1; i <= mu.max_symbol(); ++i) {
        const std::uint32_t e = mu.exponent_of(i);
        if (e == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "e" + std::to_string(i);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

std::string format(const Monomial& mu, TextStyle)
{
    const std::string body = monomial_body(mu);
    return body.empty() ? "1" : body;
}

std::string format(const Polynomial& p, TextStyle style)
{
    std::vector<std::pair<Coeff, std::string>> parts;
    parts.reserve(p.terms().size());
    for (const auto& [mu, c] : p.terms())
        parts.emplace_back(c, monomial_body(mu));
    return join_terms(parts, style);
}

std::string format(const OrbitIndex& alpha, TextStyle style)
{
    return orbit_body(alpha, style);
}

std::string format(const MultiSymElement& x, TextStyle style)
{
    std::vector<std::pair<Coeff, std::string>> parts;
    parts.reserve(x.terms().size());
    for (const auto& [alpha, c] : x.terms())
        parts.emplace_back(c, orbit_body(alpha, style));
    return join_terms(parts, style);
}

std::string format(const ConcretePoly& p, TextStyle style)
{
    std::vector<std::pair<Coeff, std::string>> parts;
    parts.reserve(p.terms().size());
    for (const auto& [mu, c] : p.terms())
        parts.emplace_back(c, slot_monomial_body(mu));
    return join_terms(parts, style);
}

std::string format(const GeneratorPoly& g, TextStyle style)
{
    std::vector<std::pair<Coeff, std::string>> parts;
    parts.reserve(g.terms().size());
    for (const auto& [mono, c] : g.terms())
        parts.emplace_back(c, gen_monomial_body(mono, g.rational_form()));
    return join_terms(parts, style);
}

std::string format(const ElemPoly& p, TextStyle style)
{
    std::vector<std::pair<Coeff, std::string>> parts;
    parts.reserve(p.terms().size());
    for (const auto& [mu, c] : p.terms())
        parts.emplace_back(c, emonomial_body(mu));
    return join_terms(parts, style);
}

// ---- parsing ---------------------------------------------------------------

namespace {

class Scanner {
  public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip_ws();
        return pos_ >= text_.size();
    }
    // 1-based position for error messages.
    std::size_t here() const { return pos_ + 1; }
    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what)
    {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' (" + what + ")", here());
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, here()); }

    bool peek_digit()
    {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    // Unsigned decimal integer; errors if absent.
    mpz_class integer()
    {
        skip_ws();
        if (!peek_digit())
            fail("expected a number");
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return mpz_class(digits);
    }

    std::uint32_t small_integer(const char* what)
    {
        const mpz_class v = integer();
        if (!v.fits_uint_p())
            fail(std::string(what) + " is too large");
        return static_cast<std::uint32_t>(v.get_ui());
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

// var := "y" digits, 1-based, bounded by m.
std::size_t parse_variable(Scanner& sc, std::size_t m)
{
    const std::size_t at = sc.here();
    if (!sc.accept('y'))
        sc.fail("expected a variable");
    if (!sc.peek_digit())
        sc.fail("expected a variable index");
    const std::uint32_t idx = sc.small_integer("variable index");
    if (idx < 1 || idx > m)
        throw ParseError("variable index out of range: y" + std::to_string(idx) + " with m = " +
                             std::to_string(m),
                         at);
    return idx;
}

std::uint32_t parse_exponent(Scanner& sc)
{
    if (!sc.accept('^'))
        return 1;
    return sc.small_integer("exponent");
}

// monomial := var ("^" digits)? ("*" var ("^" digits)?)* | "1"
Monomial parse_monomial_body(Scanner& sc, std::size_t m)
{
    Multidegree e(m, 0);
    if (sc.peek() == '1') {
        sc.accept('1');
        return Monomial(std::move(e));
    }
    while (true) {
        const std::size_t idx = parse_variable(sc, m);
        e[idx - 1] += parse_exponent(sc);
        if (!sc.accept('*'))
            break;
    }
    return Monomial(std::move(e));
}

// coefficient := digits | digits "/" digits | "(" digits "/" digits ")"
Coeff parse_coefficient(Scanner& sc, const Ring& ring)
{
    const std::size_t at = sc.here();
    bool parens = false;
    if (sc.peek() == '(') {
        sc.accept('(');
        parens = true;
    }
    const mpz_class num = sc.integer();
    mpz_class den = 1;
    if (sc.accept('/'))
        den = sc.integer();
    if (parens)
        sc.expect(')', "closing the fraction");
    try {
        if (den == 1)
            return Coeff::from_integer(ring, num);
        return Coeff::from_fraction(ring, num, den);
    } catch (const Error& e) {
        throw ParseError(e.what(), at);
    }
}

// Generic signed-sum parser; `accumulate` consumes one term body (everything
// after the optional leading coefficient).
template <typename Acc>
void parse_sum(Scanner& sc, const Ring& ring, Acc&& accumulate)
{
    bool first = true;
    while (true) {
        sc.skip_ws();
        bool neg = false;
        if (sc.accept('-'))
            neg = true;
        else if (sc.accept('+')) {
            if (first)
                sc.fail("unexpected '+'");
        } else if (!first) {
            break;
        }
        if (first && sc.done())
            sc.fail("empty expression");
        Coeff c = Coeff::one(ring);
        bool have_coeff = false;
        if (sc.peek_digit() || sc.peek() == '(') {
            // A leading "1" could open a constant-monomial body instead;
            // the coefficient grammar and the "1" monomial coincide there.
            c = parse_coefficient(sc, ring);
            have_coeff = true;
        }
        if (neg)
            c = -c;
        bool have_body = false;
        if (have_coeff) {
            if (sc.accept('*'))
                have_body = true;
        } else {
            have_body = true;
        }
        accumulate(c, have_body, sc);
        first = false;
        if (sc.done())
            break;
        const char next = sc.peek();
        if (next != '+' && next != '-')
            sc.fail("unexpected character");
    }
}

}  // namespace

Monomial parse_monomial(const std::string& text, std::size_t m)
{
    Scanner sc(text);
    Monomial mu = parse_monomial_body(sc, m);
    if (!sc.done())
        sc.fail("unexpected character after monomial");
    return mu;
}

Polynomial parse_polynomial(const std::string& text, std::size_t m, const Ring& ring)
{
    Scanner sc(text);
    Polynomial p(ring, m);
    parse_sum(
        sc, ring,
        [&](const Coeff& c, bool have_body, Scanner& s) {
            if (have_body)
                p.add_term(parse_monomial_body(s, m), c);
            else
                p.add_term(Monomial(m), c);
        });
    if (!sc.done())
        sc.fail("unexpected character after polynomial");
    return p;
}

OrbitIndex parse_orbit_index(const std::string& text, std::size_t m)
{
    Scanner sc(text);
    if (!sc.accept('E'))
        sc.fail("expected 'E{'");
    sc.expect('{', "opening the orbit index");
    OrbitIndex alpha(m);
    if (!sc.accept('}')) {
        while (true) {
            const std::size_t at = sc.here();
            Monomial mu = parse_monomial_body(sc, m);
            sc.expect(':', "before the multiplicity");
            const std::uint32_t mult = sc.small_integer("multiplicity");
            if (mu.is_constant())
                throw ParseError("orbit index keys must have positive degree", at);
            if (mult == 0)
                throw ParseError("multiplicity must be positive", at);
            if (alpha.multiplicity(mu) != 0)
                throw ParseError("duplicate monomial in orbit index", at);
            alpha.add(mu, mult);
            if (sc.accept(','))
                continue;
            sc.expect('}', "closing the orbit index");
            break;
        }
    }
    if (!sc.done())
        sc.fail("unexpected character after orbit index");
    return alpha;
}

MultiSymElement parse_multisym(const std::string& text, std::size_t m, const Ring& ring)
{
    Scanner sc(text);
    MultiSymElement x(ring, m);
    parse_sum(
        sc, ring,
        [&](const Coeff& c, bool have_body, Scanner& s) {
            if (!have_body) {
                // Bare constant: only zero makes sense outside the unit index.
                if (!c.is_zero())
                    x.add_term(OrbitIndex(m), c);
                return;
            }
            if (!s.accept('E'))
                s.fail("expected 'E{'");
            s.expect('{', "opening the orbit index");
            OrbitIndex alpha(m);
            if (!s.accept('}')) {
                while (true) {
                    const std::size_t at = s.here();
                    Monomial mu = parse_monomial_body(s, m);
                    s.expect(':', "before the multiplicity");
                    const std::uint32_t mult = s.small_integer("multiplicity");
                    if (mu.is_constant())
                        throw ParseError("orbit index keys must have positive degree", at);
                    if (mult == 0)
                        throw ParseError("multiplicity must be positive", at);
                    if (alpha.multiplicity(mu) != 0)
                        throw ParseError("duplicate monomial in orbit index", at);
                    alpha.add(mu, mult);
                    if (s.accept(','))
                        continue;
                    s.expect('}', "closing the orbit index");
                    break;
                }
            }
            x.add_term(alpha, c);
        });
    if (!sc.done())
        sc.fail("unexpected character after expression");
    return x;
}

GeneratorPoly parse_generator_poly(const std::string& text, std::size_t m, const Ring& ring)
{
    Scanner sc(text);
    GeneratorPoly g(ring, m);
    bool saw_rational_spelling = false;
    parse_sum(
        sc, ring,
        [&](const Coeff& c, bool have_body, Scanner& s) {
            if (!have_body) {
                g.add_term(GenMonomial(m), c);
                return;
            }
            GenMonomial mono(m);
            while (true) {
                const std::size_t at = s.here();
                if (!s.accept('e'))
                    s.fail("expected a generator symbol");
                std::uint32_t index = 0;
                bool rational_spelling = false;
                if (s.peek_digit()) {
                    index = s.small_integer("generator index");
                    s.expect('[', "opening the generator");
                    rational_spelling = true;
                } else {
                    s.expect('[', "opening the generator");
                    index = s.small_integer("generator index");
                    s.expect(';', "between index and monomial");
                }
                Monomial mu = parse_monomial_body(s, m);
                s.expect(']', "closing the generator");
                if (index == 0)
                    throw ParseError("generator index must be positive", at);
                if (mu.is_constant())
                    throw ParseError("generator monomial must have positive degree", at);
                if (!rational_spelling && !mu.is_primitive())
                    throw ParseError("generator monomial must be primitive", at);
                saw_rational_spelling = saw_rational_spelling || rational_spelling;
                mono.mul_symbol(GenSymbol(index, mu), parse_exponent(s));
                if (!s.accept('*'))
                    break;
            }
            g.add_term(mono, c);
        });
    if (!sc.done())
        sc.fail("unexpected character after expression");
    g.set_rational_form(saw_rational_spelling);
    return g;
}

ElemPoly parse_elem_poly(const std::string& text, const Ring& ring)
{
    Scanner sc(text);
    ElemPoly p(ring);
    parse_sum(
        sc, ring,
        [&](const Coeff& c, bool have_body, Scanner& s) {
            if (!have_body) {
                p.add_term(EMonomial(), c);
                return;
            }
            EMonomial mono;
            while (true) {
                if (!s.accept('e'))
                    s.fail("expected a symbol e<i>");
                const std::uint32_t index = s.small_integer("symbol index");
                if (index == 0)
                    s.fail("symbol index must be positive");
                mono = mono * EMonomial::symbol(index, parse_exponent(s));
                if (!s.accept('*'))
                    break;
            }
            p.add_term(mono, c);
        });
    if (!sc.done())
        sc.fail("unexpected character after expression");
    return p;
}

ConcretePoly parse_concrete(const std::string& text, std::size_t n, std::size_t m,
                            const Ring& ring)
{
    Scanner sc(text);
    ConcretePoly p(ring, n, m);
    parse_sum(
        sc, ring,
        [&](const Coeff& c, bool have_body, Scanner& s) {
            if (!have_body) {
                p.add_term(SlotMonomial(n, m), c);
                return;
            }
            SlotMonomial mono(n, m);
            if (s.peek() == '1') {
                s.accept('1');
                p.add_term(mono, c);
                return;
            }
            while (true) {
                const std::size_t at = s.here();
                if (!s.accept('x'))
                    s.fail("expected a variable x<i>(<j>)");
                const std::uint32_t i = s.small_integer("family index");
                s.expect('(', "opening the slot");
                const std::uint32_t j = s.small_integer("slot index");
                s.expect(')', "closing the slot");
                if (i < 1 || i > m || j < 1 || j > n)
                    throw ParseError("variable x" + std::to_string(i) + "(" + std::to_string(j) +
                                         ") out of range for n=" + std::to_string(n) +
                                         ", m=" + std::to_string(m),
                                     at);
                mono.set_exponent(i, j, mono.exponent(i, j) + parse_exponent(s));
                if (!s.accept('*'))
                    break;
            }
            p.add_term(mono, c);
        });
    if (!sc.done())
        sc.fail("unexpected character after expression");
    return p;
}

std::pair<std::optional<Ring>, std::string> split_ring_prefix(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        return {std::nullopt, text};
    const std::string head = text.substr(0, colon);
    if (head == "q" || head == "z")
        return {Ring::parse(head), text.substr(colon + 1)};
    if (head.size() > 2 && head.rfind("fp", 0) == 0 &&
        head.find_first_not_of("0123456789", 2) == std::string::npos)
        return {Ring::prime_field(std::stoull(head.substr(2))), text.substr(colon + 1)};
    return {std::nullopt, text};
}

}  // namespace msym
