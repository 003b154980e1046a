#include "kneserq/error.hpp"
#include "kneserq/rational.hpp"

#include <cctype>

namespace kq {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::NotWellSpread: return "NotWellSpread";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::NotCycleEdge: return "NotCycleEdge";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string to_fraction_string(const BigRational &r)
{
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        i = 1;
    if (i == text.size())
        fail(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            fail(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    return BigInt(std::string(text));
}

} // namespace

BigRational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return BigRational(parse_integer(text, text));
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        fail(ErrorKind::ParseError, "denominator must be unsigned in '" + std::string(text) + "'");
    const BigInt den = parse_integer(den_text, text);
    if (den == 0)
        fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return BigRational(num, den);
}

BigInt ceil_of(const BigRational &r)
{
    const BigInt num = numerator_of(r);
    const BigInt den = denominator_of(r);
    BigInt q = num / den; // truncates toward zero
    if (q * den != num && num > 0)
        ++q;
    return q;
}

} // namespace kq
