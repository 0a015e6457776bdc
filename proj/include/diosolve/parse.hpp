#ifndef DIOSOLVE_PARSE_HPP
#define DIOSOLVE_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "diosolve/equation.hpp"

namespace diosolve {

struct ParseError {
    enum class Kind {
        Syntax,
        DuplicateVariable,
        NonContiguousIndex,
        NonPositiveLiteral,
        Unsupported,
    };

    Kind kind = Kind::Syntax;
    std::size_t position = 0; // character offset into the input
    std::string message;

    friend bool operator==(const ParseError&, const ParseError&) = default;
};

inline std::string_view to_string(ParseError::Kind k) {
    switch (k) {
        case ParseError::Kind::Syntax: return "syntax";
        case ParseError::Kind::DuplicateVariable: return "duplicate variable";
        case ParseError::Kind::NonContiguousIndex: return "non-contiguous index";
        case ParseError::Kind::NonPositiveLiteral: return "non-positive literal";
        case ParseError::Kind::Unsupported: return "unsupported";
    }
    return "?";
}

using ParseResult = std::variant<DiophantineEquation, ParseError>;

namespace detail {

// Hand-written scanner/parser for:  term ('+' term)* '=' integer
// with term := 'x' index ('^' power)? and whitespace ignored everywhere.
class EquationParser {
public:
    explicit EquationParser(std::string_view text) : text_(text) {}

    ParseResult run() {
        terms_.clear();
        skip_ws();
        if (auto e = parse_term()) return *e;
        for (;;) {
            skip_ws();
            if (at_end()) return fail(ParseError::Kind::Syntax, pos_, "expected '+' or '=' before end of input");
            const char c = peek();
            if (c == '+') {
                ++pos_;
                skip_ws();
                if (auto e = parse_term()) return *e;
                continue;
            }
            if (c == '=') {
                ++pos_;
                break;
            }
            if (c == '-') return fail(ParseError::Kind::Unsupported, pos_, "subtraction is not supported");
            if (c == 'x' || c == 'X')
                return fail(ParseError::Kind::Unsupported, pos_, "terms must be joined with '+'");
            if (c == '*')
                return fail(ParseError::Kind::Unsupported, pos_, "coefficients and cross terms are not supported");
            return fail(ParseError::Kind::Syntax, pos_, "expected '+' or '='");
        }
        skip_ws();
        const std::size_t target_pos = pos_;
        std::int64_t target = 0;
        if (auto e = parse_integer(target, "target")) return *e;
        if (target < 1)
            return fail(ParseError::Kind::NonPositiveLiteral, target_pos, "target must be >= 1");
        skip_ws();
        if (!at_end()) return fail(ParseError::Kind::Syntax, pos_, "unexpected trailing input");

        return assemble(target);
    }

private:
    struct Term {
        std::int64_t index;
        std::int64_t power;
        std::size_t pos; // offset of the 'x'
    };

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    ParseError fail(ParseError::Kind kind, std::size_t pos, std::string msg) const {
        const std::size_t last = text_.empty() ? 0 : text_.size() - 1;
        return ParseError{kind, pos > last ? last : pos, std::move(msg)};
    }

    std::optional<ParseError> parse_integer(std::int64_t& out, const char* what) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            return fail(ParseError::Kind::Syntax, pos_, std::string("expected integer ") + what);
        std::int64_t value = 0;
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const int digit = peek() - '0';
            if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10)
                return fail(ParseError::Kind::Syntax, start, std::string(what) + " literal is too large");
            value = value * 10 + digit;
            ++pos_;
        }
        out = value;
        return std::nullopt;
    }

    std::optional<ParseError> parse_term() {
        if (at_end()) return fail(ParseError::Kind::Syntax, pos_, "expected variable term");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return fail(ParseError::Kind::Unsupported, pos_, "numeric coefficients and constant terms are not supported");
        if (c == '-') return fail(ParseError::Kind::Unsupported, pos_, "subtraction is not supported");
        if (c != 'x' && c != 'X')
            return fail(ParseError::Kind::Syntax, pos_, "expected variable term like x1 or x2^3");
        const std::size_t term_pos = pos_;
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            return fail(ParseError::Kind::Syntax, pos_, "expected variable index after 'x'");
        std::int64_t index = 0;
        if (auto e = parse_integer(index, "variable index")) return *e;
        if (index < 1)
            return fail(ParseError::Kind::NonContiguousIndex, term_pos, "variable indices start at 1");

        std::int64_t power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t power_pos = pos_;
            if (auto e = parse_integer(power, "power")) return *e;
            if (power < 1)
                return fail(ParseError::Kind::NonPositiveLiteral, power_pos, "powers must be >= 1");
        }
        for (const auto& t : terms_) {
            if (t.index == index)
                return fail(ParseError::Kind::DuplicateVariable, term_pos,
                            "variable x" + std::to_string(index) + " appears twice");
        }
        terms_.push_back(Term{index, power, term_pos});
        return std::nullopt;
    }

    ParseResult assemble(std::int64_t target) const {
        const std::int64_t n = static_cast<std::int64_t>(terms_.size());
        std::vector<std::int64_t> powers(terms_.size(), 0);
        for (const auto& t : terms_) {
            if (t.index > n) {
                return ParseError{ParseError::Kind::NonContiguousIndex, t.pos,
                                  "variable indices must cover 1.." + std::to_string(n) +
                                      " but x" + std::to_string(t.index) + " was given"};
            }
            powers[static_cast<std::size_t>(t.index - 1)] = t.power;
        }
        return DiophantineEquation{std::move(powers), target};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<Term> terms_;
};

} // namespace detail

/// Parses "x1^2 + x2^2 = 149" style notation. Indices may appear in any
/// order but must cover 1..n exactly once each; a missing '^power' means
/// power 1. On failure returns a ParseError locating the offending character.
inline ParseResult parse_equation(std::string_view text) {
    return detail::EquationParser(text).run();
}

/// Canonical form, inverse of parse_equation on all valid equations.
inline std::string format_equation(const DiophantineEquation& eq) {
    require_valid(eq);
    std::ostringstream os;
    for (std::size_t i = 0; i < eq.powers.size(); ++i) {
        if (i) os << " + ";
        os << 'x' << (i + 1) << '^' << eq.powers[i];
    }
    os << " = " << eq.target;
    return os.str();
}

} // namespace diosolve

#endif // DIOSOLVE_PARSE_HPP
