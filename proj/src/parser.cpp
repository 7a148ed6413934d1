#include "kolchin/parser.hpp"

#include <cctype>
#include <optional>

namespace kolchin {

namespace {

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& input) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < input.size()) {
        char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            out.push_back({TokKind::Number, input.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_')) {
                ++i;
            }
            out.push_back({TokKind::Ident, input.substr(start, i - start), start});
            continue;
        }
        TokKind kind;
        switch (c) {
            case '+': kind = TokKind::Plus; break;
            case '-': kind = TokKind::Minus; break;
            case '*': kind = TokKind::Star; break;
            case '/': kind = TokKind::Slash; break;
            case '^': kind = TokKind::Caret; break;
            case '(': kind = TokKind::LParen; break;
            case ')': kind = TokKind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({TokKind::End, "", input.size()});
    return out;
}

// Recognizes x<digit> and d<digit> forms; everything else is an alias.
std::optional<std::pair<char, int>> builtin_ident(const std::string& name) {
    if (name.size() == 2 && (name[0] == 'x' || name[0] == 'd') &&
        name[1] >= '1' && name[1] <= '9') {
        return std::make_pair(name[0], name[1] - '0');
    }
    return std::nullopt;
}

class OperatorParser {
public:
    OperatorParser(const std::string& text, int m, const Definitions& defs)
        : tokens_(tokenize(text)), m_(m), defs_(defs) {}

    DiffOperator parse() {
        DiffOperator result = parse_expr();
        expect(TokKind::End, "trailing input");
        return result;
    }

private:
    std::vector<Token> tokens_;
    size_t at_ = 0;
    int m_;
    const Definitions& defs_;

    const Token& peek() const { return tokens_[at_]; }
    Token next() { return tokens_[at_++]; }
    void expect(TokKind k, const char* what) {
        if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
        ++at_;
    }

    DiffOperator parse_expr() {
        bool negate = false;
        if (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
            negate = next().kind == TokKind::Minus;
        }
        DiffOperator acc = parse_term();
        if (negate) acc = -acc;
        while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
            bool minus = next().kind == TokKind::Minus;
            DiffOperator rhs = parse_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    DiffOperator parse_term() {
        DiffOperator acc = parse_factor();
        while (peek().kind == TokKind::Star) {
            next();
            acc = acc * parse_factor();
        }
        return acc;
    }

    DiffOperator parse_factor() {
        DiffOperator base = parse_primary();
        while (peek().kind == TokKind::Caret) {
            size_t pos = next().pos;
            if (peek().kind != TokKind::Number) {
                throw ParseError("expected an integer exponent", peek().pos);
            }
            Token t = next();
            Int e(t.text);
            if (e > 4096) throw ParseError("exponent too large", pos);
            base = base.pow(static_cast<unsigned long>(e.get_ui()));
        }
        return base;
    }

    DiffOperator parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case TokKind::Number: {
                Token num = next();
                Int p(num.text);
                if (peek().kind == TokKind::Slash) {
                    next();
                    if (peek().kind != TokKind::Number) {
                        throw ParseError("expected an integer denominator", peek().pos);
                    }
                    Token den = next();
                    Int q(den.text);
                    if (q == 0) throw ParseError("zero denominator", den.pos);
                    return DiffOperator::coefficient(m_, RatFunc::constant(m_, make_rat(p, q)));
                }
                return DiffOperator::coefficient(m_, RatFunc::constant(m_, Rat(p)));
            }
            case TokKind::Ident: {
                Token id = next();
                if (auto builtin = builtin_ident(id.text)) {
                    auto [which, index] = *builtin;
                    if (index > m_) {
                        throw ParseError(std::string(which == 'd' ? "derivation" : "variable") +
                                             " index exceeds m",
                                         id.pos);
                    }
                    if (which == 'd') return DiffOperator::derivation(m_, index);
                    return DiffOperator::coefficient(m_, RatFunc::variable(m_, index));
                }
                auto it = defs_.find(id.text);
                if (it == defs_.end()) {
                    throw ParseError("undefined name '" + id.text + "'", id.pos);
                }
                return DiffOperator::coefficient(m_, it->second);
            }
            case TokKind::LParen: {
                next();
                DiffOperator inner = parse_expr();
                expect(TokKind::RParen, "')'");
                return inner;
            }
            default:
                throw ParseError("expected a value", t.pos);
        }
    }
};

}  // namespace

DiffOperator parse_operator(const std::string& text, int m, const Definitions& defs) {
    if (m < 1 || m > 9) throw ParseError("m must be between 1 and 9", 0);
    return OperatorParser(text, m, defs).parse();
}

RatFunc parse_coefficient(const std::string& text, int m, const Definitions& defs) {
    DiffOperator op = parse_operator(text, m, defs);
    if (op.order() > 0) {
        throw ParseError("expected a pure coefficient, found derivations", 0);
    }
    if (op.is_zero()) return RatFunc(m);
    return op.terms().begin()->second;
}

Definitions parse_definitions(int m, const std::vector<std::string>& bindings) {
    Definitions defs;
    for (const auto& binding : bindings) {
        size_t eq = binding.find('=');
        if (eq == std::string::npos) {
            throw ParseError("definition must look like name=expr", 0);
        }
        std::string name = binding.substr(0, eq);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) {
            name.pop_back();
        }
        size_t lead = 0;
        while (lead < name.size() && std::isspace(static_cast<unsigned char>(name[lead]))) ++lead;
        name = name.substr(lead);
        if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
            throw ParseError("bad definition name '" + name + "'", 0);
        }
        for (char c : name) {
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
                throw ParseError("bad definition name '" + name + "'", 0);
            }
        }
        if (builtin_ident(name)) {
            throw ParseError("cannot redefine '" + name + "'", 0);
        }
        if (defs.count(name)) {
            throw ParseError("duplicate definition of '" + name + "'", 0);
        }
        defs.emplace(name, parse_coefficient(binding.substr(eq + 1), m, defs));
    }
    return defs;
}

LeaderSet parse_leader_set(int m, const std::string& text) {
    std::vector<ExponentVector> points;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '('", i);
        ++i;
        std::vector<int> entries;
        while (true) {
            skip_ws();
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("expected a nonnegative integer", i);
            entries.push_back(std::stoi(text.substr(start, i - start)));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        if (i >= text.size() || text[i] != ')') throw ParseError("expected ')'", i);
        ++i;
        if (static_cast<int>(entries.size()) != m) {
            throw ParseError("point has wrong dimension", i);
        }
        points.emplace_back(std::move(entries));
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ';') throw ParseError("expected ';' between points", i);
            ++i;
            skip_ws();
            if (i >= text.size()) throw ParseError("expected a point after ';'", i);
        }
    }
    return LeaderSet(m, std::move(points));
}

}  // namespace kolchin
