#include "cylcob/text.hpp"

#include <cctype>
#include <functional>
#include <vector>

namespace cylcob {

namespace {

// ---------------------------------------------------------------------------
// Tokenizer shared by all word grammars

struct Token {
    enum class Kind { name, number, dot, semi, caret, lparen, rparen, comma, end } kind;
    std::string text;
    std::size_t offset = 0;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Kind::number, std::string(src.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                      src[j] == '_' || src[j] == '\''))
                ++j;
            out.push_back({Token::Kind::name, std::string(src.substr(i, j - i)), i});
            i = j;
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '.': kind = Token::Kind::dot; break;
            case ';': kind = Token::Kind::semi; break;
            case '^': kind = Token::Kind::caret; break;
            case '(': kind = Token::Kind::lparen; break;
            case ')': kind = Token::Kind::rparen; break;
            case ',': kind = Token::Kind::comma; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
        }
        out.push_back({kind, std::string(1, c), i});
        ++i;
    }
    out.push_back({Token::Kind::end, "", src.size()});
    return out;
}

// ---------------------------------------------------------------------------
// Generic expression parser over any word type providing then/power.
// Precedence: ^ binds tighter than . binds tighter than ;

template <class Word>
struct WordOps {
    std::function<Word(const Token&, const std::vector<long long>&)> atom;  // name(args) -> word
    std::function<Word(const Word&, const Word&, const Token&)> seq;  // left first
    std::function<Word(const Word&, long long, const Token&)> pow;
};

template <class Word>
class Parser {
public:
    Parser(std::vector<Token> tokens, WordOps<Word> ops) : toks_(std::move(tokens)), ops_(std::move(ops)) {}

    Word parse() {
        Word w = parse_seq();
        expect(Token::Kind::end, "end of input");
        return w;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    void expect(Token::Kind kind, const char* what) {
        if (peek().kind != kind)
            throw ParseError(std::string("expected ") + what + " before '" +
                                 (peek().kind == Token::Kind::end ? "end of input" : peek().text) +
                                 "'",
                             peek().offset, std::max<std::size_t>(peek().text.size(), 1));
        ++pos_;
    }

    Word parse_seq() {
        Word w = parse_comp();
        while (peek().kind == Token::Kind::semi) {
            const Token op = take();
            Word rhs = parse_comp();
            w = ops_.seq(w, rhs, op);
        }
        return w;
    }

    Word parse_comp() {
        // x . y means y first; collect and fold from the right
        std::vector<Word> parts{parse_pow()};
        std::vector<Token> ops;
        while (peek().kind == Token::Kind::dot) {
            ops.push_back(take());
            parts.push_back(parse_pow());
        }
        Word w = parts.back();
        for (std::size_t i = parts.size() - 1; i-- > 0;) w = ops_.seq(w, parts[i], ops[i]);
        return w;
    }

    Word parse_pow() {
        Word w = parse_primary();
        while (peek().kind == Token::Kind::caret) {
            const Token op = take();
            if (peek().kind != Token::Kind::number)
                throw ParseError("expected a number after '^'", peek().offset);
            const Token num = take();
            w = ops_.pow(w, std::stoll(num.text), op);
        }
        return w;
    }

    Word parse_primary() {
        if (peek().kind == Token::Kind::lparen) {
            take();
            Word w = parse_seq();
            expect(Token::Kind::rparen, "')'");
            return w;
        }
        if (peek().kind != Token::Kind::name)
            throw ParseError("expected a generator or '(' before '" +
                                 (peek().kind == Token::Kind::end ? "end of input" : peek().text) +
                                 "'",
                             peek().offset, std::max<std::size_t>(peek().text.size(), 1));
        Token name = take();
        expect(Token::Kind::lparen, "'('");
        name.text += "(";
        std::vector<long long> args;
        while (true) {
            if (peek().kind != Token::Kind::number)
                throw ParseError("expected a number in the argument list of '" + name.text + "'",
                                 peek().offset);
            args.push_back(std::stoll(take().text));
            name.text += std::to_string(args.back());
            if (peek().kind == Token::Kind::comma) {
                take();
                name.text += ",";
                continue;
            }
            break;
        }
        expect(Token::Kind::rparen, "')'");
        name.text += ")";
        return ops_.atom(name, args);
    }

private:
    std::vector<Token> toks_;
    WordOps<Word> ops_;
    std::size_t pos_ = 0;
};

std::string token_span(const Token& t) { return "'" + t.text + "'"; }

long long arg_or_throw(const std::vector<long long>& args, std::size_t i, std::size_t want,
                       const Token& tok) {
    if (args.size() != want)
        throw ParseError("wrong number of arguments in " + token_span(tok) + ": expected " +
                             std::to_string(want),
                         tok.offset, tok.text.size());
    return args[i];
}

// Wraps the library's arity errors with the source location of the operator
// or atom that triggered them.
template <class F>
auto typed(F&& f, const Token& tok) {
    try {
        return f();
    } catch (const ArityMismatch& e) {
        throw WordTypeError(std::string(e.what()) + " at " + token_span(tok), tok.offset,
                            tok.text.size());
    } catch (const NotEndomorphism& e) {
        throw WordTypeError(std::string(e.what()) + " at " + token_span(tok), tok.offset,
                            tok.text.size());
    } catch (const OutOfRange& e) {
        throw WordTypeError(std::string(e.what()) + " at " + token_span(tok), tok.offset,
                            tok.text.size());
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Cylinder words

GeneratorWord parse_word(std::string_view text) {
    WordOps<GeneratorWord> ops;
    ops.seq = [](const GeneratorWord& a, const GeneratorWord& b, const Token& tok) {
        return typed([&] { return then(a, b); }, tok);
    };
    ops.pow = [](const GeneratorWord& w, long long p, const Token& tok) {
        return typed([&] { return power(w, p); }, tok);
    };
    ops.atom = [](const Token& tok, const std::vector<long long>& args) {
        const auto arg = [&](std::size_t i, std::size_t want) {
            return arg_or_throw(args, i, want, tok);
        };
        const std::string head = tok.text.substr(0, tok.text.find('('));
        return typed(
            [&]() -> GeneratorWord {
                if (head == "id") return GeneratorWord::identity(static_cast<int>(arg(0, 1)));
                if (head == "tw")
                    return GeneratorWord::of(Generator::twist(static_cast<int>(arg(0, 1))));
                if (head == "tw'")
                    return GeneratorWord::of(Generator::twist_inv(static_cast<int>(arg(0, 1))));
                if (head == "b")
                    return GeneratorWord::of(Generator::birth(static_cast<int>(arg(0, 2)),
                                                              static_cast<int>(arg(1, 2))));
                if (head == "d")
                    return GeneratorWord::of(Generator::death(static_cast<int>(arg(0, 2)),
                                                              static_cast<int>(arg(1, 2))));
                throw ParseError("unknown generator '" + head + "'", tok.offset, head.size());
            },
            tok);
    };
    Parser<GeneratorWord> parser(tokenize(text), ops);
    return parser.parse();
}

std::string print_word(const GeneratorWord& w) {
    if (w.is_identity()) return "id(" + std::to_string(w.n_in()) + ")";
    std::string out;
    const auto& gens = w.gens();
    for (auto it = gens.rbegin(); it != gens.rend();) {
        auto run_end = it;
        while (run_end != gens.rend() && *run_end == *it) ++run_end;
        const auto run = run_end - it;
        if (!out.empty()) out += ".";
        out += it->str();
        if (run > 1) out += "^" + std::to_string(run);
        it = run_end;
    }
    return out;
}

std::string print_normal_form(const NormalForm& nf) {
    std::vector<std::string> blocks;  // mathematical order: loops, births, middle, deaths

    if (nf.loops > 0) {
        const int m = nf.births.n_out();
        const std::string pair =
            "d(" + std::to_string(m + 2) + ",0).b(" + std::to_string(m) + ",0)";
        blocks.push_back(nf.loops == 1 ? pair : "(" + pair + ")^" + std::to_string(nf.loops));
    }
    if (!nf.births.is_identity()) blocks.push_back(print_word(nf.births));
    switch (nf.middle) {
        case MiddleKind::empty:
            break;
        case MiddleKind::twist_power:
            if (nf.middle_count == 1)
                blocks.push_back("tw(" + std::to_string(nf.deaths.n_out()) + ")");
            else if (nf.middle_count > 1)
                blocks.push_back("tw(" + std::to_string(nf.deaths.n_out()) + ")^" +
                                 std::to_string(nf.middle_count));
            break;
        case MiddleKind::bracelets: {
            const std::string pair = "d(2,1).b(0,0)";
            blocks.push_back(nf.middle_count == 1 ? pair
                                                  : "(" + pair + ")^" +
                                                        std::to_string(nf.middle_count));
            break;
        }
    }
    if (!nf.deaths.is_identity()) blocks.push_back(print_word(nf.deaths));

    if (blocks.empty()) return "id(" + std::to_string(nf.deaths.n_in()) + ")";
    std::string out;
    for (const std::string& b : blocks) {
        if (!out.empty()) out += ".";
        out += b;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Source grammars for translations

CyclicWord parse_lambda_word(std::string_view text) {
    WordOps<CyclicWord> ops;
    ops.seq = [](const CyclicWord& a, const CyclicWord& b, const Token& tok) {
        return typed(
            [&] {
                if (a.n_out() != b.n_in()) throw ArityMismatch(a.n_out(), b.n_in());
                CyclicWord out = a;
                for (const CyclicGen& g : b.gens()) switch (g.kind) {
                        case CyclicGen::Kind::face: out.append_face(g.level, g.index); break;
                        case CyclicGen::Kind::degen: out.append_degen(g.level, g.index); break;
                        case CyclicGen::Kind::cyc: out.append_cyc(g.level); break;
                    }
                return out;
            },
            tok);
    };
    ops.pow = [&ops](const CyclicWord& w, long long p, const Token& tok) {
        if (w.n_in() != w.n_out())
            throw WordTypeError("power of a level-changing word at " + token_span(tok), tok.offset,
                                tok.text.size());
        CyclicWord out = CyclicWord::identity(w.n_in());
        for (long long i = 0; i < p; ++i) out = ops.seq(out, w, tok);
        return out;
    };
    ops.atom = [](const Token& tok, const std::vector<long long>& args) {
        const auto arg = [&](std::size_t i, std::size_t want) {
            return static_cast<int>(arg_or_throw(args, i, want, tok));
        };
        const std::string head = tok.text.substr(0, tok.text.find('('));
        return typed(
            [&]() -> CyclicWord {
                if (head == "t") {
                    CyclicWord w = CyclicWord::identity(arg(0, 1));
                    w.append_cyc(arg(0, 1));
                    return w;
                }
                if (head == "dl") {
                    CyclicWord w = CyclicWord::identity(arg(0, 2));
                    w.append_face(arg(0, 2), arg(1, 2));
                    return w;
                }
                if (head == "s") {
                    CyclicWord w = CyclicWord::identity(arg(0, 2));
                    w.append_degen(arg(0, 2), arg(1, 2));
                    return w;
                }
                throw ParseError("unknown generator '" + head + "'", tok.offset, head.size());
            },
            tok);
    };
    Parser<CyclicWord> parser(tokenize(text), ops);
    return parser.parse();
}

SqrtCyclicWord parse_sqrt_word(std::string_view text) {
    WordOps<SqrtCyclicWord> ops;
    ops.seq = [](const SqrtCyclicWord& a, const SqrtCyclicWord& b, const Token& tok) {
        return typed(
            [&] {
                if (a.n_out() != b.n_in()) throw ArityMismatch(a.n_out(), b.n_in());
                SqrtCyclicWord out = a;
                for (const SqrtCyclicGen& g : b.gens()) switch (g.kind) {
                        case SqrtCyclicGen::Kind::face: out.append_face(g.level, g.index); break;
                        case SqrtCyclicGen::Kind::degen: out.append_degen(g.level, g.index); break;
                        case SqrtCyclicGen::Kind::sqrt_cyc: out.append_sqrt_cyc(g.level); break;
                    }
                return out;
            },
            tok);
    };
    ops.pow = [&ops](const SqrtCyclicWord& w, long long p, const Token& tok) {
        if (w.n_in() != w.n_out())
            throw WordTypeError("power of a level-changing word at " + token_span(tok), tok.offset,
                                tok.text.size());
        SqrtCyclicWord out = SqrtCyclicWord::identity(w.n_in());
        for (long long i = 0; i < p; ++i) out = ops.seq(out, w, tok);
        return out;
    };
    ops.atom = [](const Token& tok, const std::vector<long long>& args) {
        const auto arg = [&](std::size_t i, std::size_t want) {
            return static_cast<int>(arg_or_throw(args, i, want, tok));
        };
        const std::string head = tok.text.substr(0, tok.text.find('('));
        return typed(
            [&]() -> SqrtCyclicWord {
                if (head == "sqrt_t") {
                    SqrtCyclicWord w = SqrtCyclicWord::identity(arg(0, 1));
                    w.append_sqrt_cyc(arg(0, 1));
                    return w;
                }
                if (head == "dl") {
                    SqrtCyclicWord w = SqrtCyclicWord::identity(arg(0, 2));
                    w.append_face(arg(0, 2), arg(1, 2));
                    return w;
                }
                if (head == "s") {
                    SqrtCyclicWord w = SqrtCyclicWord::identity(arg(0, 2));
                    w.append_degen(arg(0, 2), arg(1, 2));
                    return w;
                }
                throw ParseError("unknown generator '" + head + "'", tok.offset, head.size());
            },
            tok);
    };
    Parser<SqrtCyclicWord> parser(tokenize(text), ops);
    return parser.parse();
}

AtlWord parse_atl_word(std::string_view text) {
    WordOps<AtlWord> ops;
    ops.seq = [](const AtlWord& a, const AtlWord& b, const Token& tok) {
        return typed(
            [&] {
                if (a.n_out() != b.n_in()) throw ArityMismatch(a.n_out(), b.n_in());
                AtlWord out = a;
                for (const AtlGen& g : b.gens()) switch (g.kind) {
                        case AtlGen::Kind::cap: out.append_cap(g.level, g.index); break;
                        case AtlGen::Kind::cup: out.append_cup(g.level, g.index); break;
                        case AtlGen::Kind::rot: out.append_rot(g.level); break;
                        case AtlGen::Kind::loop_id:
                            out.append_loop_id(g.level, g.unshaded, g.shaded);
                            break;
                    }
                return out;
            },
            tok);
    };
    ops.pow = [&ops](const AtlWord& w, long long p, const Token& tok) {
        if (w.n_in() != w.n_out())
            throw WordTypeError("power of a level-changing word at " + token_span(tok), tok.offset,
                                tok.text.size());
        AtlWord out = AtlWord::identity(w.n_in());
        for (long long i = 0; i < p; ++i) out = ops.seq(out, w, tok);
        return out;
    };
    ops.atom = [](const Token& tok, const std::vector<long long>& args) {
        const auto arg = [&](std::size_t i, std::size_t want) {
            return static_cast<int>(arg_or_throw(args, i, want, tok));
        };
        const std::string head = tok.text.substr(0, tok.text.find('('));
        return typed(
            [&]() -> AtlWord {
                if (head == "a") {
                    AtlWord w = AtlWord::identity(arg(0, 2));
                    w.append_cap(arg(0, 2), arg(1, 2));
                    return w;
                }
                if (head == "bb") {
                    AtlWord w = AtlWord::identity(arg(0, 2));
                    w.append_cup(arg(0, 2), arg(1, 2));
                    return w;
                }
                if (head == "T") {
                    AtlWord w = AtlWord::identity(arg(0, 1));
                    w.append_rot(arg(0, 1));
                    return w;
                }
                if (head == "loopid") {
                    if (args.size() != 3)
                        throw ParseError("loopid takes three arguments", tok.offset,
                                         tok.text.size());
                    AtlWord w = AtlWord::identity(static_cast<int>(args[0]));
                    w.append_loop_id(static_cast<int>(args[0]), args[1], args[2]);
                    return w;
                }
                throw ParseError("unknown generator '" + head + "'", tok.offset, head.size());
            },
            tok);
    };
    Parser<AtlWord> parser(tokenize(text), ops);
    return parser.parse();
}

}  // namespace cylcob
