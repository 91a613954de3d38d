#include "brane/model_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace brane {

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

namespace {

enum class Tok { Ident, Int, Slash, Star, Caret, Plus, Minus, Equals, Sep, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@' || c == '\'' || c == '.';
}

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string t, int c) { out.push_back({k, std::move(t), line, c}); };
    while (i < s.size()) {
        char c = s[i];
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        if (c == '\n') {
            push(Tok::Sep, "\\n", col);
            ++i, ++line, col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i, ++col;
            continue;
        }
        // U+2212 MINUS SIGN
        if (s.compare(i, 3, "\xE2\x88\x92") == 0) {
            push(Tok::Minus, "-", col);
            i += 3, ++col;
            continue;
        }
        int start = col;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            push(Tok::Ident, s.substr(i, j - i), start);
            col += static_cast<int>(j - i), i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            push(Tok::Int, s.substr(i, j - i), start);
            col += static_cast<int>(j - i), i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '/': k = Tok::Slash; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '=': k = Tok::Equals; break;
            case ';': k = Tok::Sep; break;
            default: throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        push(k, std::string(1, c), start);
        ++i, ++col;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

struct RawFactor {
    std::string name;
    int exp;
    int line, col;
};
struct RawTerm {
    Q coeff;
    std::vector<RawFactor> factors;
};
struct RawDiff {
    std::string target;
    std::vector<RawTerm> terms;
    int line, col;
};

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    ModelFile run() {
        ModelFile f;
        std::map<std::string, int> declared;
        std::vector<RawDiff> diffs;
        skip_seps();
        if (peek().kind == Tok::Ident && peek().text == "model") {
            next();
            f.name = expect(Tok::Ident, "model name").text;
            end_decl();
        }
        while (skip_seps(), peek().kind != Tok::End) {
            const Token& kw = expect(Tok::Ident, "'gen', 'd' or 'info'");
            if (kw.text == "gen") {
                const Token& name = expect(Tok::Ident, "generator name");
                if (declared.count(name.text)) throw ParseError(name.line, name.col, "generator '" + name.text + "' declared twice");
                const Token& deg = expect(Tok::Int, "generator degree");
                int d = to_int(deg);
                if (d < 1) throw ParseError(deg.line, deg.col, "generator degree must be at least 1");
                declared[name.text] = static_cast<int>(f.generators.size());
                f.generators.push_back({name.text, d});
            } else if (kw.text == "d") {
                const Token& name = expect(Tok::Ident, "generator name");
                if (!declared.count(name.text)) throw ParseError(name.line, name.col, "unknown generator '" + name.text + "'");
                for (const auto& r : diffs)
                    if (r.target == name.text) throw ParseError(name.line, name.col, "differential of '" + name.text + "' assigned twice");
                expect(Tok::Equals, "'='");
                RawDiff r{name.text, expr(declared), name.line, name.col};
                diffs.push_back(std::move(r));
            } else if (kw.text == "info") {
                const Token& key = expect(Tok::Ident, "info key");
                expect(Tok::Equals, "'='");
                bool neg = false;
                if (peek().kind == Tok::Minus) next(), neg = true;
                int v = to_int(expect(Tok::Int, "integer"));
                if (neg) v = -v;
                if (key.text == "m") f.m = v;
                else if (key.text == "mbar") f.mbar = v;
                else throw ParseError(key.line, key.col, "unknown info key '" + key.text + "' (expected m or mbar)");
            } else {
                throw ParseError(kw.line, kw.col, "unknown declaration '" + kw.text + "'");
            }
            end_decl();
        }

        std::vector<Generator> gens;
        for (std::size_t i = 0; i < f.generators.size(); ++i)
            gens.push_back({static_cast<GenId>(i), f.generators[i].name, f.generators[i].degree, {}});
        f.algebra = GradedAlgebra::create(std::move(gens));
        f.d.assign(f.generators.size(), f.algebra->zero());
        for (const auto& r : diffs) {
            GenId target = declared.at(r.target);
            Element e = f.algebra->zero();
            for (const auto& t : r.terms) {
                std::vector<Factor> raw;
                for (const auto& fa : t.factors) raw.push_back({declared.at(fa.name), fa.exp});
                auto [sign, mono] = normalize(*f.algebra, raw);
                if (sign != 0) e.add_term(mono, t.coeff * sign);
            }
            if (!e.homogeneous()) throw ParseError(r.line, r.col, "differential of '" + r.target + "' is not homogeneous");
            int want = f.generators[target].degree + 1;
            if (auto deg = e.degree(); deg && *deg != want)
                throw ParseError(r.line, r.col,
                                 "differential of '" + r.target + "' has degree " + std::to_string(*deg) + ", expected " +
                                     std::to_string(want));
            f.d[target] = e;
        }
        return f;
    }

    Element element(const AlgPtr& alg) {
        std::map<std::string, int> names;
        for (const auto& g : alg->generators()) names[g.name] = g.id;
        skip_seps();
        Element e = alg->zero();
        for (const auto& t : expr(names)) {
            std::vector<Factor> raw;
            for (const auto& fa : t.factors) raw.push_back({names.at(fa.name), fa.exp});
            auto [sign, mono] = normalize(*alg, raw);
            if (sign != 0) e.add_term(mono, t.coeff * sign);
        }
        skip_seps();
        end_decl();
        if (peek().kind != Tok::End) throw ParseError(peek().line, peek().col, "trailing input after expression");
        return e;
    }

  private:
    const Token& peek() const { return t_[pos_]; }
    const Token& next() { return t_[pos_ == t_.size() - 1 ? pos_ : pos_++]; }
    const Token& expect(Tok k, const std::string& what) {
        const Token& t = peek();
        if (t.kind != k) throw ParseError(t.line, t.col, "expected " + what + ", found '" + (t.kind == Tok::End ? "end of input" : t.text) + "'");
        return next();
    }
    void skip_seps() {
        while (peek().kind == Tok::Sep) next();
    }
    void end_decl() {
        const Token& t = peek();
        if (t.kind != Tok::Sep && t.kind != Tok::End)
            throw ParseError(t.line, t.col, "expected end of declaration, found '" + t.text + "'");
    }
    static int to_int(const Token& t) {
        if (t.text.size() > 9) throw ParseError(t.line, t.col, "integer too large");
        return std::stoi(t.text);
    }

    std::vector<RawTerm> expr(const std::map<std::string, int>& declared) {
        std::vector<RawTerm> terms;
        Q sign = 1;
        if (peek().kind == Tok::Minus) next(), sign = -1;
        else if (peek().kind == Tok::Plus) next();
        for (;;) {
            RawTerm t = term(declared);
            t.coeff *= sign;
            terms.push_back(std::move(t));
            if (peek().kind == Tok::Plus) next(), sign = 1;
            else if (peek().kind == Tok::Minus) next(), sign = -1;
            else break;
        }
        return terms;
    }

    RawTerm term(const std::map<std::string, int>& declared) {
        RawTerm t{Q(1), {}};
        if (peek().kind == Tok::Int) {
            const Token& num = next();
            mpz_class n(num.text), den(1);
            if (peek().kind == Tok::Slash) {
                next();
                const Token& d = expect(Tok::Int, "denominator");
                den = mpz_class(d.text);
                if (den == 0) throw ParseError(d.line, d.col, "zero denominator");
            }
            t.coeff = Q(n, den);
            t.coeff.canonicalize();
            if (peek().kind == Tok::Star) next();
            else if (peek().kind != Tok::Ident) return t;
        }
        for (;;) {
            const Token& name = expect(Tok::Ident, "generator name");
            if (!declared.count(name.text)) throw ParseError(name.line, name.col, "unknown generator '" + name.text + "'");
            int e = 1;
            if (peek().kind == Tok::Caret) {
                next();
                e = to_int(expect(Tok::Int, "exponent"));
            }
            t.factors.push_back({name.text, e, name.line, name.col});
            if (peek().kind != Tok::Star) break;
            next();
        }
        return t;
    }

    std::vector<Token> t_;
    std::size_t pos_ = 0;
};

}  // namespace

ModelFile parse_model(const std::string& text) { return Parser(lex(text)).run(); }

Element parse_element(const AlgPtr& alg, const std::string& text) { return Parser(lex(text)).element(alg); }

ModelFile read_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

ModelPtr ModelFile::model() const { return DgaModel::create(name, algebra, d); }

static std::string identifier(const std::string& s) {
    std::string r;
    for (char c : s) r += ident_char(c) ? c : '_';
    if (r.empty() || !ident_start(r[0])) r = "M" + r;
    return r;
}

std::string print_model(const ModelFile& f) {
    std::ostringstream os;
    os << "model " << identifier(f.name) << "\n";
    for (const auto& g : f.generators) os << "gen " << g.name << " " << g.degree << "\n";
    for (std::size_t i = 0; i < f.generators.size(); ++i)
        if (!f.d[i].is_zero()) os << "d " << f.generators[i].name << " = " << f.d[i].str() << "\n";
    if (f.m) os << "info m = " << *f.m << "\n";
    if (f.mbar) os << "info mbar = " << *f.mbar << "\n";
    return os.str();
}

ModelFile model_file_of(const DgaModel& m) {
    ModelFile f;
    f.name = m.name();
    f.algebra = m.algebra();
    for (const auto& g : m.algebra()->generators()) {
        f.generators.push_back({g.name, g.degree});
        f.d.push_back(m.d().image(g.id));
    }
    return f;
}

}  // namespace brane
