#include "reeskit/dsl.hpp"

#include <ostream>
#include <sstream>

#include "json.hpp"

#include "reeskit/projgeo.hpp"
#include "reeskit/rees.hpp"
#include "reeskit/verify.hpp"

namespace reeskit {
namespace dsl {

namespace {

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind;
    std::string text;
    int line, col;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : src_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    const std::string& source() const { return src_; }

private:
    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
        if (pos_ >= src_.size()) {
            tok_ = {Token::Kind::End, "", line_, col_, pos_};
            return;
        }
        int line = line_, col = col_;
        std::size_t start = pos_;
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            tok_ = {Token::Kind::Ident, src_.substr(start, pos_ - start), line, col, start};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++col_;
            }
            tok_ = {Token::Kind::Int, src_.substr(start, pos_ - start), line, col, start};
            return;
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            pos_ += 2;
            col_ += 2;
            tok_ = {Token::Kind::Punct, "->", line, col, start};
            return;
        }
        static const std::string punct = "=()[]{},;/*+-^:";
        if (punct.find(c) != std::string::npos) {
            ++pos_;
            ++col_;
            tok_ = {Token::Kind::Punct, std::string(1, c), line, col, start};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

    std::string src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Token::Kind::End, "", 1, 1, 0};
};

class Parser {
public:
    explicit Parser(const std::string& input) : lex_(input) {}

    Script parse_script() {
        Script s;
        while (lex_.peek().kind != Token::Kind::End) s.statements.push_back(parse_statement());
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& msg, const Token& t) {
        throw ParseError(msg, t.line, t.col);
    }

    Token expect_punct(const std::string& p) {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Punct || t.text != p)
            fail("expected '" + p + "', found '" + t.text + "'", t);
        return t;
    }

    bool peek_punct(const std::string& p) {
        return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == p;
    }

    bool accept_punct(const std::string& p) {
        if (peek_punct(p)) {
            lex_.next();
            return true;
        }
        return false;
    }

    Token expect_ident() {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Ident) fail("expected identifier, found '" + t.text + "'", t);
        return t;
    }

    bool peek_ident(const std::string& kw) {
        return lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == kw;
    }

    void expect_keyword(const std::string& kw) {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Ident || t.text != kw)
            fail("expected '" + kw + "', found '" + t.text + "'", t);
    }

    unsigned expect_uint() {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Int) fail("expected integer, found '" + t.text + "'", t);
        return static_cast<unsigned>(std::stoul(t.text));
    }

    // consumes a balanced polynomial fragment up to a top-level ',' or closer
    std::string poly_fragment() {
        std::size_t start = lex_.peek().offset;
        std::size_t end = start;
        int depth = 0;
        Token first = lex_.peek();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::End) fail("unterminated expression", t);
            if (t.kind == Token::Kind::Punct) {
                if (depth == 0 && (t.text == "," || t.text == ")" || t.text == "]" ||
                                   t.text == ";" || t.text == "}"))
                    break;
                if (t.text == "(" || t.text == "[") ++depth;
                if (t.text == ")" || t.text == "]") --depth;
            }
            Token taken = lex_.next();
            end = taken.offset + taken.text.size();
        }
        if (end == start) fail("empty expression", first);
        return lex_.source().substr(start, end - start);
    }

    std::vector<std::string> paren_fragments() {
        expect_punct("(");
        std::vector<std::string> out;
        if (!peek_punct(")")) {
            out.push_back(poly_fragment());
            while (accept_punct(",")) out.push_back(poly_fragment());
        }
        expect_punct(")");
        return out;
    }

    std::vector<std::vector<std::string>> matrix_fragments(const Token& at) {
        expect_punct("[");
        std::vector<std::vector<std::string>> rows;
        if (!peek_punct("]")) {
            while (true) {
                expect_punct("[");
                std::vector<std::string> row;
                if (!peek_punct("]")) {
                    row.push_back(poly_fragment());
                    while (accept_punct(",")) row.push_back(poly_fragment());
                }
                expect_punct("]");
                rows.push_back(std::move(row));
                if (!accept_punct(",")) break;
            }
        }
        expect_punct("]");
        for (const auto& r : rows)
            if (r.size() != rows[0].size()) fail("ragged matrix", at);
        return rows;
    }

    Field parse_field() {
        Token t = expect_ident();
        if (t.text == "QQ") return Field{0};
        if (t.text == "GF") {
            expect_punct("(");
            unsigned long p = expect_uint();
            expect_punct(")");
            if (p < 2) fail("GF modulus must be a prime", t);
            return Field{p};
        }
        fail("expected field QQ or GF(p)", t);
    }

    Statement parse_statement() {
        Token head = expect_ident();
        Statement st;
        st.line = head.line;
        st.col = head.col;
        const std::string& kw = head.text;

        if (kw == "ring") {
            st.kind = Statement::Kind::RingDecl;
            st.name = expect_ident().text;
            expect_punct("=");
            st.field = parse_field();
            expect_punct("[");
            st.vars.push_back(expect_ident().text);
            while (accept_punct(",")) st.vars.push_back(expect_ident().text);
            expect_punct("]");
            if (accept_punct("/")) st.poly_srcs = paren_fragments();
            if (peek_ident("with")) {
                lex_.next();
                expect_keyword("lex");
                st.lex_order = true;
            }
        } else if (kw == "ideal") {
            st.kind = Statement::Kind::IdealDecl;
            st.name = expect_ident().text;
            expect_punct("=");
            st.ring_name = expect_ident().text;
            st.poly_srcs = paren_fragments();
        } else if (kw == "module") {
            st.kind = Statement::Kind::ModuleDecl;
            st.name = expect_ident().text;
            expect_punct("=");
            Token kindTok = expect_ident();
            st.module_kind = kindTok.text;
            if (st.module_kind == "coker") {
                st.ring_name = expect_ident().text;
                st.matrix_srcs = matrix_fragments(kindTok);
            } else if (st.module_kind == "free") {
                st.ring_name = expect_ident().text;
                st.free_rank = expect_uint();
            } else {
                fail("expected 'coker' or 'free'", kindTok);
            }
        } else if (kw == "map") {
            st.kind = Statement::Kind::MapDecl;
            st.name = expect_ident().text;
            expect_punct(":");
            st.ring_name = expect_ident().text;
            expect_punct("->");
            st.target_ring = expect_ident().text;
            expect_punct("{");
            if (!peek_punct("}")) {
                while (true) {
                    std::string var = expect_ident().text;
                    expect_punct("->");
                    st.map_images.emplace_back(var, poly_fragment());
                    if (!accept_punct(",")) break;
                }
            }
            expect_punct("}");
        } else if (kw == "assume") {
            st.kind = Statement::Kind::AssumeFlat;
            expect_keyword("flat");
            st.name = expect_ident().text;
        } else if (kw == "gb") {
            st.kind = Statement::Kind::Gb;
            st.name = expect_ident().text;
        } else if (kw == "sym") {
            st.kind = Statement::Kind::Sym;
            st.name = expect_ident().text;
        } else if (kw == "rees") {
            st.kind = Statement::Kind::Rees;
            st.name = expect_ident().text;
        } else if (kw == "tl") {
            st.kind = Statement::Kind::Tl;
            st.name = expect_ident().text;
            if (peek_ident("via")) {
                lex_.next();
                st.via = expect_ident().text;
            }
        } else if (kw == "algtl") {
            st.kind = Statement::Kind::AlgTl;
            st.name = expect_ident().text;
            expect_keyword("via");
            st.via = expect_ident().text;
        } else if (kw == "blowup") {
            st.kind = Statement::Kind::Blowup;
            st.name = expect_ident().text;
        } else if (kw == "charts") {
            st.kind = Statement::Kind::Charts;
            expect_punct("(");
            Token inner = expect_ident();
            if (inner.text != "rees" && inner.text != "sym")
                fail("charts expects (rees M) or (sym M)", inner);
            st.inner = inner.text;
            st.name = expect_ident().text;
            expect_punct(")");
        } else if (kw == "nash") {
            st.kind = Statement::Kind::Nash;
            st.name = expect_ident().text;
            expect_keyword("rank");
            st.rank = expect_uint();
            expect_keyword("minus");
            st.poly_srcs = paren_fragments();
        } else if (kw == "dense") {
            st.kind = Statement::Kind::Dense;
            st.name = expect_ident().text;
            expect_keyword("minus");
            st.poly_srcs = paren_fragments();
        } else if (kw == "assof") {
            st.kind = Statement::Kind::Assof;
            st.name = expect_ident().text;
            expect_keyword("at");
            st.prime_srcs.push_back(paren_fragments());
            while (accept_punct(",")) st.prime_srcs.push_back(paren_fragments());
        } else if (kw == "compare") {
            st.kind = Statement::Kind::Compare;
            st.name = expect_ident().text;
            expect_keyword("via");
            st.via = expect_ident().text;
        } else if (kw == "inject") {
            st.kind = Statement::Kind::Inject;
            st.name = expect_ident().text;
            expect_keyword("via");
            st.via = expect_ident().text;
        } else if (kw == "verify") {
            st.kind = Statement::Kind::Verify;
        } else {
            fail("unknown statement '" + kw + "'", head);
        }
        expect_punct(";");
        return st;
    }

    Lexer lex_;
};

// ---- polynomial expression parsing ----------------------------------------

class PolyParser {
public:
    PolyParser(PolyRingPtr ring, const std::string& text) : ring_(std::move(ring)), lex_(text) {}

    Poly parse() {
        Poly p = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw ParseError("unexpected '" + t.text + "' in expression", t.line, t.col);
        return p;
    }

private:
    Poly expr() {
        bool neg = false;
        while (lex_.peek().kind == Token::Kind::Punct &&
               (lex_.peek().text == "-" || lex_.peek().text == "+")) {
            if (lex_.next().text == "-") neg = !neg;
        }
        Poly acc = term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Token::Kind::Punct &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            bool minus = lex_.next().text == "-";
            Poly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "*") {
            lex_.next();
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "^") {
            Token caret = lex_.next();
            Token e = lex_.next();
            if (e.kind != Token::Kind::Int)
                throw ParseError("expected integer exponent", caret.line, caret.col);
            unsigned long n = std::stoul(e.text);
            Poly acc = Poly::constant(ring_, 1);
            for (unsigned long i = 0; i < n; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    Poly atom() {
        Token t = lex_.next();
        if (t.kind == Token::Kind::Int) {
            mpz_class num(t.text);
            if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "/") {
                lex_.next();
                Token den = lex_.next();
                if (den.kind != Token::Kind::Int)
                    throw ParseError("expected integer denominator", t.line, t.col);
                if (ring_->field().p != 0)
                    throw ParseError("rational literal over a prime field", t.line, t.col);
                mpq_class q(num, mpz_class(den.text));
                q.canonicalize();
                return Poly::constant(ring_, Coeff::rational(q));
            }
            if (ring_->field().p == 0) return Poly::constant(ring_, Coeff::rational(mpq_class(num)));
            return Poly::constant(ring_, Coeff::mod_p(ring_->field().p, num));
        }
        if (t.kind == Token::Kind::Ident) {
            auto idx = ring_->var_index(t.text);
            if (!idx) throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
            return Poly::var(ring_, *idx);
        }
        if (t.kind == Token::Kind::Punct && t.text == "(") {
            Poly p = expr();
            const Token& close = lex_.peek();
            if (close.kind != Token::Kind::Punct || close.text != ")")
                throw ParseError("expected ')'", close.line, close.col);
            lex_.next();
            return p;
        }
        if (t.kind == Token::Kind::Punct && t.text == "-") return -atom();
        throw ParseError("unexpected '" + t.text + "' in expression", t.line, t.col);
    }

    PolyRingPtr ring_;
    Lexer lex_;
};

} // namespace

Script parse(const std::string& input) { return Parser(input).parse_script(); }

Poly parse_poly(const PolyRingPtr& ring, const std::string& text) {
    return PolyParser(ring, text).parse();
}

const AffineRingPtr& Env::ring(const std::string& name, int line, int col) const {
    auto it = rings.find(name);
    if (it == rings.end()) throw ParseError("undefined ring '" + name + "'", line, col);
    return it->second;
}

const Ideal& Env::ideal(const std::string& name, int line, int col) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) throw ParseError("undefined ideal '" + name + "'", line, col);
    return it->second;
}

const FPModule& Env::module(const std::string& name, int line, int col) const {
    auto it = modules.find(name);
    if (it == modules.end()) throw ParseError("undefined module '" + name + "'", line, col);
    return it->second;
}

const RingMap& Env::map(const std::string& name, int line, int col) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw ParseError("undefined map '" + name + "'", line, col);
    return it->second;
}

namespace {

using nlohmann::json;

class Emitter {
public:
    Emitter(std::ostream& out, bool as_json) : out_(out), json_(as_json) {}

    void begin(const std::string& header) {
        if (json_) {
            cur_ = json::object();
            cur_["cmd"] = header;
        } else {
            out_ << "== " << header << "\n";
        }
    }

    void field(const std::string& key, const std::string& val) {
        if (json_) cur_[key] = val;
        else out_ << key << ": " << val << "\n";
    }

    void field_list(const std::string& key, const std::vector<std::string>& vals) {
        if (json_) {
            cur_[key] = vals;
        } else {
            out_ << key << ": [";
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (i) out_ << ",";
                out_ << vals[i];
            }
            out_ << "]\n";
        }
    }

    void field_bool(const std::string& key, bool b) {
        if (json_) cur_[key] = b;
        else out_ << key << ": " << (b ? "true" : "false") << "\n";
    }

    void checks(const std::vector<VerifyCheck>& checks) {
        if (json_) {
            json arr = json::array();
            for (const auto& c : checks)
                arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            cur_["checks"] = arr;
        } else {
            for (const auto& c : checks) {
                out_ << (c.pass ? "ok " : "FAIL ") << c.name;
                if (!c.pass && !c.detail.empty()) out_ << " -- " << c.detail;
                out_ << "\n";
            }
        }
    }

    void end() {
        if (json_) {
            all_.push_back(cur_);
        } else {
            out_ << "\n";
        }
    }

    void flush() {
        if (json_) out_ << all_.dump(2) << "\n";
    }

private:
    std::ostream& out_;
    bool json_;
    json cur_;
    json all_ = json::array();
};

std::string ideal_of_graded_str(const GradedAlgebra& G) {
    auto gens = G.tpart_gens();
    if (gens.empty()) return "(0)";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ", ";
        os << gens[i].str();
    }
    os << ")";
    return os.str();
}

std::string tvars_str(const GradedAlgebra& G) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < G.tvars().size(); ++i) {
        if (i) os << ",";
        os << G.tvars()[i];
    }
    os << "]";
    return os.str();
}

void emit_charts(Emitter& em, const std::vector<ProjChart>& charts) {
    for (const auto& c : charts) {
        std::ostringstream key;
        key << "chart " << (c.index + 1);
        std::ostringstream val;
        val << c.ring->ambient()->str() << " / " << c.ideal_str();
        em.field(key.str(), val.str());
    }
}

void check_fresh(Env& env, const Statement& st) {
    if (env.names.count(st.name))
        throw ParseError("name '" + st.name + "' is already defined", st.line, st.col);
    env.names.insert(st.name);
}

std::vector<Poly> parse_polys(const PolyRingPtr& ring, const std::vector<std::string>& srcs) {
    std::vector<Poly> out;
    for (const auto& s : srcs) out.push_back(parse_poly(ring, s));
    return out;
}

void execute_one(const Statement& st, Env& env, Emitter& em, int& verify_status) {
    switch (st.kind) {
    case Statement::Kind::RingDecl: {
        check_fresh(env, st);
        auto order = st.lex_order ? MonomialOrder::lex() : MonomialOrder::degrevlex();
        auto amb = PolyRing::make(st.field, st.vars, order);
        auto gens = parse_polys(amb, st.poly_srcs);
        env.rings.emplace(st.name, AffineRing::make(amb, std::move(gens)));
        break;
    }
    case Statement::Kind::IdealDecl: {
        check_fresh(env, st);
        const auto& R = env.ring(st.ring_name, st.line, st.col);
        env.ideals.emplace(st.name, Ideal::make(R, parse_polys(R->ambient(), st.poly_srcs)));
        break;
    }
    case Statement::Kind::ModuleDecl: {
        check_fresh(env, st);
        const auto& R = env.ring(st.ring_name, st.line, st.col);
        if (st.module_kind == "free") {
            env.modules.emplace(st.name, FPModule::free_module(R, st.free_rank));
        } else {
            std::size_t rows = st.matrix_srcs.size();
            std::size_t cols = rows ? st.matrix_srcs[0].size() : 0;
            PolyMatrix m(R, rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    m.set(i, j, parse_poly(R->ambient(), st.matrix_srcs[i][j]));
            env.modules.emplace(st.name, FPModule::cokernel(R, std::move(m)));
        }
        break;
    }
    case Statement::Kind::MapDecl: {
        check_fresh(env, st);
        const auto& S = env.ring(st.ring_name, st.line, st.col);
        const auto& T = env.ring(st.target_ring, st.line, st.col);
        std::vector<Poly> images(S->ambient()->nvars(), Poly());
        std::vector<bool> seen(images.size(), false);
        for (const auto& [var, src] : st.map_images) {
            auto idx = S->ambient()->var_index(var);
            if (!idx) throw ParseError("map image for unknown variable '" + var + "'", st.line, st.col);
            if (seen[*idx]) throw ParseError("duplicate image for variable '" + var + "'", st.line, st.col);
            seen[*idx] = true;
            images[*idx] = parse_poly(T->ambient(), src);
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i])
                throw ParseError("missing image for variable '" + S->ambient()->vars()[i] + "'",
                                 st.line, st.col);
        env.maps.emplace(st.name, RingMap::make(S, T, std::move(images)));
        break;
    }
    case Statement::Kind::AssumeFlat: {
        env.map(st.name, st.line, st.col);
        env.flat_maps.insert(st.name);
        break;
    }
    case Statement::Kind::Gb: {
        const Ideal& I = env.ideal(st.name, st.line, st.col);
        em.begin("gb " + st.name);
        em.field("ring", I.ring()->str());
        em.field("basis", I.str());
        em.end();
        break;
    }
    case Statement::Kind::Sym:
    case Statement::Kind::Rees: {
        const FPModule& M = env.module(st.name, st.line, st.col);
        bool is_rees = st.kind == Statement::Kind::Rees;
        GradedAlgebra G = is_rees ? rees_presentation(M) : sym_presentation(M);
        em.begin((is_rees ? "rees " : "sym ") + st.name);
        em.field("base", G.base()->str());
        em.field("tvars", tvars_str(G));
        em.field("ideal", ideal_of_graded_str(G));
        em.end();
        break;
    }
    case Statement::Kind::Tl: {
        const FPModule& M = env.module(st.name, st.line, st.col);
        FPModule result;
        std::string header = "tl " + st.name;
        if (st.via.empty()) {
            result = torsionless_quotient(M).module;
        } else {
            header += " via " + st.via;
            const RingMap& f = env.map(st.via, st.line, st.col);
            result = torsionless_via_flat(M, f, env.flat_maps.count(st.via) > 0);
        }
        em.begin(header);
        em.field("ring", result.ring()->str());
        em.field("gens", std::to_string(result.ngens()));
        em.field("presentation", result.presentation().str());
        FPModule mini = result.minimized();
        em.field("minimized gens", std::to_string(mini.ngens()));
        em.field("minimized presentation", mini.presentation().str());
        em.end();
        break;
    }
    case Statement::Kind::AlgTl: {
        const auto& B = env.ring(st.name, st.line, st.col);
        const RingMap& f = env.map(st.via, st.line, st.col);
        AffineRingPtr result = algebra_image_quotient(B, f);
        em.begin("algtl " + st.name + " via " + st.via);
        em.field("ring", result->str());
        em.end();
        break;
    }
    case Statement::Kind::Blowup: {
        const FPModule& M = env.module(st.name, st.line, st.col);
        GradedAlgebra G = rees_presentation(M);
        auto charts = proj_charts(G);
        em.begin("blowup " + st.name);
        em.field("base", G.base()->str());
        em.field("tvars", tvars_str(G));
        em.field("ideal", ideal_of_graded_str(G));
        em.field_bool("empty", is_proj_empty(G));
        emit_charts(em, charts);
        em.end();
        break;
    }
    case Statement::Kind::Charts: {
        const FPModule& M = env.module(st.name, st.line, st.col);
        GradedAlgebra G = st.inner == "rees" ? rees_presentation(M) : sym_presentation(M);
        em.begin("charts (" + st.inner + " " + st.name + ")");
        em.field("algebra", G.str());
        emit_charts(em, proj_charts(G));
        em.end();
        break;
    }
    case Statement::Kind::Nash: {
        const FPModule& M = env.module(st.name, st.line, st.col);
        Ideal jc = Ideal::make(M.ring(), parse_polys(M.ring()->ambient(), st.poly_srcs));
        NashResult nash = nash_transform(M, st.rank, jc);
        em.begin("nash " + st.name + " rank " + std::to_string(st.rank) + " minus " + jc.str());
        em.field("base", nash.algebra.base()->str());
        em.field("tvars", tvars_str(nash.algebra));
        em.field("ideal", ideal_of_graded_str(nash.algebra));
        emit_charts(em, nash.charts);
        em.end();
        break;
    }
    case Statement::Kind::Dense: {
        const auto& A = env.ring(st.name, st.line, st.col);
        Ideal jc = Ideal::make(A, parse_polys(A->ambient(), st.poly_srcs));
        DensityReport rep = schematically_dense(A, jc);
        em.begin("dense " + st.name + " minus " + jc.str());
        em.field_bool("dense", rep.dense);
        if (rep.witness) em.field("witness", rep.witness->str());
        em.end();
        break;
    }
    case Statement::Kind::Assof: {
        const FPModule& M = env.module(st.name, st.line, st.col);
        std::vector<Ideal> primes;
        for (const auto& srcs : st.prime_srcs)
            primes.push_back(Ideal::make(M.ring(), parse_polys(M.ring()->ambient(), srcs)));
        AssofReport rep = assofrees_check(M, primes);
        em.begin("assof " + st.name);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            em.field("prime " + primes[i].str(),
                     rep.per_prime[i] ? "condition holds" : "condition fails");
        }
        em.field_bool("aggregate", rep.aggregate);
        em.end();
        break;
    }
    case Statement::Kind::Compare: {
        const FPModule& M = env.module(st.name, st.line, st.col);
        const RingMap& f = env.map(st.via, st.line, st.col);
        CompareReport rep = compare_base_change(M, f);
        em.begin("compare " + st.name + " via " + st.via);
        em.field("left", rep.left.str());
        em.field("right", rep.right.str());
        em.field("surjection", rep.surjection ? "verified" : "no canonical map");
        if (rep.witness) em.field("witness", rep.witness->str());
        em.end();
        break;
    }
    case Statement::Kind::Inject: {
        const FPModule& M = env.module(st.name, st.line, st.col);
        const RingMap& f = env.map(st.via, st.line, st.col);
        bool inj = check_injectivity_flat(M, f, env.flat_maps.count(st.via) > 0);
        em.begin("inject " + st.name + " via " + st.via);
        em.field_bool("injective", inj);
        em.end();
        break;
    }
    case Statement::Kind::Verify: {
        auto checks = run_verify_checks();
        em.begin("verify");
        em.checks(checks);
        bool all = true;
        for (const auto& c : checks) all = all && c.pass;
        em.field("result", all ? "all checks passed" : "MISMATCH");
        em.end();
        if (!all) verify_status = 2;
        break;
    }
    }
}

} // namespace

int execute(const Script& script, Env& env, std::ostream& out, std::ostream& err, bool as_json) {
    Emitter em(out, as_json);
    int verify_status = 0;
    for (const auto& st : script.statements) {
        try {
            execute_one(st, env, em, verify_status);
        } catch (const Error& e) {
            em.flush();
            err << "error (line " << st.line << "): " << e.what() << "\n";
            return 1;
        }
    }
    em.flush();
    return verify_status;
}

int run_script(const std::string& input, std::ostream& out, std::ostream& err, bool as_json) {
    try {
        Script script = parse(input);
        Env env;
        return execute(script, env, out, err, as_json);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace dsl
} // namespace reeskit
