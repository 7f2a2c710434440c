#include "waring/frontend.hpp"

#include <cctype>
#include <json.hpp>

namespace waring {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::Kind::End, "", start};
            return;
        }
        char c = s_[i_];
        auto single = [&](Token::Kind k) {
            ++i_;
            tok_ = {k, std::string(1, c), start};
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Kind::Number, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Kind::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        switch (c) {
            case '+': return single(Token::Kind::Plus);
            case '-': return single(Token::Kind::Minus);
            case '*': return single(Token::Kind::Star);
            case '^': return single(Token::Kind::Caret);
            case '/': return single(Token::Kind::Slash);
            case '(': return single(Token::Kind::LParen);
            case ')': return single(Token::Kind::RParen);
            default:
                throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_{Token::Kind::End, "", 0};
};

std::unique_ptr<ExprAST> make_node(ExprAST::Kind k, std::size_t pos) {
    auto n = std::make_unique<ExprAST>();
    n->kind = k;
    n->pos = pos;
    return n;
}

class Parser {
  public:
    explicit Parser(const std::string& s) : lex_(s) {}

    std::unique_ptr<ExprAST> parse() {
        auto e = expr();
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError(lex_.peek().pos, "unexpected token '" + lex_.peek().text + "'");
        return e;
    }

  private:
    std::unique_ptr<ExprAST> expr() {
        auto sum = make_node(ExprAST::Kind::Sum, lex_.peek().pos);
        bool negate_first = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.next();
            negate_first = true;
        } else if (lex_.peek().kind == Token::Kind::Plus) {
            lex_.next();
        }
        auto first = term();
        if (negate_first) {
            auto neg = make_node(ExprAST::Kind::Negate, first->pos);
            neg->children.push_back(std::move(first));
            first = std::move(neg);
        }
        sum->children.push_back(std::move(first));
        while (lex_.peek().kind == Token::Kind::Plus ||
               lex_.peek().kind == Token::Kind::Minus) {
            bool minus = lex_.next().kind == Token::Kind::Minus;
            auto t = term();
            if (minus) {
                auto neg = make_node(ExprAST::Kind::Negate, t->pos);
                neg->children.push_back(std::move(t));
                t = std::move(neg);
            }
            sum->children.push_back(std::move(t));
        }
        if (sum->children.size() == 1) return std::move(sum->children[0]);
        return sum;
    }

    std::unique_ptr<ExprAST> term() {
        auto prod = make_node(ExprAST::Kind::Product, lex_.peek().pos);
        prod->children.push_back(factor());
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.next();
            prod->children.push_back(factor());
        }
        if (prod->children.size() == 1) return std::move(prod->children[0]);
        return prod;
    }

    std::unique_ptr<ExprAST> factor() {
        auto base = atom();
        if (lex_.peek().kind == Token::Kind::Caret) {
            std::size_t cpos = lex_.next().pos;
            if (lex_.peek().kind == Token::Kind::Minus)
                throw ParseError(lex_.peek().pos, "exponent must be a non-negative integer");
            if (lex_.peek().kind != Token::Kind::Number)
                throw ParseError(lex_.peek().pos, "non-integer exponent");
            Token e = lex_.next();
            auto p = make_node(ExprAST::Kind::Power, cpos);
            p->exponent = std::stoi(e.text);
            p->children.push_back(std::move(base));
            return p;
        }
        return base;
    }

    std::unique_ptr<ExprAST> atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::Kind::LParen: {
                lex_.next();
                auto e = expr();
                if (lex_.peek().kind != Token::Kind::RParen)
                    throw ParseError(lex_.peek().pos, "expected ')'");
                lex_.next();
                return e;
            }
            case Token::Kind::Number: {
                Token num = lex_.next();
                Rat v{Int(num.text)};
                if (lex_.peek().kind == Token::Kind::Slash) {
                    lex_.next();
                    if (lex_.peek().kind != Token::Kind::Number)
                        throw ParseError(lex_.peek().pos, "expected denominator");
                    Token den = lex_.next();
                    Int d(den.text);
                    if (d == 0) throw ParseError(den.pos, "zero denominator");
                    v /= Rat(d);
                }
                auto n = make_node(ExprAST::Kind::Rational, num.pos);
                n->value = v;
                return n;
            }
            case Token::Kind::Ident: {
                Token id = lex_.next();
                auto n = make_node(ExprAST::Kind::Var, id.pos);
                n->name = id.text;
                return n;
            }
            default:
                throw ParseError(t.pos, "unexpected token '" + t.text + "'");
        }
    }

    Lexer lex_;
};

void collect_vars(const ExprAST& n, std::vector<std::string>& vars) {
    if (n.kind == ExprAST::Kind::Var) {
        if (std::find(vars.begin(), vars.end(), n.name) == vars.end())
            vars.push_back(n.name);
    }
    for (const auto& c : n.children) collect_vars(*c, vars);
}

Poly eval_poly(const ExprAST& n, const std::vector<std::string>& vars) {
    int nv = static_cast<int>(vars.size());
    switch (n.kind) {
        case ExprAST::Kind::Sum: {
            Poly r(nv);
            for (const auto& c : n.children) r += eval_poly(*c, vars);
            return r;
        }
        case ExprAST::Kind::Product: {
            Poly r = Poly::constant(nv, GaussRat(1));
            for (const auto& c : n.children) r = r * eval_poly(*c, vars);
            return r;
        }
        case ExprAST::Kind::Power:
            return eval_poly(*n.children[0], vars).pow(n.exponent);
        case ExprAST::Kind::Negate:
            return -eval_poly(*n.children[0], vars);
        case ExprAST::Kind::Rational:
            return Poly::constant(nv, GaussRat(n.value));
        case ExprAST::Kind::Imaginary:
            return Poly::constant(nv, GaussRat::i());
        case ExprAST::Kind::Var: {
            auto it = std::find(vars.begin(), vars.end(), n.name);
            if (it == vars.end())
                throw ParseError(n.pos, "unknown identifier '" + n.name + "'");
            return Poly::variable(nv, static_cast<int>(it - vars.begin()));
        }
    }
    throw std::logic_error("eval_poly: bad node");
}

GaussRat eval_constant(const ExprAST& n) {
    switch (n.kind) {
        case ExprAST::Kind::Sum: {
            GaussRat r(0);
            for (const auto& c : n.children) r += eval_constant(*c);
            return r;
        }
        case ExprAST::Kind::Product: {
            GaussRat r(1);
            for (const auto& c : n.children) r *= eval_constant(*c);
            return r;
        }
        case ExprAST::Kind::Power:
            return pow(eval_constant(*n.children[0]), n.exponent);
        case ExprAST::Kind::Negate:
            return -eval_constant(*n.children[0]);
        case ExprAST::Kind::Rational:
            return GaussRat(n.value);
        case ExprAST::Kind::Imaginary:
            return GaussRat::i();
        case ExprAST::Kind::Var:
            if (n.name == "i") return GaussRat::i();
            throw ParseError(n.pos, "variables not allowed here: '" + n.name + "'");
    }
    throw std::logic_error("eval_constant: bad node");
}

}  // namespace

std::unique_ptr<ExprAST> parse_expr(const std::string& text) {
    return Parser(text).parse();
}

ParsedPoly parse_poly(const std::string& text,
                      const std::optional<std::vector<std::string>>& vars) {
    auto ast = parse_expr(text);
    std::vector<std::string> names;
    if (vars) {
        names = *vars;
    } else {
        collect_vars(*ast, names);
    }
    return {eval_poly(*ast, names), names};
}

ProjPoint parse_point(const std::string& text) {
    std::string s = text;
    // strip surrounding brackets
    auto l = s.find_first_not_of(" \t");
    auto r = s.find_last_not_of(" \t");
    if (l == std::string::npos) throw ParseError(0, "empty point");
    if (s[l] == '[' && s[r] == ']') s = s.substr(l + 1, r - l - 1);
    // split on ':' or ',' outside parentheses
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == ':' || c == ',') && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    VectorXq v(static_cast<int>(parts.size()));
    for (std::size_t k = 0; k < parts.size(); ++k)
        v[static_cast<int>(k)] = eval_constant(*parse_expr(parts[k]));
    return ProjPoint::from_exact(std::move(v));
}

void require_homogeneous_input(const Poly& F, const std::vector<std::string>& vars) {
    if (F.is_zero()) throw std::invalid_argument("zero polynomial");
    if (F.is_homogeneous()) return;
    const auto& lo = *F.terms().begin();
    const auto& hi = *F.terms().rbegin();
    auto mono_str = [&](const ExpVec& e) {
        Poly m = Poly::monomial(e, GaussRat(1));
        return print_poly(m, vars);
    };
    throw std::invalid_argument(
        "non-homogeneous input: term '" + mono_str(lo.first) + "' has degree " +
        std::to_string(expvec_degree(lo.first)) + " but term '" + mono_str(hi.first) +
        "' has degree " + std::to_string(expvec_degree(hi.first)));
}

std::vector<std::string> default_var_names(int nvars) {
    if (nvars <= 3) {
        std::vector<std::string> n = {"x", "y", "z"};
        n.resize(nvars);
        return n;
    }
    std::vector<std::string> n;
    for (int i = 0; i < nvars; ++i) n.push_back("x" + std::to_string(i));
    return n;
}

std::vector<std::string> dual_var_names(const std::vector<std::string>& vars) {
    std::vector<std::string> out;
    for (const auto& v : vars) {
        std::string u = v;
        for (auto& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        out.push_back(u);
    }
    return out;
}

namespace {

std::string monomial_str(const ExpVec& e, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string coeff_str(const GaussRat& c) {
    if (c.is_real()) return to_string(c.re);
    return "(" + to_string(c) + ")";
}

}  // namespace

std::string print_poly(const Poly& F, const std::vector<std::string>& vars) {
    if (F.is_zero()) return "0";
    if (static_cast<int>(vars.size()) != F.nvars())
        throw std::invalid_argument("print_poly: variable name count mismatch");
    std::string out;
    bool first = true;
    for (auto it = F.terms().rbegin(); it != F.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono = monomial_str(e, vars);
        GaussRat cc = c;
        std::string sep;
        if (first) {
            if (cc.is_real() && cc.re < 0) {
                out += "-";
                cc = -cc;
            }
        } else {
            if (cc.is_real() && cc.re < 0) {
                sep = " - ";
                cc = -cc;
            } else {
                sep = " + ";
            }
        }
        out += sep;
        if (mono.empty()) {
            out += coeff_str(cc);
        } else if (cc == GaussRat(1)) {
            out += mono;
        } else {
            out += coeff_str(cc) + "*" + mono;
        }
        first = false;
    }
    return out;
}

std::string print_poly(const Poly& F) { return print_poly(F, default_var_names(F.nvars())); }

// --- JSON --------------------------------------------------------------------

using nlohmann::json;

namespace {

json point_to_json(const ProjPoint& p) {
    json arr = json::array();
    if (p.exact) {
        for (int i = 0; i < p.q.size(); ++i) arr.push_back(to_string(p.q[i]));
    } else {
        for (int i = 0; i < p.c.size(); ++i)
            arr.push_back(json::array({p.c[i].real(), p.c[i].imag()}));
    }
    return json{{"exact", p.exact}, {"coords", arr}};
}

ProjPoint point_from_json(const json& j) {
    bool exact = j.at("exact").get<bool>();
    const json& arr = j.at("coords");
    if (exact) {
        VectorXq v(arr.size());
        for (std::size_t i = 0; i < arr.size(); ++i)
            v[static_cast<int>(i)] = eval_constant(*parse_expr(arr[i].get<std::string>()));
        return ProjPoint::from_exact(std::move(v));
    }
    Eigen::VectorXcd v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        v[static_cast<int>(i)] = {arr[i][0].get<double>(), arr[i][1].get<double>()};
    ProjPoint p;
    p.exact = false;
    p.c = std::move(v);
    return p;
}

json decomposition_to_json_obj(const Decomposition& d, const std::vector<std::string>& vars) {
    json terms = json::array();
    if (d.exact) {
        for (const auto& t : d.terms) {
            terms.push_back({{"coefficient", to_string(t.c)},
                             {"linear_form", print_poly(Poly::linear_form(t.L), vars)}});
        }
    } else {
        for (const auto& t : d.num_terms) {
            json lf = json::array();
            for (int i = 0; i < t.L.size(); ++i)
                lf.push_back(json::array({t.L[i].real(), t.L[i].imag()}));
            terms.push_back({{"coefficient", json::array({t.c.real(), t.c.imag()})},
                             {"linear_form", lf}});
        }
    }
    return json{{"degree", d.degree},
                {"exact", d.exact},
                {"residual", d.residual},
                {"variables", vars},
                {"terms", terms}};
}

Decomposition decomposition_from_json_obj(const json& j) {
    Decomposition d;
    d.degree = j.at("degree").get<int>();
    d.exact = j.at("exact").get<bool>();
    d.residual = j.at("residual").get<double>();
    std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
    for (const auto& t : j.at("terms")) {
        if (d.exact) {
            Decomposition::Term term;
            term.c = eval_constant(*parse_expr(t.at("coefficient").get<std::string>()));
            auto pp = parse_poly(t.at("linear_form").get<std::string>(), vars);
            term.L = VectorXq(vars.size());
            for (std::size_t i = 0; i < vars.size(); ++i) {
                ExpVec e(vars.size(), 0);
                e[i] = 1;
                term.L[static_cast<int>(i)] = pp.poly.coeff(e);
            }
            d.terms.push_back(std::move(term));
        } else {
            Decomposition::NumTerm term;
            term.c = {t.at("coefficient")[0].get<double>(), t.at("coefficient")[1].get<double>()};
            const json& lf = t.at("linear_form");
            term.L = Eigen::VectorXcd(lf.size());
            for (std::size_t i = 0; i < lf.size(); ++i)
                term.L[static_cast<int>(i)] = {lf[i][0].get<double>(), lf[i][1].get<double>()};
            d.num_terms.push_back(std::move(term));
        }
    }
    return d;
}

json locus_to_json_obj(const LocusDescription& l, const std::vector<std::string>& dual_vars) {
    json eqs = json::array();
    for (const auto& e : l.equations) eqs.push_back(print_poly(e, dual_vars));
    json pts = json::array();
    for (const auto& p : l.points) pts.push_back(point_to_json(p));
    json lns = json::array();
    for (const auto& ln : l.lines)
        lns.push_back(json::array({point_to_json(ln[0]), point_to_json(ln[1])}));
    json comps = json::array();
    for (const auto& c : l.components) {
        std::vector<std::string> sub;
        for (int idx : c.block_variables) sub.push_back(dual_vars[idx]);
        if (sub.empty()) sub = dual_vars;
        comps.push_back(locus_to_json_obj(c, sub));
    }
    return json{{"locus_kind", locus_kind_name(l.kind)},
                {"which", l.which == LocusDescription::Which::Waring ? "waring" : "forbidden"},
                {"certified", l.certified},
                {"equations", eqs},
                {"points", pts},
                {"lines", lns},
                {"variable_indices", l.variable_indices},
                {"block_variables", l.block_variables},
                {"components", comps},
                {"note", l.note}};
}

LocusDescription locus_from_json_obj(const json& j, const std::vector<std::string>& dual_vars) {
    LocusDescription l;
    std::string kind = j.at("locus_kind").get<std::string>();
    using K = LocusDescription::Kind;
    if (kind == "hypersurface") l.kind = K::Hypersurface;
    else if (kind == "finite_points") l.kind = K::FinitePoints;
    else if (kind == "hyperplane_union") l.kind = K::HyperplaneUnion;
    else if (kind == "lines_minus_point") l.kind = K::LinesMinusPoint;
    else if (kind == "union") l.kind = K::Union;
    else if (kind == "empty") l.kind = K::Empty;
    else if (kind == "all") l.kind = K::All;
    else throw std::invalid_argument("bad locus_kind: " + kind);
    l.which = j.at("which").get<std::string>() == "waring" ? LocusDescription::Which::Waring
                                                           : LocusDescription::Which::Forbidden;
    l.certified = j.at("certified").get<bool>();
    for (const auto& e : j.at("equations"))
        l.equations.push_back(parse_poly(e.get<std::string>(), dual_vars).poly);
    for (const auto& p : j.at("points")) l.points.push_back(point_from_json(p));
    for (const auto& ln : j.at("lines"))
        l.lines.push_back({point_from_json(ln[0]), point_from_json(ln[1])});
    l.variable_indices = j.at("variable_indices").get<std::vector<int>>();
    l.block_variables = j.at("block_variables").get<std::vector<int>>();
    for (const auto& c : j.at("components")) {
        std::vector<std::string> sub;
        for (int idx : c.at("block_variables").get<std::vector<int>>())
            sub.push_back(dual_vars[idx]);
        if (sub.empty()) sub = dual_vars;
        l.components.push_back(locus_from_json_obj(c, sub));
    }
    l.note = j.at("note").get<std::string>();
    return l;
}

}  // namespace

std::string decomposition_to_json(const Decomposition& d, const std::vector<std::string>& vars) {
    return decomposition_to_json_obj(d, vars).dump(2);
}

Decomposition decomposition_from_json(const std::string& text) {
    return decomposition_from_json_obj(json::parse(text));
}

std::string rank_to_json(const RankResult& r, const std::vector<std::string>& vars) {
    json j{{"rank", r.rank},
           {"method", rank_method_name(r.method)},
           {"certified", r.certified},
           {"lower_bound", r.lower_bound},
           {"note", r.note}};
    j["witness"] = r.witness ? decomposition_to_json_obj(*r.witness, vars) : json(nullptr);
    return j.dump(2);
}

RankResult rank_from_json(const std::string& text) {
    json j = json::parse(text);
    RankResult r;
    r.rank = j.at("rank").get<int>();
    std::string m = j.at("method").get<std::string>();
    if (m == "quadric") r.method = RankMethod::Quadric;
    else if (m == "monomial") r.method = RankMethod::Monomial;
    else if (m == "binary") r.method = RankMethod::Binary;
    else if (m == "cubic-table") r.method = RankMethod::CubicTable;
    else if (m == "split") r.method = RankMethod::Split;
    else r.method = RankMethod::LowerBoundOnly;
    r.certified = j.at("certified").get<bool>();
    r.lower_bound = j.at("lower_bound").get<int>();
    r.note = j.at("note").get<std::string>();
    if (!j.at("witness").is_null())
        r.witness = decomposition_from_json_obj(j.at("witness"));
    return r;
}

std::string locus_to_json(const LocusDescription& l, const std::vector<std::string>& dual_vars) {
    return locus_to_json_obj(l, dual_vars).dump(2);
}

LocusDescription locus_from_json(const std::string& text,
                                 const std::vector<std::string>& dual_vars) {
    return locus_from_json_obj(json::parse(text), dual_vars);
}

}  // namespace waring
