#include "mancalog/parser.hpp"

#include <cctype>
#include <sstream>

namespace mancalog {

std::string Diagnostic::to_string() const {
  std::ostringstream os;
  os << file << ":" << line << ":" << column << ": " << message;
  return os.str();
}

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, Directive, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
public:
  Lexer(std::string_view src, const std::string& file,
        std::vector<Diagnostic>& diags)
      : src_(src), file_(file), diags_(diags) {
    tokenize();
  }

  const std::vector<Token>& tokens() const { return tokens_; }

private:
  void error(int line, int col, std::string msg) {
    diags_.push_back({file_, line, col, std::move(msg)});
  }

  void tokenize() {
    size_t i = 0;
    int line = 1, col = 1;
    auto advance = [&](size_t n) {
      for (size_t k = 0; k < n; ++k) {
        if (src_[i + k] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      i += n;
    };
    while (i < src_.size()) {
      char c = src_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
        continue;
      }
      if (c == '/' && i + 1 < src_.size() && src_[i + 1] == '/') {
        while (i < src_.size() && src_[i] != '\n') advance(1);
        continue;
      }
      int tl = line, tc = col;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i;
        while (j < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
          ++j;
        tokens_.push_back({Token::Kind::Ident, std::string(src_.substr(i, j - i)), tl, tc});
        advance(j - i);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        if (j < src_.size() && src_[j] == '.' && j + 1 < src_.size() &&
            std::isdigit(static_cast<unsigned char>(src_[j + 1]))) {
          ++j;
          while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        }
        tokens_.push_back({Token::Kind::Number, std::string(src_.substr(i, j - i)), tl, tc});
        advance(j - i);
        continue;
      }
      if (c == '#') {
        size_t j = i + 1;
        while (j < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
          ++j;
        tokens_.push_back({Token::Kind::Directive, std::string(src_.substr(i + 1, j - i - 1)), tl, tc});
        advance(j - i);
        continue;
      }
      // Multi-character operators first.
      if (c == '-' && i + 1 < src_.size() && src_[i + 1] == '>') {
        tokens_.push_back({Token::Kind::Punct, "->", tl, tc});
        advance(2);
        continue;
      }
      if (c == '<' && i + 1 < src_.size() && (src_[i + 1] == '-' || src_[i + 1] == '~')) {
        tokens_.push_back({Token::Kind::Punct, std::string("<") + src_[i + 1], tl, tc});
        advance(2);
        continue;
      }
      if (std::string_view(";:,[]()!&|@").find(c) != std::string_view::npos) {
        tokens_.push_back({Token::Kind::Punct, std::string(1, c), tl, tc});
        advance(1);
        continue;
      }
      error(tl, tc, std::string("unexpected character '") + c + "'");
      advance(1);
    }
    tokens_.push_back({Token::Kind::End, "", line, col});
  }

  std::string_view src_;
  std::string file_;
  std::vector<Diagnostic>& diags_;
  std::vector<Token> tokens_;
};

class Parser {
public:
  Parser(const std::vector<Token>& toks, const NetworkData& net,
         const std::string& file, std::vector<Diagnostic>& diags)
      : toks_(toks), file_(file), diags_(diags) {
    program_.network = net.network;
    program_.registry = net.registry;
    t_max_ = net.t_max;
  }

  ParseResult run() {
    while (!at_end()) {
      if (!parse_item()) sync();
    }
    if (t_max_ < 0) {
      diags_.push_back({file_, 1, 1, "no t_max: neither the network file nor a #tmax directive set the horizon"});
    } else {
      program_.t_max = t_max_;
    }
    ParseResult res;
    if (diags_.empty()) {
      for (const Violation& v : validate(program_))
        diags_.push_back({file_, v.span.line, v.span.column, v.where + ": " + v.message});
    }
    res.diagnostics = diags_;
    if (res.diagnostics.empty()) res.program = std::move(program_);
    return res;
  }

private:
  const Token& peek(int off = 0) const {
    size_t i = pos_ + off;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  const Token& next() {
    const Token& t = peek();
    if (!at_end()) ++pos_;
    return t;
  }
  bool is_punct(const char* p, int off = 0) const {
    return peek(off).kind == Token::Kind::Punct && peek(off).text == p;
  }
  bool is_ident(const char* s, int off = 0) const {
    return peek(off).kind == Token::Kind::Ident && peek(off).text == s;
  }
  bool error_here(std::string msg) {
    diags_.push_back({file_, peek().line, peek().column, std::move(msg)});
    return false;
  }
  bool expect_punct(const char* p) {
    if (is_punct(p)) {
      ++pos_;
      return true;
    }
    return error_here(std::string("expected '") + p + "', found '" + peek().text + "'");
  }
  // Skip to just past the next ';' (error recovery).
  void sync() {
    while (!at_end()) {
      if (is_punct(";")) {
        ++pos_;
        return;
      }
      ++pos_;
    }
  }
  SourceSpan span_of(const Token& t) const {
    return {t.line, t.column, static_cast<int>(t.text.size())};
  }

  std::optional<int> parse_nat() {
    if (peek().kind != Token::Kind::Number ||
        peek().text.find('.') != std::string::npos) {
      error_here("expected a natural number, found '" + peek().text + "'");
      return std::nullopt;
    }
    try {
      return std::stoi(next().text);
    } catch (...) {
      error_here("number out of range");
      return std::nullopt;
    }
  }

  std::optional<Rational> parse_dec() {
    if (peek().kind != Token::Kind::Number) {
      error_here("expected a decimal literal, found '" + peek().text + "'");
      return std::nullopt;
    }
    auto r = parse_rational(next().text);
    if (!r) error_here("malformed decimal literal");
    return r;
  }

  std::optional<Bound> parse_bound() {
    if (is_ident("empty")) {
      ++pos_;
      return Bound::empty();
    }
    if (is_ident("true")) {
      ++pos_;
      return Bound::full();
    }
    bool lo_open;
    if (is_punct("[")) lo_open = false;
    else if (is_punct("(")) lo_open = true;
    else {
      error_here("expected a bound, found '" + peek().text + "'");
      return std::nullopt;
    }
    const Token& open_tok = next();
    auto lo = parse_dec();
    if (!lo || !expect_punct(",")) return std::nullopt;
    auto hi = parse_dec();
    if (!hi) return std::nullopt;
    bool hi_open;
    if (is_punct("]")) hi_open = false;
    else if (is_punct(")")) hi_open = true;
    else {
      error_here("expected ']' or ')' to close the bound");
      return std::nullopt;
    }
    ++pos_;
    if (*lo < 0 || *lo > 1 || *hi < 0 || *hi > 1) {
      diags_.push_back({file_, open_tok.line, open_tok.column,
                        "bound endpoints must lie in [0,1]"});
      return std::nullopt;
    }
    return Bound::make(*lo, lo_open, *hi, hi_open);
  }

  std::optional<LabelId> resolve_label(const Token& t) {
    auto id = program_.registry.find(t.text);
    if (!id) {
      diags_.push_back({file_, t.line, t.column, "unregistered label '" + t.text + "'"});
      return std::nullopt;
    }
    return id;
  }

  std::optional<Atom> parse_atom() {
    if (peek().kind != Token::Kind::Ident) {
      error_here("expected a label, found '" + peek().text + "'");
      return std::nullopt;
    }
    const Token& name = next();
    if (!expect_punct(":")) return std::nullopt;
    auto bound = parse_bound();
    if (!bound) return std::nullopt;
    auto label = resolve_label(name);
    if (!label) return std::nullopt;
    return Atom{*label, *bound};
  }

  // formula precedence: ! over & over |; & and | left-associative.
  std::optional<Formula> parse_formula() { return parse_or(); }

  std::optional<Formula> parse_or() {
    auto lhs = parse_and();
    if (!lhs) return std::nullopt;
    while (is_punct("|")) {
      ++pos_;
      auto rhs = parse_and();
      if (!rhs) return std::nullopt;
      lhs = Formula::disj(std::move(*lhs), std::move(*rhs));
    }
    return lhs;
  }

  std::optional<Formula> parse_and() {
    auto lhs = parse_unary();
    if (!lhs) return std::nullopt;
    while (is_punct("&")) {
      ++pos_;
      auto rhs = parse_unary();
      if (!rhs) return std::nullopt;
      lhs = Formula::conj(std::move(*lhs), std::move(*rhs));
    }
    return lhs;
  }

  std::optional<Formula> parse_unary() {
    if (is_punct("!")) {
      ++pos_;
      auto f = parse_unary();
      if (!f) return std::nullopt;
      return Formula::negate(std::move(*f));
    }
    if (is_punct("(")) {
      ++pos_;
      auto f = parse_formula();
      if (!f || !expect_punct(")")) return std::nullopt;
      return f;
    }
    if (is_ident("true") && !is_punct(":", 1)) {
      ++pos_;
      return Formula::top();
    }
    auto a = parse_atom();
    if (!a) return std::nullopt;
    return Formula::atom(a->label, a->bound);
  }

  // conj := "true" | atom ("&" atom)*
  std::optional<std::vector<Atom>> parse_conj() {
    std::vector<Atom> atoms;
    if (is_ident("true") && !is_punct(":", 1)) {
      ++pos_;
      return atoms;
    }
    for (;;) {
      auto a = parse_atom();
      if (!a) return std::nullopt;
      atoms.push_back(*a);
      if (!is_punct("&")) break;
      ++pos_;
    }
    return atoms;
  }

  std::optional<CompId> parse_comp() {
    if (is_ident("node")) {
      ++pos_;
      const Token& id = next();
      if (id.kind != Token::Kind::Ident && id.kind != Token::Kind::Number) {
        diags_.push_back({file_, id.line, id.column, "expected a node id"});
        return std::nullopt;
      }
      auto v = program_.network.find_node(id.text);
      if (!v) {
        diags_.push_back({file_, id.line, id.column, "unknown node '" + id.text + "'"});
        return std::nullopt;
      }
      return program_.network.node_comp(*v);
    }
    if (is_ident("edge")) {
      ++pos_;
      const Token& a = next();
      if (!expect_punct("->")) return std::nullopt;
      const Token& b = next();
      auto u = program_.network.find_node(a.text);
      auto v = program_.network.find_node(b.text);
      if (!u || !v) {
        diags_.push_back({file_, a.line, a.column, "unknown edge endpoint"});
        return std::nullopt;
      }
      auto e = program_.network.find_edge(*u, *v);
      if (!e) {
        diags_.push_back({file_, a.line, a.column,
                          "no edge " + a.text + "->" + b.text + " in the network"});
        return std::nullopt;
      }
      return program_.network.edge_comp(*e);
    }
    error_here("expected 'node' or 'edge'");
    return std::nullopt;
  }

  std::optional<InfluenceSpec> parse_infl() {
    if (peek().kind != Token::Kind::Ident) {
      error_here("expected an influence function name");
      return std::nullopt;
    }
    const Token& name = next();
    std::optional<Rational> theta;
    std::optional<Bound> bound;
    if (is_punct("(")) {
      ++pos_;
      // tip(DEC) | softtip(DEC, bound) | negtip(bound) | const(bound)
      if (peek().kind == Token::Kind::Number) {
        theta = parse_dec();
        if (!theta) return std::nullopt;
        if (is_punct(",")) {
          ++pos_;
          bound = parse_bound();
          if (!bound) return std::nullopt;
        }
      } else {
        bound = parse_bound();
        if (!bound) return std::nullopt;
      }
      if (!expect_punct(")")) return std::nullopt;
    }
    auto spec = builtin_influence(name.text, theta, bound);
    if (!spec) {
      diags_.push_back({file_, name.line, name.column,
                        "unknown or malformed influence function '" + name.text + "'"});
      return std::nullopt;
    }
    return spec;
  }

  bool parse_directive() {
    const Token& d = next();
    if (d.text == "tmax") {
      auto n = parse_nat();
      if (!n) return false;
      if (t_max_ >= 0 && t_max_ != *n) {
        diags_.push_back({file_, d.line, d.column,
                          "#tmax " + std::to_string(*n) + " conflicts with horizon " +
                              std::to_string(t_max_)});
        return false;
      }
      t_max_ = *n;
      return expect_punct(";");
    }
    if (d.text == "fluent" || d.text == "nonfluent") {
      bool fluent = d.text == "fluent";
      bool any = false;
      while (peek().kind == Token::Kind::Ident) {
        const Token& name = next();
        any = true;
        if (!program_.registry.add(name.text, fluent)) {
          diags_.push_back({file_, name.line, name.column,
                            "label '" + name.text + "' already registered with the opposite fluency"});
          return false;
        }
      }
      if (!any) return error_here("expected at least one label name");
      return expect_punct(";");
    }
    diags_.push_back({file_, d.line, d.column, "unknown directive '#" + d.text + "'"});
    return false;
  }

  bool parse_fact() {
    const Token& kw = next();  // "fact"
    auto atom = parse_atom();
    if (!atom || !expect_punct("@")) return false;
    auto comp = parse_comp();
    if (!comp) return false;
    if (!is_ident("in")) return error_here("expected 'in'");
    ++pos_;
    if (!expect_punct("[")) return false;
    auto t1 = parse_nat();
    if (!t1 || !expect_punct(",")) return false;
    auto t2 = parse_nat();
    if (!t2) return false;
    if (!expect_punct("]") || !expect_punct(";")) return false;
    program_.facts.push_back({*atom, *comp, *t1, *t2, span_of(kw)});
    return true;
  }

  bool parse_rule() {
    const Token& kw = next();  // "rule"
    if (peek().kind != Token::Kind::Ident) return error_here("expected the head label");
    const Token& head_tok = next();
    auto head = resolve_label(head_tok);
    if (!head || !expect_punct("<-")) return false;
    auto dt = parse_nat();
    if (!dt || !expect_punct(":")) return false;
    auto target = parse_formula();
    if (!target || !expect_punct(",") || !expect_punct("(")) return false;
    auto g_edge = parse_formula();
    if (!g_edge || !expect_punct(",")) return false;
    auto g_node = parse_formula();
    if (!g_node || !expect_punct(",")) return false;
    auto trigger = parse_conj();
    if (!trigger || !expect_punct(")") || !expect_punct(":")) return false;
    auto infl = parse_infl();
    if (!infl || !expect_punct(";")) return false;
    Rule r;
    r.head = *head;
    r.delta_t = *dt;
    r.target = std::move(*target);
    r.neighbor = {std::move(*g_edge), std::move(*g_node), std::move(*trigger),
                  std::move(*infl)};
    r.span = span_of(kw);
    program_.rules.push_back(std::move(r));
    return true;
  }

  bool parse_ic() {
    const Token& kw = next();  // "constraint"
    auto head = parse_atom();
    if (!head || !expect_punct("<~")) return false;
    auto body = parse_conj();
    if (!body || !expect_punct(";")) return false;
    program_.constraints.push_back({*head, std::move(*body), span_of(kw)});
    return true;
  }

  bool parse_item() {
    if (peek().kind == Token::Kind::Directive) return parse_directive();
    if (is_ident("fact")) return parse_fact();
    if (is_ident("rule")) return parse_rule();
    if (is_ident("constraint")) return parse_ic();
    return error_here("expected 'fact', 'rule', 'constraint', or a directive; found '" +
                      peek().text + "'");
  }

  const std::vector<Token>& toks_;
  size_t pos_ = 0;
  std::string file_;
  std::vector<Diagnostic>& diags_;
  Program program_;
  int t_max_ = -1;
};

std::string format_formula(const Formula& f, const LabelRegistry& reg,
                           int parent_prec) {
  // precedence: atom/!/group = 3, & = 2, | = 1
  switch (f.kind()) {
    case Formula::Kind::True:
      return "true";
    case Formula::Kind::Atom:
      return reg.name(f.atom().label) + ":" + f.atom().bound.to_string();
    case Formula::Kind::Not:
      return "!" + format_formula(f.child(0), reg, 3);
    case Formula::Kind::And: {
      std::string s = format_formula(f.child(0), reg, 2) + " & " +
                      format_formula(f.child(1), reg, 2);
      return parent_prec > 2 ? "(" + s + ")" : s;
    }
    case Formula::Kind::Or: {
      std::string s = format_formula(f.child(0), reg, 1) + " | " +
                      format_formula(f.child(1), reg, 1);
      return parent_prec > 1 ? "(" + s + ")" : s;
    }
  }
  return "";
}

std::string format_conj(const std::vector<Atom>& atoms, const LabelRegistry& reg) {
  if (atoms.empty()) return "true";
  std::string s;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (i) s += " & ";
    s += reg.name(atoms[i].label) + ":" + atoms[i].bound.to_string();
  }
  return s;
}

std::string format_comp(const Network& net, CompId c) {
  if (net.comp_is_node(c)) return "node " + net.node_name(c);
  const auto& [u, v] = net.edge(net.comp_edge(c));
  return "edge " + net.node_name(u) + " -> " + net.node_name(v);
}

}  // namespace

ParseResult parse_program(std::string_view text, const NetworkData& net,
                          const std::string& file) {
  std::vector<Diagnostic> diags;
  Lexer lex(text, file, diags);
  Parser parser(lex.tokens(), net, file, diags);
  return parser.run();
}

std::string print_program(const Program& p) {
  std::ostringstream os;
  os << "#tmax " << p.t_max << ";\n";
  // One directive per label, in registry order, so re-parsing rebuilds the
  // registry with identical ids.
  for (LabelId l = 0; l < p.registry.size(); ++l)
    os << (p.registry.is_fluent(l) ? "#fluent " : "#nonfluent ")
       << p.registry.name(l) << ";\n";
  for (const Fact& f : p.facts)
    os << "fact " << p.registry.name(f.atom.label) << ":" << f.atom.bound.to_string()
       << " @ " << format_comp(p.network, f.comp) << " in [" << f.t1 << ","
       << f.t2 << "];\n";
  for (const Rule& r : p.rules)
    os << "rule " << p.registry.name(r.head) << " <- " << r.delta_t << " : "
       << format_formula(r.target, p.registry, 0) << ", ("
       << format_formula(r.neighbor.edge_formula, p.registry, 0) << ", "
       << format_formula(r.neighbor.node_formula, p.registry, 0) << ", "
       << format_conj(r.neighbor.trigger, p.registry) << ") : "
       << r.neighbor.influence.text() << ";\n";
  for (const IntegrityConstraint& ic : p.constraints)
    os << "constraint " << p.registry.name(ic.head.label) << ":"
       << ic.head.bound.to_string() << " <~ " << format_conj(ic.body, p.registry)
       << ";\n";
  return os.str();
}

FactParseResult parse_fact_text(std::string_view text, const Program& p) {
  // Reuse the program parser by wrapping the fact in its statement form.
  std::string wrapped = "fact " + std::string(text);
  if (wrapped.find(';') == std::string::npos) wrapped += ";";
  NetworkData net{p.network, p.registry, p.t_max};
  ParseResult res = parse_program(wrapped, net, "<fact>");
  FactParseResult out;
  out.diagnostics = res.diagnostics;
  if (res.program && res.program->facts.size() == 1)
    out.fact = res.program->facts[0];
  else if (out.diagnostics.empty())
    out.diagnostics.push_back({"<fact>", 1, 1, "expected exactly one fact"});
  return out;
}

}  // namespace mancalog
