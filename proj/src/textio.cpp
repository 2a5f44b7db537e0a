#include "relfix/textio.hpp"

#include <cctype>
#include <unordered_set>

namespace relfix {

const NamedRelSet* Model::find_relset(const std::string& name) const {
  for (const auto& r : relsets)
    if (r.name == name) return &r;
  return nullptr;
}

const NamedMap* Model::find_map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name == name) return &m;
  return nullptr;
}

const NamedConjecture* Model::find_conjecture(const std::string& name) const {
  for (const auto& c : conjectures)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

struct Tok {
  enum Kind { ident, punct, end } kind = end;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Tok& peek() const { return tok_; }

  Tok take() {
    Tok t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') step();
      } else if (c == '\n' || c == '\r' || c == ' ' || c == '\t') {
        step();
      } else {
        break;
      }
    }
    tok_ = Tok{Tok::end, "", line_, col_};
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Tok::ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        tok_.text += text_[pos_];
        step();
      }
      return;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok_.kind = Tok::punct;
      tok_.text = "->";
      step();
      step();
      return;
    }
    if (c == '{' || c == '}' || c == ':' || c == ';' || c == ',') {
      tok_.kind = Tok::punct;
      tok_.text = c;
      step();
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     col_);
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Tok tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Model parse() {
    Model m;
    while (lex_.peek().kind != Tok::end) {
      Tok t = expect_ident();
      if (t.text == "relset")
        parse_relset(m);
      else if (t.text == "map")
        parse_map(m);
      else if (t.text == "conjecture")
        parse_conjecture(m);
      else
        throw ParseError("expected 'relset', 'map' or 'conjecture', got '" +
                             t.text + "'",
                         t.line, t.col);
    }
    return m;
  }

 private:
  Tok expect_ident() {
    Tok t = lex_.take();
    if (t.kind != Tok::ident)
      throw ParseError("expected identifier", t.line, t.col);
    return t;
  }

  Tok expect_punct(const char* p) {
    Tok t = lex_.take();
    if (t.kind != Tok::punct || t.text != p)
      throw ParseError(std::string("expected '") + p + "'", t.line, t.col);
    return t;
  }

  void expect_keyword(const char* kw) {
    Tok t = lex_.take();
    if (t.kind != Tok::ident || t.text != kw)
      throw ParseError(std::string("expected '") + kw + "'", t.line, t.col);
  }

  bool peek_punct(const char* p) const {
    return lex_.peek().kind == Tok::punct && lex_.peek().text == p;
  }

  Tok fresh_name() {
    Tok t = expect_ident();
    if (!names_.insert(t.text).second)
      throw ParseError("duplicate name '" + t.text + "'", t.line, t.col);
    return t;
  }

  void parse_relset(Model& m) {
    Tok name = fresh_name();
    expect_punct("{");
    expect_keyword("elements");
    expect_punct(":");
    RelatedSet r;
    while (lex_.peek().kind == Tok::ident) {
      Tok e = lex_.take();
      if (r.index_of(e.text) >= 0)
        throw ParseError("duplicate element '" + e.text + "'", e.line, e.col);
      r.names.push_back(e.text);
      r.rows.push_back(0);
    }
    if (r.names.empty()) {
      Tok t = lex_.peek();
      throw ParseError("expected at least one element", t.line, t.col);
    }
    if (r.size() > kMaxCarrier) {
      throw ParseError("carrier exceeds cap of " +
                           std::to_string(kMaxCarrier) + " elements",
                       name.line, name.col);
    }
    expect_punct(";");
    expect_keyword("le");
    expect_punct(":");
    if (lex_.peek().kind == Tok::ident) {
      while (true) {
        int i = element_index(r);
        int j = element_index(r);
        r.rows[i] |= bit(j);
        if (!peek_punct(",")) break;
        lex_.take();
      }
    }
    expect_punct(";");
    expect_punct("}");
    m.relsets.push_back({name.text, std::move(r)});
  }

  int element_index(const RelatedSet& r) {
    Tok t = expect_ident();
    int i = r.index_of(t.text);
    if (i < 0)
      throw ParseError("unknown identifier '" + t.text + "'", t.line, t.col);
    return i;
  }

  void parse_map(Model& m) {
    Tok name = fresh_name();
    expect_punct(":");
    Tok rname = expect_ident();
    const NamedRelSet* rs = m.find_relset(rname.text);
    if (!rs)
      throw ParseError("unknown identifier '" + rname.text + "'", rname.line,
                       rname.col);
    const RelatedSet& r = rs->rel;
    std::vector<int> target(r.size(), -1);
    bool any = false;
    expect_punct("{");
    while (lex_.peek().kind == Tok::ident) {
      Tok src = lex_.take();
      int i = r.index_of(src.text);
      if (i < 0)
        throw ParseError("unknown identifier '" + src.text + "'", src.line,
                         src.col);
      if (target[i] != -1)
        throw ParseError("duplicate assignment for '" + src.text + "'",
                         src.line, src.col);
      expect_punct("->");
      target[i] = element_index(r);
      expect_punct(";");
      any = true;
    }
    Tok close = expect_punct("}");
    if (!any)
      throw ParseError("expected at least one assignment", close.line,
                       close.col);
    for (int i = 0; i < r.size(); ++i)
      if (target[i] == -1)
        throw ParseError("map '" + name.text + "' is not total: '" +
                             r.names[i] + "' unassigned",
                         close.line, close.col);
    EndoMap f;
    f.target = std::move(target);
    m.maps.push_back({name.text, rname.text, std::move(f)});
  }

  Atom parse_atom() {
    Tok t = expect_ident();
    std::optional<Atom> a = atom_from_string(t.text);
    if (!a) throw ParseError("unknown atom '" + t.text + "'", t.line, t.col);
    return *a;
  }

  void parse_conjecture(Model& m) {
    Tok name = fresh_name();
    expect_punct("{");
    expect_keyword("assume");
    expect_punct(":");
    Conjecture c;
    c.id = name.text;
    c.assume.push_back(parse_atom());
    while (peek_punct(",")) {
      lex_.take();
      c.assume.push_back(parse_atom());
    }
    expect_punct(";");
    expect_keyword("conclude");
    expect_punct(":");
    c.conclude = parse_atom();
    expect_punct(";");
    expect_punct("}");
    m.conjectures.push_back({name.text, std::move(c)});
  }

  Lexer lex_;
  std::unordered_set<std::string> names_;
};

}  // namespace

Model parse_model(const std::string& text) { return Parser(text).parse(); }

std::string serialize_model(const Model& m) {
  std::string out;
  for (const auto& [name, r] : m.relsets) {
    out += "relset " + name + " {\n  elements:";
    for (const auto& e : r.names) out += " " + e;
    out += ";\n  le:";
    bool first = true;
    for (int i = 0; i < r.size(); ++i)
      for (int j = 0; j < r.size(); ++j)
        if (r.le(i, j)) {
          out += (first ? " " : ", ") + r.names[i] + " " + r.names[j];
          first = false;
        }
    out += ";\n}\n";
  }
  for (const auto& nm : m.maps) {
    const NamedRelSet* rs = m.find_relset(nm.relset);
    out += "map " + nm.name + " : " + nm.relset + " {\n";
    for (int i = 0; i < nm.map.size(); ++i)
      out += "  " + rs->rel.names[i] + " -> " + rs->rel.names[nm.map(i)] +
             ";\n";
    out += "}\n";
  }
  for (const auto& nc : m.conjectures) {
    out += "conjecture " + nc.name + " {\n  assume:";
    bool first = true;
    for (const Atom& a : nc.conjecture.assume) {
      out += (first ? " " : ", ") + to_string(a);
      first = false;
    }
    out += ";\n  conclude: " + to_string(nc.conjecture.conclude) + ";\n}\n";
  }
  return out;
}

}  // namespace relfix
