#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "ctw/error.hpp"
#include "ctw/io.hpp"

namespace ctw::io {

namespace {

struct Token {
  enum Kind { Ident, Int, Punct, End } kind;
  std::string text;
  long long value = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) {
      t.kind = Token::End;
      return t;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        t.text.push_back(advance());
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      t.kind = Token::Int;
      t.text.push_back(advance());
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        t.text.push_back(advance());
      const auto *first = t.text.data();
      const auto *last = first + t.text.size();
      auto [ptr, ec] = std::from_chars(first, last, t.value);
      if (ec != std::errc() || ptr != last)
        throw ParseError("malformed integer '" + t.text + "'", t.line,
                         t.column);
      return t;
    }
    if (text_.substr(pos_, 3) == "...") {
      t.kind = Token::Punct;
      for (int i = 0; i < 3; ++i)
        t.text.push_back(advance());
      return t;
    }
    if (std::string_view("=;{},<>").find(c) != std::string_view::npos) {
      t.kind = Token::Punct;
      t.text.push_back(advance());
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", t.line,
                     t.column);
  }

private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          advance();
      } else if (text_.substr(pos_, 2) == "/*") {
        const int line = line_, column = column_;
        advance();
        advance();
        while (pos_ < text_.size() && text_.substr(pos_, 2) != "*/")
          advance();
        if (pos_ >= text_.size())
          throw ParseError("unterminated comment", line, column);
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class DatParser {
public:
  DatParser(std::string_view text, std::vector<std::string> *warnings)
      : lex_(text), warnings_(warnings) {
    shift();
  }

  InstanceData parse() {
    InstanceData data;
    std::map<std::string, bool> seen;
    while (tok_.kind != Token::End) {
      if (tok_.kind != Token::Ident)
        fail("expected a parameter name");
      const Token name = tok_;
      if (seen[name.text])
        throw ParseError("parameter '" + name.text + "' assigned twice",
                         name.line, name.column);
      seen[name.text] = true;
      shift();
      expect("=");
      if (name.text == "k") {
        data.k = scalar();
      } else if (name.text == "b") {
        data.b = scalar();
      } else if (name.text == "AtomicConstraints") {
        for (const auto &t : tuple_set(2))
          data.atomic.push_back({t[0], t[1]});
      } else if (name.text == "SoftAtomicConstraints") {
        for (const auto &t : tuple_set(2))
          data.soft_atomic.push_back({t[0], t[1]});
      } else if (name.text == "DisjunctiveConstraints") {
        for (const auto &t : tuple_set(4))
          data.disjunctive.push_back({t[0], t[1], t[2], t[3]});
      } else if (name.text == "DirectSuccessors") {
        for (const auto &t : tuple_set(0))
          data.direct_successors.push_back(t[0]);
      } else {
        throw ParseError("unknown parameter '" + name.text + "'", name.line,
                         name.column);
      }
      expect(";");
    }
    if (!seen["k"])
      throw ParseError("missing parameter 'k'");
    if (!seen["b"])
      throw ParseError("missing parameter 'b'");
    return data;
  }

private:
  void shift() { tok_ = lex_.next(); }

  [[noreturn]] void fail(const std::string &what) const {
    const std::string found =
        tok_.kind == Token::End ? "end of input" : "'" + tok_.text + "'";
    throw ParseError(what + ", found " + found, tok_.line, tok_.column);
  }

  bool at(const char *punct) const {
    return tok_.kind == Token::Punct && tok_.text == punct;
  }

  void expect(const char *punct) {
    if (!at(punct))
      fail(std::string("expected '") + punct + "'");
    shift();
  }

  int integer() {
    if (tok_.kind != Token::Int)
      fail("expected an integer");
    if (tok_.value < -2147483647LL || tok_.value > 2147483647LL)
      fail("integer out of range");
    const int v = static_cast<int>(tok_.value);
    shift();
    return v;
  }

  int scalar() {
    const Token start = tok_;
    const int v = integer();
    if (v < 0)
      throw ParseError("value must be non-negative", start.line, start.column);
    return v;
  }

  // arity 0 means bare integers instead of <...> tuples.
  std::vector<std::vector<int>> tuple_set(int arity) {
    std::vector<std::vector<int>> out;
    expect("{");
    while (!at("}")) {
      std::vector<int> t;
      if (at("...")) {
        if (warnings_)
          warnings_->push_back("line " + std::to_string(tok_.line) +
                               ": elided entries '...' ignored");
        shift();
      } else if (arity == 0) {
        t.push_back(integer());
      } else {
        expect("<");
        for (int i = 0; i < arity; ++i) {
          if (i > 0)
            expect(",");
          t.push_back(integer());
        }
        expect(">");
      }
      if (!t.empty())
        out.push_back(std::move(t));
      if (at(","))
        shift();
      else if (!at("}"))
        fail("expected ',' or '}'");
    }
    shift();
    return out;
  }

  Lexer lex_;
  std::vector<std::string> *warnings_;
  Token tok_;
};

template <typename T>
void join(std::ostringstream &out, const std::vector<T> &items, auto &&print) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0)
      out << ", ";
    print(items[i]);
  }
}

} // namespace

Instance parse_dat(std::string_view text, std::vector<std::string> *warnings) {
  InstanceData data = DatParser(text, warnings).parse();
  try {
    return Instance(std::move(data), warnings);
  } catch (const InstanceError &e) {
    throw ParseError(e.what());
  }
}

std::string emit_dat(const Instance &inst) {
  const auto canon = inst.canonical();
  const auto &d = canon.data();
  std::ostringstream out;
  out << "k = " << d.k << ";\n";
  out << "b = " << d.b << ";\n";
  auto pair = [&](const AtomicConstraint &c) {
    out << '<' << c.before << ',' << c.after << '>';
  };
  out << "AtomicConstraints = {";
  join(out, d.atomic, pair);
  out << "};\nSoftAtomicConstraints = {";
  join(out, d.soft_atomic, pair);
  out << "};\nDisjunctiveConstraints = {";
  join(out, d.disjunctive, [&](const DisjunctiveConstraint &c) {
    out << '<' << c.first_before << ',' << c.first_after << ','
        << c.second_before << ',' << c.second_after << '>';
  });
  out << "};\nDirectSuccessors = {";
  join(out, d.direct_successors, [&](JobId i) { out << i; });
  out << "};\n";
  return out.str();
}

std::optional<InstanceFormat> parse_format(std::string_view name) {
  if (name == "dat")
    return InstanceFormat::Dat;
  if (name == "dzn")
    return InstanceFormat::Dzn;
  if (name == "json")
    return InstanceFormat::Json;
  return std::nullopt;
}

std::optional<InstanceFormat>
format_from_path(const std::filesystem::path &p) {
  auto ext = p.extension().string();
  if (!ext.empty())
    ext.erase(0, 1);
  for (auto &c : ext)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return parse_format(ext);
}

std::string emit(const Instance &inst, InstanceFormat format) {
  switch (format) {
  case InstanceFormat::Dat:
    return emit_dat(inst);
  case InstanceFormat::Dzn:
    return emit_dzn(inst);
  case InstanceFormat::Json:
    return emit_json(inst);
  }
  return {};
}

std::string read_file(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    throw Error("cannot open " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(const std::filesystem::path &p,
                       std::vector<std::string> *warnings) {
  const auto text = read_file(p);
  if (format_from_path(p) == InstanceFormat::Json)
    return parse_json(text, warnings);
  return parse_dat(text, warnings);
}

} // namespace ctw::io
