#include "lifter/sexp.hpp"

#include <cctype>
#include <limits>

namespace lifter {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<Sexp> read_all() {
    std::vector<Sexp> out;
    skip_blank();
    while (!eof()) {
      out.push_back(read());
      skip_blank();
    }
    return out;
  }

 private:
  bool eof() const { return at_ >= text_.size(); }
  char peek() const { return text_[at_]; }

  void advance() {
    if (text_[at_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++at_;
  }

  void skip_blank() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  static bool is_delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' ||
           c == ';';
  }

  Sexp read() {
    SourcePos start = pos_;
    char c = peek();
    if (c == '(') {
      advance();
      Sexp list;
      list.kind = Sexp::Kind::List;
      list.pos = start;
      skip_blank();
      while (true) {
        if (eof()) throw ParseError("unbalanced '(': list opened here is never closed", start);
        if (peek() == ')') {
          advance();
          return list;
        }
        list.items.push_back(read());
        skip_blank();
      }
    }
    if (c == ')') throw ParseError("unexpected ')'", start);
    if (c == '"') return read_string(start);

    std::string tok;
    while (!eof() && !is_delimiter(peek())) {
      tok.push_back(peek());
      advance();
    }
    Sexp atom;
    atom.pos = start;
    bool digits = !tok.empty();
    for (char d : tok) digits = digits && std::isdigit(static_cast<unsigned char>(d));
    if (digits) {
      std::uint64_t v = 0;
      for (char d : tok) {
        std::uint64_t digit = static_cast<std::uint64_t>(d - '0');
        if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
          throw ParseError("integer literal too large: " + tok, start);
        v = v * 10 + digit;
      }
      atom.kind = Sexp::Kind::Integer;
      atom.integer = v;
      atom.text = tok;
    } else {
      atom.kind = Sexp::Kind::Symbol;
      atom.text = std::move(tok);
    }
    return atom;
  }

  Sexp read_string(SourcePos start) {
    advance();  // opening quote
    Sexp s;
    s.kind = Sexp::Kind::String;
    s.pos = start;
    while (true) {
      if (eof()) throw ParseError("unterminated string literal", start);
      char c = peek();
      if (c == '"') {
        advance();
        return s;
      }
      if (c == '\\') {
        SourcePos esc = pos_;
        advance();
        if (eof()) throw ParseError("unterminated string literal", start);
        char e = peek();
        if (e != '"' && e != '\\') throw ParseError(std::string("unknown escape '\\") + e + "'", esc);
        c = e;
      }
      s.text.push_back(c);
      advance();
    }
  }

  std::string_view text_;
  std::size_t at_ = 0;
  SourcePos pos_;
};

}  // namespace

std::vector<Sexp> read_sexps(std::string_view text) { return Reader(text).read_all(); }

Sexp read_sexp(std::string_view text) {
  std::vector<Sexp> forms = read_sexps(text);
  if (forms.empty()) throw ParseError("expected an s-expression, found end of input", SourcePos{});
  if (forms.size() > 1) throw ParseError("unexpected trailing input", forms[1].pos);
  return std::move(forms.front());
}

}  // namespace lifter
