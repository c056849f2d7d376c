#include "motbun/parser.hpp"

#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "motbun/error.hpp"

namespace motbun {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      s_.push_back(text[i]);
      origin_.push_back(i);
    }
    origin_.push_back(text.size());
  }

  MotiveExpr parse_all() {
    if (s_.empty()) fail(ErrorKind::SyntaxError, "empty expression");
    MotiveExpr e = expr();
    if (pos_ != s_.size()) fail(ErrorKind::SyntaxError, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& what) const {
    throw SyntaxError(kind, origin_[std::min(pos_, s_.size())], what);
  }

  bool peek(std::string_view lit) const { return s_.compare(pos_, lit.size(), lit) == 0; }

  bool accept(std::string_view lit) {
    if (!peek(lit)) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(std::string_view lit, ErrorKind kind = ErrorKind::SyntaxError) {
    if (!accept(lit)) fail(kind, "expected '" + std::string(lit) + "'");
  }

  long integer(bool allow_negative, ErrorKind kind) {
    const bool neg = allow_negative && accept("-");
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail(kind, allow_negative ? "expected an integer" : "expected a natural number");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (std::numeric_limits<long>::max() - 9) / 10) fail(kind, "integer out of range");
      v = v * 10 + (s_[pos_++] - '0');
    }
    return neg ? -v : v;
  }

  MotiveExpr expr() {
    std::vector<MotiveExpr> terms{term()};
    while (accept("+")) terms.push_back(term());
    return sum(std::move(terms));
  }

  MotiveExpr term() {
    std::vector<MotiveExpr> factors{factor()};
    while (accept("*")) factors.push_back(factor());
    return tensor(std::move(factors));
  }

  MotiveExpr factor() {
    if (accept("SymStar")) {
      expect("(", ErrorKind::ArityError);
      if (peek(")")) fail(ErrorKind::ArityError, "SymStar needs an argument");
      MotiveExpr inner = expr();
      expect(")");
      return sym_star(std::move(inner));
    }
    if (accept("Sym")) {
      expect("^", ErrorKind::ArityError);
      const long n = integer(false, ErrorKind::ArityError);
      expect("(", ErrorKind::ArityError);
      if (peek(")")) fail(ErrorKind::ArityError, "Sym^n needs an argument");
      MotiveExpr inner = expr();
      expect(")");
      return sym(std::move(inner), n);
    }
    if (accept("Z")) {
      expect("(", ErrorKind::ArityError);
      expect("C", ErrorKind::ArityError);
      expect(",", ErrorKind::ArityError);
      expect("L", ErrorKind::ArityError);
      expect("^", ErrorKind::ArityError);
      const long i = integer(true, ErrorKind::ArityError);
      expect(")", ErrorKind::ArityError);
      return zeta_twist(i);
    }
    MotiveExpr a = atom();
    if (accept("{")) {
      const long i = integer(true, ErrorKind::SyntaxError);
      expect("}");
      return twist(std::move(a), i);
    }
    return a;
  }

  MotiveExpr atom() {
    if (accept("(")) {
      MotiveExpr e = expr();
      expect(")");
      return e;
    }
    if (accept("1")) return Atom::Unit;
    if (accept("L")) {
      if (accept("^")) return tate(integer(true, ErrorKind::SyntaxError));
      return tate(1);
    }
    if (accept("M(C)")) return Atom::MC;
    if (accept("Mbar(C)")) return Atom::MbarC;
    if (accept("M1(Jac)")) return Atom::M1Jac;
    if (accept("Jac")) return Atom::Jac;
    if (accept("BGmC")) return Atom::BGmC;
    if (accept("BGm")) return Atom::BGm;
    if (accept("P(")) {
      const long dim = integer(false, ErrorKind::SyntaxError);
      expect(")");
      return proj_space(dim);
    }
    if (pos_ >= s_.size()) fail(ErrorKind::SyntaxError, "unexpected end of input");
    fail(ErrorKind::SyntaxError, std::string("unexpected '") + s_[pos_] + "'");
  }

  std::string s_;
  std::vector<std::size_t> origin_;
  std::size_t pos_ = 0;
};

}  // namespace

MotiveExpr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace motbun
