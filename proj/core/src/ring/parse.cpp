#include "ellschub/ring/parse.hpp"

#include <cctype>

#include "ellschub/errors.hpp"

namespace ellschub {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view s, const ParseHooks& hooks) : ring_(ring), s_(s), hooks_(hooks) {}

  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == '[' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * unary();
      } else if (peek('/')) {
        ++pos_;
        acc = acc / unary();
      } else if (starts_primary()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        neg = s_[pos_] == '-';
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  RatFunc primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c == '[') {
      std::size_t close = s_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated bracket");
      std::string content(s_.substr(pos_ + 1, close - pos_ - 1));
      if (!hooks_.bracket) fail("bracket notation is not available here");
      pos_ = close + 1;
      return hooks_.bracket(content);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(std::string(s_.substr(start, pos_ - start)));
      return RatFunc::constant(ring_, mpq_class(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (hooks_.symbol) {
        if (auto v = hooks_.symbol(name)) return *v;
      }
      int idx = ring_->vars().index_of(name);
      if (idx < 0) throw Error(ErrorKind::UnknownVariable, "unknown variable " + name);
      return RatFunc::var(ring_, idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  std::string_view s_;
  const ParseHooks& hooks_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const RingPtr& ring, std::string_view text, const ParseHooks& hooks) {
  return Parser(ring, text, hooks).run();
}

}  // namespace ellschub
