#pragma once
// Text grammar for group constructor expressions.
//
//   expr    := atom ( "x" atom )*
//   atom    := "C"<int> | "D"<int> | "Q"<int> | "Dic"<int>
//            | "Ab[" <int> ("," <int>)* "]"
//            | "SD(" <int> "," <int> ";" <int> ")"
//            | "file:" <path-to-whitespace>
//
// D6 is the dihedral group of ORDER 12 (symmetries of the hexagon).
// Q8, Q12, Q16, ... are dicyclic groups named by order; Dic2 == Q8.
// Whitespace between tokens is ignored (file paths run to whitespace).
// Errors carry a 1-based column pointing at the offending character.

#include <cctype>
#include <string>

#include "census/error.hpp"
#include "census/spec.hpp"

namespace census {

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : s_(text) {}

  GroupSpec parse() {
    skip_ws();
    GroupSpec spec = parse_atom();
    skip_ws();
    while (pos_ < s_.size()) {
      if (s_[pos_] != 'x') error("expected 'x' or end of expression");
      ++pos_;
      skip_ws();
      spec = spec_product(std::move(spec), parse_atom());
      skip_ws();
    }
    validate_spec(spec);
    return spec;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(Err::ParseError,
         "column " + std::to_string(pos_ + 1) + ": " + what + " in \"" + s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }

  bool try_word(const char* w) {
    size_t len = std::char_traits<char>::length(w);
    if (s_.compare(pos_, len, w) != 0) return false;
    pos_ += len;
    return true;
  }

  i64 parse_int() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit((unsigned char)s_[pos_])) error("expected an integer");
    i64 v = 0;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
      if (v > 1'000'000'000'000'000LL) error("integer too large");
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      error(std::string("expected '") + c + "'");
    ++pos_;
  }

  GroupSpec parse_atom() {
    if (pos_ >= s_.size()) error("expected a group expression");
    // Longer keywords first: Dic before D, SD before nothing-else, file:.
    if (try_word("file:")) {
      size_t start = pos_;
      while (pos_ < s_.size() && !std::isspace((unsigned char)s_[pos_])) ++pos_;
      if (pos_ == start) error("expected a file path after 'file:'");
      return spec_cayley_file(s_.substr(start, pos_ - start));
    }
    if (try_word("Dic")) return spec_dicyclic(parse_int());
    if (try_word("SD(")) {
      i64 m = parse_int();
      expect(',');
      i64 n = parse_int();
      expect(';');
      i64 k = parse_int();
      expect(')');
      return spec_semidirect(m, n, k);
    }
    if (try_word("Ab[")) {
      std::vector<i64> ds;
      ds.push_back(parse_int());
      skip_ws();
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        ds.push_back(parse_int());
        skip_ws();
      }
      expect(']');
      return spec_abelian(std::move(ds));
    }
    char c = s_[pos_];
    if (c == 'C') {
      ++pos_;
      return spec_cyclic(parse_int());
    }
    if (c == 'D') {
      ++pos_;
      return spec_dihedral(parse_int());
    }
    if (c == 'Q') {
      ++pos_;
      size_t at = pos_;
      i64 order = parse_int();
      if (order < 8 || order % 4 != 0) {
        pos_ = at;
        error("Q<order> requires order >= 8 and divisible by 4");
      }
      return spec_dicyclic(order / 4);
    }
    error("expected a group expression");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace detail

// Parse a constructor expression; throws Error(ParseError) with a column on
// malformed input and Error(InvalidSpec) on arithmetic constraint violations.
inline GroupSpec parse_spec(const std::string& text) {
  return detail::SpecParser(text).parse();
}

}  // namespace census
