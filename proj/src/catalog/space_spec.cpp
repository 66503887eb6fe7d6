#include "tcplan/catalog/space_spec.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace tcplan::catalog {

CatalogError::CatalogError(CatalogErrc code, std::size_t position, const std::string& what)
    : std::runtime_error(std::string(code == CatalogErrc::BadSpec ? "BadSpec" : "UnsupportedParameter") +
                         " at position " + std::to_string(position) + ": " + what),
      code_(code), position_(position) {}

std::string SpaceSpec::to_string() const {
  switch (kind) {
    case SpaceKind::Circle: return "circle";
    case SpaceKind::Sphere: return "sphere:" + std::to_string(param);
    case SpaceKind::Surface: return "surface:" + std::to_string(param);
    case SpaceKind::ComplexProjective: return "cpn:" + std::to_string(param);
    case SpaceKind::Torus: return "torus:" + std::to_string(param);
    case SpaceKind::Convex: return "convex:" + std::to_string(param);
    case SpaceKind::Product: {
      std::string s = "product(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ",";
        s += factors[i].to_string();
      }
      return s + ")";
    }
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SpaceSpec parse() {
    SpaceSpec s = spec();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw CatalogError(CatalogErrc::BadSpec, pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a space name");
    std::string w(text_.substr(start, pos_ - start));
    for (auto& c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return w;
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("expected an integer parameter");
    }
    return value;
  }

  SpaceSpec parameterized(SpaceKind kind, int minimum, std::size_t name_pos) {
    expect(':');
    skip();
    const std::size_t at = pos_;
    const int n = integer();
    if (n < minimum) {
      throw CatalogError(CatalogErrc::UnsupportedParameter, at,
                         std::string(text_.substr(name_pos, pos_ - name_pos)) + " needs parameter >= " +
                             std::to_string(minimum));
    }
    return {kind, n, {}};
  }

  SpaceSpec spec() {
    skip();
    const std::size_t name_pos = pos_;
    const std::string name = word();
    if (name == "circle") return {SpaceKind::Circle, 1, {}};
    if (name == "sphere") return parameterized(SpaceKind::Sphere, 1, name_pos);
    if (name == "surface") return parameterized(SpaceKind::Surface, 0, name_pos);
    if (name == "cpn") return parameterized(SpaceKind::ComplexProjective, 1, name_pos);
    if (name == "torus") return parameterized(SpaceKind::Torus, 1, name_pos);
    if (name == "convex") return parameterized(SpaceKind::Convex, 0, name_pos);
    if (name == "product") {
      SpaceSpec p{SpaceKind::Product, 0, {}};
      expect('(');
      do {
        p.factors.push_back(spec());
      } while (accept(','));
      expect(')');
      return p;
    }
    pos_ = name_pos;
    fail("unknown space '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SpaceSpec parse_space_spec(std::string_view text) { return Parser(text).parse(); }

}  // namespace tcplan::catalog
