#include "conecert/factor.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace conecert {

namespace {

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t acc = 1;
  for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
  return acc;
}

void check_grassmann_args(const FactorSpec& s) {
  if (s.l < 1 || s.k < 2) throw std::invalid_argument("grassmann factor needs 1 <= l and 2 <= k");
  if (s.k - s.l == 0) throw std::invalid_argument("grassmann factor with k - l = 0 is a point");
  if (s.l > s.k - s.l)
    throw std::invalid_argument("factor not normalized: require l <= k - l (use min(l, k-l))");
}

}  // namespace

FactorSpec reduce(const FactorSpec& spec) {
  if (spec.kind == FactorKind::Grassmann && spec.l == 1 && spec.k == 2)
    return FactorSpec::sphere(field_dim(spec.field));
  if (spec.kind == FactorKind::OrientedGrassmann && spec.l == 1)
    return FactorSpec::sphere(spec.k - 1);
  return spec;
}

bool is_reduced_case(const FactorSpec& spec) {
  return !(reduce(spec) == spec);
}

FactorProps factor_props(const FactorSpec& spec) {
  FactorProps p;
  switch (spec.kind) {
    case FactorKind::Grassmann: {
      check_grassmann_args(spec);
      const int d = field_dim(spec.field);
      const std::int64_t l = spec.l, k = spec.k;
      p.d = d;
      p.dim = static_cast<int>(d * l * (k - l));
      p.ambient = static_cast<int>(k + d * k * (k - 1) / 2);
      p.radiusSq = Rational(l * (k - l), 2 * k);
      p.alphaSq = Rational(d * l * (k - l) * (k - l), k);
      p.ratio = p.alphaSq / Rational(p.dim);
      break;
    }
    case FactorKind::OrientedGrassmann: {
      check_grassmann_args(spec);
      if (spec.l < 2)
        throw std::invalid_argument("oriented grassmann with l = 1 is a sphere; reduce it first");
      p.d = 1;
      p.dim = spec.l * (spec.k - spec.l);
      p.ambient = static_cast<int>(binomial(spec.k, spec.l));
      p.radiusSq = Rational(1);
      p.alphaSq = Rational(4);
      p.ratio = p.alphaSq / Rational(p.dim);
      break;
    }
    case FactorKind::Sphere: {
      if (spec.n < 1) throw std::invalid_argument("sphere factor needs n >= 1");
      p.d = 1;
      p.dim = spec.n;
      p.ambient = spec.n + 1;
      p.radiusSq = Rational(1);
      p.alphaSq = Rational(0);
      p.ratio = Rational(0);
      break;
    }
  }
  return p;
}

// ============================================================================
// Grammar
// ============================================================================

namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;

  void skipWs() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skipWs();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw std::invalid_argument(std::string("expected '") + c + "' in " + what);
  }
  int integer(const char* what) {
    skipWs();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument(std::string("expected integer in ") + what);
    return std::stoi(std::string(s.substr(start, i - start)));
  }
};

}  // namespace

FactorSpec parse_factor(std::string_view text) {
  Cursor c{text};
  c.skipWs();
  if (c.i >= text.size()) throw std::invalid_argument("empty factor");

  auto rest = text.substr(c.i);
  if (rest.rfind("Gor", 0) == 0) {
    c.i += 3;
    c.expect('(', "Gor(l,k)");
    const int l = c.integer("Gor(l,k)");
    c.expect(',', "Gor(l,k)");
    const int k = c.integer("Gor(l,k)");
    c.expect(')', "Gor(l,k)");
    c.skipWs();
    if (c.i != text.size()) throw std::invalid_argument("trailing characters after factor");
    return FactorSpec::oriented(l, k);
  }
  if (rest.rfind("G", 0) == 0) {
    c.i += 1;
    c.expect('(', "G(l,k;F)");
    const int l = c.integer("G(l,k;F)");
    c.expect(',', "G(l,k;F)");
    const int k = c.integer("G(l,k;F)");
    c.expect(';', "G(l,k;F)");
    c.skipWs();
    if (c.i >= text.size()) throw std::invalid_argument("missing field in G(l,k;F)");
    Field f;
    switch (text[c.i]) {
      case 'R': f = Field::R; break;
      case 'C': f = Field::C; break;
      case 'H': f = Field::H; break;
      default: throw std::invalid_argument("field must be R, C or H");
    }
    ++c.i;
    c.expect(')', "G(l,k;F)");
    c.skipWs();
    if (c.i != text.size()) throw std::invalid_argument("trailing characters after factor");
    return FactorSpec::grassmann(l, k, f);
  }
  if (rest.rfind("S", 0) == 0) {
    c.i += 1;
    c.expect('(', "S(n)");
    const int n = c.integer("S(n)");
    c.expect(')', "S(n)");
    c.skipWs();
    if (c.i != text.size()) throw std::invalid_argument("trailing characters after factor");
    return FactorSpec::sphere(n);
  }
  throw std::invalid_argument("unknown factor atom: " + std::string(text));
}

std::vector<FactorSpec> parse_product(std::string_view text) {
  std::vector<FactorSpec> specs;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    const bool split = i == text.size() || (text[i] == 'x' && depth == 0);
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
    }
    if (split) {
      auto piece = text.substr(start, i - start);
      specs.push_back(parse_factor(piece));
      start = i + 1;
    }
  }
  if (specs.empty()) throw std::invalid_argument("empty product");
  return specs;
}

std::string to_string(const FactorSpec& spec) {
  switch (spec.kind) {
    case FactorKind::Grassmann:
      return "G(" + std::to_string(spec.l) + "," + std::to_string(spec.k) + ";" +
             field_char(spec.field) + ")";
    case FactorKind::OrientedGrassmann:
      return "Gor(" + std::to_string(spec.l) + "," + std::to_string(spec.k) + ")";
    default:
      return "S(" + std::to_string(spec.n) + ")";
  }
}

std::string to_string(const std::vector<FactorSpec>& specs) {
  std::string out;
  for (size_t i = 0; i < specs.size(); ++i) {
    if (i) out += " x ";
    out += to_string(specs[i]);
  }
  return out;
}

}  // namespace conecert
