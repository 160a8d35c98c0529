#include "qwalk/run_config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>

namespace qwalk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view what) {
  s = trim(s);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

// Hand-rolled scanner for complex literals; positions index into text_.
class ComplexScanner {
 public:
  explicit ComplexScanner(std::string_view text) : text_(text) {}

  Complex parse() {
    skip_space();
    if (done()) fail("empty complex literal");
    Complex sum = 0.0;
    bool first = true;
    while (!done()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1.0 : 1.0;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      sum += sign * term();
      first = false;
      skip_space();
    }
    return sum;
  }

 private:
  Complex term() {
    const std::optional<double> mag = number();
    skip_space();
    if (accept('*')) skip_space();
    if (accept('i')) return Complex(0.0, mag.value_or(1.0));
    if (accept("e^{")) {
      const double theta = exponent();
      if (!accept('}')) fail("expected '}'");
      return std::polar(mag.value_or(1.0), theta);
    }
    if (!mag) fail("expected a number");
    return *mag;
  }

  // Body of e^{...}: [a][*]i[[*]b][/c] or a[*]i[/c]; value is a*b/c.
  double exponent() {
    skip_space();
    double value = number().value_or(1.0);
    skip_space();
    accept('*');
    skip_space();
    if (!accept('i')) fail("exponent must be imaginary, e.g. e^{i/3}");
    skip_space();
    accept('*');
    if (auto b = number()) value *= *b;
    skip_space();
    if (accept('/')) {
      const auto c = number();
      if (!c || *c == 0.0) fail("bad divisor in exponent");
      value /= *c;
    }
    skip_space();
    return value;
  }

  std::optional<double> number() {
    skip_space();
    if (accept("pi")) return kPi;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double v = 0.0;
    const auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr == begin) return std::nullopt;
    pos_ += static_cast<std::size_t>(res.ptr - begin);
    if (accept("pi")) v *= kPi;
    return v;
  }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  bool accept(char c) {
    if (!done() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("complex literal '" + std::string(text_) + "': " + why + " at position " +
                     std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Coin parse_coin(std::string_view selector) {
  selector = trim(selector);
  if (selector == "grover") return grover_coin();
  if (selector == "a1") return a1_coin();
  if (selector == "a2") return a2_coin();
  if (selector == "identity") return identity_coin();
  if (selector.starts_with("a4:")) return symmetric_family(parse_real(selector.substr(3), "a4 parameter"));
  if (selector.starts_with("file:")) {
    const std::filesystem::path path(selector.substr(5));
    if (!std::filesystem::is_regular_file(path)) throw UsageError("coin file '" + path.string() + "' not found");
    return load_coin_file(path);
  }
  throw UsageError("unknown coin '" + std::string(selector) +
                   "' (expected grover, a1, a2, identity, a4:<p> or file:<path>)");
}

Complex parse_complex(std::string_view text) { return ComplexScanner(trim(text)).parse(); }

ParsedInitial parse_initial(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "R" || t == "L" || t == "U" || t == "D") {
    return {InitialSpec::pure(parse_chirality(t)), std::string(t), 0.0, false};
  }
  if (!t.starts_with("custom:")) {
    throw UsageError("initial state must be R, L, U, D or custom:a,b,c,d; got '" + std::string(t) + "'");
  }
  std::string_view body = t.substr(7);
  Vector4c w;
  int count = 0;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view part = body.substr(0, comma);
    if (count == 4) throw UsageError("custom initial state needs exactly 4 weights");
    w(count++) = parse_complex(part);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (count != 4) throw UsageError("custom initial state needs exactly 4 weights");
  const double norm = w.norm();
  if (!(norm > 0.0)) throw UsageError("custom initial state has zero norm");
  ParsedInitial p{InitialSpec::normalized(w), std::string(t), std::abs(norm - 1.0), false};
  p.rescaled = p.norm_deviation > 1e-6;
  return p;
}

Parity parse_parity(std::string_view text) {
  if (text == "all") return Parity::All;
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  throw UsageError("parity must be all, even or odd");
}

unsigned threads_from_env(unsigned fallback) {
  const char* v = std::getenv("QWALK_THREADS");
  if (!v) return fallback;
  unsigned n = 0;
  const std::string_view s(v);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), n);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || n == 0) return fallback;
  return n;
}

}  // namespace qwalk
