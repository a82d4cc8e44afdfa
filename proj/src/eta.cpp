#include "qcong/eta.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qcong {

EtaQuotientSpec::EtaQuotientSpec(std::int64_t power_of_q, std::vector<EtaFactor> factors)
    : power_of_q_(power_of_q), factors_(std::move(factors)) {
  normalize();
}

EtaQuotientSpec& EtaQuotientSpec::times(std::int64_t scale, std::int64_t exponent) {
  factors_.push_back({scale, exponent});
  normalize();
  return *this;
}

EtaQuotientSpec& EtaQuotientSpec::times_q(std::int64_t k) {
  power_of_q_ += k;
  return *this;
}

void EtaQuotientSpec::normalize() {
  for (const auto& f : factors_) {
    if (f.scale < 1) throw std::invalid_argument("eta factor scale must be positive, got " + std::to_string(f.scale));
  }
  std::sort(factors_.begin(), factors_.end(), [](const EtaFactor& a, const EtaFactor& b) { return a.scale < b.scale; });
  std::vector<EtaFactor> merged;
  for (const auto& f : factors_) {
    if (!merged.empty() && merged.back().scale == f.scale) {
      merged.back().exponent += f.exponent;
    } else {
      merged.push_back(f);
    }
  }
  std::erase_if(merged, [](const EtaFactor& f) { return f.exponent == 0; });
  factors_ = std::move(merged);
}

std::string EtaQuotientSpec::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (power_of_q_ != 0 || factors_.empty()) {
    os << "q^" << power_of_q_;
    first = false;
  }
  for (const auto& f : factors_) {
    if (!first) os << " * ";
    os << "E(" << f.scale << ")^" << f.exponent;
    first = false;
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  EtaQuotientSpec run() {
    std::int64_t q_power = 0;
    std::vector<EtaFactor> factors;
    skip_ws();
    if (at_end()) fail("empty quotient");
    while (true) {
      skip_ws();
      if (consume('q')) {
        q_power += optional_exponent();
      } else if (consume('E')) {
        skip_ws();
        expect('(');
        const std::int64_t r = integer();
        if (r < 1) fail("scale inside E(...) must be positive");
        skip_ws();
        expect(')');
        factors.push_back({r, optional_exponent()});
      } else if (consume('1')) {
        // literal 1 (empty product)
      } else {
        fail("expected 'q' or 'E(r)'");
      }
      skip_ws();
      if (at_end()) break;
      expect('*');
    }
    return EtaQuotientSpec(q_power, std::move(factors));
  }

 private:
  std::int64_t optional_exponent() {
    skip_ws();
    if (!consume('^')) return 1;
    skip_ws();
    const bool paren = consume('(');
    const std::int64_t e = integer();
    if (paren) {
      skip_ws();
      expect(')');
    }
    return e;
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    std::string_view tok = text_.substr(start, pos_ - start);
    if (tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("integer out of range");
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse eta quotient \"" + std::string(text_) + "\" at position " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

EtaQuotientSpec EtaQuotientSpec::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace qcong
