#include "lexsemi/space.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "lexsemi/error.hpp"

namespace lexsemi {
namespace {

std::size_t cycle_length(const ValueSeq& s) {
  return std::max<std::size_t>(1, s.cycle.size());
}

std::size_t tail_period(const Point& x) {
  switch (x.tail.kind) {
    case TailKind::kOnes: return 1;
    case TailKind::kMax: return cycle_length(x.line.right);
    case TailKind::kPeriodic: return x.tail.values.size();
  }
  return 1;
}

void require_same_line(const Point& x, const Point& y) {
  if (!(x.line == y.line)) {
    throw TermMismatchError("points belong to different terms");
  }
}

// r_1 ... r_k
BigInt right_product(const Line& line, std::size_t k) {
  BigInt p = 1;
  for (std::size_t i = 1; i <= k; ++i) p *= line.right.at(i);
  return p;
}

}  // namespace

void validate(const Point& x) {
  for (const auto& [k, v] : x.left) {
    if (k == 0) throw DomainError("left positions start at -1");
    if (v < 1 || v > x.line.left.at(k)) {
      throw DomainError("value " + std::to_string(v) + " at position -" +
                        std::to_string(k) + " outside 1.." +
                        std::to_string(x.line.left.at(k)));
    }
  }
  for (std::size_t k = 1; k <= x.right.size(); ++k) {
    const Weight v = x.right[k - 1];
    if (v < 1 || v > x.line.right.at(k)) {
      throw DomainError("value " + std::to_string(v) + " at position " +
                        std::to_string(k) + " outside 1.." +
                        std::to_string(x.line.right.at(k)));
    }
  }
  if (x.tail.kind == TailKind::kPeriodic) {
    const std::size_t c = cycle_length(x.line.right);
    if (x.tail.values.empty() || x.tail.values.size() % c != 0) {
      throw DomainError("periodic tail length must be a positive multiple of " +
                        std::to_string(c));
    }
    if (x.right.size() < x.line.right.prefix.size()) {
      throw DomainError(
          "periodic tail must start after the weight prefix; extend the "
          "explicit right values to length " +
          std::to_string(x.line.right.prefix.size()));
    }
    const std::size_t m = x.right.size();
    for (std::size_t j = 0; j < x.tail.values.size(); ++j) {
      const Weight v = x.tail.values[j];
      if (v < 1 || v > x.line.right.at(m + 1 + j)) {
        throw DomainError("periodic tail value out of range at position " +
                          std::to_string(m + 1 + j));
      }
    }
  } else if (!x.tail.values.empty()) {
    throw DomainError("only periodic tails carry values");
  }
}

Point canonical(Point x) {
  validate(x);
  std::erase_if(x.left, [](const auto& kv) { return kv.second == 1; });

  if (x.tail.kind == TailKind::kPeriodic) {
    const std::size_t c = cycle_length(x.line.right);
    auto& v = x.tail.values;
    const std::size_t n = v.size();
    for (std::size_t p = c; p < n; p += c) {
      if (n % p != 0) continue;
      bool periodic = true;
      for (std::size_t i = p; i < n && periodic; ++i) periodic = v[i] == v[i - p];
      if (periodic) {
        v.resize(p);
        break;
      }
    }
    const std::size_t m = x.right.size();
    const bool ones = std::all_of(v.begin(), v.end(), [](Weight w) { return w == 1; });
    bool max = true;
    for (std::size_t j = 0; j < v.size() && max; ++j) {
      max = v[j] == x.line.right.at(m + 1 + j);
    }
    if (ones || max) {
      x.tail = Tail{ones ? TailKind::kOnes : TailKind::kMax, {}};
    }
  }

  switch (x.tail.kind) {
    case TailKind::kOnes:
      while (!x.right.empty() && x.right.back() == 1) x.right.pop_back();
      break;
    case TailKind::kMax:
      while (!x.right.empty() && x.right.back() == x.line.right.at(x.right.size())) {
        x.right.pop_back();
      }
      break;
    case TailKind::kPeriodic: {
      auto& v = x.tail.values;
      while (x.right.size() > x.line.right.prefix.size() && x.right.back() == v.back()) {
        x.right.pop_back();
        std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
      }
      break;
    }
  }
  return x;
}

Weight value_at(const Point& x, std::int64_t position) {
  if (position == 0) throw DomainError("position 0 does not exist");
  if (position < 0) {
    auto it = x.left.find(static_cast<std::size_t>(-position));
    return it == x.left.end() ? 1 : it->second;
  }
  const auto k = static_cast<std::size_t>(position);
  if (k <= x.right.size()) return x.right[k - 1];
  switch (x.tail.kind) {
    case TailKind::kOnes: return 1;
    case TailKind::kMax: return x.line.right.at(k);
    case TailKind::kPeriodic:
      return x.tail.values[(k - x.right.size() - 1) % x.tail.values.size()];
  }
  return 1;
}

Point all_ones_point(const Line& line) { return Point{line, {}, {}, {}}; }

Point top_point(const Line& line) {
  return Point{line, {}, {}, Tail{TailKind::kMax, {}}};
}

LexOrder lex_compare(const Point& x, const Point& y) {
  require_same_line(x, y);
  std::size_t deepest = 0;
  if (!x.left.empty()) deepest = std::max(deepest, x.left.rbegin()->first);
  if (!y.left.empty()) deepest = std::max(deepest, y.left.rbegin()->first);
  for (std::size_t k = deepest; k >= 1; --k) {
    const Weight a = value_at(x, -static_cast<std::int64_t>(k));
    const Weight b = value_at(y, -static_cast<std::int64_t>(k));
    if (a != b) return a < b ? LexOrder::kLess : LexOrder::kGreater;
  }
  // Beyond `start` both right sequences are periodic, jointly with period
  // lcm of the two tail periods.
  const std::size_t start =
      std::max({x.right.size(), y.right.size(), x.line.right.prefix.size()});
  const std::size_t end = start + std::lcm(tail_period(x), tail_period(y));
  for (std::size_t k = 1; k <= end; ++k) {
    const Weight a = value_at(x, static_cast<std::int64_t>(k));
    const Weight b = value_at(y, static_cast<std::int64_t>(k));
    if (a != b) return a < b ? LexOrder::kLess : LexOrder::kGreater;
  }
  return LexOrder::kEqual;
}

Rational cylinder_measure(const Line& line, const Cylinder& c) {
  Rational m = 1;
  for (const auto& [position, value] : c.constraints) {
    if (position == 0) throw DomainError("position 0 does not exist");
    const Weight w = line.at(position);
    if (value < 1 || value > w) {
      throw DomainError("cylinder value " + std::to_string(value) +
                        " at position " + std::to_string(position) +
                        " outside 1.." + std::to_string(w));
    }
    m /= w;
  }
  return m;
}

Rational d_value(const Point& x) {
  validate(x);
  Rational d = 0;

  // Left: integer part, place value of position -k is s_1 ... s_{k-1}.
  BigInt place = 1;
  std::size_t k = 1;
  for (const auto& [key, value] : x.left) {
    for (; k < key; ++k) place *= x.line.left.at(k);
    d += BigInt(value - 1) * place;
  }

  // Right: explicit prefix.
  const Line& line = x.line;
  const std::size_t m = x.right.size();
  BigInt radix = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    radix *= line.right.at(i);
    d += Rational(BigInt(x.right[i - 1] - 1), radix);
  }

  switch (x.tail.kind) {
    case TailKind::kOnes:
      break;
    case TailKind::kMax: {
      // Telescopes to 1/R_m - 1/R_inf.
      d += Rational(BigInt(1), radix);
      if (!line.right.is_infinite()) {
        const std::size_t last = std::max(m, line.right.prefix.size());
        d -= Rational(BigInt(1), right_product(line, last));
      }
      break;
    }
    case TailKind::kPeriodic: {
      Rational period_sum = 0;
      BigInt period_radix = 1;
      for (std::size_t j = 1; j <= x.tail.values.size(); ++j) {
        period_radix *= line.right.at(m + j);
        period_sum += Rational(BigInt(x.tail.values[j - 1] - 1), radix * period_radix);
      }
      if (period_radix > 1) {
        d += period_sum * Rational(period_radix, period_radix - 1);
      }
      break;
    }
  }
  return d;
}

bool closed_orbit_contains(const Point& y, const Point& x) {
  const LexOrder o = lex_compare(y, x);
  return o == LexOrder::kEqual || o == LexOrder::kLess;
}

Rational closed_orbit_measure(const Point& x) { return d_value(x); }

Point gap_partner(const Point& input) {
  const Point x = canonical(input);
  const Line& line = x.line;
  if (!line.right.is_infinite()) {
    throw NoPartnerError("right side has finite product; d is injective");
  }
  if (x.tail.kind == TailKind::kPeriodic) {
    throw NoPartnerError("non-terminating periodic tail has a unique d value");
  }
  Point y = x;
  if (x.tail.kind == TailKind::kOnes) {
    // Last coordinate above 1, then everything after it goes to max.
    if (!x.right.empty()) {
      y.right.back() -= 1;
    } else if (!x.left.empty()) {
      const std::size_t k = x.left.begin()->first;
      y.left[k] -= 1;
      for (std::size_t j = 1; j < k; ++j) y.left[j] = line.left.at(j);
    } else {
      throw NoPartnerError("the all-ones point is the unique point with d = 0");
    }
    y.tail = Tail{TailKind::kMax, {}};
    return canonical(std::move(y));
  }
  // Max tail: last coordinate below max, then everything after it to 1.
  if (!x.right.empty()) {
    y.right.back() += 1;
  } else {
    const std::size_t deepest = x.left.empty() ? 0 : x.left.rbegin()->first;
    const std::size_t horizon =
        deepest + line.left.prefix.size() + cycle_length(line.left) + 1;
    std::size_t k = 1;
    while (k <= horizon && value_at(x, -static_cast<std::int64_t>(k)) == line.left.at(k)) {
      ++k;
    }
    if (k > horizon) {
      throw NoPartnerError("the maximal point has no partner");
    }
    y.left[k] = value_at(x, -static_cast<std::int64_t>(k)) + 1;
    for (std::size_t j = 1; j < k; ++j) y.left.erase(j);
  }
  y.tail = Tail{TailKind::kOnes, {}};
  return canonical(std::move(y));
}

namespace {

class PointParser {
 public:
  PointParser(std::string_view text, const Line& line) : text_(text), line_(line) {}

  Point run() {
    Point x{line_, {}, {}, {}};
    keyword("point");
    expect('{');
    if (!accept('}')) {
      do {
        const std::string field = word();
        expect(':');
        if (field == "left") {
          expect('{');
          if (!accept('}')) {
            do {
              const std::int64_t position = signed_integer();
              if (position >= 0) fail("left positions are negative");
              expect(':');
              x.left[static_cast<std::size_t>(-position)] = integer();
            } while (accept(','));
            expect('}');
          }
        } else if (field == "right") {
          x.right = list('[', ']');
        } else if (field == "tail") {
          const std::string kind = word();
          if (kind == "ones") {
            x.tail = Tail{TailKind::kOnes, {}};
          } else if (kind == "max") {
            x.tail = Tail{TailKind::kMax, {}};
          } else if (kind == "cycle") {
            x.tail = Tail{TailKind::kPeriodic, list('[', ']')};
          } else {
            fail("tail must be ones, max or cycle[...]");
          }
        } else {
          fail("unknown field '" + field + "'");
        }
      } while (accept(','));
      expect('}');
    }
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    try {
      validate(x);
    } catch (const DomainError& e) {
      throw ParseError(ParseError::Kind::kSemantic, 1, 1, e.what());
    }
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseError::Kind::kSyntax, 1, pos_ + 1, message);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
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
    std::string out;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_++];
    }
    if (out.empty()) fail("expected a word");
    return out;
  }
  void keyword(std::string_view k) {
    if (word() != k) fail("expected '" + std::string(k) + "'");
  }
  Weight integer() {
    skip();
    const std::size_t start = pos_;
    Weight v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (pos_ - start >= 18) fail("integer too long");
      v = v * 10 + static_cast<Weight>(text_[pos_++] - '0');
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }
  std::int64_t signed_integer() {
    const bool negative = accept('-');
    const auto v = static_cast<std::int64_t>(integer());
    return negative ? -v : v;
  }
  std::vector<Weight> list(char open, char close) {
    expect(open);
    std::vector<Weight> out;
    if (accept(close)) return out;
    do {
      out.push_back(integer());
    } while (accept(','));
    expect(close);
    return out;
  }

  std::string_view text_;
  const Line& line_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<Weight>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

Point parse_point(std::string_view text, const Line& line) {
  return PointParser(text, line).run();
}

std::string to_string(const Point& x) {
  std::string out = "point{left: {";
  bool first = true;
  for (auto it = x.left.rbegin(); it != x.left.rend(); ++it) {
    if (!first) out += ", ";
    first = false;
    out += "-" + std::to_string(it->first) + ":" + std::to_string(it->second);
  }
  out += "}, right: [" + join(x.right) + "], tail: ";
  switch (x.tail.kind) {
    case TailKind::kOnes: out += "ones"; break;
    case TailKind::kMax: out += "max"; break;
    case TailKind::kPeriodic: out += "cycle[" + join(x.tail.values) + "]"; break;
  }
  return out + "}";
}

}  // namespace lexsemi
