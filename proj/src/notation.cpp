#include "seifert/notation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace seifert::notation {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError,
         "column " + std::to_string(pos_ + 1) + ": " + what + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      error("expected an integer");
    }
    std::string s(text_.substr(start, pos_ - start));
    if (s[0] == '+') s.erase(0, 1);
    return Integer(s);
  }

  std::int64_t small_integer() {
    const std::size_t start = pos_;
    Integer v = integer();
    if (!v.fits_slong_p()) {
      pos_ = start;
      error("integer out of range");
    }
    return v.get_si();
  }

  // Comma-separated integers up to (not consuming) `close`; may be empty.
  std::vector<std::int64_t> small_list(char close) {
    std::vector<std::int64_t> out;
    if (peek(close)) return out;
    do out.push_back(small_integer());
    while (accept(','));
    return out;
  }

  std::vector<Integer> list(char close) {
    std::vector<Integer> out;
    if (peek(close)) return out;
    do out.push_back(integer());
    while (accept(','));
    return out;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) error("unexpected trailing input");
  }

  std::size_t pos() const { return pos_; }
  void rewind(std::size_t p) { pos_ = p; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Wraps domain errors raised while building values so the CLI reports them
// as parse failures at the start of the construct.
template <class Fn>
auto building(Scanner& s, std::size_t at, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::NonCoprime) throw;
    s.rewind(at);
    s.error(e.what());
  }
}

SeifertFibration fibration(Scanner& s) {
  const std::size_t at = s.pos();
  if (s.accept_word("Sigma")) {
    s.expect('(');
    auto alphas = s.small_list(')');
    s.expect(')');
    if (alphas.empty()) s.error("Sigma needs at least one multiplicity");
    return building(s, at, [&] { return brieskorn_fibration(alphas); });
  }
  if (!s.accept_word("M")) s.error("expected 'M(' or 'Sigma('");
  s.expect('(');
  const Integer genus = s.integer();
  s.expect(';');
  const Integer b = s.integer();
  s.expect(';');
  std::vector<std::int64_t> alphas;
  std::vector<Integer> betas;
  if (!s.peek(')')) {
    do {
      s.expect('(');
      alphas.push_back(s.small_integer());
      s.expect(',');
      betas.push_back(s.integer());
      s.expect(')');
    } while (s.accept(','));
  }
  s.expect(')');
  if (!genus.fits_sint_p() || genus < 0) {
    s.rewind(at);
    s.error("genus must be a small non-negative integer");
  }
  return building(s, at, [&] {
    OrbifoldBase base(static_cast<int>(genus.get_si()), alphas);
    return SeifertFibration(BundleData::normalized(base, b, betas));
  });
}

OrbifoldBase base(Scanner& s) {
  const std::size_t at = s.pos();
  if (!s.accept_word("O")) s.error("expected 'O('");
  s.expect('(');
  const auto genus = s.small_integer();
  s.expect(';');
  auto alphas = s.small_list(')');
  s.expect(')');
  return building(s, at, [&] { return OrbifoldBase(static_cast<int>(genus), alphas); });
}

}  // namespace

SeifertFibration parse_fibration(std::string_view text) {
  Scanner s(text);
  auto y = fibration(s);
  s.finish();
  return y;
}

OrbifoldBase parse_base(std::string_view text) {
  Scanner s(text);
  auto b = base(s);
  s.finish();
  return b;
}

BundleData parse_bundle(std::string_view text, const OrbifoldBase& on) {
  Scanner s(text);
  s.expect('(');
  const Integer e = s.integer();
  s.expect(';');
  auto locals = s.list(')');
  s.expect(')');
  s.finish();
  if (locals.size() != on.marked_points()) {
    s.rewind(0);
    s.error("bundle has " + std::to_string(locals.size()) + " local invariants but the base has " +
            std::to_string(on.marked_points()) + " marked points");
  }
  return BundleData::normalized(on, e, locals);
}

std::variant<SeifertFibration, OrbifoldBase> parse_manifold(std::string_view text) {
  Scanner s(text);
  if (s.peek('O')) {
    auto b = base(s);
    s.finish();
    return b;
  }
  auto y = fibration(s);
  s.finish();
  return y;
}

std::string format(const SeifertFibration& y) {
  std::ostringstream os;
  const auto& base = y.base();
  os << "M(" << base.genus() << ';' << y.bundle().background().get_str() << ';';
  for (std::size_t i = 0; i < base.marked_points(); ++i)
    os << (i ? "," : "") << '(' << base.multiplicity(i) << ',' << y.bundle().local(i) << ')';
  os << ')';
  return os.str();
}

std::string format(const OrbifoldBase& base) {
  std::ostringstream os;
  os << "O(" << base.genus() << ';';
  for (std::size_t i = 0; i < base.marked_points(); ++i) os << (i ? "," : "") << base.multiplicity(i);
  os << ')';
  return os.str();
}

std::string format(const BundleData& e) {
  std::ostringstream os;
  os << '(' << e.background().get_str() << ';';
  for (std::size_t i = 0; i < e.locals().size(); ++i) os << (i ? "," : "") << e.local(i);
  os << ')';
  return os.str();
}

std::optional<std::vector<std::int64_t>> FamilySpec::instantiate(std::int64_t k) const {
  std::vector<std::int64_t> out;
  for (const auto& s : slots) {
    const std::int64_t v = s.constant + s.slope * k;
    if (v < 2) return std::nullopt;
    out.push_back(v);
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (std::gcd(out[i], out[j]) != 1) return std::nullopt;
  return out;
}

std::string FamilySpec::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i) os << ',';
    const auto& s = slots[i];
    if (s.slope == 0) {
      os << s.constant;
      continue;
    }
    if (s.slope != 1) os << s.slope;
    os << 'k';
    if (s.constant > 0) os << '+' << s.constant;
    if (s.constant < 0) os << s.constant;
  }
  return os.str();
}

FamilySpec parse_family(std::string_view text) {
  Scanner s(text);
  FamilySpec spec;
  int affine = 0;
  do {
    FamilySpec::Slot slot;
    if (s.accept('k')) {
      slot.slope = 1;
    } else {
      slot.constant = s.small_integer();
      if (s.accept('k')) {
        slot.slope = slot.constant;
        slot.constant = 0;
      }
    }
    if (slot.slope != 0) {
      ++affine;
      if (s.peek('+') || s.peek('-')) slot.constant = s.small_integer();
    }
    spec.slots.push_back(slot);
  } while (s.accept(','));
  s.finish();
  if (affine != 1) {
    s.rewind(0);
    s.error("family pattern needs exactly one slot of the form c*k+r");
  }
  return spec;
}

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
  Scanner s(text);
  const auto lo = s.small_integer();
  if (!s.accept('.') || !s.accept('.')) s.error("expected '..'");
  const auto hi = s.small_integer();
  s.finish();
  if (hi < lo) {
    s.rewind(0);
    s.error("empty range");
  }
  return {lo, hi};
}

}  // namespace seifert::notation
