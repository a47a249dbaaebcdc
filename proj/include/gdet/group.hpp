#pragma once

#include "gdet/integer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gdet {

inline constexpr std::size_t kMaxGroupOrder = 64;

enum class GroupFamily { cyclic, klein, dihedral, alternating4, symmetric4 };

/// Which concrete group to build. `param` is n for cyclic(n) and the group order 2n for
/// dihedral(2n); it is unused otherwise.
struct GroupKind {
  GroupFamily family = GroupFamily::cyclic;
  unsigned param = 1;

  static GroupKind cyclic(unsigned n) { return {GroupFamily::cyclic, n}; }
  static GroupKind klein() { return {GroupFamily::klein, 4}; }
  static GroupKind dihedral(unsigned order) { return {GroupFamily::dihedral, order}; }
  static GroupKind alternating4() { return {GroupFamily::alternating4, 12}; }
  static GroupKind symmetric4() { return {GroupFamily::symmetric4, 24}; }

  [[nodiscard]] unsigned order() const {
    switch (family) {
      case GroupFamily::cyclic: return param;
      case GroupFamily::klein: return 4;
      case GroupFamily::dihedral: return param;
      case GroupFamily::alternating4: return 12;
      case GroupFamily::symmetric4: return 24;
    }
    return 0;
  }

  /// Canonical display name, e.g. "Z4", "K4", "D8", "A4", "S4".
  [[nodiscard]] std::string name() const {
    switch (family) {
      case GroupFamily::cyclic: return "Z" + std::to_string(param);
      case GroupFamily::klein: return "K4";
      case GroupFamily::dihedral: return "D" + std::to_string(param);
      case GroupFamily::alternating4: return "A4";
      case GroupFamily::symmetric4: return "S4";
    }
    return "?";
  }

  friend bool operator==(const GroupKind&, const GroupKind&) = default;
};

namespace detail {

inline unsigned parse_unsigned(std::string_view text, std::string_view what) {
  unsigned value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw InvalidArgument("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses the group names accepted on the command line:
/// "Z4", "K4", "D8", "A4", "S4", "S3", "Zn:<n>", "D:<2n>" (and the shorthands "Z<n>", "D<2n>").
inline GroupKind parse_group_kind(std::string_view text) {
  if (text == "K4" || text == "V4" || text == "Z2xZ2") return GroupKind::klein();
  if (text == "A4") return GroupKind::alternating4();
  if (text == "S4") return GroupKind::symmetric4();
  if (text == "S3") return GroupKind::dihedral(6);
  if (text.starts_with("Zn:")) return GroupKind::cyclic(detail::parse_unsigned(text.substr(3), "cyclic order"));
  if (text.starts_with("D:")) return GroupKind::dihedral(detail::parse_unsigned(text.substr(2), "dihedral order"));
  if (text.size() > 1 && text.front() == 'Z') {
    return GroupKind::cyclic(detail::parse_unsigned(text.substr(1), "cyclic order"));
  }
  if (text.size() > 1 && text.front() == 'D') {
    return GroupKind::dihedral(detail::parse_unsigned(text.substr(1), "dihedral order"));
  }
  throw InvalidArgument("unknown group '" + std::string(text) + "'");
}

/// Permutation of {1,2,3,4}, stored 0-based. Products apply the right factor first.
struct Permutation {
  std::array<std::uint8_t, 4> image{0, 1, 2, 3};

  [[nodiscard]] std::uint8_t operator()(std::uint8_t point) const { return image[point]; }

  /// (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    Permutation r;
    for (std::uint8_t i = 0; i < 4; ++i) r.image[i] = p.image[q.image[i]];
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  [[nodiscard]] int sign() const {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (image[i] > image[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
  }

  /// Parses cycle notation such as "1", "(134)" or "(13)(24)".
  static Permutation from_cycles(std::string_view text) {
    Permutation p;
    if (text == "1" || text == "()") return p;
    std::vector<std::uint8_t> cycle;
    auto close_cycle = [&] {
      for (std::size_t i = 0; i < cycle.size(); ++i) p.image[cycle[i]] = cycle[(i + 1) % cycle.size()];
      cycle.clear();
    };
    bool open = false;
    for (char c : text) {
      if (c == '(') {
        if (open) throw InvalidArgument("nested cycle in '" + std::string(text) + "'");
        open = true;
      } else if (c == ')') {
        if (!open) throw InvalidArgument("unbalanced cycle in '" + std::string(text) + "'");
        close_cycle();
        open = false;
      } else if (c >= '1' && c <= '4' && open) {
        cycle.push_back(static_cast<std::uint8_t>(c - '1'));
      } else {
        throw InvalidArgument("bad cycle notation '" + std::string(text) + "'");
      }
    }
    if (open) throw InvalidArgument("unterminated cycle in '" + std::string(text) + "'");
    return p;
  }

  [[nodiscard]] std::string to_cycles() const {
    std::string out;
    std::array<bool, 4> seen{};
    for (std::uint8_t start = 0; start < 4; ++start) {
      if (seen[start] || image[start] == start) continue;
      out += '(';
      for (std::uint8_t i = start; !seen[i]; i = image[i]) {
        seen[i] = true;
        out += static_cast<char>('1' + i);
      }
      out += ')';
    }
    return out.empty() ? "1" : out;
  }
};

/// Cycle labels of S4 in canonical order: a1..a12 (even), then b1..b12 (odd).
inline constexpr std::array<std::string_view, 24> kS4CycleNames = {
    "1",      "(13)(24)", "(14)(23)", "(12)(34)", "(134)", "(243)", "(142)", "(123)",
    "(143)",  "(132)",    "(124)",    "(234)",    "(1234)", "(1432)", "(24)",  "(13)",
    "(14)",   "(23)",     "(1243)",   "(1342)",   "(12)",  "(34)",   "(1324)", "(1423)"};

/// The same 24 elements as words in x = (1234) and y = (12).
inline constexpr std::array<std::string_view, 24> kS4Words = {
    "1",         "x^2",     "y x^2 y", "x^2 y x^2 y", "x y",       "x^3 y",   "x y x^2", "x^3 y x^2",
    "y x^3",     "x^2 y x", "x^2 y x^3", "y x",       "x",         "x^3",     "x y x^2 y", "y x^2 y x",
    "x^3 y x",   "x y x^3", "x y x",   "x^3 y x^3",   "y",         "x^2 y x^2", "y x^2",  "x^2 y"};

inline constexpr std::size_t kS4Alpha = 12;  // (1234)
inline constexpr std::size_t kS4Beta = 20;   // (12)

/// A finite group as a Cayley table over dense indices. Immutable after construction.
class GroupTable {
 public:
  GroupTable(GroupKind kind, std::vector<std::uint8_t> table, std::vector<std::string> names)
      : kind_(kind), order_(names.size()), mul_(std::move(table)), names_(std::move(names)) {
    if (order_ == 0 || order_ > kMaxGroupOrder) throw InvalidArgument("group order out of range");
    if (mul_.size() != order_ * order_) throw InvalidArgument("Cayley table has wrong size");
    for (auto entry : mul_)
      if (entry >= order_) throw InvalidArgument("Cayley table entry out of range");

    std::size_t identity = order_;
    for (std::size_t e = 0; e < order_ && identity == order_; ++e) {
      bool ok = true;
      for (std::size_t i = 0; i < order_ && ok; ++i) ok = mul(e, i) == i && mul(i, e) == i;
      if (ok) identity = e;
    }
    if (identity == order_) throw InvalidArgument("Cayley table has no identity");
    identity_ = identity;

    inv_.assign(order_, static_cast<std::uint8_t>(order_));
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < order_; ++j) {
        if (mul(i, j) == identity_) {
          inv_[i] = static_cast<std::uint8_t>(j);
          break;
        }
      }
      if (inv_[i] == order_) throw InvalidArgument("element without inverse in Cayley table");
    }
  }

  [[nodiscard]] const GroupKind& kind() const { return kind_; }
  [[nodiscard]] std::size_t order() const { return order_; }
  [[nodiscard]] std::size_t mul(std::size_t i, std::size_t j) const { return mul_[i * order_ + j]; }
  [[nodiscard]] std::size_t inv(std::size_t i) const { return inv_[i]; }
  [[nodiscard]] std::size_t identity() const { return identity_; }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_[i]; }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

  [[nodiscard]] std::size_t index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw InvalidArgument("no element named '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - names_.begin());
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.kind_ == b.kind_ && a.mul_ == b.mul_;
  }

 private:
  GroupKind kind_;
  std::size_t order_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> inv_;
  std::size_t identity_ = 0;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Exhaustive check of closure, associativity, identity and inverse laws.
inline bool satisfies_group_laws(const GroupTable& g) {
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (g.mul(g.identity(), i) != i || g.mul(i, g.identity()) != i) return false;
    if (g.mul(i, g.inv(i)) != g.identity() || g.mul(g.inv(i), i) != g.identity()) return false;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))) return false;
  }
  return true;
}

inline Permutation s4_permutation(std::size_t index) { return Permutation::from_cycles(kS4CycleNames.at(index)); }

namespace detail {

inline GroupTable permutation_group(GroupKind kind, std::size_t count) {
  std::vector<Permutation> perms;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    perms.push_back(s4_permutation(i));
    names.emplace_back(kS4CycleNames[i]);
  }
  std::vector<std::uint8_t> mul(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      auto it = std::find(perms.begin(), perms.end(), perms[i] * perms[j]);
      if (it == perms.end()) throw InvalidArgument("permutation list is not closed");
      mul[i * count + j] = static_cast<std::uint8_t>(it - perms.begin());
    }
  }
  return GroupTable(kind, std::move(mul), std::move(names));
}

}  // namespace detail

inline GroupTable build_group(GroupKind kind) {
  switch (kind.family) {
    case GroupFamily::cyclic: {
      const unsigned n = kind.param;
      if (n < 1 || n > kMaxGroupOrder) throw InvalidArgument("cyclic order must be in [1, 64]");
      std::vector<std::uint8_t> mul(n * n);
      std::vector<std::string> names;
      for (unsigned i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
        for (unsigned j = 0; j < n; ++j) mul[i * n + j] = static_cast<std::uint8_t>((i + j) % n);
      }
      return GroupTable(kind, std::move(mul), std::move(names));
    }
    case GroupFamily::klein: {
      std::vector<std::uint8_t> mul(16);
      for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) mul[i * 4 + j] = static_cast<std::uint8_t>(i ^ j);
      return GroupTable(kind, std::move(mul), {"1", "a", "b", "ab"});
    }
    case GroupFamily::dihedral: {
      const unsigned order = kind.param;
      if (order < 4 || order % 2 != 0 || order > kMaxGroupOrder) {
        throw InvalidArgument("dihedral order must be even and in [4, 64]");
      }
      // r^k s^e sits at index k + n*e; s r s = r^-1.
      const unsigned n = order / 2;
      std::vector<std::uint8_t> mul(order * order);
      std::vector<std::string> names(order);
      for (unsigned e = 0; e < 2; ++e) {
        for (unsigned k = 0; k < n; ++k) {
          std::string rot = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
          names[k + n * e] = e == 0 ? (rot.empty() ? "1" : rot) : (rot.empty() ? "s" : rot + " s");
        }
      }
      for (unsigned e = 0; e < 2; ++e)
        for (unsigned k = 0; k < n; ++k)
          for (unsigned f = 0; f < 2; ++f)
            for (unsigned l = 0; l < n; ++l) {
              const unsigned rot = e == 0 ? (k + l) % n : (k + n - l) % n;
              mul[(k + n * e) * order + (l + n * f)] = static_cast<std::uint8_t>(rot + n * ((e + f) % 2));
            }
      return GroupTable(kind, std::move(mul), std::move(names));
    }
    case GroupFamily::alternating4: return detail::permutation_group(kind, 12);
    case GroupFamily::symmetric4: return detail::permutation_group(kind, 24);
  }
  throw InvalidArgument("unknown group family");
}

inline GroupPtr make_group(GroupKind kind) { return std::make_shared<const GroupTable>(build_group(kind)); }

/// Shared S4 instance.
inline const GroupPtr& s4_group() {
  static const GroupPtr g = make_group(GroupKind::symmetric4());
  return g;
}

enum class Generator : std::uint8_t { x, y };

/// Word in the generators x = (1234) and y = (12) with integer exponents.
class GenWord {
 public:
  struct Letter {
    Generator gen;
    std::int64_t exponent;
    friend bool operator==(const Letter&, const Letter&) = default;
  };

  GenWord() = default;
  explicit GenWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Accepts juxtaposed letters with optional exponents: "x^3 y x^3", "xyx", "x*y^-1", "1".
  static GenWord parse(std::string_view text) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
    };
    skip();
    if (text.substr(i) == "1") return GenWord();
    while (i < text.size()) {
      const char c = text[i];
      if (c != 'x' && c != 'y') {
        throw InvalidArgument("bad generator word '" + std::string(text) + "' at position " + std::to_string(i));
      }
      ++i;
      std::int64_t exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        const std::size_t start = i;
        if (i < text.size() && text[i] == '-') ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, exponent);
        if (ec != std::errc{} || ptr != text.data() + i) {
          throw InvalidArgument("bad exponent in generator word '" + std::string(text) + "'");
        }
      }
      letters.push_back({c == 'x' ? Generator::x : Generator::y, exponent});
      skip();
    }
    return GenWord(std::move(letters));
  }

  [[nodiscard]] const std::vector<Letter>& letters() const { return letters_; }

  /// Merges adjacent equal generators and reduces exponents (x mod 4, y mod 2), dropping
  /// trivial letters until nothing changes.
  [[nodiscard]] GenWord normalized() const {
    std::vector<Letter> out;
    for (const auto& letter : letters_) {
      Letter reduced{letter.gen, floor_mod(letter.exponent, period(letter.gen))};
      while (!out.empty() && out.back().gen == reduced.gen) {
        reduced.exponent = floor_mod(reduced.exponent + out.back().exponent, period(reduced.gen));
        out.pop_back();
      }
      if (reduced.exponent != 0) out.push_back(reduced);
    }
    return GenWord(std::move(out));
  }

  [[nodiscard]] std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const auto& l : letters_) {
      if (!s.empty()) s += ' ';
      s += l.gen == Generator::x ? 'x' : 'y';
      if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
    }
    return s;
  }

  static std::int64_t period(Generator g) { return g == Generator::x ? 4 : 2; }

  friend bool operator==(const GenWord&, const GenWord&) = default;

 private:
  static std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
  }

  std::vector<Letter> letters_;
};

/// Index of the product of the word's letters in the S4 table (letters multiply left to right).
inline std::size_t word_to_element(const GroupTable& g, const GenWord& word) {
  if (g.kind().family != GroupFamily::symmetric4) {
    throw InvalidArgument("generator words are defined for S4 only");
  }
  std::size_t result = g.identity();
  const GenWord reduced = word.normalized();
  for (const auto& letter : reduced.letters()) {
    const std::size_t gen = letter.gen == Generator::x ? kS4Alpha : kS4Beta;
    for (std::int64_t i = 0; i < letter.exponent; ++i) result = g.mul(result, gen);
  }
  return result;
}

}  // namespace gdet
