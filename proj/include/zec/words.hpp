// words.hpp -- alphabets, symbol strings, and periodic-unit primitives

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zec {

using Symbol = std::uint8_t;

/// Largest alphabet the textual form can render (digits 0-9, then a-z).
inline constexpr int kMaxAlphabetSize = 36;

char symbol_to_char(Symbol s);
std::optional<Symbol> char_to_symbol(char c);

/// A q-ary symbol set {0, 1, ..., q-1}.
struct Alphabet {
  int size = 2;

  explicit Alphabet(int q);
  bool contains(Symbol s) const { return static_cast<int>(s) < size; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Immutable finite string of symbols. Comparison is lexicographic on
/// symbol values.
class Word {
 public:
  Word() = default;

  /// Parses the textual form ("001001"). Throws std::invalid_argument on
  /// characters that do not name a symbol.
  static Word parse(std::string_view text);
  /// As above, additionally rejecting symbols outside the alphabet.
  static Word parse(std::string_view text, const Alphabet& alphabet);
  static Word from_symbols(const std::vector<int>& symbols);
  /// The word of `length` copies of `s`.
  static Word uniform(Symbol s, std::size_t length);

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  Symbol operator[](std::size_t i) const {
    return static_cast<Symbol>(static_cast<unsigned char>(data_[i]));
  }

  /// Largest symbol value present, or -1 for the empty word.
  int max_symbol() const;
  /// True when all symbols are equal (vacuously true for the empty word).
  bool is_uniform() const;

  Word prefix(std::size_t length) const;
  Word suffix(std::size_t length) const;
  /// Periodic extension of this word to `length` symbols; truncates when
  /// `length` is smaller.
  Word repeated_to(std::size_t length) const;

  bool starts_with(const Word& p) const;
  bool ends_with(const Word& s) const;

  friend Word operator+(const Word& a, const Word& b);

  /// Textual form, one character per symbol.
  std::string str() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

  const std::string& raw() const noexcept { return data_; }

 private:
  explicit Word(std::string data) : data_(std::move(data)) {}

  std::string data_;  // one byte per symbol, values 0..35
};

/// Bijection on the symbols of an alphabet.
class Permutation {
 public:
  /// images[s] is the image of symbol s. Throws unless a bijection.
  explicit Permutation(std::vector<Symbol> images);
  static Permutation identity(int q);

  int size() const { return static_cast<int>(images_.size()); }
  Symbol operator()(Symbol s) const;
  Permutation inverse() const;
  const std::vector<Symbol>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Symbol> images_;
};

Word reverse(const Word& w);
Word permute(const Word& w, const Permutation& pi);

Word longest_common_prefix(const Word& u, const Word& v);
Word longest_common_suffix(const Word& u, const Word& v);

/// Smallest shift t in [0, len(x)) such that y is the cyclic periodic
/// extension of x offset by t, i.e. y[i] = x[(i - t) mod len(x)] for all i.
/// Empty when no shift works or len(x) > len(y). Throws on empty x.
std::optional<std::size_t> unit_shift(const Word& x, const Word& y);

/// True when x is a unit of y with shift 0, i.e. y is the periodic
/// extension of its own prefix x.
bool is_prefix_unit(const Word& x, const Word& y);

/// Shortest prefix p of y with len(p) >= min_len such that y equals the
/// periodic extension of p. y itself always qualifies. Requires
/// 1 <= min_len <= len(y).
Word shortest_prefix_unit(const Word& y, std::size_t min_len);

}  // namespace zec

template <>
struct std::hash<zec::Word> {
  std::size_t operator()(const zec::Word& w) const noexcept {
    return std::hash<std::string>{}(w.raw());
  }
};
