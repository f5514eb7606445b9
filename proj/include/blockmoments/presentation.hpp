#ifndef BLOCKMOMENTS_PRESENTATION_HPP
#define BLOCKMOMENTS_PRESENTATION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blockmoments {

/// A named generator of a presented group. Names are case-sensitive tokens
/// of letters, digits and underscores, starting with a letter.
struct GeneratorSymbol {
  std::string name;

  friend bool operator==(const GeneratorSymbol&,
                         const GeneratorSymbol&) = default;
};

/// One signed letter of a free word: a generator or its inverse.
struct Letter {
  GeneratorSymbol generator;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(const Letter& l) { return Letter{l.generator, -l.sign}; }

/// Element of the free monoid over the generators and their inverses.
/// The empty word is the monoid identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }

  /// True iff no adjacent pair is a letter followed by its inverse.
  bool freely_reduced() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// A finitely presented group <X : R>: generators plus relator words.
/// Relators are stored as written (expanded, not freely reduced) and are
/// never empty.
struct Presentation {
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators;

  bool has_generator(std::string_view name) const noexcept;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// The exponent attached to a generator: a finite order n >= 1 detected from
/// a power relator, or infinite when no power relator exists.
class Order {
 public:
  static constexpr Order infinite() noexcept { return Order{}; }

  static Order finite(unsigned n) {
    if (n == 0) throw std::invalid_argument("order must be >= 1");
    Order o;
    o.n_ = n;
    return o;
  }

  bool is_finite() const noexcept { return n_ != 0; }

  unsigned value() const {
    if (!is_finite()) throw std::logic_error("order is infinite");
    return n_;
  }

  friend bool operator==(const Order&, const Order&) = default;

 private:
  constexpr Order() = default;
  unsigned n_ = 0;  // 0 encodes infinite
};

/// "inf" for the infinite order, the decimal exponent otherwise.
std::string to_string(const Order& order);

/// A generator together with its detected power-relator exponent.
struct GeneratorSpec {
  GeneratorSymbol generator;
  Order order = Order::infinite();

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

struct SourcePosition {
  int line = 0;    // 1-based
  int column = 0;  // 1-based

  friend bool operator==(const SourcePosition&,
                         const SourcePosition&) = default;
};

/// Raised on malformed presentation text; carries the offending position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, SourcePosition pos);

  const SourcePosition& position() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SourcePosition pos_;
  std::string message_;
};

/// Parses `<gen, gen | relator, relator>` text. Whitespace between tokens is
/// insignificant, `#` starts a line comment, exponents expand into letter
/// sequences ((ab)^2 -> a b a b, x^-2 -> x^-1 x^-1) and the relator list may
/// be empty. Undelimited letter runs like "abab" are segmented into declared
/// generator names, longest match first.
Presentation parse_presentation(std::string_view text);

/// Deletes adjacent inverse pairs until none remain. The result is the
/// unique freely reduced form regardless of cancellation order.
Word free_reduce(const Word& w);

/// Freely reduces, then cancels matching first/last inverse letters.
Word cyclic_reduce(const Word& w);

/// Reverses the letter sequence and negates every sign.
Word invert(const Word& w);

/// Monoid concatenation; no reduction is applied.
Word concat(const Word& a, const Word& b);

/// Scans the relators for powers of `g`: a relator whose cyclic reduction is
/// g^k or g^-k records |k|. Returns the minimum recorded exponent, or the
/// infinite order when no relator qualifies. This is an operational notion;
/// it does not prove the group-theoretic order (other relators could force a
/// smaller one).
GeneratorSpec detect_power_order(const Presentation& p,
                                 const GeneratorSymbol& g);

/// Canonical one-line form `<g1, g2 | w1, w2>`. Words print as letter runs
/// with `^k` for runs of length >= 2 and `^-1` for single inverses; a
/// whitespace-separated fallback is used only where the space-free run would
/// re-segment differently (e.g. a generator named like a product of others),
/// so parsing the result always reproduces `p` exactly.
std::string serialize(const Presentation& p);

/// Run-length text of a word on its own (no segmentation guard).
std::string word_text(const Word& w);

}  // namespace blockmoments

#endif  // BLOCKMOMENTS_PRESENTATION_HPP
