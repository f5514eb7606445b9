#include "blockmoments/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <utility>

namespace blockmoments {

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

enum class TokenKind {
  langle,
  rangle,
  pipe,
  comma,
  lparen,
  rparen,
  caret,
  minus,
  number,
  ident,
  end,
};

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  SourcePosition pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t count) {
    for (std::size_t j = 0; j < count; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const SourcePosition pos{line, column};
    switch (c) {
      case '<': tokens.push_back({TokenKind::langle, "<", pos}); advance(1); continue;
      case '>': tokens.push_back({TokenKind::rangle, ">", pos}); advance(1); continue;
      case '|': tokens.push_back({TokenKind::pipe, "|", pos}); advance(1); continue;
      case ',': tokens.push_back({TokenKind::comma, ",", pos}); advance(1); continue;
      case '(': tokens.push_back({TokenKind::lparen, "(", pos}); advance(1); continue;
      case ')': tokens.push_back({TokenKind::rparen, ")", pos}); advance(1); continue;
      case '^': tokens.push_back({TokenKind::caret, "^", pos}); advance(1); continue;
      case '-': tokens.push_back({TokenKind::minus, "-", pos}); advance(1); continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t len = 1;
      while (i + len < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i + len])) != 0) {
        ++len;
      }
      tokens.push_back({TokenKind::number, std::string(text.substr(i, len)), pos});
      advance(len);
      continue;
    }
    if (is_name_start(c)) {
      std::size_t len = 1;
      while (i + len < text.size() && is_name_char(text[i + len])) ++len;
      tokens.push_back({TokenKind::ident, std::string(text.substr(i, len)), pos});
      advance(len);
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos);
  }
  tokens.push_back({TokenKind::end, "", {line, column}});
  return tokens;
}

constexpr std::int64_t kExponentCap = 100000;

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Presentation parse() {
    Presentation p;
    expect(TokenKind::langle, "expected '<'");
    if (peek().kind == TokenKind::pipe) {
      throw ParseError("empty generator list", peek().pos);
    }
    while (true) {
      const Token& name = expect(TokenKind::ident, "expected generator name");
      if (p.has_generator(name.text)) {
        throw ParseError("duplicate generator '" + name.text + "'", name.pos);
      }
      p.generators.push_back({name.text});
      if (peek().kind != TokenKind::comma) break;
      next();
    }
    expect(TokenKind::pipe, "expected '|'");
    sortNamesForSegmentation(p);
    if (peek().kind != TokenKind::rangle) {
      while (true) {
        const Token& head = peek();
        Word relator = parseWord();
        if (relator.empty()) throw ParseError("empty relator", head.pos);
        p.relators.push_back(std::move(relator));
        if (peek().kind != TokenKind::comma) break;
        next();
      }
    }
    expect(TokenKind::rangle, "expected '>'");
    if (peek().kind != TokenKind::end) {
      throw ParseError("unexpected trailing input", peek().pos);
    }
    return p;
  }

 private:
  const Token& peek() const { return tokens_[cursor_]; }
  const Token& next() { return tokens_[cursor_++]; }

  const Token& expect(TokenKind kind, const std::string& message) {
    if (peek().kind != kind) throw ParseError(message, peek().pos);
    return next();
  }

  void sortNamesForSegmentation(const Presentation& p) {
    for (const auto& g : p.generators) names_.push_back(g.name);
    std::sort(names_.begin(), names_.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
  }

  // Splits an undelimited letter run into declared generator names,
  // longest match first with backtracking. Dead-end positions are memoized
  // so pathological runs stay linear in practice.
  bool segment(const std::string& run, std::size_t pos,
               std::vector<std::string>& out,
               std::vector<bool>& dead) const {
    if (pos == run.size()) return true;
    if (dead[pos]) return false;
    for (const auto& name : names_) {
      if (run.compare(pos, name.size(), name) == 0) {
        out.push_back(name);
        if (segment(run, pos + name.size(), out, dead)) return true;
        out.pop_back();
      }
    }
    dead[pos] = true;
    return false;
  }

  std::vector<std::string> segmentRun(const Token& run) const {
    std::vector<std::string> names;
    std::vector<bool> dead(run.text.size(), false);
    if (!segment(run.text, 0, names, dead)) {
      throw ParseError(
          "cannot segment '" + run.text + "' into declared generators",
          run.pos);
    }
    return names;
  }

  // exponent := '^' ['-'] digits, nonzero, |k| <= 100000
  std::int64_t parseExponent() {
    next();  // caret
    std::int64_t sign = 1;
    if (peek().kind == TokenKind::minus) {
      next();
      sign = -1;
    }
    const Token& digits = expect(TokenKind::number, "expected exponent");
    if (digits.text.size() > 6) {
      throw ParseError("exponent out of range", digits.pos);
    }
    const std::int64_t magnitude = std::stoll(digits.text);
    if (magnitude == 0) {
      throw ParseError("exponent must be nonzero", digits.pos);
    }
    if (magnitude > kExponentCap) {
      throw ParseError("exponent out of range", digits.pos);
    }
    return sign * magnitude;
  }

  Word parseWord() {
    std::vector<Letter> letters;
    while (true) {
      if (peek().kind == TokenKind::ident) {
        const Token& run = next();
        std::vector<std::string> names = segmentRun(run);
        std::int64_t k = 1;
        if (peek().kind == TokenKind::caret) k = parseExponent();
        // An exponent binds to the final name of the run: ab^2 = a b b.
        for (std::size_t j = 0; j + 1 < names.size(); ++j) {
          letters.push_back({{names[j]}, 1});
        }
        const GeneratorSymbol last{names.back()};
        const int sign = k < 0 ? -1 : 1;
        for (std::int64_t r = 0; r < (k < 0 ? -k : k); ++r) {
          letters.push_back({last, sign});
        }
      } else if (peek().kind == TokenKind::lparen) {
        const Token& open = next();
        Word inner = parseWord();
        if (inner.empty()) throw ParseError("empty parentheses", open.pos);
        expect(TokenKind::rparen, "expected ')'");
        std::int64_t k = 1;
        if (peek().kind == TokenKind::caret) k = parseExponent();
        const Word unit = k < 0 ? invert(inner) : inner;
        for (std::int64_t r = 0; r < (k < 0 ? -k : k); ++r) {
          letters.insert(letters.end(), unit.letters().begin(),
                         unit.letters().end());
        }
      } else {
        break;
      }
    }
    return Word(std::move(letters));
  }

  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
  std::vector<std::string> names_;
};

// Run-length pieces of a word: maximal blocks of one signed letter.
struct Run {
  GeneratorSymbol generator;
  int sign = 1;
  std::size_t count = 0;
};

std::vector<Run> runs_of(const Word& w) {
  std::vector<Run> runs;
  for (const Letter& l : w.letters()) {
    if (!runs.empty() && runs.back().generator == l.generator &&
        runs.back().sign == l.sign) {
      ++runs.back().count;
    } else {
      runs.push_back({l.generator, l.sign, 1});
    }
  }
  return runs;
}

std::string run_text(const Run& r) {
  std::string out = r.generator.name;
  const std::int64_t k =
      r.sign < 0 ? -static_cast<std::int64_t>(r.count)
                 : static_cast<std::int64_t>(r.count);
  if (k != 1) out += "^" + std::to_string(k);
  return out;
}

std::string word_text_with(const Word& w, const char* separator) {
  std::string out;
  bool first = true;
  for (const Run& r : runs_of(w)) {
    if (!first) out += separator;
    out += run_text(r);
    first = false;
  }
  return out;
}

std::string render(const Presentation& p, const char* separator) {
  std::string out = "<";
  bool first = true;
  for (const auto& g : p.generators) {
    if (!first) out += ", ";
    out += g.name;
    first = false;
  }
  out += " |";
  first = true;
  for (const Word& r : p.relators) {
    out += first ? " " : ", ";
    out += word_text_with(r, separator);
    first = false;
  }
  out += ">";
  return out;
}

}  // namespace

bool Word::freely_reduced() const noexcept {
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
    if (letters_[i + 1] == inverse(letters_[i])) return false;
  }
  return true;
}

bool Presentation::has_generator(std::string_view name) const noexcept {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const GeneratorSymbol& g) { return g.name == name; });
}

ParseError::ParseError(std::string message, SourcePosition pos)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(std::move(message)) {}

Presentation parse_presentation(std::string_view text) {
  return Parser(text).parse();
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back() == inverse(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word cyclic_reduce(const Word& w) {
  const Word reduced = free_reduce(w);
  const auto& letters = reduced.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == inverse(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                  letters.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Word invert(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(inverse(*it));
  }
  return Word(std::move(letters));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(letters));
}

GeneratorSpec detect_power_order(const Presentation& p,
                                 const GeneratorSymbol& g) {
  if (!p.has_generator(g.name)) {
    throw std::invalid_argument("unknown generator '" + g.name + "'");
  }
  bool found = false;
  unsigned best = 0;
  for (const Word& relator : p.relators) {
    const Word core = cyclic_reduce(relator);
    if (core.empty()) continue;
    const bool pure = std::all_of(
        core.letters().begin(), core.letters().end(),
        [&](const Letter& l) { return l.generator == g; });
    if (!pure) continue;
    // A freely reduced one-generator word has uniform sign, so the exponent
    // magnitude is just the length.
    const auto k = static_cast<unsigned>(core.size());
    if (!found || k < best) best = k;
    found = true;
  }
  return GeneratorSpec{g, found ? Order::finite(best) : Order::infinite()};
}

std::string to_string(const Order& order) {
  return order.is_finite() ? std::to_string(order.value()) : "inf";
}

std::string serialize(const Presentation& p) {
  const std::string compact = render(p, "");
  try {
    if (parse_presentation(compact) == p) return compact;
  } catch (const ParseError&) {
    // fall through to the spaced form
  }
  return render(p, " ");
}

std::string word_text(const Word& w) { return word_text_with(w, ""); }

}  // namespace blockmoments
