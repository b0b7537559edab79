#include "placement/text.hpp"

#include <cstdint>

namespace placement {
namespace {

constexpr char32_t kInvalid = 0xFFFFFFFF;

// Decodes one code point starting at text[pos]; advances pos. Returns
// kInvalid (and advances one byte) on malformed input.
char32_t decode(std::string_view text, std::size_t& pos) {
  const auto b0 = static_cast<unsigned char>(text[pos]);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++pos;
    return kInvalid;
  }
  if (pos + len > text.size()) {
    ++pos;
    return kInvalid;
  }
  for (int i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(text[pos + i]);
    if ((b & 0xC0) != 0x80) {
      ++pos;
      return kInvalid;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong encodings and surrogates.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
      (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return kInvalid;
  }
  pos += len;
  return cp;
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Base letters for U+00C0..U+00FF; '*' marks entries handled elsewhere.
constexpr std::string_view kLatin1 =
    "aaaaaa*ceeeeiiii"   // C0-CF (C6 = AE)
    "dnooooo*ouuuuy**"   // D0-DF (D7 = times, DE = thorn, DF = sharp s)
    "aaaaaa*ceeeeiiii"   // E0-EF (E6 = ae)
    "dnooooo*ouuuuy*y";  // F0-FF (F7 = divide, FE = thorn)

// Base letters for U+0100..U+017F.
constexpr std::string_view kLatinExtA =
    "aaaaaaccccccccdd"   // 0100-010F
    "ddeeeeeeeeeegggg"   // 0110-011F
    "gggghhhhiiiiiiii"   // 0120-012F
    "ii**jjkkklllllll"   // 0130-013F (0132/0133 = ij)
    "lllnnnnnnnnnoooo"   // 0140-014F
    "oo**rrrrrrssssss"   // 0150-015F (0152/0153 = oe)
    "ssttttttuuuuuuuu"   // 0160-016F
    "uuuuwwyyyzzzzzzs";  // 0170-017F

bool is_space(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200B;
  }
}

bool is_hyphen(char32_t cp) { return cp == '-' || cp == 0x2010 || cp == 0x2011; }

bool is_punct(char32_t cp) {
  if (cp < 0x80) {
    const bool alnum = (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
                       (cp >= 'A' && cp <= 'Z');
    return !alnum;
  }
  if (cp >= 0x00A1 && cp <= 0x00BF) return true;
  if (cp == 0x00D7 || cp == 0x00F7) return true;
  if (cp >= 0x2012 && cp <= 0x2027) return true;
  if (cp >= 0x2030 && cp <= 0x205E) return true;
  if (cp >= 0x20A0 && cp <= 0x20CF) return true;
  if (cp >= 0x3001 && cp <= 0x3003) return true;
  return false;
}

bool is_word(char32_t cp) {
  return cp != kInvalid && !is_space(cp) && !is_punct(cp) && !is_hyphen(cp);
}

void fold_code_point(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    if (cp >= 'A' && cp <= 'Z') cp += 'a' - 'A';
    out.push_back(static_cast<char>(cp));
    return;
  }
  if (is_hyphen(cp)) {
    out.push_back('-');
    return;
  }
  if (cp >= 0x0300 && cp <= 0x036F) return;  // combining diacritics
  if (cp >= 0x00C0 && cp <= 0x00FF) {
    switch (cp) {
      case 0x00C6: case 0x00E6: out += "ae"; return;
      case 0x00DE: case 0x00FE: out += "th"; return;
      case 0x00DF: out += "ss"; return;
      case 0x00D7: case 0x00F7: encode(cp, out); return;
      default: out.push_back(kLatin1[cp - 0x00C0]); return;
    }
  }
  if (cp >= 0x0100 && cp <= 0x017F) {
    if (cp == 0x0132 || cp == 0x0133) {
      out += "ij";
    } else if (cp == 0x0152 || cp == 0x0153) {
      out += "oe";
    } else {
      out.push_back(kLatinExtA[cp - 0x0100]);
    }
    return;
  }
  // Greek and Cyrillic capitals.
  if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) cp += 0x20;
  if (cp >= 0x0410 && cp <= 0x042F) cp += 0x20;
  if (cp >= 0x0400 && cp <= 0x040F) cp += 0x50;
  encode(cp, out);
}

}  // namespace

std::string fold(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  std::size_t pos = 0;
  while (pos < word.size()) {
    const char32_t cp = decode(word, pos);
    if (cp != kInvalid) fold_code_point(cp, out);
  }
  return out;
}

TokenStream tokenize(std::string_view text) {
  TokenStream tokens;
  std::size_t pos = 0;
  std::size_t start = std::string_view::npos;

  auto close = [&](std::size_t end) {
    if (start == std::string_view::npos) return;
    std::string_view surface = text.substr(start, end - start);
    tokens.push_back(Token{std::string(surface), fold(surface), start});
    start = std::string_view::npos;
  };

  while (pos < text.size()) {
    const std::size_t here = pos;
    const char32_t cp = decode(text, pos);
    if (is_word(cp)) {
      if (start == std::string_view::npos) start = here;
      continue;
    }
    if (is_hyphen(cp) && start != std::string_view::npos && pos < text.size()) {
      std::size_t peek = pos;
      if (is_word(decode(text, peek))) continue;
    }
    close(here);
  }
  close(text.size());
  return tokens;
}

std::string normalize_phrase(std::string_view phrase) {
  std::string out;
  for (const Token& t : tokenize(phrase)) {
    if (!out.empty()) out.push_back(' ');
    out += t.normalized;
  }
  return out;
}

}  // namespace placement
