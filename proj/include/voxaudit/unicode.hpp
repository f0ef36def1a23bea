// Copyright 2026 The voxaudit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Minimal, self-contained Unicode support: UTF-8 codec, simple lowercase
// folding, whitespace/punctuation predicates, and a letter-script classifier
// covering the scripts this tool audits. Range tables are hand-maintained;
// they cover letters only (combining marks, digits and symbols classify as
// no-script) and are intentionally narrower than full UCD data.

#ifndef VOXAUDIT_UNICODE_HPP_
#define VOXAUDIT_UNICODE_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace voxaudit::uni {

using CodePoint = char32_t;

inline constexpr CodePoint kReplacementChar = 0xFFFD;

// --------------------------------------------------------------------------
// UTF-8 codec. Decoding is lenient: malformed bytes become U+FFFD, one
// replacement per bad byte, so downstream counts stay stable.

inline std::vector<CodePoint> decode_utf8(std::string_view s) {
  std::vector<CodePoint> out;
  out.reserve(s.size());
  size_t i = 0;
  const auto* b = reinterpret_cast<const unsigned char*>(s.data());
  while (i < s.size()) {
    unsigned char c = b[i];
    if (c < 0x80) {
      out.push_back(c);
      ++i;
      continue;
    }
    int len = 0;
    CodePoint cp = 0;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      unsigned char cc = b[i + k];
      if ((cc & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Reject overlongs, surrogates and out-of-range values.
    if (!ok || (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline bool is_valid_utf8(std::string_view s) {
  size_t i = 0;
  const auto* b = reinterpret_cast<const unsigned char*>(s.data());
  while (i < s.size()) {
    unsigned char c = b[i];
    if (c < 0x80) {
      ++i;
      continue;
    }
    int len;
    CodePoint cp;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (int k = 1; k < len; ++k) {
      unsigned char cc = b[i + k];
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += len;
  }
  return true;
}

inline void append_utf8(std::string& out, CodePoint cp) {
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

inline std::string encode_utf8(const std::vector<CodePoint>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (CodePoint cp : cps) append_utf8(out, cp);
  return out;
}

// --------------------------------------------------------------------------
// Simple (1:1) lowercase folding for the alphabets that show up in marker
// lexicons and manifests: ASCII, Latin-1/Extended, Greek, Cyrillic,
// fullwidth Latin. Unmapped code points pass through unchanged.

inline CodePoint to_lower(CodePoint c) {
  if (c >= 'A' && c <= 'Z') return c + 0x20;
  if (c < 0x80) return c;
  if ((c >= 0x00C0 && c <= 0x00D6) || (c >= 0x00D8 && c <= 0x00DE)) return c + 0x20;
  // Latin Extended-A pairs; parity of the uppercase member varies per run.
  if (c >= 0x0100 && c <= 0x012F) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x0132 && c <= 0x0137) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x0139 && c <= 0x0148) return (c % 2 == 1) ? c + 1 : c;
  if (c >= 0x014A && c <= 0x0177) return (c % 2 == 0) ? c + 1 : c;
  if (c == 0x0178) return 0x00FF;
  if (c >= 0x0179 && c <= 0x017E) return (c % 2 == 1) ? c + 1 : c;
  if (c == 0x017F) return 0x0073;  // long s
  if (c >= 0x01CD && c <= 0x01DC) return (c % 2 == 1) ? c + 1 : c;
  if (c >= 0x01DE && c <= 0x01EF) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x01F8 && c <= 0x021F) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x0222 && c <= 0x0233) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x0246 && c <= 0x024F) return (c % 2 == 0) ? c + 1 : c;
  // Greek.
  if (c == 0x0386) return 0x03AC;
  if (c >= 0x0388 && c <= 0x038A) return c + 0x25;
  if (c == 0x038C) return 0x03CC;
  if (c == 0x038E) return 0x03CD;
  if (c == 0x038F) return 0x03CE;
  if ((c >= 0x0391 && c <= 0x03A1) || (c >= 0x03A3 && c <= 0x03AB)) return c + 0x20;
  // Cyrillic.
  if (c >= 0x0400 && c <= 0x040F) return c + 0x50;
  if (c >= 0x0410 && c <= 0x042F) return c + 0x20;
  if (c >= 0x0460 && c <= 0x0481) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x048A && c <= 0x04BF) return (c % 2 == 0) ? c + 1 : c;
  if (c == 0x04C0) return 0x04CF;
  if (c >= 0x04C1 && c <= 0x04CE) return (c % 2 == 1) ? c + 1 : c;
  if (c >= 0x04D0 && c <= 0x052F) return (c % 2 == 0) ? c + 1 : c;
  // Fullwidth Latin.
  if (c >= 0xFF21 && c <= 0xFF3A) return c + 0x20;
  return c;
}

inline std::string lowercase(std::string_view s) {
  std::vector<CodePoint> cps = decode_utf8(s);
  for (CodePoint& c : cps) c = to_lower(c);
  return encode_utf8(cps);
}

// --------------------------------------------------------------------------
// Whitespace.

inline bool is_space(CodePoint c) {
  return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 ||
         c == 0x1680 || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 ||
         c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000;
}

// --------------------------------------------------------------------------
// Punctuation (Unicode P* categories, practical subset). Symbols such as
// $ + < = > ^ ` | ~ are deliberately not punctuation.

inline bool is_punct(CodePoint c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x23) || (c >= 0x25 && c <= 0x2A) ||
           (c >= 0x2C && c <= 0x2F) || c == 0x3A || c == 0x3B ||
           c == 0x3F || c == 0x40 || (c >= 0x5B && c <= 0x5D) ||
           c == 0x5F || c == 0x7B || c == 0x7D;
  }
  struct Range {
    CodePoint lo, hi;
  };
  static constexpr Range kRanges[] = {
      {0x00A1, 0x00A1}, {0x00A7, 0x00A7}, {0x00AB, 0x00AB}, {0x00B6, 0x00B7},
      {0x00BB, 0x00BB}, {0x00BF, 0x00BF}, {0x037E, 0x037E}, {0x0387, 0x0387},
      {0x055A, 0x055F}, {0x0589, 0x058A}, {0x05BE, 0x05BE}, {0x05C0, 0x05C0},
      {0x05C3, 0x05C3}, {0x05C6, 0x05C6}, {0x05F3, 0x05F4}, {0x0609, 0x060A},
      {0x060C, 0x060D}, {0x061B, 0x061B}, {0x061D, 0x061F}, {0x066A, 0x066D},
      {0x06D4, 0x06D4}, {0x0700, 0x070D}, {0x07F7, 0x07F9}, {0x0830, 0x083E},
      {0x0964, 0x0965}, {0x0970, 0x0970}, {0x0E4F, 0x0E4F}, {0x0E5A, 0x0E5B},
      {0x104A, 0x104F}, {0x10FB, 0x10FB}, {0x1360, 0x1368}, {0x1400, 0x1400},
      {0x166E, 0x166E}, {0x1735, 0x1736}, {0x17D4, 0x17D6}, {0x17D8, 0x17DA},
      {0x1800, 0x180A}, {0x2010, 0x2027}, {0x2030, 0x2043}, {0x2045, 0x2051},
      {0x2053, 0x205E}, {0x207D, 0x207E}, {0x208D, 0x208E}, {0x2329, 0x232A},
      {0x2768, 0x2775}, {0x27E6, 0x27EF}, {0x2983, 0x2998}, {0x2CF9, 0x2CFC},
      {0x2CFE, 0x2CFF}, {0x2D70, 0x2D70}, {0x2E00, 0x2E4F}, {0x3001, 0x3003},
      {0x3008, 0x3011}, {0x3014, 0x301F}, {0x3030, 0x3030}, {0x303D, 0x303D},
      {0x30A0, 0x30A0}, {0x30FB, 0x30FB}, {0xFD3E, 0xFD3F}, {0xFE10, 0xFE19},
      {0xFE30, 0xFE52}, {0xFE54, 0xFE61}, {0xFE63, 0xFE63}, {0xFE68, 0xFE68},
      {0xFE6A, 0xFE6B}, {0xFF01, 0xFF03}, {0xFF05, 0xFF0A}, {0xFF0C, 0xFF0F},
      {0xFF1A, 0xFF1B}, {0xFF1F, 0xFF20}, {0xFF3B, 0xFF3D}, {0xFF3F, 0xFF3F},
      {0xFF5B, 0xFF5B}, {0xFF5D, 0xFF5D}, {0xFF5F, 0xFF65},
  };
  auto it = std::lower_bound(
      std::begin(kRanges), std::end(kRanges), c,
      [](const Range& r, CodePoint v) { return r.hi < v; });
  return it != std::end(kRanges) && c >= it->lo;
}

// --------------------------------------------------------------------------
// Script classification for letters.

enum class Script : uint8_t {
  Adlam,
  Arabic,
  Cyrillic,
  Devanagari,
  Greek,
  Gurmukhi,
  Han,
  Hangul,
  Hebrew,
  Hiragana,
  Katakana,
  Latin,
  Mongolian,
  Nko,
  Thai,
  Tifinagh,
  Unknown,  // not a letter of a supported script
};

inline constexpr size_t kNumScripts = static_cast<size_t>(Script::Unknown);

inline const char* script_name(Script s) {
  switch (s) {
    case Script::Adlam: return "Adlam";
    case Script::Arabic: return "Arabic";
    case Script::Cyrillic: return "Cyrillic";
    case Script::Devanagari: return "Devanagari";
    case Script::Greek: return "Greek";
    case Script::Gurmukhi: return "Gurmukhi";
    case Script::Han: return "Han";
    case Script::Hangul: return "Hangul";
    case Script::Hebrew: return "Hebrew";
    case Script::Hiragana: return "Hiragana";
    case Script::Katakana: return "Katakana";
    case Script::Latin: return "Latin";
    case Script::Mongolian: return "Mongolian";
    case Script::Nko: return "NKo";
    case Script::Thai: return "Thai";
    case Script::Tifinagh: return "Tifinagh";
    case Script::Unknown: return "none";
  }
  return "none";
}

inline std::optional<Script> script_from_name(std::string_view name) {
  for (size_t i = 0; i < kNumScripts; ++i) {
    Script s = static_cast<Script>(i);
    if (name == script_name(s)) return s;
  }
  return std::nullopt;
}

namespace detail {

struct ScriptRange {
  CodePoint lo, hi;
  Script script;
};

// Sorted by lo. Letters only; marks, digits and punctuation inside these
// blocks are excluded where they matter in practice.
inline constexpr ScriptRange kScriptRanges[] = {
    {0x0041, 0x005A, Script::Latin},
    {0x0061, 0x007A, Script::Latin},
    {0x00AA, 0x00AA, Script::Latin},
    {0x00BA, 0x00BA, Script::Latin},
    {0x00C0, 0x00D6, Script::Latin},
    {0x00D8, 0x00F6, Script::Latin},
    {0x00F8, 0x02AF, Script::Latin},  // Extended-A/B + IPA extensions
    {0x0370, 0x0373, Script::Greek},
    {0x0376, 0x0377, Script::Greek},
    {0x037B, 0x037D, Script::Greek},
    {0x037F, 0x037F, Script::Greek},
    {0x0386, 0x0386, Script::Greek},
    {0x0388, 0x038A, Script::Greek},
    {0x038C, 0x038C, Script::Greek},
    {0x038E, 0x03A1, Script::Greek},
    {0x03A3, 0x03E1, Script::Greek},
    {0x03F0, 0x03F5, Script::Greek},
    {0x03F7, 0x03FF, Script::Greek},
    {0x0400, 0x0481, Script::Cyrillic},
    {0x048A, 0x052F, Script::Cyrillic},
    {0x05D0, 0x05EA, Script::Hebrew},
    {0x05EF, 0x05F2, Script::Hebrew},
    {0x0620, 0x063F, Script::Arabic},
    {0x0641, 0x064A, Script::Arabic},
    {0x066E, 0x066F, Script::Arabic},
    {0x0671, 0x06D3, Script::Arabic},
    {0x06D5, 0x06D5, Script::Arabic},
    {0x06E5, 0x06E6, Script::Arabic},
    {0x06EE, 0x06EF, Script::Arabic},
    {0x06FA, 0x06FC, Script::Arabic},
    {0x06FF, 0x06FF, Script::Arabic},
    {0x0750, 0x077F, Script::Arabic},
    {0x07CA, 0x07EA, Script::Nko},
    {0x07F4, 0x07F5, Script::Nko},
    {0x07FA, 0x07FA, Script::Nko},
    {0x08A0, 0x08C9, Script::Arabic},
    {0x0904, 0x0939, Script::Devanagari},
    {0x093D, 0x093D, Script::Devanagari},
    {0x0950, 0x0950, Script::Devanagari},
    {0x0958, 0x0961, Script::Devanagari},
    {0x0971, 0x097F, Script::Devanagari},
    {0x0A05, 0x0A0A, Script::Gurmukhi},
    {0x0A0F, 0x0A10, Script::Gurmukhi},
    {0x0A13, 0x0A28, Script::Gurmukhi},
    {0x0A2A, 0x0A30, Script::Gurmukhi},
    {0x0A32, 0x0A33, Script::Gurmukhi},
    {0x0A35, 0x0A36, Script::Gurmukhi},
    {0x0A38, 0x0A39, Script::Gurmukhi},
    {0x0A59, 0x0A5C, Script::Gurmukhi},
    {0x0A5E, 0x0A5E, Script::Gurmukhi},
    {0x0A72, 0x0A74, Script::Gurmukhi},
    {0x0E01, 0x0E30, Script::Thai},
    {0x0E32, 0x0E33, Script::Thai},
    {0x0E40, 0x0E46, Script::Thai},
    {0x1100, 0x11FF, Script::Hangul},
    {0x1820, 0x1878, Script::Mongolian},
    {0x1880, 0x18AA, Script::Mongolian},
    {0x1C80, 0x1C88, Script::Cyrillic},
    {0x1E00, 0x1EFF, Script::Latin},
    {0x1F00, 0x1F15, Script::Greek},
    {0x1F18, 0x1F1D, Script::Greek},
    {0x1F20, 0x1F45, Script::Greek},
    {0x1F48, 0x1F4D, Script::Greek},
    {0x1F50, 0x1F7D, Script::Greek},
    {0x1F80, 0x1FB4, Script::Greek},
    {0x1FB6, 0x1FBC, Script::Greek},
    {0x1FC2, 0x1FCC, Script::Greek},
    {0x1FD0, 0x1FDB, Script::Greek},
    {0x1FE0, 0x1FEC, Script::Greek},
    {0x1FF2, 0x1FFC, Script::Greek},
    {0x2071, 0x2071, Script::Latin},
    {0x207F, 0x207F, Script::Latin},  // superscript n, used by POJ
    {0x2C60, 0x2C7F, Script::Latin},
    {0x2D30, 0x2D67, Script::Tifinagh},
    {0x2D6F, 0x2D6F, Script::Tifinagh},
    {0x3005, 0x3005, Script::Han},
    {0x3007, 0x3007, Script::Han},
    {0x3041, 0x3096, Script::Hiragana},
    {0x309D, 0x309F, Script::Hiragana},
    {0x30A1, 0x30FA, Script::Katakana},
    {0x30FD, 0x30FF, Script::Katakana},
    {0x3131, 0x318E, Script::Hangul},
    {0x31F0, 0x31FF, Script::Katakana},
    {0x3400, 0x4DBF, Script::Han},
    {0x4E00, 0x9FFF, Script::Han},
    {0xA640, 0xA66E, Script::Cyrillic},
    {0xA680, 0xA69B, Script::Cyrillic},
    {0xA722, 0xA7CA, Script::Latin},
    {0xA960, 0xA97C, Script::Hangul},
    {0xAC00, 0xD7A3, Script::Hangul},
    {0xD7B0, 0xD7C6, Script::Hangul},
    {0xD7CB, 0xD7FB, Script::Hangul},
    {0xF900, 0xFA6D, Script::Han},
    {0xFA70, 0xFAD9, Script::Han},
    {0xFB50, 0xFBB1, Script::Arabic},
    {0xFBD3, 0xFD3D, Script::Arabic},
    {0xFD50, 0xFD8F, Script::Arabic},
    {0xFD92, 0xFDC7, Script::Arabic},
    {0xFDF0, 0xFDFB, Script::Arabic},
    {0xFE70, 0xFE74, Script::Arabic},
    {0xFE76, 0xFEFC, Script::Arabic},
    {0xFF21, 0xFF3A, Script::Latin},
    {0xFF41, 0xFF5A, Script::Latin},
    {0xFF66, 0xFF9D, Script::Katakana},
    {0x1E900, 0x1E943, Script::Adlam},
    {0x1E94B, 0x1E94B, Script::Adlam},
    {0x20000, 0x2A6DF, Script::Han},
    {0x2A700, 0x2EBEF, Script::Han},
    {0x2F800, 0x2FA1F, Script::Han},
    {0x30000, 0x3134A, Script::Han},
};

}  // namespace detail

inline Script script_of(CodePoint c) {
  const auto* first = std::begin(detail::kScriptRanges);
  const auto* last = std::end(detail::kScriptRanges);
  auto it = std::lower_bound(
      first, last, c,
      [](const detail::ScriptRange& r, CodePoint v) { return r.hi < v; });
  if (it != last && c >= it->lo) return it->script;
  return Script::Unknown;
}

inline bool is_letter(CodePoint c) { return script_of(c) != Script::Unknown; }

inline bool is_han(CodePoint c) { return script_of(c) == Script::Han; }

inline bool is_han_or_kana(CodePoint c) {
  Script s = script_of(c);
  return s == Script::Han || s == Script::Hiragana || s == Script::Katakana;
}

}  // namespace voxaudit::uni

#endif  // VOXAUDIT_UNICODE_HPP_
