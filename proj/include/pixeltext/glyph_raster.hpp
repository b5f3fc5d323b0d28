#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pixeltext/error.hpp"
#include "pixeltext/font_table.hpp"

namespace pixeltext {

inline constexpr std::size_t kImageRows = 20;
inline constexpr std::size_t kImageCols = 131;
inline constexpr std::size_t kImagePixels = kImageRows * kImageCols;  // 2620
inline constexpr std::size_t kMaxWordLength = 17;
inline constexpr std::size_t kGlyphRows = 13;
inline constexpr std::size_t kGlyphCols = 7;

static_assert(kMaxWordLength * kGlyphCols <= kImageCols, "longest word must fit the frame");

/// 13x7 bitmap; row r, column c is set when bit (6 - c) of rows[r] is set.
struct Glyph {
  std::array<std::uint8_t, kGlyphRows> rows{};

  bool ink(std::size_t r, std::size_t c) const { return (rows[r] >> (kGlyphCols - 1 - c)) & 1u; }

  std::size_t ink_count() const {
    std::size_t n = 0;
    for (auto bits : rows) n += static_cast<std::size_t>(std::popcount(bits));
    return n;
  }
};

/// Monospace bitmap font covering printable ASCII 32..126, plus a filled box
/// drawn for anything else.
class GlyphSet {
 public:
  static constexpr unsigned char kFirst = 32;
  static constexpr unsigned char kLast = 126;
  static constexpr std::size_t cell_advance = kGlyphCols;
  // Top row of the glyph cell inside the 20-row frame: (20 - 13) / 2.
  static constexpr std::size_t baseline_row = (kImageRows - kGlyphRows) / 2;

  static const GlyphSet& embedded() {
    static const GlyphSet set = [] {
      GlyphSet s;
      for (std::size_t i = 0; i < s.glyphs_.size(); ++i) s.glyphs_[i].rows = detail::kFontTable[i];
      for (std::size_t r = 2; r < 11; ++r) s.fallback_.rows[r] = 0x3e;
      return s;
    }();
    return set;
  }

  const Glyph& glyph(unsigned char code) const {
    if (code < kFirst || code > kLast) return fallback_;
    return glyphs_[code - kFirst];
  }

  const Glyph& fallback() const { return fallback_; }

 private:
  std::array<Glyph, kLast - kFirst + 1> glyphs_{};
  Glyph fallback_{};
};

/// One rendered word: 20 rows by 131 columns of 0/1 pixels.
class WordImage {
 public:
  WordImage() : pixels_(kImagePixels, 0) {}

  std::uint8_t at(std::size_t row, std::size_t col) const { return pixels_[row * kImageCols + col]; }
  void set(std::size_t row, std::size_t col, std::uint8_t v) { pixels_[row * kImageCols + col] = v; }

  // Row-major, 2620 entries.
  const std::vector<std::uint8_t>& pixels() const noexcept { return pixels_; }

  std::size_t ink_count() const {
    std::size_t n = 0;
    for (auto p : pixels_) n += p;
    return n;
  }

  friend bool operator==(const WordImage&, const WordImage&) = default;

 private:
  std::vector<std::uint8_t> pixels_;
};

inline WordImage blank_frame() { return WordImage{}; }

/// Character i lands in columns [7i, 7i + 7); nothing else is touched.
inline WordImage render_word(std::string_view word, const GlyphSet& glyphs = GlyphSet::embedded()) {
  if (word.size() > kMaxWordLength)
    throw Error(ErrorKind::WordTooLong,
                "'" + std::string(word) + "' has " + std::to_string(word.size()) + " characters, limit is " +
                    std::to_string(kMaxWordLength));
  WordImage img;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Glyph& g = glyphs.glyph(static_cast<unsigned char>(word[i]));
    const std::size_t col0 = i * GlyphSet::cell_advance;
    for (std::size_t r = 0; r < kGlyphRows; ++r)
      for (std::size_t c = 0; c < kGlyphCols; ++c)
        if (g.ink(r, c)) img.set(GlyphSet::baseline_row + r, col0 + c, 1);
  }
  return img;
}

inline double ink_fraction(const WordImage& img) {
  return static_cast<double>(img.ink_count()) / static_cast<double>(kImagePixels);
}

// Binary PGM (P5, maxval 255): 0 background, 255 ink.
inline void write_pgm(std::ostream& os, std::size_t width, std::size_t height,
                      const std::vector<std::uint8_t>& bits) {
  os << "P5\n" << width << ' ' << height << "\n255\n";
  for (auto b : bits) os.put(static_cast<char>(b ? 255 : 0));
}

inline void write_pgm(std::ostream& os, const WordImage& img) {
  write_pgm(os, kImageCols, kImageRows, img.pixels());
}

inline void write_pgm(std::ostream& os, const Glyph& g) {
  std::vector<std::uint8_t> bits(kGlyphRows * kGlyphCols);
  for (std::size_t r = 0; r < kGlyphRows; ++r)
    for (std::size_t c = 0; c < kGlyphCols; ++c) bits[r * kGlyphCols + c] = g.ink(r, c);
  write_pgm(os, kGlyphCols, kGlyphRows, bits);
}

}  // namespace pixeltext
