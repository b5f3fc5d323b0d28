#!/usr/bin/env python3
"""Regenerates include/pixeltext/font_table.hpp.

Rasterizes DejaVu Sans Mono (Bitstream Vera derived license) at 11 px with
antialiasing disabled into 13x7 cells for printable ASCII 32..126. The output
is checked in; the C++ code never touches a font file at runtime.
"""
import sys
from PIL import Image, ImageDraw, ImageFont

FONT = "/usr/share/fonts/truetype/dejavu/DejaVuSansMono.ttf"
ROWS, COLS = 13, 7


def glyph_rows(font, ch):
    im = Image.new("1", (COLS, ROWS), 0)
    d = ImageDraw.Draw(im)
    d.fontmode = "1"
    d.text((0, -1), ch, font=font, fill=1)
    rows = []
    for r in range(ROWS):
        bits = 0
        for c in range(COLS):
            if im.getpixel((c, r)):
                bits |= 1 << (COLS - 1 - c)
        rows.append(bits)
    return rows


def main(out):
    font = ImageFont.truetype(FONT, 11)
    lines = [
        "// Generated by tools/gen_font_table.py. Do not edit.",
        "#pragma once",
        "",
        "#include <array>",
        "#include <cstdint>",
        "",
        "namespace pixeltext::detail {",
        "",
        "// One entry per code point 32..126, 13 rows each; bit 6 is the leftmost column.",
        "inline constexpr std::array<std::array<std::uint8_t, 13>, 95> kFontTable = {{",
    ]
    for code in range(32, 127):
        rows = glyph_rows(font, chr(code)) if code != 32 else [0] * ROWS
        body = ", ".join(f"0x{b:02x}" for b in rows)
        label = {" ": "space", "\\": "backslash"}.get(chr(code), chr(code))
        lines.append(f"    {{{{{body}}}}},  // {code:3d} {label}")
    lines += ["}};", "", "}  // namespace pixeltext::detail", ""]
    with open(out, "w") as fh:
        fh.write("\n".join(lines))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/pixeltext/font_table.hpp")
