#pragma once

namespace ccg {

inline constexpr const char* kVersion = "1.0.0";

// Table glyph conventions, shared by the table renderer and --version.
inline constexpr const char* kGlyphConventions =
    "glyphs: X = disconnected, 4/5/6 = exact diameter, ≤5 / ≥5 = one-sided bound, "
    "? = nothing known beyond the universal bounds 4..6";

}  // namespace ccg
