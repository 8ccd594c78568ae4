#pragma once

#include <string>

#include "satlink/annular_word.hpp"
#include "satlink/clasp_presentation.hpp"
#include "satlink/downhill.hpp"

namespace satlink::cli {

enum class InputKind { Pattern, PatternJson, Annular };

struct Input {
  std::string path;
  InputKind kind = InputKind::Pattern;
  std::string text;
};

/// Reads a file and sniffs its format from the first token ("pattern",
/// "annular" or a JSON object). Throws std::runtime_error on I/O failure or an
/// unrecognised format.
Input read_input(const std::string& path);

/// Pattern inputs parse directly; annular words are normalized first (the
/// normalization is stored in *norm when given).
ClaspPresentation as_presentation(const Input& in, Normalization* norm = nullptr);

/// Annular inputs parse directly; patterns are compiled.
AnnularWord as_word(const Input& in);

/// File stem, used to name patterns read from annular words.
std::string stem(const std::string& path);

}  // namespace satlink::cli
