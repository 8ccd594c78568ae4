#include "input.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace satlink::cli {

namespace {

std::string first_token(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto h = line.find('#'); h != std::string::npos && line.find('{') == std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok) return tok;
  }
  return {};
}

}  // namespace

Input read_input(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  Input in{path, InputKind::Pattern, ss.str()};
  const std::string tok = first_token(in.text);
  if (tok == "pattern") in.kind = InputKind::Pattern;
  else if (tok == "annular") in.kind = InputKind::Annular;
  else if (!tok.empty() && tok.front() == '{') in.kind = InputKind::PatternJson;
  else throw std::runtime_error("'" + path + "': unrecognised format (expected 'pattern v1', 'annular v1' or JSON)");
  return in;
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

ClaspPresentation as_presentation(const Input& in, Normalization* norm) {
  switch (in.kind) {
    case InputKind::Pattern: return parse_pattern(in.text);
    case InputKind::PatternJson: return pattern_from_json(in.text);
    case InputKind::Annular: {
      Normalization n = normalize(parse_annular(in.text), stem(in.path));
      ClaspPresentation p = n.presentation;
      if (norm) *norm = std::move(n);
      return p;
    }
  }
  throw std::logic_error("as_presentation: unknown input kind");
}

AnnularWord as_word(const Input& in) {
  if (in.kind == InputKind::Annular) return parse_annular(in.text);
  return compile(as_presentation(in));
}

}  // namespace satlink::cli
