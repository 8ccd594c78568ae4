#include "satlink/annular_word.hpp"

#include <charconv>
#include <sstream>

#include "satlink/diagram.hpp"

namespace satlink {

DiagramError::DiagramError(Kind kind, std::string message, std::size_t line, std::size_t column)
    : std::runtime_error([&] {
        std::string where;
        if (line != 0) where = "line " + std::to_string(line) + ", col " + std::to_string(column) + ": ";
        return where + std::string(satlink::to_string(kind)) + ": " + message;
      }()),
      kind_(kind),
      line_(line),
      column_(column) {}

std::string_view to_string(DiagramError::Kind kind) {
  switch (kind) {
    case DiagramError::Kind::Syntax: return "SyntaxError";
    case DiagramError::Kind::StrandCountMismatch: return "StrandCountMismatch";
    case DiagramError::Kind::SeamMismatch: return "SeamMismatch";
    case DiagramError::Kind::UnknownLabel: return "UnknownLabel";
  }
  return "?";
}

std::vector<std::size_t> strand_counts(const AnnularWord& w, const std::vector<std::size_t>* lines) {
  std::vector<std::size_t> counts;
  counts.reserve(w.events.size() + 1);
  std::size_t n = w.seam.size();
  counts.push_back(n);
  for (std::size_t i = 0; i < w.events.size(); ++i) {
    const Event& e = w.events[i];
    const std::size_t line = lines ? (*lines)[i] : 0;
    auto fail = [&](const std::string& what) {
      throw DiagramError(DiagramError::Kind::StrandCountMismatch,
                         "event " + std::to_string(i + 1) + ": " + what + " with " +
                             std::to_string(n) + " strands",
                         line, 1);
    };
    switch (e.kind) {
      case EventKind::Cross:
        if (e.position < 1 || e.position + 1 > n) fail("crossing at gap " + std::to_string(e.position));
        break;
      case EventKind::Cup:
        if (e.position < 1 || e.position > n + 1) fail("cup at " + std::to_string(e.position));
        n += 2;
        break;
      case EventKind::Cap:
        if (e.position < 1 || e.position + 1 > n) fail("cap at " + std::to_string(e.position));
        n -= 2;
        break;
      case EventKind::Kink:
        if (e.position < 1 || e.position > n) fail("kink at " + std::to_string(e.position));
        if (e.sign != 1 && e.sign != -1) fail("kink sign must be +-1");
        break;
    }
    counts.push_back(n);
  }
  if (n != w.seam.size()) {
    throw DiagramError(DiagramError::Kind::SeamMismatch,
                       "right edge has " + std::to_string(n) + " strands but the seam has " +
                           std::to_string(w.seam.size()));
  }
  return counts;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void syntax(const std::string& what, std::size_t line, std::size_t col) {
  throw DiagramError(DiagramError::Kind::Syntax, what, line, col);
}

std::size_t parse_count(const Token& t, std::size_t line) {
  std::size_t v = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) syntax("expected a natural number, got '" + std::string(t.text) + "'", line, t.column);
  return v;
}

}  // namespace

AnnularWord parse_annular(std::string_view text) {
  AnnularWord w;
  std::vector<std::size_t> event_lines;
  std::vector<std::size_t> label_lines;
  bool have_header = false;
  bool have_seam = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const auto& head = toks[0].text;
    auto need = [&](std::size_t n) {
      if (toks.size() != n) {
        const std::size_t col = toks.size() > n ? toks[n].column : line.size() + 1;
        syntax("'" + std::string(head) + "' takes " + std::to_string(n - 1) + " argument(s)", line_no, col);
      }
    };
    if (!have_header) {
      if (head != "annular" || toks.size() != 2 || toks[1].text != "v1") {
        syntax("expected header 'annular v1'", line_no, toks[0].column);
      }
      have_header = true;
      continue;
    }
    if (!have_seam) {
      if (head != "seam") syntax("expected 'seam <width> <orientations>'", line_no, toks[0].column);
      if (toks.size() < 2 || toks.size() > 3) syntax("'seam' takes a width and an orientation string", line_no, toks[0].column);
      const std::size_t width = parse_count(toks[1], line_no);
      const std::string_view signs = toks.size() == 3 ? toks[2].text : std::string_view{};
      if (signs.size() != width) {
        syntax("seam orientation string has " + std::to_string(signs.size()) + " entries, expected " +
                   std::to_string(width),
               line_no, toks.size() == 3 ? toks[2].column : toks[1].column);
      }
      for (std::size_t k = 0; k < signs.size(); ++k) {
        if (signs[k] == '+') w.seam.push_back(1);
        else if (signs[k] == '-') w.seam.push_back(-1);
        else syntax("seam orientation must be '+' or '-'", line_no, toks[2].column + k);
      }
      have_seam = true;
      continue;
    }
    if (head == "label") {
      if (toks.size() == 4 && toks[2].text == "seam") {
        w.labels.push_back({std::string(toks[1].text), 0, parse_count(toks[3], line_no)});
      } else if (toks.size() == 5 && toks[2].text == "at") {
        w.labels.push_back({std::string(toks[1].text), parse_count(toks[3], line_no), parse_count(toks[4], line_no)});
      } else {
        syntax("expected 'label <name> seam <k>' or 'label <name> at <column> <position>'", line_no, toks[0].column);
      }
      label_lines.push_back(line_no);
    } else if (head == "x") {
      need(3);
      Over over;
      if (toks[2].text == "over") over = Over::Upper;
      else if (toks[2].text == "under") over = Over::Lower;
      else syntax("crossing flag must be 'over' or 'under'", line_no, toks[2].column);
      w.events.push_back(Event::cross(parse_count(toks[1], line_no), over));
      event_lines.push_back(line_no);
    } else if (head == "cup" || head == "cap") {
      need(2);
      const std::size_t p = parse_count(toks[1], line_no);
      w.events.push_back(head == "cup" ? Event::cup(p) : Event::cap(p));
      event_lines.push_back(line_no);
    } else if (head == "kink") {
      need(3);
      int sign = 0;
      if (toks[2].text == "+") sign = 1;
      else if (toks[2].text == "-") sign = -1;
      else syntax("kink sign must be '+' or '-'", line_no, toks[2].column);
      w.events.push_back(Event::kink(parse_count(toks[1], line_no), sign));
      event_lines.push_back(line_no);
    } else {
      syntax("unknown directive '" + std::string(head) + "'", line_no, toks[0].column);
    }
  }
  if (!have_header) syntax("missing header 'annular v1'", 1, 1);
  if (!have_seam) syntax("missing 'seam' line", line_no, 1);

  const auto counts = strand_counts(w, &event_lines);
  for (std::size_t i = 0; i < w.labels.size(); ++i) {
    const Label& l = w.labels[i];
    if (l.column > w.events.size() || l.position < 1 || l.position > counts[l.column]) {
      throw DiagramError(DiagramError::Kind::UnknownLabel,
                         "label '" + l.name + "' points at no strand", label_lines[i], 1);
    }
  }
  // Orientability and label uniqueness are checked by the analysis.
  Diagram check(w);
  (void)check;
  return w;
}

std::string serialize(const AnnularWord& w) {
  std::ostringstream out;
  out << "annular v1\n";
  out << "seam " << w.seam.size();
  if (!w.seam.empty()) {
    out << ' ';
    for (int o : w.seam) out << (o > 0 ? '+' : '-');
  }
  out << '\n';
  for (const auto& l : w.labels) {
    if (l.column == 0) out << "label " << l.name << " seam " << l.position << '\n';
    else out << "label " << l.name << " at " << l.column << ' ' << l.position << '\n';
  }
  for (const auto& e : w.events) {
    switch (e.kind) {
      case EventKind::Cross: out << "x " << e.position << (e.over == Over::Upper ? " over" : " under"); break;
      case EventKind::Cup: out << "cup " << e.position; break;
      case EventKind::Cap: out << "cap " << e.position; break;
      case EventKind::Kink: out << "kink " << e.position << (e.sign > 0 ? " +" : " -"); break;
    }
    out << '\n';
  }
  return out.str();
}

AnnularWord repeat_events(const AnnularWord& w, std::size_t copies) {
  AnnularWord out;
  out.seam = w.seam;
  out.events.reserve(w.events.size() * copies);
  for (std::size_t c = 0; c < copies; ++c) out.events.insert(out.events.end(), w.events.begin(), w.events.end());
  return out;
}

}  // namespace satlink
