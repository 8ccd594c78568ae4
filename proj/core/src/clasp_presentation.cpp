#include "satlink/clasp_presentation.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include <json.hpp>

namespace satlink {

PresentationError::PresentationError(Kind kind, std::string message, std::size_t line, std::size_t column)
    : std::runtime_error([&] {
        std::string where;
        if (line != 0) where = "line " + std::to_string(line) + ", col " + std::to_string(column) + ": ";
        return where + std::string(satlink::to_string(kind)) + ": " + message;
      }()),
      kind_(kind),
      line_(line),
      column_(column) {}

std::string_view to_string(PresentationError::Kind kind) {
  switch (kind) {
    case PresentationError::Kind::Syntax: return "SyntaxError";
    case PresentationError::Kind::WindingTooSmall: return "WindingTooSmall";
    case PresentationError::Kind::SlotOutOfRange: return "SlotOutOfRange";
    case PresentationError::Kind::GapOutOfRange: return "GapOutOfRange";
    case PresentationError::Kind::WeaveMismatch: return "WeaveMismatch";
  }
  return "?";
}

std::string_view to_string(Finding::Code code) {
  switch (code) {
    case Finding::Code::NoEta: return "NoEta";
    case Finding::Code::WindingNonzero: return "WindingNonzero";
    case Finding::Code::EtaLinkingNonzero: return "EtaLinkingNonzero";
    case Finding::Code::FramingNotUnit: return "FramingNotUnit";
    case Finding::Code::WrappingNotTwo: return "WrappingNotTwo";
    case Finding::Code::ClaspLinkingNonzero: return "ClaspLinkingNonzero";
  }
  return "?";
}

std::string weave_to_string(const std::vector<Pass>& weave) {
  if (weave.empty()) return "-";
  std::string s;
  for (Pass p : weave) s += p == Pass::Over ? 'o' : 'u';
  return s;
}

std::vector<Pass> weave_from_string(std::string_view text) {
  std::vector<Pass> out;
  if (text == "-" || text.empty()) return out;
  for (char c : text) {
    if (c == 'o') out.push_back(Pass::Over);
    else if (c == 'u') out.push_back(Pass::Under);
    else throw PresentationError(PresentationError::Kind::Syntax, "weave characters must be 'o' or 'u'");
  }
  return out;
}

bool weave_balanced(const std::vector<Pass>& weave) {
  if (weave.size() % 2 != 0) return false;
  const auto half = static_cast<std::ptrdiff_t>(weave.size() / 2);
  const auto out = std::count(weave.begin(), weave.begin() + half, Pass::Over);
  const auto back = std::count(weave.begin() + half, weave.end(), Pass::Over);
  return out == back;
}

std::string clasp_name(std::size_t i) { return "L" + std::to_string(i + 1); }

AnnularWord cable_template(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cable_template: n must be positive");
  AnnularWord w;
  w.seam.assign(n, 1);
  w.labels.push_back({"eta", 0, 1});
  for (std::size_t g = 1; g < n; ++g) w.events.push_back(Event::cross(g, Over::Lower));
  return w;
}

void check_presentation(const ClaspPresentation& p) {
  using K = PresentationError::Kind;
  if (p.n < 2) throw PresentationError(K::WindingTooSmall, "cable winding must be at least 2");
  for (std::size_t i = 0; i < p.clasps.size(); ++i) {
    const ClaspSpec& c = p.clasps[i];
    const std::string who = "clasp " + std::to_string(i + 1) + ": ";
    if (c.slot >= p.n) throw PresentationError(K::SlotOutOfRange, who + "slot " + std::to_string(c.slot) + " not in 0.." + std::to_string(p.n - 1));
    if (c.gap_enter > p.n || c.gap_exit > p.n) {
      throw PresentationError(K::GapOutOfRange, who + "gaps must lie in 0.." + std::to_string(p.n));
    }
    const std::size_t d = c.gap_enter > c.gap_exit ? c.gap_enter - c.gap_exit : c.gap_exit - c.gap_enter;
    if (c.weave.size() != 2 * d) {
      throw PresentationError(K::WeaveMismatch, who + "weave needs " + std::to_string(2 * d) + " entries, has " +
                                                    std::to_string(c.weave.size()));
    }
    if (c.clasp_sign != 1 && c.clasp_sign != -1) {
      throw PresentationError(K::Syntax, who + "clasp sign must be +1 or -1");
    }
  }
}

namespace {

void emit_gadget(std::vector<Event>& ev, std::size_t n, std::size_t index, const ClaspSpec& c) {
  const std::size_t park = n + 2 * index + 1;
  const std::size_t e = c.gap_enter;
  const std::size_t x = c.gap_exit;
  const std::size_t d = e > x ? e - x : x - e;
  auto flag = [&](std::size_t j) { return c.weave[j]; };

  // Ribbon drops to gap e, under everything it meets.
  for (std::size_t t = park; t > e + 1; --t) {
    ev.push_back(Event::cross(t - 1, Over::Lower));
    ev.push_back(Event::cross(t, Over::Lower));
  }

  auto kinks = [&](std::size_t pos) {
    const int s = c.framing >= 0 ? 1 : -1;
    for (int k = 0; k < std::abs(c.framing); ++k) ev.push_back(Event::kink(pos, s));
  };

  if (x < e) {
    // Lower arm goes down and back.
    std::size_t t = e + 1;
    for (std::size_t j = 0; j < d; ++j, --t)
      ev.push_back(Event::cross(t - 1, flag(j) == Pass::Over ? Over::Upper : Over::Lower));
    kinks(t);
    for (std::size_t j = 0; j < d; ++j, ++t)
      ev.push_back(Event::cross(t, flag(d + j) == Pass::Over ? Over::Lower : Over::Upper));
  } else if (x > e) {
    // Upper arm goes up and back.
    std::size_t t = e + 2;
    for (std::size_t j = 0; j < d; ++j, ++t)
      ev.push_back(Event::cross(t, flag(j) == Pass::Over ? Over::Lower : Over::Upper));
    kinks(t);
    for (std::size_t j = 0; j < d; ++j, --t)
      ev.push_back(Event::cross(t - 1, flag(d + j) == Pass::Over ? Over::Upper : Over::Lower));
  } else {
    kinks(e + 1);
  }

  ev.push_back(Event::cap(e + 1));
  ev.push_back(Event::cup(e + 1));

  // Ribbon climbs back, again under everything.
  for (std::size_t t = e + 1; t < park; ++t) {
    ev.push_back(Event::cross(t + 1, Over::Upper));
    ev.push_back(Event::cross(t, Over::Upper));
  }
}

}  // namespace

AnnularWord compile(const ClaspPresentation& p) {
  check_presentation(p);
  AnnularWord w;
  w.seam.assign(p.n, 1);
  w.labels.push_back({"eta", 0, 1});
  for (std::size_t i = 0; i < p.clasps.size(); ++i) {
    w.seam.push_back(p.clasps[i].clasp_sign);
    w.seam.push_back(-p.clasps[i].clasp_sign);
    w.labels.push_back({clasp_name(i), 0, p.n + 2 * i + 1});
  }
  for (std::size_t s = 0; s < p.n; ++s) {
    for (std::size_t i = 0; i < p.clasps.size(); ++i)
      if (p.clasps[i].slot == s) emit_gadget(w.events, p.n, i, p.clasps[i]);
    if (s + 1 < p.n) w.events.push_back(Event::cross(s + 1, Over::Lower));
  }
  return w;
}

bool ValidationReport::ok() const {
  return std::none_of(findings.begin(), findings.end(), [](const Finding& f) { return f.error; });
}

bool ValidationReport::has(Finding::Code code) const {
  return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) { return f.code == code; });
}

ValidationReport validate(const AnnularWord& w) { return validate(Diagram(w)); }

ValidationReport validate(const Diagram& d) {
  ValidationReport r;
  const auto eta = d.find("eta");
  if (!eta) {
    r.findings.push_back({Finding::Code::NoEta, true, "", "no component named eta"});
    return r;
  }
  std::vector<ComponentId> surgery;
  for (ComponentId c : d.components())
    if (c != *eta) surgery.push_back(c);
  for (ComponentId c : surgery) {
    const std::string& nm = d.name(c);
    if (const int w = d.winding(c); w != 0) {
      r.findings.push_back({Finding::Code::WindingNonzero, true, nm, "winding " + std::to_string(w)});
    }
    if (const Rational lk = d.linking(c, *eta); lk != 0) {
      r.findings.push_back({Finding::Code::EtaLinkingNonzero, true, nm, "lk with eta = " + to_string(lk)});
    }
    if (const Integer f = d.framing(c); f != 1 && f != -1) {
      r.findings.push_back({Finding::Code::FramingNotUnit, true, nm, "framing " + to_string(f)});
    }
    if (const std::size_t wr = d.wrapping(c); wr != 2) {
      r.findings.push_back({Finding::Code::WrappingNotTwo, false, nm, "wrapping " + std::to_string(wr)});
    }
  }
  for (std::size_t i = 0; i < surgery.size(); ++i)
    for (std::size_t j = i + 1; j < surgery.size(); ++j)
      if (const Rational lk = d.linking(surgery[i], surgery[j]); lk != 0) {
        r.findings.push_back({Finding::Code::ClaspLinkingNonzero, false,
                              d.name(surgery[i]) + "," + d.name(surgery[j]), "lk = " + to_string(lk)});
      }
  return r;
}

ClaspPresentation add_cancelling_pair(ClaspPresentation p, const ClaspSpec& tmpl) {
  p.clasps.push_back(tmpl);
  ClaspSpec twin = tmpl;
  twin.clasp_sign = -tmpl.clasp_sign;
  twin.framing = -tmpl.framing;
  p.clasps.push_back(twin);
  return p;
}

ClaspPresentation random_presentation(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t bound) { return static_cast<std::size_t>(rng() % bound); };
  ClaspPresentation p;
  p.name = "random-n" + std::to_string(n) + "-k" + std::to_string(k) + "-s" + std::to_string(seed);
  p.n = n;
  for (std::size_t i = 0; i < k; ++i) {
    ClaspSpec c;
    c.slot = draw(n);
    c.gap_enter = draw(n + 1);
    c.gap_exit = draw(n + 1);
    const std::size_t d = c.gap_enter > c.gap_exit ? c.gap_enter - c.gap_exit : c.gap_exit - c.gap_enter;
    std::vector<Pass> out(d);
    for (auto& f : out) f = draw(2) ? Pass::Over : Pass::Under;
    std::vector<Pass> back = out;
    for (std::size_t j = back.size(); j > 1; --j) std::swap(back[j - 1], back[draw(j)]);
    c.weave = out;
    c.weave.insert(c.weave.end(), back.begin(), back.end());
    c.clasp_sign = draw(2) ? 1 : -1;
    c.framing = draw(2) ? 1 : -1;
    p.clasps.push_back(std::move(c));
  }
  return p;
}

namespace {

[[noreturn]] void pattern_syntax(const std::string& what, std::size_t line, std::size_t col = 1) {
  throw PresentationError(PresentationError::Kind::Syntax, what, line, col);
}

template <typename T>
T parse_number(std::string_view s, std::size_t line) {
  T v{};
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) pattern_syntax("bad number '" + std::string(s) + "'", line);
  return v;
}

int parse_sign(std::string_view s, std::size_t line) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  pattern_syntax("sign must be '+' or '-'", line);
}

}  // namespace

ClaspPresentation parse_pattern(std::string_view text) {
  ClaspPresentation p;
  p.name.clear();
  bool have_header = false, have_cable = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "pattern" || toks[1] != "v1") pattern_syntax("expected header 'pattern v1'", line_no);
      have_header = true;
    } else if (toks[0] == "name") {
      if (toks.size() != 2) pattern_syntax("'name' takes one word", line_no);
      p.name = toks[1];
    } else if (toks[0] == "cable") {
      if (toks.size() != 2) pattern_syntax("'cable' takes the winding number", line_no);
      p.n = parse_number<std::size_t>(toks[1], line_no);
      have_cable = true;
    } else if (toks[0] == "clasp") {
      if (toks.size() != 13 || toks[1] != "slot" || toks[3] != "enter" || toks[5] != "exit" || toks[7] != "weave" ||
          toks[9] != "sign" || toks[11] != "framing") {
        pattern_syntax("expected 'clasp slot S enter E exit X weave W sign +|- framing F'", line_no);
      }
      ClaspSpec c;
      c.slot = parse_number<std::size_t>(toks[2], line_no);
      c.gap_enter = parse_number<std::size_t>(toks[4], line_no);
      c.gap_exit = parse_number<std::size_t>(toks[6], line_no);
      try {
        c.weave = weave_from_string(toks[8]);
      } catch (const PresentationError& e) {
        pattern_syntax(e.what(), line_no);
      }
      c.clasp_sign = parse_sign(toks[10], line_no);
      c.framing = parse_number<int>(toks[12], line_no);
      p.clasps.push_back(std::move(c));
    } else {
      pattern_syntax("unknown directive '" + toks[0] + "'", line_no);
    }
  }
  if (!have_header) pattern_syntax("missing header 'pattern v1'", 1);
  if (!have_cable) pattern_syntax("missing 'cable <n>' line", line_no);
  if (p.name.empty()) p.name = "pattern";
  check_presentation(p);
  return p;
}

std::string serialize(const ClaspPresentation& p) {
  std::ostringstream out;
  out << "pattern v1\n";
  out << "name " << p.name << '\n';
  out << "cable " << p.n << '\n';
  for (const auto& c : p.clasps) {
    out << "clasp slot " << c.slot << " enter " << c.gap_enter << " exit " << c.gap_exit << " weave "
        << weave_to_string(c.weave) << " sign " << (c.clasp_sign > 0 ? '+' : '-') << " framing " << c.framing << '\n';
  }
  return out.str();
}

ClaspPresentation pattern_from_json(std::string_view json_text) {
  using nlohmann::json;
  ClaspPresentation p;
  try {
    const json j = json::parse(json_text);
    p.name = j.value("name", std::string("pattern"));
    p.n = j.at("cable").get<std::size_t>();
    for (const auto& c : j.value("clasps", json::array())) {
      ClaspSpec s;
      s.slot = c.at("slot").get<std::size_t>();
      s.gap_enter = c.at("enter").get<std::size_t>();
      s.gap_exit = c.at("exit").get<std::size_t>();
      s.weave = weave_from_string(c.value("weave", std::string("-")));
      s.clasp_sign = c.at("sign").get<int>();
      s.framing = c.at("framing").get<int>();
      p.clasps.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    throw PresentationError(PresentationError::Kind::Syntax, std::string("JSON pattern: ") + e.what());
  }
  check_presentation(p);
  return p;
}

std::string pattern_to_json(const ClaspPresentation& p) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["name"] = p.name;
  j["cable"] = p.n;
  j["clasps"] = ordered_json::array();
  for (const auto& c : p.clasps) {
    ordered_json cj;
    cj["slot"] = c.slot;
    cj["enter"] = c.gap_enter;
    cj["exit"] = c.gap_exit;
    cj["weave"] = weave_to_string(c.weave);
    cj["sign"] = c.clasp_sign;
    cj["framing"] = c.framing;
    j["clasps"].push_back(cj);
  }
  return j.dump(2);
}

}  // namespace satlink
