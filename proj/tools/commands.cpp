#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "satlink/cyclic_cover.hpp"
#include "satlink/obstruction.hpp"
#include "satlink/report.hpp"
#include "input.hpp"

namespace satlink::cli {

std::uint64_t default_seed() {
  if (const char* s = std::getenv("HEDDEN_SEED"); s && *s) return std::strtoull(s, nullptr, 0);
  return 20240229;
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const DiagramError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const PresentationError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InvalidPattern& e) {
    err << "error: " << e.what() << '\n';
  } catch (const NormalizeError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const WindingNotDivisible& e) {
    err << "error: " << e.what() << '\n';
  } catch (const NotRationalHomologySphere& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const LinalgError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kInvalid;
}

namespace {

const std::string& single_input(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) throw std::runtime_error(cfg.command + " takes exactly one input file");
  return cfg.inputs.front();
}

void print_findings(const ValidationReport& r, std::ostream& out) {
  for (const auto& f : r.findings) {
    out << (f.error ? "error " : "warning ") << to_string(f.code);
    if (!f.component.empty()) out << " [" << f.component << "]";
    out << ": " << f.detail << '\n';
  }
}

AggregateReport obstruct_one(const ClaspPresentation& p, const RunConfig& cfg) {
  AggregateReport r = auto_verdict(p, cfg.m_list);
  if (cfg.cross_checks) attach_cross_checks(r, cross_checks(p));
  return r;
}

}  // namespace

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Input in = read_input(single_input(cfg));
  if (in.kind == InputKind::Annular) {
    const Diagram d(parse_annular(in.text));
    if (!d.find("eta")) {
      // A bare pattern diagram: report what normalize will need.
      for (ComponentId c : d.components())
        out << d.name(c) << ": winding " << d.winding(c) << ", wrapping " << d.wrapping(c) << '\n';
      out << "ok\n";
      return kOk;
    }
    const ValidationReport r = validate(d);
    print_findings(r, out);
    out << (r.ok() ? "ok\n" : "invalid\n");
    return r.ok() ? kOk : kInvalid;
  }
  const ClaspPresentation p = as_presentation(in);
  const ValidationReport r = validate(compile(p));
  print_findings(r, out);
  out << (r.ok() ? "ok\n" : "invalid\n");
  return r.ok() ? kOk : kInvalid;
}

int cmd_compile(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Input in = read_input(single_input(cfg));
  out << serialize(as_word(in));
  return kOk;
}

int cmd_cover(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Input in = read_input(single_input(cfg));
  const CoverDiagram cd = build_cover(as_word(in), cfg.m);
  out << serialize(cd.word);
  out << "# lift: cover component, orientation of its base-point strand, image under the deck generator\n";
  for (ComponentId c : cd.base_diagram.components()) {
    for (std::size_t a = 0; a < cd.m; ++a) {
      const ComponentId id = cd.lift(c, a);
      const auto [col, pos] = base_point(cd.base_diagram, c);
      const int o = cd.cover.tracks()[cd.cover.track_at(a * cd.base.events.size() + col, pos)].orientation;
      out << "# lift " << lift_name(cd.base_diagram.name(c), a) << " component " << id.index + 1 << " orientation "
          << (o > 0 ? '+' : '-') << " deck " << cd.cover.name(deck_translate(cd, id, 1)) << '\n';
    }
  }
  return kOk;
}

int cmd_linkings(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Input in = read_input(single_input(cfg));
  const ClaspPresentation p = as_presentation(in);
  const ObstructionReport r = branched_linkings(p, cfg.m);
  const CoverDiagram cd = build_cover(compile(p), cfg.m);
  const RationalMatrix base = lifted_eta_linkings(cd);
  if (cfg.format == Format::Json) {
    nlohmann::ordered_json j;
    j["pattern"] = p.name;
    j["n"] = p.n;
    j["m"] = cfg.m;
    j["linkings"] = nlohmann::ordered_json::array();
    j["cable_linkings"] = nlohmann::ordered_json::array();
    for (std::size_t k = 1; k < cfg.m; ++k) {
      j["linkings"].push_back(to_string(r.linkings[k - 1]));
      j["cable_linkings"].push_back(to_string(base(0, k)));
    }
    j["h1"] = to_string(r.h1_order);
    j["eta_order"] = to_string(r.eta_order);
    out << j.dump(2) << '\n';
  } else {
    out << "pattern " << p.name << ", m=" << cfg.m << ", " << p.clasps.size() << " clasp(s), |H1| = " << to_string(r.h1_order)
        << ", order of eta = " << to_string(r.eta_order) << '\n';
    for (std::size_t k = 1; k < cfg.m; ++k) {
      out << "  k=" << k << ": lk = " << to_string(r.linkings[k - 1]) << "  (cable " << to_string(base(0, k)) << ")\n";
    }
  }
  for (const auto& c : r.checks)
    if (!c.pass && c.hard) return kInternal;
  return kOk;
}

int cmd_obstruct(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Input in = read_input(single_input(cfg));
  const AggregateReport r = obstruct_one(as_presentation(in), cfg);
  out << (cfg.format == Format::Json ? to_json(r) + "\n" : to_text(r));
  return has_hard_failure(r) ? kInternal : kOk;
}

int cmd_normalize(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const std::string& path = single_input(cfg);
  const Input in = read_input(path);
  if (in.kind != InputKind::Annular) throw std::runtime_error("normalize expects an annular word");
  const Normalization n = normalize(parse_annular(in.text), stem(path));
  if (cfg.format == Format::Json) {
    nlohmann::ordered_json j;
    j["orientation"] = std::string(to_string(n.orientation));
    j["changes"] = n.changes;
    j["log"] = n.log;
    j["pattern"] = nlohmann::ordered_json::parse(pattern_to_json(n.presentation));
    out << j.dump(2) << '\n';
  } else {
    out << "# orientation: " << to_string(n.orientation) << '\n';
    for (const auto& line : n.log) out << "# " << line << '\n';
    out << serialize(n.presentation);
  }
  return validate(compile(n.presentation)).ok() ? kOk : kInternal;
}

int cmd_corpus(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  namespace fs = std::filesystem;
  const std::string& dir = single_input(cfg);
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto ext = e.path().extension().string();
    if (e.is_regular_file() && (ext == ".pattern" || ext == ".json" || ext == ".annular")) files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());

  struct Outcome {
    int code = kOk;
    std::string error;
    AggregateReport report;
  };
  auto run = [&cfg](const std::string& path) {
    Outcome o;
    std::ostringstream err;
    o.code = guarded(
        [&] {
          o.report = obstruct_one(as_presentation(read_input(path)), cfg);
          if (o.report.pattern.empty()) o.report.pattern = stem(path);
          return has_hard_failure(o.report) ? int(kInternal) : int(kOk);
        },
        err);
    o.error = err.str();
    if (!o.error.empty() && o.error.back() == '\n') o.error.pop_back();
    return o;
  };

  const std::size_t jobs = std::max<std::size_t>(1, cfg.jobs ? cfg.jobs : std::thread::hardware_concurrency());
  std::vector<Outcome> outcomes(files.size());
  for (std::size_t start = 0; start < files.size(); start += jobs) {
    std::vector<std::future<Outcome>> batch;
    for (std::size_t i = start; i < std::min(files.size(), start + jobs); ++i)
      batch.push_back(std::async(std::launch::async, run, files[i]));
    for (std::size_t i = 0; i < batch.size(); ++i) outcomes[start + i] = batch[i].get();
  }

  int code = kOk;
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Outcome& o = outcomes[i];
    code = std::max(code, o.code);
    if (cfg.format == Format::Json) {
      if (o.error.empty()) {
        all.push_back(nlohmann::ordered_json::parse(to_json(o.report)));
      } else {
        all.push_back({{"file", fs::path(files[i]).filename().string()}, {"error", o.error}});
      }
    } else {
      out << "== " << fs::path(files[i]).filename().string() << '\n';
      out << (o.error.empty() ? to_text(o.report) : o.error + "\n");
    }
  }
  if (cfg.format == Format::Json) out << all.dump(2) << '\n';
  return code;
}

}  // namespace satlink::cli
