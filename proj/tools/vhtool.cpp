#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vh/fixtures.hpp"
#include "vh/report.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCriterion = 1;
constexpr int kExitUsage = 2;

struct InputOpts {
  std::string file;
  std::string builtin;
  std::optional<int> n, m;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("input", in.file, "presentation file");
  cmd->add_option("--builtin", in.builtin, "built-in presentation name (see 'fixtures')");
  cmd->add_option("--n", in.n, "family size or second exponent for built-ins");
  cmd->add_option("--m", in.m, "first exponent for built-ins");
}

int load_presentation(const InputOpts& in, std::optional<vh::Presentation>& out,
                      std::vector<std::string>& warnings) {
  if (!in.builtin.empty() && !in.file.empty()) {
    std::cerr << "error: give either an input file or --builtin, not both\n";
    return kExitUsage;
  }
  if (!in.builtin.empty()) {
    try {
      out = vh::builtin_presentation(in.builtin, in.n, in.m);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    if (!out) {
      std::cerr << "error: unknown builtin '" << in.builtin << "'\n";
      return kExitUsage;
    }
    return kExitOk;
  }
  if (in.file.empty()) {
    std::cerr << "error: no input given (file or --builtin)\n";
    return kExitUsage;
  }
  std::ifstream f(in.file);
  if (!f) {
    std::cerr << "error: cannot open '" << in.file << "'\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  vh::ParseResult res = vh::parse_presentation(buf.str());
  if (!res.ok()) {
    std::cerr << in.file << ":" << res.error->line << ":" << res.error->column << ": error: "
              << res.error->message << "\n";
    return kExitUsage;
  }
  warnings = res.warnings;
  out = std::move(res.presentation);
  return kExitOk;
}

int load_pairing_file(const std::string& path, std::vector<vh::CheckOptions::PairingOverride>& out) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "error: cannot open pairing file '" << path << "'\n";
    return kExitUsage;
  }
  try {
    nlohmann::json j = nlohmann::json::parse(f);
    for (const auto& entry : j) {
      vh::CheckOptions::PairingOverride ov;
      ov.polygon = entry.at("polygon").get<int>();
      std::string cls = entry.at("class").get<std::string>();
      if (cls != "V" && cls != "H") throw std::runtime_error("class must be V or H");
      ov.pairing.cls = cls == "V" ? vh::EdgeClass::V : vh::EdgeClass::H;
      for (const auto& pr : entry.at("pairs"))
        ov.pairing.pairs.push_back({pr.at(0).get<int>(), pr.at(1).get<int>()});
      out.push_back(std::move(ov));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: bad pairing file: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

bool write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write '" << path.string() << "'\n";
    return false;
  }
  f << content;
  return true;
}

int run_pipeline(const InputOpts& in, const vh::CheckOptions& opts, vh::CheckOutcome& outcome) {
  std::optional<vh::Presentation> p;
  std::vector<std::string> warnings;
  if (int rc = load_presentation(in, p, warnings); rc != kExitOk) return rc;
  outcome = vh::run_check(*p, opts);
  outcome.report.warnings = warnings;
  return kExitOk;
}

int cmd_check(const InputOpts& in, const vh::CheckOptions& opts, const std::string& format,
              const std::string& out_dir, bool dot_links) {
  vh::CheckOutcome outcome;
  if (int rc = run_pipeline(in, opts, outcome); rc != kExitOk) return rc;
  const vh::VerificationReport& r = outcome.report;
  std::cout << (format == "json" ? vh::report_to_json(r) : vh::report_to_text(r));
  if (!out_dir.empty()) {
    fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!write_file(dir / "report.json", vh::report_to_json(r))) return kExitUsage;
    if (outcome.xprime &&
        !write_file(dir / "xprime.json", vh::complex_to_json(*outcome.xprime)))
      return kExitUsage;
    if (dot_links && outcome.xprime) {
      for (int v = 0; v < outcome.xprime->num_vertices; v++) {
        vh::LinkGraph g = vh::vertex_link(*outcome.xprime, v);
        if (!write_file(dir / ("link_v" + std::to_string(v) + ".dot"),
                        vh::link_to_dot(*outcome.xprime, g)))
          return kExitUsage;
      }
    }
  }
  return r.success() ? kExitOk : kExitCriterion;
}

int cmd_subdivide(const InputOpts& in, const vh::CheckOptions& opts, const std::string& out_dir) {
  vh::CheckOutcome outcome;
  if (int rc = run_pipeline(in, opts, outcome); rc != kExitOk) return rc;
  const vh::VerificationReport& r = outcome.report;
  if (!r.success() || !outcome.xprime) {
    std::cerr << "subdivision failed at stage: " << (r.failing_stage.empty() ? "assembly" : r.failing_stage)
              << "\n";
    std::cout << vh::report_to_text(r);
    return kExitCriterion;
  }
  fs::path dir(out_dir.empty() ? "." : out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!write_file(dir / "xprime.json", vh::complex_to_json(*outcome.xprime))) return kExitUsage;
  std::cout << "wrote " << (dir / "xprime.json").string() << "\n";
  return kExitOk;
}

int cmd_fixtures() {
  for (const auto& fx : vh::fixture_list()) {
    std::cout << fx.name;
    if (!fx.parameters.empty()) std::cout << " " << fx.parameters;
    std::cout << "\n    " << fx.summary << "\n";
  }
  return kExitOk;
}

int cmd_pairing(const std::string& lengths_arg, const std::string& cls_arg, bool oracle) {
  std::vector<int> lengths;
  std::stringstream ss(lengths_arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      lengths.push_back(std::stoi(item));
    } catch (const std::exception&) {
      std::cerr << "error: bad --lengths entry '" << item << "'\n";
      return kExitUsage;
    }
    if (lengths.back() <= 0) {
      std::cerr << "error: lengths must be positive\n";
      return kExitUsage;
    }
  }
  if (lengths.empty()) {
    std::cerr << "error: --lengths is empty\n";
    return kExitUsage;
  }
  vh::EdgeClass cls = cls_arg == "H" ? vh::EdgeClass::H : vh::EdgeClass::V;

  // Synthetic polygon: the requested runs separated by single edges of the
  // other class, so positions and distances are well defined.
  vh::SideDecomposition sd;
  int at = 0;
  for (int l : lengths) {
    if (cls == vh::EdgeClass::H) {
      sd.runs.push_back({vh::EdgeClass::V, at, 1});
      at += 1;
    }
    sd.runs.push_back({cls, at, l});
    at += l;
    if (cls == vh::EdgeClass::V) {
      sd.runs.push_back({vh::EdgeClass::H, at, 1});
      at += 1;
    }
  }
  std::vector<int> pos = vh::class_positions(sd, cls);
  auto rank = [&](int p) {
    return (int)(std::lower_bound(pos.begin(), pos.end(), p) - pos.begin());
  };

  std::string reason;
  if (!vh::pairing_exists(lengths, &reason)) {
    std::cout << "no admissible pairing: " << reason << "\n";
    return kExitCriterion;
  }
  vh::Pairing pairing = vh::greedy_pairing(sd, cls);
  std::cout << "greedy pairing:";
  for (auto [a, b] : pairing.pairs) std::cout << " (p" << rank(a) << ",p" << rank(b) << ")";
  std::cout << "\n";
  if (oracle) {
    vh::BruteForceResult bf = vh::brute_force_pairing(lengths);
    std::cout << "oracle: " << bf.count << " admissible pairings";
    if (bf.pairing) {
      std::cout << "; first:";
      for (auto [a, b] : bf.pairing->pairs) std::cout << " (p" << a << ",p" << b << ")";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_link(const InputOpts& in, int vertex, bool dot) {
  vh::CheckOutcome outcome;
  if (int rc = run_pipeline(in, {}, outcome); rc != kExitOk) return rc;
  if (!outcome.xprime) {
    std::cerr << "error: complex construction failed at stage: " << outcome.report.failing_stage
              << "\n";
    return kExitCriterion;
  }
  if (vertex < 0 || vertex >= outcome.xprime->num_vertices) {
    std::cerr << "error: vertex " << vertex << " out of range (complex has "
              << outcome.xprime->num_vertices << " vertices)\n";
    return kExitUsage;
  }
  vh::LinkGraph g = vh::vertex_link(*outcome.xprime, vertex);
  if (dot) {
    std::cout << vh::link_to_dot(*outcome.xprime, g);
  } else {
    std::cout << "link of vertex " << vertex << ": " << g.nodes.size() << " nodes, "
              << g.arcs.size() << " arcs\n";
    for (const auto& a : g.arcs) {
      const auto& n0 = g.nodes[a.n0];
      const auto& n1 = g.nodes[a.n1];
      std::cout << "  e" << n0.edge << (n0.end ? ".dst" : ".src") << " -- e" << n1.edge
                << (n1.end ? ".dst" : ".src") << "  (square " << a.square << ")\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verifier and constructor for vertical/horizontal square-complex subdivisions"};
  app.require_subcommand(1);

  InputOpts in;
  std::string format = "text", out_dir, pairing_file;
  bool dot_links = false, oracle = false, skip_assembly = false;

  CLI::App* check = app.add_subcommand("check", "run every criterion and report");
  add_input_options(check, in);
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", out_dir, "directory for report.json and xprime.json");
  check->add_flag("--dot-links", dot_links, "also write one DOT file per vertex link");
  check->add_flag("--oracle", oracle, "cross-check pairings exhaustively");
  check->add_flag("--skip-assembly", skip_assembly, "stop after per-polygon disks");
  check->add_option("--pairing-file", pairing_file, "explicit pairings (JSON)");

  CLI::App* subdivide = app.add_subcommand("subdivide", "construct the subdivision and write it");
  add_input_options(subdivide, in);
  subdivide->add_option("--out", out_dir, "output directory (default .)");
  subdivide->add_option("--pairing-file", pairing_file, "explicit pairings (JSON)");

  CLI::App* fixtures = app.add_subcommand("fixtures", "list built-in presentations");

  CLI::App* pairing = app.add_subcommand("pairing", "pair one class of side lengths");
  std::string lengths_arg, cls_arg = "V";
  pairing->add_option("--lengths", lengths_arg, "comma-separated side lengths")->required();
  pairing->add_option("--class", cls_arg, "V or H")->check(CLI::IsMember({"V", "H"}));
  pairing->add_flag("--oracle", oracle, "also run the exhaustive oracle");

  CLI::App* link = app.add_subcommand("link", "print one vertex link");
  add_input_options(link, in);
  int vertex = 0;
  link->add_option("--vertex", vertex, "vertex id")->required();
  bool dot = false;
  link->add_flag("--dot", dot, "DOT output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  vh::CheckOptions opts;
  opts.oracle = oracle;
  opts.skip_assembly = skip_assembly;
  if (!pairing_file.empty())
    if (int rc = load_pairing_file(pairing_file, opts.overrides); rc != kExitOk) return rc;

  try {
    if (check->parsed()) return cmd_check(in, opts, format, out_dir, dot_links);
    if (subdivide->parsed()) return cmd_subdivide(in, opts, out_dir);
    if (fixtures->parsed()) return cmd_fixtures();
    if (pairing->parsed()) return cmd_pairing(lengths_arg, cls_arg, oracle);
    if (link->parsed()) return cmd_link(in, vertex, dot);
  } catch (const std::logic_error& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return kExitCriterion;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCriterion;
  }
  return kExitUsage;
}
