#include "plumbing/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "plumbing/families.hpp"
#include "plumbing/io.hpp"
#include "plumbing/rationality.hpp"
#include "plumbing/seifert.hpp"
#include "plumbing/svg.hpp"
#include "plumbing/toric.hpp"

namespace plumbing::cli {

namespace {

namespace fs = std::filesystem;

/// Bad user input: unreadable file, malformed document, invalid option.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream outf(path, std::ios::binary);
  if (!outf) throw InputError(path + ": cannot write file");
  outf << text;
}

template <typename F>
auto load(const std::string& path, F&& decode) {
  const std::string text = read_file(path);
  try {
    return decode(parse_json_text(text));
  } catch (const JsonInputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

StarPlumbing load_graph(const std::string& path) {
  return load(path, [](const Json& j) { return graph_from_json(j); });
}

std::string describe(const StarPlumbing& g) {
  std::string s = "central " + std::to_string(g.central()) + "; legs";
  for (const auto& leg : g.legs()) {
    s += " [";
    for (std::size_t j = 0; j < leg.size(); ++j) s += (j ? "," : "") + std::to_string(leg[j]);
    s += "]";
  }
  return s;
}

std::string describe(const Cycle& z) {
  std::string s = "(";
  for (std::size_t i = 0; i < z.coeffs.size(); ++i)
    s += (i ? ", " : "") + std::to_string(z.coeffs[i]);
  return s + ")";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- check

struct CheckResult {
  std::string text;
  Json json;
  int code = kExitOk;
};

CheckResult check_graph(const StarPlumbing& g, const std::string& label, bool as_json) {
  CheckResult res;
  const Rational nr_sum = star_definiteness_sum(g);
  const bool nr = nr_sum < 0;
  const bool sylvester = is_negative_definite_matrix(intersection_matrix(g));
  const bool definite = nr && sylvester;

  Json j;
  if (!label.empty()) j["file"] = label;
  j["graph"] = to_json(g);
  j["negative_definite"] = definite;
  j["neumann_raymond"] = Json{{"sum", to_string(nr_sum)}, {"negative_definite", nr}};
  j["sylvester"] = Json{{"negative_definite", sylvester}};

  std::ostringstream t;
  if (!label.empty()) t << label << "\n";
  t << "graph: " << describe(g) << "\n";
  t << "negative-definite: " << bool_str(definite) << " (Neumann-Raymond: " << bool_str(nr)
    << ", s0 + sum r_i = " << to_string(nr_sum) << "; Sylvester minors: " << bool_str(sylvester)
    << ")\n";

  if (nr != sylvester) {
    t << "error: definiteness tests disagree\n";
    res.code = kExitCheckFailed;
  }
  if (definite) {
    const auto rep = is_rational(g);
    j["fundamental_cycle"] = rep.cycle.coeffs;
    j["z_squared"] = rep.z_squared;
    j["z_dot_k"] = rep.z_dot_k;
    j["arithmetic_genus"] = to_string(rep.arithmetic_genus);
    j["rational"] = rep.rational;
    j["l_space"] = rep.l_space;
    t << "fundamental cycle: " << describe(rep.cycle) << "\n";
    t << "Z.Z = " << rep.z_squared << ", Z.K = " << rep.z_dot_k
      << ", p_a = " << numerator(rep.arithmetic_genus) << "\n";
    t << "rational: " << bool_str(rep.rational) << "\n";
    t << "L-space: " << (rep.l_space ? "true (link of a rational singularity)" : "not certified")
      << "\n";
    if (!rep.rational) res.code = kExitCheckFailed;
  } else {
    j["fundamental_cycle"] = nullptr;
    j["rational"] = nullptr;
    j["l_space"] = nullptr;
    t << "fundamental cycle: n/a (graph is not negative definite)\n";
    res.code = kExitCheckFailed;
  }
  res.json = std::move(j);
  res.text = as_json ? dump(res.json) : t.str();
  return res;
}

int run_check(const std::string& path, const std::string& batch_dir, bool as_json,
              std::ostream& out) {
  if (batch_dir.empty()) {
    if (path.empty()) throw InputError("check: expected a graph file or --batch <dir>");
    const auto res = check_graph(load_graph(path), "", as_json);
    out << res.text;
    return res.code;
  }

  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(batch_dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (ec) throw InputError(batch_dir + ": " + ec.message());
  std::sort(files.begin(), files.end());

  std::vector<std::future<CheckResult>> jobs;
  jobs.reserve(files.size());
  for (const auto& file : files) {
    jobs.push_back(std::async(std::launch::async, [file, as_json] {
      try {
        return check_graph(load_graph(file.string()), file.filename().string(), as_json);
      } catch (const std::exception& e) {
        CheckResult bad;
        bad.code = kExitInputError;
        bad.json = Json{{"file", file.filename().string()}, {"error", e.what()}};
        bad.text = as_json ? dump(bad.json) : file.filename().string() + "\nerror: " + e.what() + "\n";
        return bad;
      }
    }));
  }

  int code = kExitOk;
  Json all = Json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto res = jobs[i].get();
    code = std::max(code, res.code);
    if (as_json) {
      all.push_back(std::move(res.json));
    } else {
      if (i) out << "\n";
      out << res.text;
    }
  }
  if (as_json) out << dump(all);
  return code;
}

// ---------------------------------------------------------------- family

int run_family_gen(const std::string& family_text, int p, int q, int r, const std::string& output,
                   bool as_json, std::ostream& out) {
  const auto family = parse_family(family_text);
  if (!family) throw InputError("unknown family \"" + family_text + "\" (use Gamma, Delta or Lambda)");
  if (p < 0 || q < 0 || r < 0) throw InputError("family parameters must be nonnegative");
  const FamilyTag tag{*family, p, q, r};
  const auto g = generate(tag);
  if (!output.empty()) write_file(output, dump(to_json(g)));
  if (as_json)
    out << dump(to_json(g));
  else
    out << to_string(tag) << ": " << describe(g) << "\n";
  return kExitOk;
}

int run_family_id(const std::string& path, bool as_json, std::ostream& out) {
  const auto g = load_graph(path);
  const auto tag = recognize(g);
  if (as_json)
    out << dump(tag ? to_json(*tag) : Json(nullptr));
  else
    out << (tag ? to_string(*tag) : std::string("no family match")) << "\n";
  return tag ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- seifert

int run_seifert_to_plumbing(const std::string& path, bool as_json, std::ostream& out) {
  const auto sd = load(path, [](const Json& j) { return seifert_from_json(j); });
  const auto g = seifert_to_plumbing(sd);
  out << (as_json ? dump(to_json(g)) : describe(g) + "\n");
  return kExitOk;
}

int run_seifert_from_plumbing(const std::string& path, bool as_json, std::ostream& out) {
  const auto sd = plumbing_to_seifert(load_graph(path));
  if (as_json) {
    out << dump(to_json(sd));
  } else {
    out << "M(" << sd.e0() << ";";
    for (std::size_t i = 0; i < sd.ratios().size(); ++i)
      out << (i ? ", " : " ") << to_string(sd.ratios()[i]);
    out << ")\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- template

std::vector<BigInt> parse_split(const std::string& text) {
  std::vector<BigInt> split;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const auto v = parse_rational(item);
      if (denominator(v) != 1) throw std::invalid_argument("not an integer");
      split.push_back(numerator(v));
    } catch (const std::exception&) {
      throw InputError("--u-split: \"" + item + "\" is not an integer");
    }
  }
  return split;
}

std::string template_table(const Template& t) {
  std::ostringstream s;
  s << "y0 = " << to_string(t.y0) << ", lambda0 = " << to_string(t.lambda0) << ", u-split = [";
  for (std::size_t i = 0; i < t.u_split.size(); ++i) s << (i ? "," : "") << t.u_split[i];
  s << "]\n";
  for (std::size_t i = 0; i < t.legs.size(); ++i) {
    const auto& lt = t.legs[i];
    s << "leg " << i + 1 << ": sigma = " << to_string(lt.sigma) << ", K = " << to_string(lt.offset)
      << "\n";
    for (std::size_t j = 0; j < lt.points.size(); ++j) {
      s << "  P[" << i + 1 << "," << j << "] = (" << to_string(lt.points[j].x) << ", "
        << to_string(lt.points[j].y) << ")";
      if (j < lt.taus.size())
        s << "  tau = (" << lt.taus[j].u << "," << lt.taus[j].v
          << ")  lambda = " << to_string(lt.lambdas[j]);
      s << "\n";
    }
  }
  return s.str();
}

int run_template_build(const std::string& graph_path, const std::string& areas_path,
                       const std::string& lambda0_text, const std::string& split_text,
                       const std::string& output, bool as_json, std::ostream& out,
                       std::ostream& err) {
  const auto g = load_graph(graph_path);
  AreaSpec areas = areas_path.empty()
                       ? unit_areas(g)
                       : load(areas_path, [](const Json& j) { return areas_from_json(j); });
  if (!lambda0_text.empty()) {
    try {
      areas.central = parse_rational(lambda0_text);
    } catch (const std::exception& e) {
      throw InputError(std::string("--lambda0: ") + e.what());
    }
  }
  BuildOptions options;
  if (!split_text.empty()) options.u_split = parse_split(split_text);

  Template t;
  try {
    t = build_template(g, areas, options);
  } catch (const TemplateError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == TemplateError::Kind::Condition4Violated ||
                   e.kind() == TemplateError::Kind::InternalInvariant
               ? kExitCheckFailed
               : kExitInputError;
  }
  const std::string doc = dump(to_json(t, g, areas));
  if (!output.empty()) write_file(output, doc);
  if (as_json)
    out << doc;
  else
    out << template_table(t);
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& graph_path,
               const std::string& areas_path, bool as_json, std::ostream& out) {
  auto doc = load(path, [](const Json& j) { return template_from_json(j); });
  if (!graph_path.empty()) doc.graph = load_graph(graph_path);
  if (!areas_path.empty())
    doc.areas = load(areas_path, [](const Json& j) { return areas_from_json(j); });
  if (!doc.graph) throw InputError(path + ": no embedded graph; pass --graph");
  if (!doc.areas) doc.areas = unit_areas(*doc.graph);

  const auto report = verify_template(doc.tmpl, *doc.graph, *doc.areas);
  if (as_json) {
    out << dump(to_json(report));
  } else {
    for (const auto& c : report.checks) {
      out << (c.ok ? "ok    " : "FAIL  ") << c.name;
      if (c.leg) out << " [leg " << *c.leg + 1 << "]";
      if (!c.ok) out << ": expected " << c.expected << ", got " << c.actual;
      out << "\n";
    }
    out << (report.passed ? "verified" : "verification failed") << "\n";
  }
  return report.passed ? kExitOk : kExitCheckFailed;
}

int run_render(const std::string& path, const std::string& output, std::ostream& out) {
  const auto doc = load(path, [](const Json& j) { return template_from_json(j); });
  const std::string svg = render_svg(doc.tmpl);
  if (output.empty())
    out << svg;
  else
    write_file(output, svg);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star-shaped plumbing graphs: definiteness, families, Seifert data, toric "
               "templates and rationality"};
  app.name("plumb");
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  std::string path, batch_dir, output, areas_path, graph_path, lambda0_text, split_text;

  auto* check = app.add_subcommand("check", "Definiteness, fundamental cycle and rationality");
  check->add_option("graph", path, "Graph JSON file");
  check->add_option("--batch", batch_dir, "Check every *.json file in a directory");
  check->add_flag("--json", as_json);

  auto* family = app.add_subcommand("family", "Rational blow-down graph families");
  family->require_subcommand(1);
  std::string family_text;
  int p = 0, q = 0, r = 0;
  auto* fam_gen = family->add_subcommand("gen", "Generate a family graph");
  fam_gen->add_option("family", family_text, "Gamma, Delta or Lambda")->required();
  fam_gen->add_option("p", p)->required();
  fam_gen->add_option("q", q)->required();
  fam_gen->add_option("r", r)->required();
  fam_gen->add_option("-o,--output", output, "Also write the graph JSON to a file");
  fam_gen->add_flag("--json", as_json);
  auto* fam_id = family->add_subcommand("id", "Identify a graph's family tag");
  fam_id->add_option("graph", path)->required();
  fam_id->add_flag("--json", as_json);

  auto* seifert = app.add_subcommand("seifert", "Seifert invariants <-> star plumbing");
  seifert->require_subcommand(1);
  auto* to_plumbing = seifert->add_subcommand("to-plumbing", "Inverse slam dunk");
  to_plumbing->add_option("seifert", path, "Seifert JSON file")->required();
  to_plumbing->add_flag("--json", as_json);
  auto* from_plumbing = seifert->add_subcommand("from-plumbing", "Normalized Seifert invariants");
  from_plumbing->add_option("graph", path)->required();
  from_plumbing->add_flag("--json", as_json);

  auto* tmpl = app.add_subcommand("template", "Moment-polygon templates");
  tmpl->require_subcommand(1);
  auto* build = tmpl->add_subcommand("build", "Build and verify a template");
  build->add_option("graph", path)->required();
  build->add_option("--areas", areas_path, "Areas JSON (units of 2*pi); default all 1");
  build->add_option("--lambda0", lambda0_text, "Central area in units of 2*pi");
  build->add_option("--u-split", split_text, "Comma-separated u_{i,1} values summing to -s0");
  build->add_option("-o,--output", output, "Write the template JSON to a file");
  build->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "Verify a template JSON file");
  verify->add_option("template", path)->required();
  verify->add_option("--graph", graph_path, "Override the embedded graph");
  verify->add_option("--areas", areas_path, "Override the embedded areas");
  verify->add_flag("--json", as_json);

  auto* render = app.add_subcommand("render", "Render a template as SVG");
  render->add_option("template", path)->required();
  render->add_option("-o,--output", output, "SVG output file (default stdout)");

  std::vector<std::string> argv_store{"plumb"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*check) return run_check(path, batch_dir, as_json, out);
    if (*fam_gen) return run_family_gen(family_text, p, q, r, output, as_json, out);
    if (*fam_id) return run_family_id(path, as_json, out);
    if (*to_plumbing) return run_seifert_to_plumbing(path, as_json, out);
    if (*from_plumbing) return run_seifert_from_plumbing(path, as_json, out);
    if (*build)
      return run_template_build(path, areas_path, lambda0_text, split_text, output, as_json, out,
                                err);
    if (*verify) return run_verify(path, graph_path, areas_path, as_json, out);
    if (*render) return run_render(path, output, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace plumbing::cli
