// wld: command-line front end over the library.
//
// Exit codes: 0 ok, 1 invalid diagram / n mismatch / bad arguments,
// 2 unparseable input, 3 a verification check failed.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wld/associahedron.hpp"
#include "wld/dissection.hpp"
#include "wld/json_io.hpp"
#include "wld/matroid.hpp"
#include "wld/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kInvalid = 1, kParse = 2, kViolation = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_pretty = false;

void emit(const wld::Json& j) {
  std::cout << (g_pretty ? j.dump(2) : j.dump()) << '\n';
}

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

/// All JSON documents in the text, whitespace separated.
std::vector<wld::WilsonLoopDiagram> read_diagrams(const std::string& text) {
  std::vector<wld::WilsonLoopDiagram> out;
  std::istringstream in(text);
  while (true) {
    in >> std::ws;
    if (in.peek() == EOF) break;
    wld::Json j;
    try {
      in >> j;
    } catch (const wld::Json::exception& e) {
      throw wld::ParseError(e.what());
    }
    out.push_back(wld::diagram_from_json(j));
  }
  return out;
}

wld::WilsonLoopDiagram one_diagram(const std::string& path) {
  auto all = read_diagrams(read_text(path));
  if (all.size() != 1) {
    throw wld::ParseError("expected exactly one diagram, got " +
                          std::to_string(all.size()));
  }
  return all.front();
}

wld::Json props_json(const wld::WilsonLoopDiagram& d, wld::PropagatorSet s) {
  wld::Json out = wld::Json::array();
  for (int idx : s) out.push_back({d.propagator(idx).i(), d.propagator(idx).j()});
  return out;
}

wld::Json pieces_json(const wld::WilsonLoopDiagram& d) {
  wld::Json out = wld::Json::array();
  for (auto s : wld::exact_subdiagrams(d)) {
    out.push_back({{"propagators", props_json(d, s)},
                   {"vertices", wld::to_json(wld::vertex_support(d, s))},
                   {"trivial", s.size() == 1}});
  }
  return out;
}

wld::Json key_json(const std::vector<wld::VertexSet>& key) {
  wld::Json out = wld::Json::array();
  for (auto s : key) out.push_back(wld::to_json(s));
  return out;
}

wld::Json header(const std::string& command) {
  return {{"command", command}, {"version", kVersion}};
}

int cmd_check(const std::string& path) {
  auto d = one_diagram(path);
  wld::Json r = header("check");
  r["diagram"] = wld::to_json(d);
  bool weak = wld::is_weakly_admissible(d);
  r["weakly_admissible"] = weak;
  r["admissible"] = wld::is_admissible(d);
  r["non_supporting_vertices"] = wld::to_json(wld::non_supporting_vertices(d));
  if (weak) {
    r["exact_subdiagrams"] = pieces_json(d);
    r["decomposition"] = wld::to_json(wld::maximal_decomposition(wld::tau(d)));
  }
  emit(r);
  return kOk;
}

int cmd_matroid(const std::string& path, bool with_flats) {
  auto d = one_diagram(path);
  if (!wld::is_weakly_admissible(d)) {
    std::cerr << "wld: diagram is not weakly admissible\n";
    return kInvalid;
  }
  auto m = wld::matroid_of(d);
  wld::Json r = wld::to_json(m);
  r["n"] = d.n();
  wld::Json circuits = wld::Json::array();
  for (auto c : wld::circuits(m)) circuits.push_back(wld::to_json(c));
  r["circuits"] = circuits;
  if (with_flats) {
    if (d.n() > 12) throw UsageError("--flats is limited to n <= 12");
    wld::Json flats = wld::Json::array();
    for (auto f : wld::flats(m)) flats.push_back(wld::to_json(f));
    r["flats"] = flats;
  }
  emit(r);
  return kOk;
}

int cmd_equiv(const std::vector<std::string>& paths) {
  std::vector<wld::WilsonLoopDiagram> ds;
  if (paths.size() == 2) {
    ds = {one_diagram(paths[0]), one_diagram(paths[1])};
  } else if (paths.size() <= 1) {
    ds = read_diagrams(read_text(paths.empty() ? "-" : paths[0]));
  } else {
    throw UsageError("equiv takes at most two inputs");
  }
  if (ds.size() != 2) throw wld::ParseError("equiv needs exactly two diagrams");
  if (ds[0].n() != ds[1].n()) {
    std::cerr << "wld: diagrams have different n\n";
    return kInvalid;
  }
  for (const auto& d : ds) {
    if (!wld::is_weakly_admissible(d)) {
      std::cerr << "wld: diagram is not weakly admissible\n";
      return kInvalid;
    }
  }
  auto k1 = wld::equivalence_key(ds[0]);
  auto k2 = wld::equivalence_key(ds[1]);
  wld::Json r = header("equiv");
  r["first"] = wld::to_json(ds[0]);
  r["second"] = wld::to_json(ds[1]);
  r["equivalent"] = k1 == k2;
  r["first_pieces"] = key_json(k1);
  r["second_pieces"] = key_json(k2);
  emit(r);
  return kOk;
}

int cmd_class(const std::string& path) {
  auto d = one_diagram(path);
  if (!wld::is_weakly_admissible(d)) {
    std::cerr << "wld: diagram is not weakly admissible\n";
    return kInvalid;
  }
  auto cls = wld::equivalence_class(d);
  wld::Json members = wld::Json::array();
  for (const auto& e : cls) members.push_back(wld::to_json(e));
  wld::Json r = header("class");
  r["diagram"] = wld::to_json(d);
  r["pieces"] = key_json(wld::equivalence_key(d));
  r["size"] = cls.size();
  r["formula"] = wld::equivalence_class_size(d).get_str();
  r["representative"] = wld::to_json(cls.front());
  r["members"] = members;
  emit(r);
  return kOk;
}

int cmd_enumerate(int n, std::optional<int> k, const std::string& filter,
                  bool count_only) {
  if (n < 3) throw UsageError("--n must be at least 3");
  static const std::set<std::string> kFilters = {
      "all", "weakly-admissible", "admissible", "class-representatives"};
  if (!kFilters.count(filter)) throw UsageError("unknown filter " + filter);
  std::size_t count = 0;
  std::set<std::vector<wld::VertexSet>> seen;
  // Weakly admissible diagrams are exactly the tau-preimages of dissections,
  // so "all" and "weakly-admissible" coincide.
  wld::for_each_dissection(n, k, [&](const wld::PolygonDissection& p) {
    auto d = wld::tau_inverse(p);
    if (filter == "admissible" && !wld::is_admissible(d)) return;
    if (filter == "class-representatives" &&
        !seen.insert(wld::equivalence_key(d)).second) {
      return;
    }
    ++count;
    if (!count_only) std::cout << wld::to_json(d).dump() << '\n';
  });
  if (count_only) {
    wld::Json r = header("enumerate");
    r["n"] = n;
    if (k) r["k"] = *k;
    r["filter"] = filter;
    r["count"] = count;
    emit(r);
  }
  return kOk;
}

int cmd_verify(int n, int level, std::uint64_t seed,
               const std::string& inject_failure) {
  wld::VerifyReport report;
  try {
    report = wld::verify(n, level, seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  // Lets tests drive the violation exit path without a real bug.
  for (auto& c : report.checks) {
    if (c.name == inject_failure) {
      c.passed = false;
      c.counterexample = wld::Json{{"violation", "injected"}};
    }
  }
  wld::Json r = header("verify");
  r.update(report.to_json());
  if (level >= 3) r["seed"] = seed;
  emit(r);
  if (!report.passed()) {
    for (const auto& c : report.checks) {
      if (!c.passed) {
        std::cerr << "wld: check " << c.name << " failed: "
                  << c.counterexample.value_or(wld::Json()).dump() << '\n';
      }
    }
    return kViolation;
  }
  return kOk;
}

wld::Json vector_json(const wld::RationalVector& v) {
  wld::Json out = wld::Json::array();
  for (const auto& q : v) out.push_back(wld::to_string(q));
  return out;
}

int cmd_assoc(std::optional<int> n, const std::vector<std::string>& paths) {
  if (n) {
    wld::Json classes = wld::Json::array();
    for (const auto& c : wld::parallel_classes(*n)) {
      classes.push_back({{"representative", wld::to_json(c.representative)},
                         {"members", c.members},
                         {"dimension", c.dimension}});
    }
    emit({{"n", *n}, {"classes", classes}});
    return kOk;
  }
  auto d = one_diagram(paths.empty() ? "-" : paths.front());
  if (!wld::is_weakly_admissible(d)) {
    std::cerr << "wld: diagram is not weakly admissible\n";
    return kInvalid;
  }
  if (d.n() < 3) throw UsageError("polygon needs n >= 3");
  auto poly = wld::default_polygon(d.n());
  auto face = wld::face_of(poly, wld::tau(d));
  wld::Json vertices = wld::Json::array();
  for (const auto& v : face.vertices) vertices.push_back(vector_json(v));
  wld::Json normals = wld::Json::array();
  for (const auto& c : face.dissection.diagonals()) {
    normals.push_back(
        {{"diagonal", wld::to_json(c)},
         {"omega_plus", vector_json(wld::omega_plus(poly, c, wld::ChordSide::kBetween))}});
  }
  wld::Json r = header("assoc");
  r["dissection"] = wld::to_json(face.dissection);
  r["dimension"] = face.dimension();
  r["vertices"] = vertices;
  r["normals"] = normals;
  emit(r);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wilson loop diagrams, their matroids, dissections and faces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::vector<std::string> inputs;
  int n = 0;
  std::optional<int> k;
  int level = 1;
  std::uint64_t seed = 1;
  std::string filter = "all";
  bool with_flats = false;
  bool count_only = false;

  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", inputs, what);
    sub->add_flag("--pretty", g_pretty, "Indented JSON output");
  };

  auto* check = app.add_subcommand("check", "Admissibility and exact pieces");
  add_input(check, "Diagram JSON file (default stdin)");
  auto* matroid = app.add_subcommand("matroid", "Bases and circuits of M(W)");
  add_input(matroid, "Diagram JSON file (default stdin)");
  matroid->add_flag("--flats", with_flats, "Also list flats (n <= 12)");
  auto* equiv = app.add_subcommand("equiv", "Are two diagrams equivalent");
  add_input(equiv, "Two diagram files, or one stream holding both");
  auto* cls = app.add_subcommand("class", "List the equivalence class");
  add_input(cls, "Diagram JSON file (default stdin)");

  auto* enumerate = app.add_subcommand("enumerate", "Stream diagrams on [n]");
  enumerate->add_option("--n", n, "Number of vertices")->required();
  enumerate->add_option("--k", k, "Number of propagators");
  enumerate->add_option("--filter", filter,
                        "all | weakly-admissible | admissible | "
                        "class-representatives");
  enumerate->add_flag("--count", count_only, "Print only the count");
  enumerate->add_flag("--pretty", g_pretty, "Indented JSON output");

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--n", n, "Number of vertices")->required();
  verify->add_option("--level", level, "1, 2 or 3");
  verify->add_option("--seed", seed, "Seed for level 3 sampling");
  verify->add_flag("--pretty", g_pretty, "Indented JSON output");
  std::string inject_failure;
  verify->add_option("--inject-failure", inject_failure,
                     "Mark the named check as failed (testing aid)")
      ->group("");

  auto* assoc = app.add_subcommand("assoc", "Associahedron faces");
  std::optional<int> assoc_n;
  assoc->add_option("--n", assoc_n, "Report parallelism classes on [n]");
  add_input(assoc, "Diagram whose face to print (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  auto first = [&] { return inputs.empty() ? std::string("-") : inputs.front(); };
  try {
    if (*check) return cmd_check(first());
    if (*matroid) return cmd_matroid(first(), with_flats);
    if (*equiv) return cmd_equiv(inputs);
    if (*cls) return cmd_class(first());
    if (*enumerate) return cmd_enumerate(n, k, filter, count_only);
    if (*verify) return cmd_verify(n, level, seed, inject_failure);
    if (*assoc) return cmd_assoc(assoc_n, inputs);
  } catch (const wld::ParseError& e) {
    std::cerr << "wld: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const wld::DiagramError& e) {
    std::cerr << "wld: invalid diagram: " << e.what() << '\n';
    return kInvalid;
  } catch (const UsageError& e) {
    std::cerr << "wld: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "wld: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
