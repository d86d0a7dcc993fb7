#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtrunc/autgroup.hpp"
#include "gtrunc/cayley.hpp"
#include "gtrunc/classify.hpp"
#include "gtrunc/families.hpp"
#include "gtrunc/graph6.hpp"
#include "gtrunc/orbit_construction.hpp"
#include "gtrunc/report.hpp"
#include "gtrunc/todd_coxeter.hpp"
#include "gtrunc/truncation.hpp"

namespace {

using namespace gtrunc;

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  return in;
}

std::vector<Graph> read_g6_file(const std::string& path) {
  auto in = open_file(path);
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(decode_graph6(line));
  }
  if (graphs.empty()) throw std::invalid_argument("no graphs in '" + path + "'");
  return graphs;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

int cmd_gen(const std::string& family, const std::string& params) {
  FamilySpec spec{family, parse_int_list(params)};
  std::cout << encode_graph6(make_family(spec)) << '\n';
  return 0;
}

int cmd_girth(const std::string& in) {
  for (const auto& g : read_g6_file(in)) {
    auto gi = girth(g);
    if (gi)
      std::cout << *gi << '\n';
    else
      std::cout << "inf" << '\n';
  }
  return 0;
}

int cmd_aut(const std::string& in) {
  auto graphs = read_g6_file(in);
  for (size_t i = 0; i < graphs.size(); ++i) {
    PermGroup aut = automorphism_group(graphs[i]);
    std::cout << "graph " << (i + 1) << '\n';
    std::cout << "order " << aut.order() << '\n';
    for (const auto& g : aut.generators()) std::cout << format_perm(g) << '\n';
  }
  return 0;
}

int cmd_iso(const std::string& file_a, const std::string& file_b) {
  Graph a = read_g6_file(file_a).front();
  Graph b = read_g6_file(file_b).front();
  auto map = are_isomorphic(a, b);
  if (map) {
    std::cout << "true" << '\n' << format_perm(*map) << '\n';
  } else {
    std::cout << "false" << '\n';
  }
  return 0;
}

int cmd_truncate(const std::string& base_file, const std::string& rho_file,
                 const std::string& insert_file) {
  Graph base = read_g6_file(base_file).front();
  Graph inserted = read_g6_file(insert_file).front();
  auto rin = open_file(rho_file);
  Labeling rho = parse_labeling(rin, base);
  Truncation t = truncate(base, rho, inserted);
  std::cout << encode_graph6(t.result) << '\n';
  return 0;
}

int cmd_lifts(const std::string& base_file, const std::string& rho_file,
              const std::string& insert_file, const std::string& group_file) {
  Graph base = read_g6_file(base_file).front();
  Graph inserted = read_g6_file(insert_file).front();
  auto rin = open_file(rho_file);
  Labeling rho = parse_labeling(rin, base);
  Truncation t = truncate(base, rho, inserted);
  auto gin = open_file(group_file);
  GeneratorFile gf = parse_generator_file(gin);
  if (gf.degree != base.order())
    throw std::invalid_argument("group degree differs from base graph order");
  PermGroup G = PermGroup::from_generators(gf.perms, gf.degree);

  std::cout << "generator\tlifts\n";
  for (const auto& g : gf.perms)
    std::cout << format_perm(g) << '\t' << (lift(t, g) ? "true" : "false") << '\n';
  PermGroup up = lifted_subgroup(t, G);
  std::cout << "lifted_order\t" << up.order() << '\n';
  return 0;
}

const std::vector<std::string> kTableColumns = {"n",     "group",     "group_order",
                                                "order", "girth",     "aut_order",
                                                "aut_equals_lift",    "canonical"};

int cmd_table1(std::optional<int> n, const std::string& range, bool include_16,
               const std::vector<std::string>& group_files, const std::string& format, int jobs) {
  int lo = 0, hi = 0;
  if (n) {
    lo = hi = *n;
  } else if (!range.empty()) {
    auto dots = range.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("range must look like A..B");
    lo = std::stoi(range.substr(0, dots));
    hi = std::stoi(range.substr(dots + 2));
  } else {
    throw std::invalid_argument("table1 needs --n or --range");
  }

  std::vector<CandidateGroup> extra;
  for (const auto& path : group_files) {
    auto in = open_file(path);
    GeneratorFile gf = parse_generator_file(in);
    extra.push_back({"user:" + path, PermGroup::from_generators(gf.perms, gf.degree)});
  }

  auto rows = enumerate_table(lo, hi, include_16, extra, jobs);
  std::vector<nlohmann::ordered_json> jrows;
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["group"] = r.group;
    j["group_order"] = r.group_order;
    j["order"] = r.order;
    j["girth"] = r.girth;
    j["aut_order"] = r.aut_order;
    j["aut_equals_lift"] = r.aut_equals_lift;
    j["canonical"] = r.canonical;
    jrows.push_back(std::move(j));
  }
  std::cout << emit_report(kTableColumns, jrows, parse_format(format));
  return 0;
}

int cmd_classify(const std::string& in, const std::string& format, int jobs) {
  auto fin = open_file(in);
  CorpusReport report = classify_corpus(fin, jobs);
  std::vector<std::string> columns = {"line_no", "n", "tag", "quotient_canonical", "aut_order"};
  std::vector<nlohmann::ordered_json> jrows;
  for (const auto& l : report.lines) {
    nlohmann::ordered_json j;
    j["line_no"] = l.line_no;
    j["n"] = l.n;
    j["tag"] = l.tag;
    j["quotient_canonical"] = l.quotient_canonical;
    j["aut_order"] = l.aut_order;
    jrows.push_back(std::move(j));
  }
  std::cout << emit_report(columns, jrows, parse_format(format));
  for (const auto& [tag, count] : report.summary) std::cerr << tag << '\t' << count << '\n';
  return 0;
}

int cmd_cayley(const std::string& pres_file, const std::string& connection) {
  auto in = open_file(pres_file);
  Presentation p = parse_presentation(in);
  int max_cosets = 100000;
  if (const char* env = std::getenv("TRUNC_MAX_COSETS")) max_cosets = std::atoi(env);
  auto reg = todd_coxeter(p, max_cosets);
  if (!reg) {
    std::cerr << "coset enumeration exceeded " << max_cosets << " cosets\n";
    return 1;
  }
  std::vector<Perm> conn;
  std::stringstream ss(connection);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto word = parse_word(tok, p.generators);
    Perm el = Perm::identity(reg->degree());
    for (int c : word) {
      const Perm& gen = reg->generators()[c / 2];
      el = compose(el, c % 2 ? inverse(gen) : gen);
    }
    conn.push_back(std::move(el));
  }
  Graph g = cayley_graph(*reg, conn);
  std::cout << encode_graph6(g) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized graph truncations: construction, symmetry analysis, enumeration"};
  app.require_subcommand(1);

  std::string family, params;
  auto* gen = app.add_subcommand("gen", "emit a named family graph as graph6");
  gen->add_option("--family", family, "family name")->required();
  gen->add_option("--params", params, "comma-separated integer parameters");

  std::string in_file;
  auto* girth_cmd = app.add_subcommand("girth", "girth of each graph in a .g6 file");
  girth_cmd->add_option("--in", in_file, "graph6 file")->required();

  std::string aut_in;
  auto* aut_cmd = app.add_subcommand("aut", "automorphism group order and generators");
  aut_cmd->add_option("--in", aut_in, "graph6 file")->required();

  std::string iso_a, iso_b;
  auto* iso_cmd = app.add_subcommand("iso", "isomorphism test between two graphs");
  iso_cmd->add_option("--a", iso_a, "graph6 file")->required();
  iso_cmd->add_option("--b", iso_b, "graph6 file")->required();

  std::string t_base, t_rho, t_insert;
  auto* trunc_cmd = app.add_subcommand("truncate", "build T(base, rho; inserted)");
  trunc_cmd->add_option("--base", t_base, "base graph (.g6)")->required();
  trunc_cmd->add_option("--rho", t_rho, "vertex-neighborhood labeling file")->required();
  trunc_cmd->add_option("--insert", t_insert, "inserted graph (.g6)")->required();

  std::string l_base, l_rho, l_insert, l_group;
  auto* lifts_cmd = app.add_subcommand("lifts", "which group generators lift to the truncation");
  lifts_cmd->add_option("--base", l_base, "base graph (.g6)")->required();
  lifts_cmd->add_option("--rho", l_rho, "labeling file")->required();
  lifts_cmd->add_option("--insert", l_insert, "inserted graph (.g6)")->required();
  lifts_cmd->add_option("--group", l_group, "generator file")->required();

  std::optional<int> table_n;
  std::string table_range, table_format = "tsv";
  bool include_16 = false;
  int jobs = 1;
  std::vector<std::string> group_files;
  auto* table_cmd = app.add_subcommand("table1", "truncations of K_n by C_{n-1} from the orbit construction");
  table_cmd->add_option("--n", table_n, "single n");
  table_cmd->add_option("--range", table_range, "range A..B");
  table_cmd->add_flag("--include-16", include_16, "do not skip n = 16");
  table_cmd->add_option("--groups", group_files, "extra generator files");
  table_cmd->add_option("--format", table_format, "tsv or json");
  table_cmd->add_option("--jobs", jobs, "worker count (default 1)");

  std::string cls_in, cls_format = "tsv";
  int cls_jobs = 1;
  auto* cls_cmd = app.add_subcommand("classify", "classify cubic vertex-transitive graphs of girth 3..5");
  cls_cmd->add_option("--in", cls_in, "graph6 file")->required();
  cls_cmd->add_option("--format", cls_format, "tsv or json");
  cls_cmd->add_option("--jobs", cls_jobs, "worker count (default 1)");

  std::string pres_file, connection;
  auto* cay_cmd = app.add_subcommand("cayley", "Cayley graph of a finitely presented group");
  cay_cmd->add_option("--presentation", pres_file, "presentation file")->required();
  cay_cmd->add_option("--connection", connection, "comma-separated connection words")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(family, params);
    if (*girth_cmd) return cmd_girth(in_file);
    if (*aut_cmd) return cmd_aut(aut_in);
    if (*iso_cmd) return cmd_iso(iso_a, iso_b);
    if (*trunc_cmd) return cmd_truncate(t_base, t_rho, t_insert);
    if (*lifts_cmd) return cmd_lifts(l_base, l_rho, l_insert, l_group);
    if (*table_cmd) return cmd_table1(table_n, table_range, include_16, group_files, table_format, jobs);
    if (*cls_cmd) return cmd_classify(cls_in, cls_format, cls_jobs);
    if (*cay_cmd) return cmd_cayley(pres_file, connection);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
