#include "fatcode/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fatcode/bounds.hpp"
#include "fatcode/codes.hpp"
#include "fatcode/ideals.hpp"
#include "fatcode/scheme_io.hpp"
#include "fatcode/socle.hpp"

namespace fatcode {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 0;
  int max_degree = 0;
  bool merge_duplicates = false;
  int threads = 1;

  int degree_cap() const { return max_degree > 0 ? max_degree : 200; }
};

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

struct Input {
  FatPointScheme scheme;
  std::string path;
  std::string digest;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Input generated_input(const FatPointScheme& scheme) {
  std::string text = serialize_scheme(scheme);
  return Input{scheme, "", fnv1a_hex(text)};
}

json report_to_json(const BoundReport& r) {
  json values = json::object();
  for (const auto& [k, v] : r.values) values[k] = v;
  json j;
  j["statement"] = statement_id_name(r.id);
  j["inputs"] = r.inputs_summary;
  j["values"] = values;
  j["holds"] = r.holds;
  j["attained"] = r.attained;
  j["attainment_indeterminate"] = r.attainment_indeterminate;
  j["counterexample"] = r.counterexample;
  j["witness"] = r.witness;
  j["notes"] = r.notes;
  return j;
}

void print_report(std::ostream& out, const BoundReport& r) {
  out << statement_id_name(r.id) << ": ";
  if (r.counterexample) {
    out << "COUNTEREXAMPLE";
  } else {
    out << (r.holds ? "holds" : "FAILS");
  }
  if (r.attained) out << " (attained)";
  if (r.attainment_indeterminate) out << " (attainment indeterminate)";
  out << "\n  on " << r.inputs_summary << "\n";
  for (const auto& [k, v] : r.values) out << "  " << k << " = " << v << "\n";
  if (!r.witness.empty()) out << "  witness: " << r.witness << "\n";
  if (!r.notes.empty()) out << "  note: " << r.notes << "\n";
}

// Everything one command produces; `finish` renders it as text or JSON and
// derives the exit code from counterexample flags.
struct Document {
  std::string command;
  std::string path;
  std::string digest;
  std::uint64_t seed = 0;
  json result = json::object();
  std::vector<BoundReport> reports;
  std::vector<std::string> skipped;
  std::ostringstream text;
};

int finish(Document& doc, const GlobalOptions& opt, std::ostream& out,
           std::chrono::steady_clock::time_point start) {
  int code = 0;
  for (const BoundReport& r : doc.reports) {
    if (r.counterexample) code = 3;
  }
  if (opt.json) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    json j;
    j["tool"] = "fatcode";
    j["version"] = kVersion;
    j["command"] = doc.command;
    j["input"] = json{{"path", doc.path}, {"digest", doc.digest}};
    j["seed"] = doc.seed;
    j["result"] = doc.result;
    json reports = json::array();
    for (const BoundReport& r : doc.reports) reports.push_back(report_to_json(r));
    j["reports"] = reports;
    j["skipped"] = doc.skipped;
    j["timing_ms"] = elapsed;
    out << j.dump(2) << "\n";
  } else {
    out << doc.text.str();
    for (const BoundReport& r : doc.reports) print_report(out, r);
    for (const std::string& s : doc.skipped) out << "skipped: " << s << "\n";
  }
  return code;
}

std::vector<std::string> scalar_strings(const std::vector<Scalar>& v) {
  std::vector<std::string> out;
  for (const Scalar& s : v) out.push_back(s.str());
  return out;
}

void run_matrix(const Input& input, const GlobalOptions&, Document& doc) {
  GeneratorMatrix gen = generator_matrix(input.scheme);
  json entries = json::array();
  for (std::size_t r = 0; r < gen.matrix.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < gen.matrix.cols(); ++c) row.push_back(gen.matrix.at(r, c).str());
    entries.push_back(row);
  }
  doc.result["rows"] = gen.matrix.rows();
  doc.result["cols"] = gen.matrix.cols();
  doc.result["block_multiplicities"] = gen.block_multiplicities;
  doc.result["entries"] = entries;
  doc.text << "generator matrix, " << gen.matrix.rows() << " x " << gen.matrix.cols()
           << " over " << input.scheme.field().str() << "\n"
           << gen.matrix.str();
  doc.text << "block multiplicities:";
  for (int m : gen.block_multiplicities) doc.text << " " << m;
  doc.text << "\n";
}

int run_distance(const Input& input, const GlobalOptions& opt, bool oracle, Document& doc) {
  DistanceResult d = minimum_distance(input.scheme, opt.threads);
  std::vector<std::int64_t> points_1based;
  for (std::size_t i : d.witness_points) points_1based.push_back(static_cast<std::int64_t>(i) + 1);
  doc.result["d"] = d.d;
  doc.result["witness_weight"] = d.witness_weight;
  doc.result["witness_points"] = points_1based;
  doc.result["witness_hyperplane"] = scalar_strings(d.witness_hyperplane);
  doc.text << "d(Z) = " << d.d << "\n";
  doc.text << "max hyperplane weight " << d.witness_weight << " at points";
  for (std::int64_t i : points_1based) doc.text << " P" << i;
  doc.text << "\nhyperplane normal:";
  for (const std::string& s : scalar_strings(d.witness_hyperplane)) doc.text << " " << s;
  doc.text << "\n";
  if (oracle) {
    std::int64_t od = minimum_distance_exhaustive(generator_matrix(input.scheme));
    doc.result["oracle_d"] = od;
    doc.result["oracle_agrees"] = od == d.d;
    doc.text << "exhaustive codeword scan: " << od
             << (od == d.d ? " (agrees)" : " (DISAGREES)") << "\n";
    if (od != d.d) return 1;
  }
  return 0;
}

void run_alpha(const Input& input, const GlobalOptions& opt, Document& doc) {
  int a = alpha(input.scheme, opt.degree_cap());
  doc.result["alpha"] = a;
  doc.text << "alpha = " << a << "\n";
}

void run_hilbert(const Input& input, const GlobalOptions& opt, Document& doc) {
  std::int64_t degree = scheme_degree(input.scheme);
  int max_d = opt.max_degree;
  if (max_d <= 0) {
    max_d = 0;
    while (hilbert_function(input.scheme, max_d) != degree) {
      if (++max_d > opt.degree_cap()) {
        throw Error(ErrorKind::CapExceeded, "hilbert function did not stabilize");
      }
    }
  }
  std::vector<std::int64_t> values;
  for (int d = 0; d <= max_d; ++d) values.push_back(hilbert_function(input.scheme, d));
  doc.result["max_degree"] = max_d;
  doc.result["values"] = values;
  doc.result["scheme_degree"] = degree;
  for (int d = 0; d <= max_d; ++d) {
    doc.text << "H(" << d << ") = " << values[static_cast<std::size_t>(d)] << "\n";
  }
  doc.text << "scheme degree = " << degree << "\n";
}

void run_socle(const Input& input, const GlobalOptions& opt, Document& doc) {
  SocleProfile p = socle_profile(input.scheme, opt.seed, opt.degree_cap());
  doc.result["piece_dims"] = p.reduction.piece_dims;
  doc.result["socle_dims"] = p.socle_dims;
  doc.result["min_socle_degree"] = p.min_socle_degree;
  doc.result["top_degree"] = p.top_degree;
  doc.result["linear_form"] = scalar_strings(p.reduction.form.coefficients);
  doc.text << "artinian quotient dims:";
  for (auto v : p.reduction.piece_dims) doc.text << " " << v;
  doc.text << "\nsocle dims:";
  for (auto v : p.socle_dims) doc.text << " " << v;
  doc.text << "\nmin socle degree = " << p.min_socle_degree << "\n";
  doc.text << "top degree = " << p.top_degree << "\n";
  doc.text << "linear form:";
  for (const std::string& s : scalar_strings(p.reduction.form.coefficients)) doc.text << " " << s;
  doc.text << "\n";
}

void run_separators(const Input& input, const GlobalOptions& opt, Document& doc) {
  std::vector<int> degrees = separator_degrees(input.scheme, opt.degree_cap());
  doc.result["degrees"] = degrees;
  doc.result["min"] = *std::min_element(degrees.begin(), degrees.end());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    doc.text << "P" << (i + 1) << ": " << degrees[i] << "\n";
  }
  doc.text << "min separator degree = " << doc.result["min"].get<int>() << "\n";
}

int run_vdistance(const Input& input, const GlobalOptions&, int degree, Document& doc) {
  std::int64_t d = generalized_distance(input.scheme, degree);
  std::int64_t check = generalized_distance_veronese(input.scheme, degree);
  doc.result["degree"] = degree;
  doc.result["d"] = d;
  doc.result["veronese_check"] = check;
  doc.result["agrees"] = d == check;
  doc.text << "d_" << degree << "(X) = " << d << "\n";
  doc.text << "veronese route: " << check << (d == check ? " (agrees)" : " (DISAGREES)") << "\n";
  return d == check ? 0 : 1;
}

std::string normalize_statement(const std::string& raw) {
  std::string id;
  for (char c : raw) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      id.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return id;
}

bool is_ci_statement(const std::string& id) {
  return id == "cibound" || id == "soclevalueci" || id == "ci22" || id == "ci22equality" ||
         id == "bezout" || id == "bezoutci" || id == "n2theorem" || id == "conjecture" ||
         id == "conjectureci";
}

BoundReport run_scheme_check(const std::string& id, const FatPointScheme& scheme,
                             const GlobalOptions& opt) {
  const int cap = opt.degree_cap();
  if (id == "crude" || id == "crudebounds") return crude_bounds(scheme);
  if (id == "hombound") return check_hombound(scheme, cap);
  if (id == "boundscor") return check_boundscor(scheme, cap);
  if (id == "maintheorem" || id == "maintheoremi" || id == "maintheoremii") {
    return check_maintheorem(scheme, opt.seed, cap);
  }
  if (id == "fatpointsocle") return check_separator_socle_bound(scheme, opt.seed, cap);
  if (id == "recursion" || id == "recursionlemma") {
    if (generalized_distance(scheme, 1) < 2) {
      throw Error(ErrorKind::HypothesisUnmet, "the ladder needs d(X) >= 2");
    }
    int b = 1;
    while (generalized_distance(scheme, b + 1) >= 2) ++b;
    return check_recursion_lemma(scheme, b);
  }
  if (id == "openquestion") return open_question_experiment(scheme, opt.seed, cap);
  throw Error(ErrorKind::Usage, "unknown statement id '" + id + "'");
}

BoundReport run_ci_check(const std::string& id, const CiInstance& ci,
                         const GlobalOptions& opt) {
  const int cap = opt.degree_cap();
  if (id == "cibound") return check_cibound(ci);
  if (id == "soclevalueci") return check_ci_socle_formula(ci, opt.seed, cap);
  if (id == "ci22" || id == "ci22equality") return check_ci22_equality(ci, opt.seed, cap);
  return check_bezout_ci(ci);
}

std::vector<int> parse_degrees(const std::string& csv) {
  std::vector<int> degrees;
  std::istringstream in(csv);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      int d = std::stoi(part, &used);
      if (used != part.size() || d < 2) throw std::invalid_argument(part);
      degrees.push_back(d);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, "--degrees wants comma-separated integers >= 2, got '" +
                                        csv + "'");
    }
  }
  if (degrees.empty()) throw Error(ErrorKind::Usage, "--degrees is empty");
  return degrees;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  GlobalOptions opt;
  CLI::App app{"exact invariants of fat point schemes in projective space"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.add_flag("--json", opt.json, "emit a JSON report document");
  app.add_option("--seed", opt.seed, "seed for randomized routines");
  app.add_option("--max-degree", opt.max_degree, "degree range or search cap");
  app.add_flag("--merge-duplicates", opt.merge_duplicates,
               "merge repeated points, keeping the larger multiplicity");
  app.add_option("--threads", opt.threads, "worker threads for the distance search")
      ->check(CLI::Range(1, 256));

  std::string file;
  std::string statement;
  std::string degrees_csv;
  int vdegree = 1;
  int mult = 1;
  bool oracle = false;

  CLI::App* cmd_matrix = app.add_subcommand("matrix", "print the generator matrix");
  cmd_matrix->add_option("file", file, "scheme file")->required();

  CLI::App* cmd_distance = app.add_subcommand("distance", "minimum distance of the scheme's code");
  cmd_distance->add_option("file", file, "scheme file")->required();
  cmd_distance->add_flag("--oracle", oracle, "cross-check with the exhaustive codeword scan");

  CLI::App* cmd_alpha = app.add_subcommand("alpha", "least degree of a form through the scheme");
  cmd_alpha->add_option("file", file, "scheme file")->required();

  CLI::App* cmd_hilbert = app.add_subcommand("hilbert", "hilbert function values");
  cmd_hilbert->add_option("file", file, "scheme file")->required();

  CLI::App* cmd_socle = app.add_subcommand("socle", "artinian reduction and socle profile");
  cmd_socle->add_option("file", file, "scheme file")->required();

  CLI::App* cmd_separators = app.add_subcommand("separators", "separator degree of each point");
  cmd_separators->add_option("file", file, "scheme file")->required();

  CLI::App* cmd_vdistance = app.add_subcommand("vdistance", "generalized distance of a reduced scheme");
  cmd_vdistance->add_option("file", file, "scheme file")->required();
  cmd_vdistance->add_option("--degree", vdegree, "veronese degree a")->required()->check(CLI::Range(1, 64));

  CLI::App* cmd_check = app.add_subcommand("check", "evaluate one statement");
  cmd_check->add_option("statement", statement, "statement id")->required();
  cmd_check->add_option("file", file, "scheme file (non-ci statements)");
  cmd_check->add_option("--degrees", degrees_csv, "ci degrees d1,d2[,..] (ci statements)");
  cmd_check->add_option("--mult", mult, "ci multiplicity")->check(CLI::Range(1, 64));

  CLI::App* cmd_ci = app.add_subcommand("ci", "survey a seeded complete-intersection grid");
  cmd_ci->add_option("--degrees", degrees_csv, "ci degrees d1,d2[,..]")->required();
  cmd_ci->add_option("--mult", mult, "multiplicity for every point")->check(CLI::Range(1, 64));

  CLI::App* cmd_survey = app.add_subcommand("survey", "every applicable statement");
  cmd_survey->add_option("file", file, "scheme file")->required();

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("fatcode");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  Document doc;
  doc.seed = opt.seed;

  // Invalid scheme files exit 2 whatever the error kind; the same kinds
  // raised later, during computation, exit 1.
  bool parsing_input = false;
  auto load_input = [&](const std::string& path) {
    std::string text = read_file(path);
    parsing_input = true;
    try {
      Input input{parse_scheme_file(text, opt.merge_duplicates), path, fnv1a_hex(text)};
      parsing_input = false;
      return input;
    } catch (const Error& e) {
      throw Error(e.kind(), path + ": " + e.what());
    }
  };

  try {
    int code = 0;
    if (cmd_matrix->parsed()) {
      doc.command = "matrix";
      Input input = load_input(file);
      doc.path = input.path;
      doc.digest = input.digest;
      run_matrix(input, opt, doc);
    } else if (cmd_distance->parsed()) {
      doc.command = "distance";
      Input input = load_input(file);
      doc.path = input.path;
      doc.digest = input.digest;
      code = run_distance(input, opt, oracle, doc);
    } else if (cmd_alpha->parsed()) {
      doc.command = "alpha";
      Input input = load_input(file);
      doc.path = input.path;
      doc.digest = input.digest;
      run_alpha(input, opt, doc);
    } else if (cmd_hilbert->parsed()) {
      doc.command = "hilbert";
      Input input = load_input(file);
      doc.path = input.path;
      doc.digest = input.digest;
      run_hilbert(input, opt, doc);
    } else if (cmd_socle->parsed()) {
      doc.command = "socle";
      Input input = load_input(file);
      doc.path = input.path;
      doc.digest = input.digest;
      run_socle(input, opt, doc);
    } else if (cmd_separators->parsed()) {
      doc.command = "separators";
      Input input = load_input(file);
      doc.path = input.path;
      doc.digest = input.digest;
      run_separators(input, opt, doc);
    } else if (cmd_vdistance->parsed()) {
      doc.command = "vdistance";
      Input input = load_input(file);
      doc.path = input.path;
      doc.digest = input.digest;
      code = run_vdistance(input, opt, vdegree, doc);
    } else if (cmd_check->parsed()) {
      doc.command = "check";
      std::string id = normalize_statement(statement);
      if (is_ci_statement(id)) {
        if (degrees_csv.empty()) {
          throw Error(ErrorKind::Usage, "ci statement '" + id + "' needs --degrees");
        }
        if (!file.empty()) {
          throw Error(ErrorKind::Usage, "ci statements take --degrees, not a file");
        }
        CiInstance ci = realize_ci(
            CiDescription::grid(parse_degrees(degrees_csv), mult, opt.seed));
        Input input = generated_input(ci.scheme);
        doc.digest = input.digest;
        doc.result["scheme"] = serialize_scheme(ci.scheme);
        doc.reports.push_back(run_ci_check(id, ci, opt));
      } else {
        if (file.empty()) {
          throw Error(ErrorKind::Usage, "statement '" + id + "' needs a scheme file");
        }
        Input input = load_input(file);
        doc.path = input.path;
        doc.digest = input.digest;
        doc.reports.push_back(run_scheme_check(id, input.scheme, opt));
      }
    } else if (cmd_ci->parsed()) {
      doc.command = "ci";
      CiInstance ci = realize_ci(
          CiDescription::grid(parse_degrees(degrees_csv), mult, opt.seed));
      Input input = generated_input(ci.scheme);
      doc.digest = input.digest;
      doc.result["degrees"] = ci.degrees;
      doc.result["multiplicity"] = mult;
      doc.result["num_points"] = ci.scheme.num_points();
      doc.result["scheme"] = serialize_scheme(ci.scheme);
      SurveyResult sv = survey(ci, opt.seed, opt.degree_cap());
      doc.reports = std::move(sv.reports);
      doc.skipped = std::move(sv.skipped);
    } else if (cmd_survey->parsed()) {
      doc.command = "survey";
      Input input = load_input(file);
      doc.path = input.path;
      doc.digest = input.digest;
      SurveyResult sv = survey(input.scheme, opt.seed, opt.degree_cap());
      doc.reports = std::move(sv.reports);
      doc.skipped = std::move(sv.skipped);
    }
    int report_code = finish(doc, opt, out, start);
    return code != 0 ? code : report_code;
  } catch (const Error& e) {
    err << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return (e.is_parse_error() || parsing_input) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fatcode
