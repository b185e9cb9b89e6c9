// Command-line surface for the singular Horn cone library: generation,
// membership checks, redundancy elimination, stabilization, random-matrix
// sampling and the classical families, with reproducible machine-readable
// output.
//
// Exit codes: 0 success, 1 internal inconsistency, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "singularhorn/cone.hpp"
#include "singularhorn/horn.hpp"
#include "singularhorn/oracle.hpp"
#include "singularhorn/parallel.hpp"
#include "singularhorn/partitions.hpp"
#include "singularhorn/rational.hpp"
#include "singularhorn/singular.hpp"

using json = nlohmann::ordered_json;
using namespace singularhorn;

namespace {

constexpr int kCacheVersion = 1;

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

// ---------------------------------------------------------------------------
// Cache persistence (SINGULARHORN_CACHE_DIR)

std::optional<std::filesystem::path> cache_file() {
  const char* dir = std::getenv("SINGULARHORN_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / "singularhorn-cache-v1.json";
}

void load_cache() {
  const auto path = cache_file();
  if (!path || !std::filesystem::exists(*path)) return;
  std::ifstream in(*path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception&) {
    return;  // stale or corrupt cache; regenerate
  }
  if (!doc.is_object() || doc.value("version", 0) != kCacheVersion) return;
  if (doc.contains("lr") && doc["lr"].is_object()) {
    std::vector<std::pair<std::string, long long>> entries;
    for (const auto& [key, value] : doc["lr"].items()) {
      entries.emplace_back(key, value.get<long long>());
    }
    lr_memo_merge(entries);
  }
  if (doc.contains("horn") && doc["horn"].is_object()) {
    std::vector<HornCacheEntry> entries;
    for (const auto& [key, rows] : doc["horn"].items()) {
      const auto colon = key.find(':');
      if (colon == std::string::npos) continue;
      HornCacheEntry entry;
      entry.n = std::stoi(key.substr(0, colon));
      entry.mode = horn_mode_from_string(key.substr(colon + 1));
      for (const auto& row : rows) {
        const int r = row.at(0).get<int>();
        Subset I{row.at(1).get<std::vector<int>>(), entry.n};
        Subset J{row.at(2).get<std::vector<int>>(), entry.n};
        Subset K{row.at(3).get<std::vector<int>>(), entry.n};
        const long long cert = row.at(4).get<long long>();
        // Rebuild the derived fields through the generator row constructor.
        HornInequality rebuilt;
        rebuilt.r = r;
        rebuilt.I = std::move(I);
        rebuilt.J = std::move(J);
        rebuilt.K = std::move(K);
        rebuilt.mode = entry.mode;
        rebuilt.certificate = cert;
        rebuilt.coeffs.assign(static_cast<std::size_t>(3 * entry.n), 0);
        for (int e : rebuilt.I.elements) rebuilt.coeffs[static_cast<std::size_t>(e - 1)] = 1;
        for (int e : rebuilt.J.elements) {
          rebuilt.coeffs[static_cast<std::size_t>(entry.n + e - 1)] = 1;
        }
        for (int e : rebuilt.K.elements) {
          rebuilt.coeffs[static_cast<std::size_t>(2 * entry.n + e - 1)] = 1;
        }
        std::ostringstream label;
        auto print = [&label](const Subset& s) {
          label << '{';
          for (std::size_t i = 0; i < s.elements.size(); ++i) {
            if (i) label << ' ';
            label << s.elements[i];
          }
          label << '}';
        };
        label << "r=" << r << " I=";
        print(rebuilt.I);
        label << " J=";
        print(rebuilt.J);
        label << " K=";
        print(rebuilt.K);
        rebuilt.label = label.str();
        entry.rows.push_back(std::move(rebuilt));
      }
      entries.push_back(std::move(entry));
    }
    horn_registry_merge(std::move(entries));
  }
}

void save_cache() {
  const auto path = cache_file();
  if (!path) return;
  json doc;
  doc["version"] = kCacheVersion;
  json lr = json::object();
  auto lr_entries = lr_memo_snapshot();
  std::sort(lr_entries.begin(), lr_entries.end());
  for (const auto& [key, value] : lr_entries) lr[key] = value;
  doc["lr"] = std::move(lr);
  json horn = json::object();
  for (const auto& entry : horn_registry_snapshot()) {
    json rows = json::array();
    for (const auto& row : entry.rows) {
      rows.push_back(json::array(
          {row.r, row.I.elements, row.J.elements, row.K.elements, row.certificate}));
    }
    horn[std::to_string(entry.n) + ":" + to_string(entry.mode)] = std::move(rows);
  }
  doc["horn"] = std::move(horn);
  std::error_code ec;
  std::filesystem::create_directories(path->parent_path(), ec);
  const auto tmp = *path;
  std::ofstream out(tmp.string() + ".tmp");
  out << doc.dump(2) << "\n";
  out.close();
  std::filesystem::rename(tmp.string() + ".tmp", tmp, ec);
}

// ---------------------------------------------------------------------------
// Output plumbing

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output path '" + out_path + "'");
    out << text;
  }
}

json singular_row_json(const SingularInequality& row) {
  json j;
  j["r"] = row.r;
  j["I_plus"] = row.I.plus;
  j["I_minus"] = row.I.minus;
  j["J_plus"] = row.J.plus;
  j["J_minus"] = row.J.minus;
  j["K_plus"] = row.K.plus;
  j["K_minus"] = row.K.minus;
  json cert;
  cert["mode"] = to_string(row.mode);
  if (row.certificate.size() == 1) {
    cert["value"] = row.certificate[0];
  } else {
    cert["value"] = row.certificate;
  }
  j["certificate"] = std::move(cert);
  j["family"] = to_string(row.family);
  j["regular"] = row.regular;
  j["coeffs"] = row.coeffs;
  return j;
}

json horn_row_json(const HornInequality& row) {
  json j;
  j["r"] = row.r;
  j["I"] = row.I.elements;
  j["J"] = row.J.elements;
  j["K"] = row.K.elements;
  json cert;
  cert["mode"] = to_string(row.mode);
  cert["value"] = row.certificate;
  j["certificate"] = std::move(cert);
  j["coeffs"] = row.coeffs;
  return j;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string singular_csv(const std::vector<SingularInequality>& rows) {
  std::string out =
      "label,r,I_plus,I_minus,J_plus,J_minus,K_plus,K_minus,certificate_mode,"
      "certificate_value,family,regular,coeffs\n";
  for (const auto& row : rows) {
    out += row.label + "," + std::to_string(row.r) + "," + join_ints(row.I.plus) + "," +
           join_ints(row.I.minus) + "," + join_ints(row.J.plus) + "," + join_ints(row.J.minus) +
           "," + join_ints(row.K.plus) + "," + join_ints(row.K.minus) + "," +
           to_string(row.mode) + ",";
    for (std::size_t i = 0; i < row.certificate.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(row.certificate[i]);
    }
    out += std::string(",") + to_string(row.family) + "," + (row.regular ? "true" : "false") +
           "," + join_ints(row.coeffs) + "\n";
  }
  return out;
}

std::string horn_csv(const std::vector<HornInequality>& rows) {
  std::string out = "label,r,I,J,K,certificate_mode,certificate_value,coeffs\n";
  for (const auto& row : rows) {
    out += row.label + "," + std::to_string(row.r) + "," + join_ints(row.I.elements) + "," +
           join_ints(row.J.elements) + "," + join_ints(row.K.elements) + "," +
           to_string(row.mode) + "," + std::to_string(row.certificate) + "," +
           join_ints(row.coeffs) + "\n";
  }
  return out;
}

/// Renders a coefficient row as "a1 + b1 >= c1" (negative entries on the
/// left side, positive on the right).
std::string pretty_inequality(const std::vector<int>& coeffs, int q) {
  const char* names[3] = {"a", "b", "c"};
  std::string lhs, rhs;
  for (int block = 0; block < 3; ++block) {
    for (int i = 0; i < q; ++i) {
      const int c = coeffs[static_cast<std::size_t>(block * q + i)];
      if (c == 0) continue;
      std::string term = std::string(names[block]) + std::to_string(i + 1);
      auto& side = c < 0 ? lhs : rhs;
      if (!side.empty()) side += " + ";
      side += term;
    }
  }
  if (lhs.empty()) lhs = "0";
  if (rhs.empty()) rhs = "0";
  return lhs + " >= " + rhs;
}

template <typename Row>
std::vector<int> role_permuted_coeffs(const Row& row, int q, int perm) {
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<int> out(static_cast<std::size_t>(3 * q));
  for (int block = 0; block < 3; ++block) {
    for (int i = 0; i < q; ++i) {
      out[static_cast<std::size_t>(perms[perm][block] * q + i)] =
          row.coeffs[static_cast<std::size_t>(block * q + i)];
    }
  }
  return out;
}

/// Groups rows into role-permutation orbits and prints one representative per
/// orbit with its "(and N permutations)" annotation.
template <typename Row>
std::string orbit_text(const std::vector<Row>& rows, int q, const std::string& heading) {
  std::map<std::vector<int>, std::vector<const Row*>> orbits;
  for (const auto& row : rows) {
    std::vector<int> key = row.coeffs;
    for (int perm = 1; perm < 6; ++perm) key = std::min(key, role_permuted_coeffs(row, q, perm));
    orbits[key].push_back(&row);
  }
  std::ostringstream out;
  out << heading << ": " << rows.size() << " rows in " << orbits.size() << " orbits\n";
  for (const auto& [key, members] : orbits) {
    const Row* rep = members.front();
    for (const Row* m : members) {
      if (m->coeffs < rep->coeffs) rep = m;
    }
    out << "  " << pretty_inequality(rep->coeffs, q);
    if (members.size() > 1) out << "   (and " << members.size() - 1 << " permutations)";
    out << "   [" << rep->label << "]\n";
  }
  return out.str();
}

std::string singular_text(const std::vector<SingularInequality>& rows, int q,
                          const std::string& heading) {
  return orbit_text(rows, q, heading);
}

std::vector<Rational> parse_point(const std::vector<std::string>& texts) {
  return parse_rational_vector(texts);
}

struct CommonOptions {
  std::string format = "text";
  std::string out_path;
  int jobs = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", opts.out_path, "Write the document to this path instead of stdout");
  cmd->add_option("--jobs", opts.jobs, "Worker threads (0 = available parallelism)");
}

// ---------------------------------------------------------------------------
// Commands

int cmd_generate(const std::string& kind, int p, int q, int n, const std::string& mode,
                 const CommonOptions& opts) {
  if (kind == "singular") {
    const auto singular_mode = singular_mode_from_string(mode.empty() ? "grassmann-pair-one" : mode);
    const auto rows = generate_singular_inequalities(p, q, singular_mode, opts.jobs);
    if (opts.format == "json") {
      json doc;
      doc["command"] = "generate";
      doc["kind"] = "singular";
      doc["p"] = p;
      doc["q"] = q;
      doc["mode"] = to_string(singular_mode);
      doc["count"] = rows.size();
      json rows_json = json::array();
      for (const auto& row : rows) rows_json.push_back(singular_row_json(row));
      doc["rows"] = std::move(rows_json);
      emit(doc.dump(2) + "\n", opts.out_path);
    } else if (opts.format == "csv") {
      emit(singular_csv(rows), opts.out_path);
    } else {
      std::ostringstream heading;
      heading << "Singular(" << p << "," << q << ") inequalities, mode "
              << to_string(singular_mode);
      emit(singular_text(rows, q, heading.str()), opts.out_path);
    }
    return 0;
  }
  const auto horn_mode = horn_mode_from_string(mode.empty() ? "lr-one" : mode);
  const auto& rows = horn_inequalities(n, horn_mode);
  if (opts.format == "json") {
    json doc;
    doc["command"] = "generate";
    doc["kind"] = "horn";
    doc["n"] = n;
    doc["mode"] = to_string(horn_mode);
    doc["count"] = rows.size();
    json rows_json = json::array();
    for (const auto& row : rows) rows_json.push_back(horn_row_json(row));
    doc["rows"] = std::move(rows_json);
    emit(doc.dump(2) + "\n", opts.out_path);
  } else if (opts.format == "csv") {
    emit(horn_csv(rows), opts.out_path);
  } else {
    std::ostringstream heading;
    heading << "Horn(" << n << ") inequalities, mode " << to_string(horn_mode);
    emit(orbit_text(rows, n, heading.str()), opts.out_path);
  }
  return 0;
}

int cmd_check(int p, int q, int n, const std::string& mode, bool cross_check,
              const std::vector<std::string>& values, const CommonOptions& opts) {
  json doc;
  doc["command"] = "check";
  const bool singular_kind = n == 0;
  std::vector<Violation> violations;
  bool member = false;
  if (singular_kind) {
    if (static_cast<int>(values.size()) != 3 * q) {
      throw std::invalid_argument("check expects 3q decimal values");
    }
    const auto point = parse_point(values);
    const std::vector<Rational> x(point.begin(), point.begin() + q);
    const std::vector<Rational> y(point.begin() + q, point.begin() + 2 * q);
    const std::vector<Rational> z(point.begin() + 2 * q, point.end());
    validate_chamber_vector(x, q);
    validate_chamber_vector(y, q);
    validate_chamber_vector(z, q);
    const auto singular_mode = singular_mode_from_string(mode.empty() ? "grassmann-pair-one" : mode);
    const auto rows = generate_singular_inequalities(p, q, singular_mode, opts.jobs);
    const auto result = evaluate(singular_system(rows, q), point);
    member = result.member;
    violations = result.violations;
    doc["kind"] = "singular";
    doc["p"] = p;
    doc["q"] = q;
    doc["mode"] = to_string(singular_mode);
    json pt;
    auto fmt = [](const std::vector<Rational>& v) {
      std::vector<std::string> out;
      for (const auto& c : v) out.push_back(format_rational(c));
      return out;
    };
    pt["x"] = fmt(x);
    pt["y"] = fmt(y);
    pt["z"] = fmt(z);
    doc["point"] = std::move(pt);
    doc["member"] = member;
    if (cross_check) {
      const bool horn_verdict = horn_membership(
          RealTriple{symmetric_embedding(x, p, q), symmetric_embedding(y, p, q),
                     symmetric_embedding(z, p, q)},
          p + q, HornMode::lr_one);
      json cc;
      cc["n"] = p + q;
      cc["member"] = horn_verdict;
      cc["agrees"] = horn_verdict == member;
      doc["horn_cross_check"] = std::move(cc);
      if (horn_verdict != member) {
        throw std::logic_error("embedded Horn verdict disagrees with the singular system");
      }
    }
  } else {
    if (static_cast<int>(values.size()) != 3 * n) {
      throw std::invalid_argument("check expects 3n decimal values");
    }
    const auto point = parse_point(values);
    RealTriple t{std::vector<Rational>(point.begin(), point.begin() + n),
                 std::vector<Rational>(point.begin() + n, point.begin() + 2 * n),
                 std::vector<Rational>(point.begin() + 2 * n, point.end())};
    validate_real_triple(t, n);
    const auto horn_mode = horn_mode_from_string(mode.empty() ? "lr-one" : mode);
    member = horn_membership(t, n, horn_mode);
    std::vector<Rational> flat;
    flat.insert(flat.end(), t.x.begin(), t.x.end());
    flat.insert(flat.end(), t.y.begin(), t.y.end());
    flat.insert(flat.end(), t.z.begin(), t.z.end());
    const auto result = evaluate(horn_system(n, horn_mode), flat);
    violations = result.violations;
    doc["kind"] = "horn";
    doc["n"] = n;
    doc["mode"] = to_string(horn_mode);
    doc["member"] = member;
  }
  json viols = json::array();
  for (const auto& v : violations) {
    json item;
    item["label"] = v.label;
    item["margin"] = format_rational(v.margin);
    viols.push_back(std::move(item));
  }
  doc["violations"] = std::move(viols);
  if (opts.format == "json") {
    emit(doc.dump(2) + "\n", opts.out_path);
  } else if (opts.format == "csv") {
    throw std::invalid_argument("check supports json or text output");
  } else {
    std::ostringstream out;
    out << (member ? "member" : "non-member") << "\n";
    for (const auto& v : violations) {
      out << "  violated: " << v.label << "  margin " << format_rational(v.margin) << "\n";
    }
    if (doc.contains("horn_cross_check")) {
      out << "  horn cross-check: "
          << (doc["horn_cross_check"]["member"].get<bool>() ? "member" : "non-member")
          << " (agrees)\n";
    }
    emit(out.str(), opts.out_path);
  }
  return 0;
}

int cmd_minimize(const std::string& kind, int p, int q, int n, const std::string& mode,
                 const CommonOptions& opts) {
  InequalitySystem sys, chamber;
  std::vector<SingularInequality> singular_rows;
  std::string mode_name;
  if (kind == "singular") {
    const auto singular_mode = singular_mode_from_string(mode.empty() ? "horn-pair" : mode);
    mode_name = to_string(singular_mode);
    singular_rows = generate_singular_inequalities(p, q, singular_mode, opts.jobs);
    sys = singular_system(singular_rows, q);
    chamber = singular_chamber(q);
  } else {
    const auto horn_mode = horn_mode_from_string(mode.empty() ? "lr-positive" : mode);
    mode_name = to_string(horn_mode);
    sys = horn_system(n, horn_mode);
    chamber = horn_chamber(n);
  }
  const auto result = minimize_system(sys, chamber, opts.jobs);

  json doc;
  doc["command"] = "minimize";
  doc["kind"] = kind;
  if (kind == "singular") {
    doc["p"] = p;
    doc["q"] = q;
  } else {
    doc["n"] = n;
  }
  doc["source_mode"] = mode_name;
  doc["input_count"] = sys.inequalities.size();
  doc["kept_count"] = result.minimized.inequalities.size();
  if (kind == "singular") {
    std::map<std::string, const SingularInequality*> by_label;
    for (const auto& row : singular_rows) by_label.emplace(row.label, &row);
    json rows = json::array();
    for (const auto& lin : result.minimized.inequalities) {
      rows.push_back(singular_row_json(*by_label.at(lin.label)));
    }
    doc["rows"] = std::move(rows);
  } else {
    std::map<std::string, const HornInequality*> by_label;
    for (const auto& row : horn_inequalities(n, horn_mode_from_string(mode_name))) {
      by_label.emplace(row.label, &row);
    }
    json rows = json::array();
    for (const auto& lin : result.minimized.inequalities) {
      rows.push_back(horn_row_json(*by_label.at(lin.label)));
    }
    doc["rows"] = std::move(rows);
  }
  doc["eliminated"] = result.eliminated;
  json chamber_json = json::array();
  int essential = 0;
  for (const auto& status : result.chamber) {
    json item;
    item["label"] = status.label;
    item["essential"] = status.essential;
    essential += status.essential ? 1 : 0;
    chamber_json.push_back(std::move(item));
  }
  doc["chamber"] = std::move(chamber_json);
  doc["essential_chamber_count"] = essential;
  doc["total_facets"] = result.minimized.inequalities.size() + static_cast<std::size_t>(essential);

  if (opts.format == "json") {
    emit(doc.dump(2) + "\n", opts.out_path);
  } else if (opts.format == "csv") {
    if (kind == "singular") {
      std::vector<SingularInequality> kept;
      std::map<std::string, const SingularInequality*> by_label;
      for (const auto& row : singular_rows) by_label.emplace(row.label, &row);
      for (const auto& lin : result.minimized.inequalities) kept.push_back(*by_label.at(lin.label));
      emit(singular_csv(kept), opts.out_path);
    } else {
      std::vector<HornInequality> kept;
      std::map<std::string, const HornInequality*> by_label;
      for (const auto& row : horn_inequalities(n, horn_mode_from_string(mode_name))) {
        by_label.emplace(row.label, &row);
      }
      for (const auto& lin : result.minimized.inequalities) kept.push_back(*by_label.at(lin.label));
      emit(horn_csv(kept), opts.out_path);
    }
  } else {
    std::ostringstream out;
    out << "minimized " << sys.inequalities.size() << " -> "
        << result.minimized.inequalities.size() << " rows";
    out << " (+" << essential << " essential chamber rows, "
        << doc["total_facets"].get<std::size_t>() << " facets total)\n";
    if (!result.eliminated.empty()) {
      out << "eliminated:\n";
      for (const auto& label : result.eliminated) out << "  " << label << "\n";
    }
    for (const auto& status : result.chamber) {
      out << "chamber " << (status.essential ? "essential" : "redundant") << ": " << status.label
          << "\n";
    }
    emit(out.str(), opts.out_path);
  }
  return 0;
}

int cmd_stabilize(int p, int q, const CommonOptions& opts) {
  const auto result = stabilization_check(p, q, opts.jobs);
  json doc;
  doc["command"] = "stabilize";
  doc["p"] = p;
  doc["q"] = q;
  doc["stable"] = result.stable;
  doc["minimal_count"] = result.minimal_count;
  doc["non_regular"] = result.non_regular;
  if (opts.format == "json") {
    emit(doc.dump(2) + "\n", opts.out_path);
  } else if (opts.format == "csv") {
    throw std::invalid_argument("stabilize supports json or text output");
  } else {
    std::ostringstream out;
    out << "Singular(inf," << q << ") == Singular(" << p << "," << q << "): "
        << (result.stable ? "yes" : "no") << "  (minimal system: " << result.minimal_count
        << " rows)\n";
    for (const auto& label : result.non_regular) out << "  non-regular: " << label << "\n";
    emit(out.str(), opts.out_path);
  }
  return 0;
}

int cmd_sample(int p, int q, const std::string& mode, long long trials, double tol,
               std::uint64_t seed, const std::vector<std::string>& values,
               const CommonOptions& opts) {
  if (static_cast<int>(values.size()) != 2 * q) {
    throw std::invalid_argument("sample expects 2q values (x then y)");
  }
  std::vector<double> x, y;
  for (int i = 0; i < q; ++i) {
    x.push_back(parse_rational(values[static_cast<std::size_t>(i)]).convert_to<double>());
  }
  for (int i = q; i < 2 * q; ++i) {
    y.push_back(parse_rational(values[static_cast<std::size_t>(i)]).convert_to<double>());
  }
  const auto singular_mode = singular_mode_from_string(mode.empty() ? "grassmann-pair-one" : mode);
  const auto rows = generate_singular_inequalities(p, q, singular_mode, opts.jobs);
  const auto report =
      verify_necessity(singular_system(rows, q), x, y, p, q, trials, tol, seed, opts.jobs);
  json doc;
  doc["command"] = "sample";
  doc["p"] = p;
  doc["q"] = q;
  doc["mode"] = to_string(singular_mode);
  doc["trials"] = report.trials;
  doc["tol"] = format_double(tol);
  doc["seed"] = seed;
  json xs = json::array(), ys = json::array();
  for (double v : x) xs.push_back(format_double(v));
  for (double v : y) ys.push_back(format_double(v));
  doc["x"] = std::move(xs);
  doc["y"] = std::move(ys);
  doc["violations"] = report.violations;
  doc["worst_margin"] = format_double(report.worst_margin);
  json zmin = json::array(), zmax = json::array();
  for (double v : report.z_min) zmin.push_back(format_double(v));
  for (double v : report.z_max) zmax.push_back(format_double(v));
  doc["z_min"] = std::move(zmin);
  doc["z_max"] = std::move(zmax);
  if (opts.format == "json") {
    emit(doc.dump(2) + "\n", opts.out_path);
  } else if (opts.format == "csv") {
    throw std::invalid_argument("sample supports json or text output");
  } else {
    std::ostringstream out;
    out << "trials " << report.trials << ", violations " << report.violations
        << ", worst margin " << format_double(report.worst_margin) << "\n";
    out << "z range:";
    for (int i = 0; i < q; ++i) {
      out << " [" << format_double(report.z_min[static_cast<std::size_t>(i)]) << ", "
          << format_double(report.z_max[static_cast<std::size_t>(i)]) << "]";
    }
    out << "\n";
    emit(out.str(), opts.out_path);
  }
  return 0;
}

int cmd_families(int p, int q, const CommonOptions& opts) {
  const auto rows = family_inequalities(p, q);
  if (opts.format == "json") {
    json doc;
    doc["command"] = "families";
    doc["p"] = p;
    doc["q"] = q;
    doc["count"] = rows.size();
    json rows_json = json::array();
    for (const auto& row : rows) rows_json.push_back(singular_row_json(row));
    doc["rows"] = std::move(rows_json);
    emit(doc.dump(2) + "\n", opts.out_path);
  } else if (opts.format == "csv") {
    emit(singular_csv(rows), opts.out_path);
  } else {
    std::ostringstream heading;
    heading << "classical families for Singular(" << p << "," << q << ")";
    emit(singular_text(rows, q, heading.str()), opts.out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact inequality systems for the singular Horn cones"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Generate an inequality system");
  std::string gen_kind;
  generate->add_option("kind", gen_kind, "singular or horn")
      ->required()
      ->check(CLI::IsMember({"singular", "horn"}));
  int gen_p = 0, gen_q = 0, gen_n = 0;
  std::string gen_mode;
  generate->add_option("--p", gen_p, "Matrix height p (singular)");
  generate->add_option("--q", gen_q, "Matrix width q (singular)");
  generate->add_option("--n", gen_n, "Hermitian size n (horn)");
  generate->add_option("--mode", gen_mode,
                       "singular: horn-pair | grassmann-pair-one | bk-flag-one | "
                       "bk-flag-positive; horn: lr-positive | lr-one | recursive");
  CommonOptions gen_opts;
  add_common(generate, gen_opts);

  // check
  auto* check = app.add_subcommand("check", "Exact membership of a decimal triple");
  int chk_p = 0, chk_q = 0, chk_n = 0;
  std::string chk_mode;
  bool cross = false;
  std::vector<std::string> chk_values;
  check->add_option("--p", chk_p, "Matrix height p (singular)");
  check->add_option("--q", chk_q, "Matrix width q (singular)");
  check->add_option("--n", chk_n, "Hermitian size n (horn)");
  check->add_option("--mode", chk_mode, "Generator mode for the system");
  check->add_flag("--cross-check-horn", cross,
                  "Also test the embedded triple against Horn(p+q)");
  check->add_option("values", chk_values, "x, y and z entries (exact decimals)");
  CommonOptions chk_opts;
  add_common(check, chk_opts);

  // minimize
  auto* minimize = app.add_subcommand("minimize", "Minimal facet system via exact LPs");
  std::string min_kind;
  minimize->add_option("kind", min_kind, "singular or horn")
      ->required()
      ->check(CLI::IsMember({"singular", "horn"}));
  int min_p = 0, min_q = 0, min_n = 0;
  std::string min_mode;
  minimize->add_option("--p", min_p, "Matrix height p (singular)");
  minimize->add_option("--q", min_q, "Matrix width q (singular)");
  minimize->add_option("--n", min_n, "Hermitian size n (horn)");
  minimize->add_option("--mode", min_mode, "Source generator mode");
  CommonOptions min_opts;
  add_common(minimize, min_opts);

  // stabilize
  auto* stabilize = app.add_subcommand("stabilize", "Width-stabilization verdict");
  int stb_p = 0, stb_q = 0;
  stabilize->add_option("--p", stb_p, "Matrix height p")->required();
  stabilize->add_option("--q", stb_q, "Matrix width q")->required();
  CommonOptions stb_opts;
  add_common(stabilize, stb_opts);

  // sample
  auto* sample = app.add_subcommand("sample", "Random-matrix necessity check");
  int smp_p = 0, smp_q = 0;
  long long smp_trials = 10000;
  double smp_tol = 1e-9;
  std::uint64_t smp_seed = 0;
  std::string smp_mode;
  std::vector<std::string> smp_values;
  sample->add_option("--p", smp_p, "Matrix height p")->required();
  sample->add_option("--q", smp_q, "Matrix width q")->required();
  sample->add_option("--mode", smp_mode, "Generator mode for the checked system");
  sample->add_option("--trials", smp_trials, "Number of Haar samples");
  sample->add_option("--tol", smp_tol, "Violation tolerance");
  sample->add_option("--seed", smp_seed, "RNG seed");
  sample->add_option("values", smp_values, "x then y entries (floats)");
  CommonOptions smp_opts;
  add_common(sample, smp_opts);

  // families
  auto* families = app.add_subcommand("families", "Classical family triples");
  int fam_p = 0, fam_q = 0;
  families->add_option("--p", fam_p, "Matrix height p")->required();
  families->add_option("--q", fam_q, "Matrix width q")->required();
  CommonOptions fam_opts;
  add_common(families, fam_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    load_cache();
    int rc = 1;
    if (generate->parsed()) {
      if (gen_kind == "singular") {
        if (gen_q < 1 || gen_p < gen_q) throw std::invalid_argument("requires p >= q >= 1");
      } else if (gen_n < 1) {
        throw std::invalid_argument("requires n >= 1");
      }
      rc = cmd_generate(gen_kind, gen_p, gen_q, gen_n, gen_mode, gen_opts);
    } else if (check->parsed()) {
      if (chk_n == 0 && (chk_q < 1 || chk_p < chk_q)) {
        throw std::invalid_argument("requires p >= q >= 1 or --n");
      }
      rc = cmd_check(chk_p, chk_q, chk_n, chk_mode, cross, chk_values, chk_opts);
    } else if (minimize->parsed()) {
      if (min_kind == "singular") {
        if (min_q < 1 || min_p < min_q) throw std::invalid_argument("requires p >= q >= 1");
      } else if (min_n < 1) {
        throw std::invalid_argument("requires n >= 1");
      }
      rc = cmd_minimize(min_kind, min_p, min_q, min_n, min_mode, min_opts);
    } else if (stabilize->parsed()) {
      if (stb_q < 1 || stb_p < stb_q) throw std::invalid_argument("requires p >= q >= 1");
      rc = cmd_stabilize(stb_p, stb_q, stb_opts);
    } else if (sample->parsed()) {
      if (smp_q < 1 || smp_p < smp_q) throw std::invalid_argument("requires p >= q >= 1");
      rc = cmd_sample(smp_p, smp_q, smp_mode, smp_trials, smp_tol, smp_seed, smp_values, smp_opts);
    } else if (families->parsed()) {
      if (fam_q < 1 || fam_p < fam_q) throw std::invalid_argument("requires p >= q >= 1");
      rc = cmd_families(fam_p, fam_q, fam_opts);
    }
    save_cache();
    return rc;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
