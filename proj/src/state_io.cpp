#include "skewcorr/state_io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace skewcorr {

using nlohmann::json;

namespace {

int require_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw ParseError(std::string("state file: missing integer field \"") + key + "\"");
  return doc[key].get<int>();
}

double parse_number(const std::string& text, const std::string& key) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty())
    throw ParseError("family spec: bad numeric value for '" + key + "': '" + text + "'");
  return v;
}

template <class Int>
Int parse_integer(const std::string& text, const std::string& key) {
  Int v{};
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, v);
  if (ec != std::errc() || ptr != last || text.empty())
    throw ParseError("family spec: '" + key + "' must be an integer, got '" + text + "'");
  return v;
}

int parse_int(const std::string& text, const std::string& key) { return parse_integer<int>(text, key); }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

DensityMatrix read_state_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("state file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("state file: top level must be an object");
  const int m = require_int(doc, "m");
  const int n = require_int(doc, "n");
  if (m < 1 || n < 1) throw ParseError("state file: m and n must be positive");
  if (!doc.contains("rho") || !doc["rho"].is_array()) throw ParseError("state file: missing array \"rho\"");

  const json& rows = doc["rho"];
  const auto d = static_cast<std::size_t>(m) * n;
  if (rows.size() != d) throw ParseError("state file: rho must have m*n rows");
  ComplexMatrix mat(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != d) throw ParseError("state file: rho must be square (m*n columns)");
    for (std::size_t j = 0; j < d; ++j) {
      const json& e = row[j];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ParseError("state file: entries must be [re, im] number pairs");
      mat(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return DensityMatrix::from_matrix(m, n, mat);
}

DensityMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file '" + path + "'");
  return read_state_json(in);
}

void write_state_json(std::ostream& out, const DensityMatrix& rho) {
  // Hand-formatted so every double is written in its shortest exact form.
  const ComplexMatrix& r = rho.matrix();
  out << "{\"m\": " << rho.dim_a() << ", \"n\": " << rho.dim_b() << ", \"rho\": [";
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    out << (i ? ",\n  [" : "\n  [");
    for (Eigen::Index j = 0; j < r.cols(); ++j) {
      if (j) out << ", ";
      out << '[' << format_double(r(i, j).real()) << ", " << format_double(r(i, j).imag()) << ']';
    }
    out << ']';
  }
  out << "\n]}\n";
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write state file '" + path + "'");
  write_state_json(out, rho);
}

FamilySpec parse_family_spec(const std::string& text) {
  if (!text.empty() && text.front() == '{') return family_spec_from_json(text);

  const auto colon = text.find(':');
  FamilySpec spec;
  try {
    spec.family = family_from_string(text.substr(0, colon));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (spec.family == Family::ppt) spec.m = spec.n = 3;

  bool have_n = false;
  if (colon != std::string::npos) {
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("family spec: expected key=value, got '" + item + "'");
      const std::string key = item.substr(0, eq);
      const std::string val = item.substr(eq + 1);
      if (key == "m") {
        spec.m = parse_int(val, key);
      } else if (key == "n") {
        spec.n = parse_int(val, key);
        have_n = true;
      } else if (key == "x" || key == "alpha" || key == "param") {
        spec.param = parse_number(val, key);
      } else if (key == "rank") {
        spec.rank = parse_int(val, key);
      } else if (key == "seed") {
        spec.seed = parse_integer<std::uint64_t>(val, key);
      } else if (key == "mu") {
        std::stringstream list(val);
        std::string v;
        while (std::getline(list, v, ';')) spec.extras.push_back(parse_number(v, key));
      } else {
        throw ParseError("family spec: unknown key '" + key + "'");
      }
    }
  }
  if (!have_n && (spec.family == Family::werner || spec.family == Family::isotropic ||
                  spec.family == Family::max_entangled))
    spec.n = spec.m;
  if (spec.family == Family::pure_schmidt) spec.m = spec.n = static_cast<int>(spec.extras.size());
  return spec;
}

std::string family_spec_to_json(const FamilySpec& spec) {
  json doc = {{"family", std::string(to_string(spec.family))},
              {"m", spec.m},
              {"n", spec.n},
              {"param", spec.param},
              {"extras", spec.extras},
              {"rank", spec.rank},
              {"seed", spec.seed}};
  return doc.dump();
}

FamilySpec family_spec_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    FamilySpec spec;
    spec.family = family_from_string(doc.at("family").get<std::string>());
    spec.m = doc.value("m", spec.family == Family::ppt ? 3 : 2);
    spec.n = doc.value("n", spec.m);
    spec.param = doc.value("param", 0.0);
    spec.extras = doc.value("extras", std::vector<double>{});
    spec.rank = doc.value("rank", 0);
    spec.seed = doc.value("seed", std::uint64_t{0});
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("family spec JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace skewcorr
