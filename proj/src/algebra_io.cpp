#include "qps/algebra_io.hpp"

#include <fstream>
#include <sstream>

namespace qps::lie {

namespace {

using nlohmann::json;

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Rational rational_field(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw InputError("coefficients must be \"p/q\" strings or integers");
}

json rational_array(const RationalVector& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(format_rational(r));
  return a;
}

}  // namespace

StructureConstants parse_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError("malformed algebra JSON at " + line_column(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
  }
  try {
    const auto basis = doc.at("basis").get<std::vector<std::string>>();
    const auto dim = doc.at("dim").get<long long>();
    if (dim < 1) throw InputError("dim must be >= 1");
    if (static_cast<std::size_t>(dim) != basis.size()) throw InputError("dim does not match basis length");
    StructureConstants c(doc.value("name", std::string("unnamed")), basis);
    for (const auto& br : doc.at("brackets")) {
      const auto i = br.at("i").get<long long>();
      const auto j = br.at("j").get<long long>();
      if (i < 0 || j < 0) throw InputError("negative bracket index");
      for (const auto& [key, val] : br.at("coeffs").items()) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          const long long kk = std::stoll(key, &used);
          if (used != key.size() || kk < 0) throw InputError("bad coefficient key '" + key + "'");
          k = static_cast<std::size_t>(kk);
        } catch (const std::logic_error&) {
          throw InputError("bad coefficient key '" + key + "'");
        }
        c.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), k, rational_field(val));
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("algebra JSON schema error: ") + e.what());
  }
}

StructureConstants load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open algebra file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

StructureConstants catalog_algebra(const std::string& name_or_path) {
  if (name_or_path.rfind("abelian", 0) == 0 && name_or_path.size() > 7 &&
      name_or_path.find('.') == std::string::npos) {
    const std::string digits = name_or_path.substr(7);
    std::size_t used = 0;
    const long n = std::stol(digits, &used);
    if (used != digits.size() || n < 1) throw InputError("bad abelian dimension in '" + name_or_path + "'");
    return abelian(static_cast<std::size_t>(n));
  }
  const std::filesystem::path p(name_or_path);
  if (std::filesystem::exists(p)) return load_algebra(p);
  const std::filesystem::path cat = std::filesystem::path(QPS_DATA_DIR) / "algebras" / (name_or_path + ".json");
  if (std::filesystem::exists(cat)) return load_algebra(cat);
  throw IoError("unknown algebra '" + name_or_path + "' (not a file and not in the catalog)");
}

json to_json(const StructureConstants& c) {
  json br = json::array();
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (std::size_t j = i + 1; j < c.dim(); ++j) {
      json coeffs = json::object();
      for (std::size_t k = 0; k < c.dim(); ++k) {
        if (const Rational v = c.coeff(i, j, k); v != 0) coeffs[std::to_string(k)] = format_rational(v);
      }
      if (!coeffs.empty()) br.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  }
  return {{"name", c.name()}, {"dim", c.dim()}, {"basis", c.basis()}, {"brackets", br}};
}

json to_json(const Cochain& c) { return rational_array(c.coords); }

json to_json(const ValidationResult& v) {
  json viol = json::array();
  for (const auto& q : v.violations) viol.push_back({q[0], q[1], q[2], q[3]});
  return {{"ok", v.ok}, {"violations", viol}};
}

json to_json(const CohomologyReport& r) {
  json z = json::array(), b = json::array();
  for (const auto& c : r.z2_basis) z.push_back(to_json(c));
  for (const auto& c : r.b2_basis) b.push_back(to_json(c));
  return {{"dimH1", r.dimH1}, {"dimZ2", r.dimZ2}, {"dimB2", r.dimB2}, {"dimH2", r.dimH2},
          {"z2_basis", z},    {"b2_basis", b}};
}

json to_json(const KernelReport& r) {
  json h = json::array();
  for (const auto& v : r.h_basis) h.push_back(rational_array(v));
  return {{"h_basis", h}, {"is_subalgebra", r.is_subalgebra}, {"gamma_dim", r.gamma_dim}};
}

Cochain parse_cochain(std::size_t dim, const std::string& csv) {
  Cochain c = Cochain::zero(dim, 2);
  std::stringstream ss(csv);
  std::string item;
  std::size_t idx = 0;
  while (std::getline(ss, item, ',')) {
    if (idx >= c.coords.size()) throw InputError("too many omega coordinates for dim " + std::to_string(dim));
    c.coords[idx++] = parse_rational(item);
  }
  if (idx != c.coords.size()) {
    throw InputError("omega needs " + std::to_string(c.coords.size()) + " coordinates (sorted pairs), got " +
                     std::to_string(idx));
  }
  return c;
}

}  // namespace qps::lie
