#include "hqft/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hqft {

using nlohmann::json;

namespace {

std::string key1(const GroupElement& a) { return a.to_string(); }
std::string key2(const GroupElement& a, const GroupElement& b) {
  return a.to_string() + "," + b.to_string();
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v.entries()) out.push_back(s.to_string());
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row_vector(r)));
  return out;
}

Scalar scalar_from(const RingDesc& ring, const json& j, const std::string& where) {
  if (j.is_string()) return ring.parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return ring.from_int(j.get<long>());
  throw InputError(where + ": scalars must be strings");
}

Vector vector_from(const RingDesc& ring, const json& j, std::size_t size, const std::string& where) {
  if (!j.is_array() || j.size() != size) {
    throw InputError(where + ": expected a list of " + std::to_string(size) + " scalars");
  }
  std::vector<Scalar> entries;
  for (const auto& e : j) entries.push_back(scalar_from(ring, e, where));
  return Vector(ring, std::move(entries));
}

Matrix matrix_from(const RingDesc& ring, const json& j, std::size_t rows, std::size_t cols,
                   const std::string& where) {
  if (!j.is_array() || j.size() != rows) {
    throw InputError(where + ": expected " + std::to_string(rows) + " rows");
  }
  std::vector<Scalar> entries;
  for (const auto& row : j) {
    Vector v = vector_from(ring, row, cols, where);
    entries.insert(entries.end(), v.entries().begin(), v.entries().end());
  }
  return Matrix(ring, rows, cols, std::move(entries));
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw InputError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

const json& entry(const json& table, const std::string& key, const char* name) {
  if (!table.is_object() || !table.contains(key)) {
    throw InputError(std::string(name) + " has no entry '" + key + "'");
  }
  return table.at(key);
}

void require_keys(const json& table, std::size_t expected, const char* name) {
  if (!table.is_object() || table.size() != expected) {
    throw InputError(std::string(name) + " must have " + std::to_string(expected) + " entries");
  }
}

json algebra_json(const AlgebraData& A) {
  json j;
  j["ring"] = A.ring.to_string();
  j["pi_rank"] = A.pi_rank;
  j["ranks"] = json::object();
  j["mult"] = json::object();
  j["eta"] = json::object();
  j["phi"] = json::object();
  j["theta"] = json::object();
  for (const auto& a : A.elements()) {
    j["ranks"][key1(a)] = A.rank(a);
    j["eta"][key1(a)] = matrix_json(A.pairing[a.index()]);
    j["theta"][key1(a)] = vector_json(A.crosscap[a.index()]);
    for (const auto& b : A.elements()) {
      j["mult"][key2(a, b)] = matrix_json(A.mult_block(a, b));
      j["phi"][key2(a, b)] = matrix_json(A.action_block(a, b));
    }
  }
  j["unit"] = vector_json(A.unit);
  j["Phi"] = matrix_json(A.reversal);
  return j;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& ex) {
    throw InputError(std::string("malformed JSON: ") + ex.what());
  }
}

std::vector<GroupElement> labels_from(const json& j, int pi_rank, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": labels must be a list");
  std::vector<GroupElement> out;
  for (const auto& l : j) {
    if (!l.is_string()) throw InputError(where + ": labels must be bitstrings");
    GroupElement g = GroupElement::parse(l.get<std::string>());
    if (g.rank() != pi_rank) {
      throw InputError(where + ": label '" + l.get<std::string>() + "' does not have rank " +
                       std::to_string(pi_rank));
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << text;
    if (!out) throw InputError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string dump_algebra(const AlgebraData& A) { return algebra_json(A).dump(2) + "\n"; }

std::string dump_algebra_compact(const AlgebraData& A) { return algebra_json(A).dump(); }

AlgebraData parse_algebra(std::string_view text) {
  return guarded([&] {
    const json j = json::parse(text);
    const RingDesc ring = RingDesc::parse(field(j, "ring").get<std::string>());
    const json& pr = field(j, "pi_rank");
    if (!pr.is_number_integer()) throw InputError("pi_rank must be an integer");
    const int pi_rank = pr.get<int>();
    if (pi_rank < 0 || pi_rank > GroupElement::kMaxRank) throw InputError("pi_rank out of range");
    const auto elements = all_elements(pi_rank);
    const std::size_t n = elements.size();

    const json& ranks_j = field(j, "ranks");
    require_keys(ranks_j, n, "ranks");
    std::vector<std::size_t> ranks;
    for (const auto& a : elements) {
      const json& r = entry(ranks_j, key1(a), "ranks");
      if (!r.is_number_integer() || r.get<long>() < 0) {
        throw InputError("ranks must be nonnegative integers");
      }
      ranks.push_back(r.get<std::size_t>());
    }
    AlgebraData A = make_blank(ring, pi_rank, ranks);

    const json& mult_j = field(j, "mult");
    const json& eta_j = field(j, "eta");
    const json& phi_j = field(j, "phi");
    const json& theta_j = field(j, "theta");
    require_keys(mult_j, n * n, "mult");
    require_keys(phi_j, n * n, "phi");
    require_keys(eta_j, n, "eta");
    require_keys(theta_j, n, "theta");
    for (const auto& a : elements) {
      const std::string k1 = key1(a);
      A.pairing[a.index()] =
          matrix_from(ring, entry(eta_j, k1, "eta"), A.rank(a), A.rank(a), "eta[" + k1 + "]");
      A.crosscap[a.index()] =
          vector_from(ring, entry(theta_j, k1, "theta"), ranks[0], "theta[" + k1 + "]");
      for (const auto& b : elements) {
        const std::string k2 = key2(a, b);
        A.mult_block(a, b) = matrix_from(ring, entry(mult_j, k2, "mult"), A.rank(a * b),
                                         A.rank(a) * A.rank(b), "mult[" + k2 + "]");
        A.action_block(a, b) = matrix_from(ring, entry(phi_j, k2, "phi"), A.rank(b),
                                           A.rank(b), "phi[" + k2 + "]");
      }
    }
    A.unit = vector_from(ring, field(j, "unit"), ranks[0], "unit");
    A.reversal = matrix_from(ring, field(j, "Phi"), A.total_rank(), A.total_rank(), "Phi");
    A.validate();
    return A;
  });
}

CobordismWord parse_word(std::string_view text, int pi_rank) {
  return guarded([&] {
    const json j = json::parse(text);
    if (!j.is_array()) throw InputError("a word is a list of layers");
    CobordismWord w;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const json& layer_j = j[i];
      const std::string where = "layer " + std::to_string(i);
      if (!layer_j.is_array()) throw InputError(where + " is not a list");
      Layer layer;
      for (const auto& g : layer_j) {
        const GenKind kind = parse_gen_name(field(g, "gen").get<std::string>());
        std::vector<GroupElement> labels =
            g.contains("labels") ? labels_from(g.at("labels"), pi_rank, where)
                                 : std::vector<GroupElement>{};
        layer.push_back(Generator::make(kind, std::move(labels), pi_rank));
      }
      w.layers.push_back(std::move(layer));
    }
    return w;
  });
}

std::string dump_word(const CobordismWord& w) {
  json j = json::array();
  for (const auto& layer : w.layers) {
    json lj = json::array();
    for (const auto& g : layer) {
      json labels = json::array();
      for (const auto& l : g.labels) labels.push_back(l.to_string());
      lj.push_back({{"gen", std::string(gen_name(g.kind))}, {"labels", labels}});
    }
    j.push_back(lj);
  }
  return j.dump(2) + "\n";
}

SurfaceSpec parse_surface(std::string_view text, int pi_rank) {
  return guarded([&] {
    const json j = json::parse(text);
    if (!j.is_object()) throw InputError("a surface is an object");
    SurfaceSpec s;
    if (j.contains("handles")) {
      for (const auto& h : j.at("handles")) {
        auto labels = labels_from(h, pi_rank, "handle");
        if (labels.size() != 2) throw InputError("a handle carries two labels");
        s.handles.emplace_back(labels[0], labels[1]);
      }
    }
    if (j.contains("crosscaps")) s.crosscaps = labels_from(j.at("crosscaps"), pi_rank, "crosscaps");
    return s;
  });
}

std::string dump_surface(const SurfaceSpec& s) {
  json handles = json::array();
  for (const auto& [a, b] : s.handles) handles.push_back({a.to_string(), b.to_string()});
  json caps = json::array();
  for (const auto& g : s.crosscaps) caps.push_back(g.to_string());
  return json{{"handles", handles}, {"crosscaps", caps}}.dump(2) + "\n";
}

std::string report_to_json(const AxiomReport& report) {
  json v = json::array();
  for (const auto& x : report.violations) {
    v.push_back({{"axiom", x.axiom},
                 {"grades", x.grades},
                 {"basis", x.basis},
                 {"lhs", x.lhs},
                 {"rhs", x.rhs},
                 {"note", x.note}});
  }
  json j{{"tier", std::string(tier_name(report.tier))},
         {"passed", report.passed()},
         {"failed", report.failed_ids()},
         {"violations", v}};
  return j.dump(2) + "\n";
}

}  // namespace hqft
