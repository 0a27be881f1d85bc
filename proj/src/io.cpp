#include "shakekit/io.hpp"

#include <fstream>

#include "shakekit/errors.hpp"

namespace shakekit::io {

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

long long as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return v.get<long long>();
}

template <typename T, typename Convert>
SquareMatrix<T> matrix_from_json(const json& j, Convert convert) {
  const json& entries = j.is_array() ? j : field(j, "entries");
  if (!entries.is_array()) throw InputError("'entries' must be an array of rows");
  std::vector<std::vector<T>> rows;
  for (const auto& row : entries) {
    if (!row.is_array()) throw InputError("matrix rows must be arrays");
    std::vector<T> r;
    for (const auto& v : row) r.push_back(convert(v));
    rows.push_back(std::move(r));
  }
  if (j.is_object() && j.contains("dim")) {
    const long long dim = as_int(j.at("dim"), "'dim'");
    if (dim < 0 || static_cast<std::size_t>(dim) != rows.size()) {
      throw InputError("'dim' is " + std::to_string(dim) + " but there are " +
                       std::to_string(rows.size()) + " rows");
    }
  }
  return SquareMatrix<T>::from_rows(rows);
}

}  // namespace

IntMatrix int_matrix_from_json(const json& j) {
  return matrix_from_json<long long>(j, [](const json& v) { return as_int(v, "matrix entry"); });
}

LaurentMatrix laurent_matrix_from_json(const json& j) {
  return matrix_from_json<LaurentPoly>(j, [](const json& v) {
    if (v.is_number_integer()) return LaurentPoly(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return LaurentPoly::parse(v.get<std::string>());
    throw InputError("matrix entry must be an integer or a Laurent polynomial string");
  });
}

json to_json(const IntMatrix& m) { return json{{"dim", m.dim()}, {"entries", m.rows()}}; }

SeifertMatrix seifert_from_json(const json& j) { return SeifertMatrix(int_matrix_from_json(j)); }

BandPresentation bands_from_json(const json& j) {
  const json& bands = field(j, "bands");
  if (!bands.is_array()) throw InputError("'bands' must be an array");
  BandPresentation bp;
  for (const auto& b : bands) {
    Band band;
    if (!field(b, "orientable").is_boolean()) throw InputError("'orientable' must be a boolean");
    band.orientable = b.at("orientable").get<bool>();
    band.half_twists = as_int(field(b, "half_twists"), "'half_twists'");
    band.self_writhe = b.contains("self_writhe") ? as_int(b.at("self_writhe"), "'self_writhe'") : 0;
    bp.bands.push_back(band);
  }
  if (j.contains("crossings")) {
    bp.crossings = int_matrix_from_json(j.at("crossings"));
  } else {
    bp.crossings = IntMatrix(bp.bands.size(), 0);
  }
  bp.validate();
  return bp;
}

GoeritzData goeritz_from_json(const json& j) {
  if (j.is_object() && j.contains("bands")) return goeritz_form(bands_from_json(j));
  GoeritzData gd{int_matrix_from_json(field(j, "G")), {}};
  if (j.contains("nonorientable")) {
    for (const auto& v : j.at("nonorientable")) {
      const long long idx = as_int(v, "non-orientable index");
      if (idx < 0) throw InputError("non-orientable index must be >= 0");
      gd.nonorientable.insert(static_cast<std::size_t>(idx));
    }
  }
  gd.validate();
  return gd;
}

json to_json(const GoeritzData& gd) {
  return json{{"G", gd.g.rows()},
              {"nonorientable", std::vector<std::size_t>(gd.nonorientable.begin(), gd.nonorientable.end())},
              {"eta", gd.correction_term()}};
}

json to_json(const Inertia& in) {
  return json{{"n_plus", in.n_plus}, {"n_zero", in.n_zero}, {"n_minus", in.n_minus}};
}

json to_json(const ComplexityCertificate& cert) {
  json j{{"n", cert.n},
         {"c", cert.c},
         {"witness", {{"k", cert.witness.rational().k}, {"m", cert.witness.rational().m}}},
         {"invariant", cert.invariant_name},
         {"i_Q", cert.i_q},
         {"i_Qn", cert.i_qn},
         {"bound", cert.bound},
         {"term", cert.term},
         {"mirror", cert.mirror}};
  json assumptions = json::array();
  assumptions.push_back("K is smoothly n-shake-slice as an n-retrace of a slice knot");
  assumptions.push_back("witness roots are restricted to prime order, where |sigma/2| bounds the 4-genus");
  if (cert.mirror) {
    assumptions.push_back("negative framing: invariant profile taken at |n| under mirroring");
  }
  j["assumptions"] = std::move(assumptions);
  return j;
}

ComplexityCertificate certificate_from_json(const json& j) {
  ComplexityCertificate cert;
  cert.n = as_int(field(j, "n"), "'n'");
  cert.c = as_int(field(j, "c"), "'c'");
  const json& w = field(j, "witness");
  cert.witness = UnitCirclePoint::root(as_int(field(w, "k"), "'k'"), as_int(field(w, "m"), "'m'"));
  cert.invariant_name = field(j, "invariant").get<std::string>();
  cert.i_q = as_int(field(j, "i_Q"), "'i_Q'");
  cert.i_qn = as_int(field(j, "i_Qn"), "'i_Qn'");
  cert.bound = as_int(field(j, "bound"), "'bound'");
  cert.term = field(j, "term").get<std::string>();
  cert.mirror = j.value("mirror", false);
  return cert;
}

AssignmentSpec assignment_from_json(const json& j, double tol) {
  AssignmentSpec spec;
  if (j.contains("wrapping_one")) {
    for (const auto& name : j.at("wrapping_one")) spec.wrapping_one.insert(name.get<std::string>());
  }
  const json& atoms = field(j, "atoms");
  if (!atoms.is_object()) throw InputError("'atoms' must be an object");
  for (const auto& [name, body] : atoms.items()) {
    if (body.contains("values")) {
      std::map<long long, long long> values;
      for (const auto& [k, v] : body.at("values").items()) {
        try {
          std::size_t used = 0;
          const long long key = std::stoll(k, &used);
          if (used != k.size()) throw std::invalid_argument(k);
          values[key] = as_int(v, "invariant value");
        } catch (const std::logic_error&) {
          throw InputError("invariant table key '" + k + "' is not an integer");
        }
      }
      spec.assignment.emplace(name, patterns::InvariantProfile::table(std::move(values)));
    } else if (body.contains("family")) {
      if (body.at("family") != "A_n") {
        throw InputError("unknown invariant family " + body.at("family").dump());
      }
      const auto w = UnitCirclePoint::parse(field(body, "root").get<std::string>());
      spec.assignment.emplace(name, family_profile(w, tol));
    } else {
      throw InputError("atom " + name + " needs 'values' or 'family'");
    }
  }
  return spec;
}

}  // namespace shakekit::io
