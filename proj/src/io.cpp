#include "csdp/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace csdp {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string(what) + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw FormatError(std::string(what) + ": non-finite value");
  return x;
}

std::size_t square_size(const json& rows, const char* what) {
  if (!rows.is_array() || rows.empty()) throw FormatError(std::string(what) + ": expected a non-empty array");
  return rows.size();
}

Matrix matrix_from(const json& rows, const char* what) {
  const std::size_t n = square_size(rows, what);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw FormatError(std::string(what) + ": expected an n x n array");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = number(rows[i][j], what);
  }
  return m;
}

Tensor12 tensor_from(const json& slabs, const char* what) {
  const std::size_t n = square_size(slabs, what);
  Tensor12 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!slabs[i].is_array() || slabs[i].size() != n)
      throw FormatError(std::string(what) + ": expected an n x n x n array");
    for (std::size_t j = 0; j < n; ++j) {
      if (!slabs[i][j].is_array() || slabs[i][j].size() != n)
        throw FormatError(std::string(what) + ": expected an n x n x n array");
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = number(slabs[i][j][k], what);
    }
  }
  return t;
}

std::string rows_to_json(std::size_t n, const double* p) {
  std::string out = "[";
  for (std::size_t i = 0; i < n; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ", ";
      out += format_double(p[i * n + j]);
    }
    out += ']';
  }
  return out + ']';
}

std::vector<double> number_list(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(number(x, what));
  return out;
}

std::optional<std::vector<double>> optional_list(const json& parent, const char* key) {
  if (!parent.contains(key)) return std::nullopt;
  return number_list(parent.at(key), key);
}

std::string string_field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw FormatError(std::string("missing field: ") + key);
  if (!doc.at(key).is_string()) throw FormatError(std::string(key) + ": expected a string");
  return doc.at(key).get<std::string>();
}

std::uint64_t unsigned_field(const json& j, const char* key) {
  if (!j.is_number_integer()) throw FormatError(std::string(key) + ": expected an integer");
  const auto value = j.get<std::int64_t>();
  if (value < 0) throw FormatError(std::string(key) + ": must be non-negative");
  return static_cast<std::uint64_t>(value);
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string matrix_to_json(const Matrix& m) { return rows_to_json(m.n(), m.data().data()); }

std::string tensor_to_json(const Tensor12& t) {
  const std::size_t n = t.n();
  std::string out = "[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ", ";
    out += rows_to_json(n, t.data().data() + i * n * n);
  }
  return out + ']';
}

std::string jet_to_json(const Jet2& j) {
  return "{\"A1\": " + matrix_to_json(j.a1) + ", \"A2\": " + tensor_to_json(j.a2) + "}";
}

Matrix matrix_from_json(const std::string& text) { return matrix_from(parse(text), "matrix"); }

Tensor12 tensor_from_json(const std::string& text) { return tensor_from(parse(text), "tensor"); }

Jet2 jet_from_json(const std::string& text, const Tolerances& tol) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("A1") || !doc.contains("A2"))
    throw FormatError("jet: expected an object with A1 and A2");
  Matrix a1 = matrix_from(doc.at("A1"), "A1");
  Tensor12 a2 = tensor_from(doc.at("A2"), "A2");
  if (a1.n() != a2.n()) throw DimensionMismatch("jet: A1 and A2 dimensions differ");
  return Jet2::make(std::move(a1), std::move(a2), tol);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw FormatError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw FormatError("cannot rename onto " + path);
  }
}

SimulationConfig parse_config(const std::string& text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw FormatError("config: expected a JSON object");
  SimulationConfig cfg;

  cfg.instance = string_field(doc, "instance");
  if (cfg.instance != "glmat" && cfg.instance != "glt12" && cfg.instance != "glt12_sym")
    throw FormatError("instance must be glmat, glt12 or glt12_sym");

  if (!doc.contains("n")) throw FormatError("missing field: n");
  cfg.n = unsigned_field(doc.at("n"), "n");
  if (cfg.n < 1 || cfg.n > max_cli_dimension()) throw FormatError("n must be between 1 and 9");

  cfg.orientation = string_field(doc, "orientation");
  if (cfg.orientation != "right" && cfg.orientation != "left" && cfg.orientation != "advected")
    throw FormatError("orientation must be right, left or advected");

  if (doc.contains("lagrangian")) {
    const json& l = doc.at("lagrangian");
    if (!l.is_object()) throw FormatError("lagrangian: expected an object");
    cfg.weights_g = optional_list(l, "weights_g");
    cfg.weights_v = optional_list(l, "weights_v");
    for (const auto* w : {&cfg.weights_g, &cfg.weights_v})
      if (*w)
        for (double x : **w)
          if (!(x > 0.0)) throw FormatError("lagrangian weights must be positive");
  }
  if (doc.contains("initial")) {
    const json& init = doc.at("initial");
    if (!init.is_object()) throw FormatError("initial: expected an object");
    cfg.xi_g = optional_list(init, "xi_g");
    cfg.xi_v = optional_list(init, "xi_v");
    cfg.v0 = optional_list(init, "v0");
  }

  if (!doc.contains("integrator") || !doc.at("integrator").is_object())
    throw FormatError("missing field: integrator");
  const json& integ = doc.at("integrator");
  if (!integ.contains("h")) throw FormatError("missing field: integrator.h");
  if (!integ.contains("steps")) throw FormatError("missing field: integrator.steps");
  cfg.h = number(integ.at("h"), "integrator.h");
  if (!(cfg.h > 0.0)) throw FormatError("integrator.h must be positive");
  cfg.steps = unsigned_field(integ.at("steps"), "integrator.steps");
  if (cfg.steps < 1) throw FormatError("integrator.steps must be at least 1");

  if (doc.contains("seed")) cfg.seed = unsigned_field(doc.at("seed"), "seed");
  if (doc.contains("output")) cfg.output = string_field(doc, "output");
  return cfg;
}

}  // namespace csdp
