#include "seminorm/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "seminorm/errors.hpp"

namespace seminorm {

namespace {

constexpr int kMaxDim = 64;

double require_finite_number(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number()) throw InputError("field \"" + where + "\" is not a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError("field \"" + where + "\" is not finite");
  return v;
}

}  // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& z : m.entries()) {
    entries.push_back(nlohmann::json::array({z.real(), z.imag()}));
  }
  return nlohmann::json{{"n", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("matrix document is not a JSON object");
  if (!j.contains("n")) throw InputError("matrix document is missing field \"n\"");
  if (!j.contains("entries")) throw InputError("matrix document is missing field \"entries\"");
  const auto& nj = j.at("n");
  if (!nj.is_number_integer()) throw InputError("field \"n\" must be an integer");
  const long long n = nj.get<long long>();
  if (n < 1 || n > kMaxDim) {
    throw InputError("field \"n\" must lie in [1, " + std::to_string(kMaxDim) + "]");
  }
  const auto& entries = j.at("entries");
  if (!entries.is_array()) throw InputError("field \"entries\" must be an array");
  const size_t expected = static_cast<size_t>(n) * static_cast<size_t>(n);
  if (entries.size() != expected) {
    throw InputError("field \"entries\" has " + std::to_string(entries.size()) +
                     " elements, expected n*n = " + std::to_string(expected));
  }
  std::vector<Complex> data;
  data.reserve(expected);
  for (size_t k = 0; k < expected; ++k) {
    const auto& pair = entries.at(k);
    const std::string where = "entries[" + std::to_string(k) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      throw InputError("field \"" + where + "\" must be a [re, im] pair");
    }
    const double re = require_finite_number(pair.at(0), where + "[0]");
    const double im = require_finite_number(pair.at(1), where + "[1]");
    data.emplace_back(re, im);
  }
  return ComplexMatrix(static_cast<int>(n), std::move(data));
}

ComplexMatrix matrix_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file \"" + path + "\"");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("matrix file \"" + path + "\": " + e.what());
  }
  try {
    return matrix_from_json(j);
  } catch (const InputError& e) {
    throw InputError("matrix file \"" + path + "\": " + e.what());
  }
}

nlohmann::json state_to_json(const State& s) {
  if (const auto* ps = std::get_if<PureState>(&s)) {
    nlohmann::json vec = nlohmann::json::array();
    for (const auto& z : ps->x) {
      vec.push_back(nlohmann::json::array({z.real(), z.imag()}));
    }
    return nlohmann::json{{"kind", "pure"}, {"vector", std::move(vec)}};
  }
  const auto& ms = std::get<MixedState>(s);
  return nlohmann::json{{"kind", "mixed"}, {"density", matrix_to_json(ms.rho)}};
}

namespace {

void dump_rec(const nlohmann::json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      out += "null";
      return;
    case nlohmann::json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case nlohmann::json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      return;
    case nlohmann::json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      return;
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) throw DomainError("cannot serialize a non-finite number");
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      return;
    }
    case nlohmann::json::value_t::string:
      out += nlohmann::json(j.get<std::string>()).dump();
      return;
    case nlohmann::json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ',';
        first = false;
        dump_rec(item, out);
      }
      out += ']';
      return;
    }
    case nlohmann::json::value_t::object: {
      // nlohmann objects iterate in key order already.
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ':';
        dump_rec(it.value(), out);
      }
      out += '}';
      return;
    }
    default:
      throw DomainError("unsupported JSON value type in canonical dump");
  }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& j) {
  std::string out;
  dump_rec(j, out);
  return out;
}

}  // namespace seminorm
