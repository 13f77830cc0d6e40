#include "archlab/circuit_io.hpp"

#include <algorithm>
#include <optional>

#include <json.hpp>

#include "archlab/errors.hpp"

namespace archlab {

namespace {

using nlohmann::json;

std::size_t require_nat(const json& j, const std::string& where) {
  if (!j.is_number_unsigned())
    throw SchemaError(where + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Rational require_rational(const json& j, const std::string& where) {
  if (!j.is_string())
    throw SchemaError(where + " must be a rational string like \"1/2\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::runtime_error& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> keys,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) {
          return key == k;
        }) == keys.end())
      throw SchemaError(where + ": unknown field \"" + key + "\"");
  }
}

/// Canonical decimal identifier: digits only, no leading zeros.
std::optional<std::size_t> parse_id_key(const std::string& key) {
  if (key.empty() || key.size() > 20) return std::nullopt;
  if (key.size() > 1 && key[0] == '0') return std::nullopt;
  std::size_t value = 0;
  for (char ch : key) {
    if (ch < '0' || ch > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  return value;
}

}  // namespace

NeuroCircuit parse_circuit(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.what(), e.byte);
  }
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  reject_unknown_keys(doc, {"suppl_input", "neurons"}, "document");
  if (!doc.contains("suppl_input")) throw SchemaError("missing suppl_input");
  if (!doc.contains("neurons")) throw SchemaError("missing neurons");
  std::size_t suppl = require_nat(doc["suppl_input"], "suppl_input");
  const json& neurons = doc["neurons"];
  if (!neurons.is_array()) throw SchemaError("neurons must be an array");

  std::size_t env = neurons.size() + suppl;
  std::vector<Neuron> built;
  built.reserve(neurons.size());
  for (const json& jn : neurons) {
    if (!jn.is_object()) throw SchemaError("neuron entry must be an object");
    reject_unknown_keys(jn, {"id", "tau", "leak", "weights"}, "neuron");
    for (const char* field : {"id", "tau", "leak", "weights"})
      if (!jn.contains(field))
        throw SchemaError(std::string("neuron missing field \"") + field +
                          "\"");
    std::size_t id = require_nat(jn["id"], "neuron id");
    std::string where = "neuron " + std::to_string(id);
    Rational tau = require_rational(jn["tau"], where + " tau");
    Rational leak = require_rational(jn["leak"], where + " leak");
    const json& jw = jn["weights"];
    if (!jw.is_object()) throw SchemaError(where + " weights must be an object");
    WeightMap weights;
    for (const auto& [key, value] : jw.items()) {
      auto parsed = parse_id_key(key);
      if (!parsed)
        throw SchemaError(where + ": weight key \"" + key +
                          "\" is not an identifier");
      std::size_t src = *parsed;
      if (src >= env)
        throw SchemaError(where + ": weight key " + key +
                          " outside the environment 0.." +
                          std::to_string(env == 0 ? 0 : env - 1));
      weights.set(src, require_rational(value, where + " weight " + key));
    }
    built.push_back(set_neuron(NeuronFeature(id, std::move(weights),
                                             std::move(leak), std::move(tau))));
  }
  return NeuroCircuit::make(std::move(built), suppl);
}

std::string serialize_circuit(const NeuroCircuit& c) {
  std::string out = "{\"suppl_input\":" + std::to_string(c.suppl_input()) +
                    ",\"neurons\":[";
  bool first = true;
  for (std::size_t id = 0; id < c.neurons().size(); ++id) {
    const Neuron* n = c.find_by_id(id);
    if (!first) out += ',';
    first = false;
    out += "{\"id\":" + std::to_string(id);
    out += ",\"tau\":\"" + n->feature().tau().str() + '"';
    out += ",\"leak\":\"" + n->feature().leak_factor().str() + '"';
    out += ",\"weights\":{";
    bool first_w = true;
    for (const auto& [src, w] : n->feature().weights().entries()) {
      if (!first_w) out += ',';
      first_w = false;
      out += '"' + std::to_string(src) + "\":\"" + w.str() + '"';
    }
    out += "}}";
  }
  out += "]}";
  return out;
}

ExternalInputs parse_input_string(std::string_view text,
                                  std::size_t suppl_input,
                                  std::size_t first_external_id) {
  std::vector<std::string_view> steps;
  if (!text.empty()) {
    if (suppl_input == 1 && text.find(';') == std::string_view::npos) {
      // compact form: one character per step
      for (std::size_t i = 0; i < text.size(); ++i)
        steps.push_back(text.substr(i, 1));
    } else {
      std::size_t start = 0;
      while (true) {
        std::size_t semi = text.find(';', start);
        steps.push_back(text.substr(
            start, semi == std::string_view::npos ? semi : semi - start));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
      }
    }
  }
  ExternalInputs out(steps.size());
  for (std::size_t t = 0; t < steps.size(); ++t) {
    std::string_view step = steps[t];
    if (step.size() != suppl_input)
      throw SchemaError("input step " + std::to_string(t + 1) + " has " +
                        std::to_string(step.size()) + " bits, expected " +
                        std::to_string(suppl_input));
    // first step = time 1; head of the result = final time
    ExternalInput& f = out[steps.size() - 1 - t];
    for (std::size_t j = 0; j < suppl_input; ++j) {
      char ch = step[j];
      if (ch != '0' && ch != '1')
        throw SchemaError(std::string("bad input character '") + ch + "'");
      if (ch == '1') f.set(first_external_id + j, true);
    }
  }
  return out;
}

std::string format_input_string(const ExternalInputs& inps,
                                std::size_t suppl_input,
                                std::size_t first_external_id) {
  std::string out;
  for (std::size_t t = 0; t < inps.size(); ++t) {
    const ExternalInput& f = inps[inps.size() - 1 - t];
    if (t > 0 && suppl_input != 1) out += ';';
    for (std::size_t j = 0; j < suppl_input; ++j)
      out += f(first_external_id + j) ? '1' : '0';
  }
  return out;
}

}  // namespace archlab
