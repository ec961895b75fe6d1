#include "psa/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "psa/optimum_input.hpp"

namespace psa {

namespace {

struct RawValue {
  std::string text;
  int line = 0;
};

using Section = std::map<std::string, RawValue>;
using Document = std::map<std::string, Section>;

const char* const known_sections[] = {"fiber", "config", "pumps", "signal",
                                      "idler", "loss", "detection", "scan"};

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Document read_document(std::istream& in) {
  Document doc;
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    const std::string text = trim(line);
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']') {
        throw ParseError("line " + std::to_string(line_no) + ": unterminated section header");
      }
      section = trim(text.substr(1, text.size() - 2));
      bool known = false;
      for (const char* s : known_sections) known |= (section == s);
      if (!known) {
        throw ParseError("line " + std::to_string(line_no) + ": unknown section [" + section + "]");
      }
      doc.try_emplace(section);
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
    }
    if (section.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": key outside any section");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": empty key or value");
    }
    if (!doc[section].insert({key, {value, line_no}}).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }
  return doc;
}

class SectionReader {
 public:
  SectionReader(const Document& doc, const std::string& name) : name_(name) {
    const auto it = doc.find(name);
    section_ = (it == doc.end()) ? nullptr : &it->second;
  }

  bool present() const { return section_ != nullptr; }

  bool has(const std::string& key) const { return section_ && section_->count(key); }

  double number(const std::string& key) const {
    const RawValue& raw = require(key);
    const char* begin = raw.text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
      throw ParseError("line " + std::to_string(raw.line) + ": key '" + key +
                       "' is not a number: '" + raw.text + "'");
    }
    return v;
  }

  double number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  std::string text(const std::string& key) const { return require(key).text; }

  bool boolean(const std::string& key) const {
    const RawValue& raw = require(key);
    if (raw.text == "true") return true;
    if (raw.text == "false") return false;
    throw ParseError("line " + std::to_string(raw.line) + ": key '" + key +
                     "' must be true or false");
  }

  int integer(const std::string& key) const {
    const double v = number(key);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
      throw ParseError("key '" + key + "' in [" + name_ + "] must be an integer");
    }
    return i;
  }

 private:
  const RawValue& require(const std::string& key) const {
    if (!section_) throw ValidationError("missing section [" + name_ + "]");
    const auto it = section_->find(key);
    if (it == section_->end()) {
      throw ValidationError("missing key '" + key + "' in section [" + name_ + "]");
    }
    return it->second;
  }

  const Section* section_;
  std::string name_;
};

FieldAmplitude read_amplitude(const SectionReader& sec, const std::string& section_name) {
  const bool cartesian = sec.has("re_sqrtW") || sec.has("im_sqrtW");
  const bool polar = sec.has("power_W") || sec.has("theta_rad");
  if (cartesian && polar) {
    throw ValidationError("section [" + section_name + "] mixes cartesian and polar amplitude keys");
  }
  if (cartesian) {
    return {sec.number_or("re_sqrtW", 0.0), sec.number_or("im_sqrtW", 0.0)};
  }
  if (polar) {
    const double p = sec.number("power_W");
    if (p < 0.0) throw ValidationError("power_W must be >= 0 in [" + section_name + "]");
    return std::polar(std::sqrt(p), sec.number_or("theta_rad", 0.0));
  }
  throw ValidationError("section [" + section_name +
                        "] needs re_sqrtW/im_sqrtW or power_W/theta_rad");
}

}  // namespace

namespace {

// every key a section may carry; pump keys depend on the configured scheme
void reject_unknown_keys(const Document& doc, PumpScheme scheme) {
  static const std::map<std::string, std::vector<std::string>> allowed = {
      {"fiber", {"gamma_per_W_m", "delta_beta_per_m", "length_m"}},
      {"config", {"type", "pump_phase"}},
      {"signal", {"re_sqrtW", "im_sqrtW", "power_W", "theta_rad"}},
      {"idler", {"re_sqrtW", "im_sqrtW", "power_W", "theta_rad", "optimal"}},
      {"loss", {"tau", "order", "tau_idler"}},
      {"detection", {"phi_rad"}},
      {"scan", {"variable", "from", "to", "steps", "phi_from_rad", "phi_to_rad", "phi_steps"}},
  };
  const std::vector<std::string> pump_keys =
      scheme == PumpScheme::dual_pump
          ? std::vector<std::string>{"P1_W", "P3_W", "theta10_rad", "theta30_rad"}
          : std::vector<std::string>{"P2_W", "theta20_rad"};

  for (const auto& [section, keys] : doc) {
    const std::vector<std::string>& valid =
        section == "pumps" ? pump_keys : allowed.at(section);
    for (const auto& [key, raw] : keys) {
      if (std::find(valid.begin(), valid.end(), key) == valid.end()) {
        throw ParseError("line " + std::to_string(raw.line) + ": key '" + key +
                         "' is not valid in section [" + section + "]" +
                         (section == "pumps" ? " for this config type" : ""));
      }
    }
  }
}

}  // namespace

Scenario parse_scenario(std::istream& in) {
  const Document doc = read_document(in);
  Scenario sc;

  SectionReader fiber(doc, "fiber");
  sc.fiber.gamma = fiber.number("gamma_per_W_m");
  sc.fiber.delta_beta = fiber.number("delta_beta_per_m");
  sc.fiber.length = fiber.number("length_m");
  sc.fiber.validate();

  SectionReader config(doc, "config");
  const std::string type = config.text("type");
  if (type == "A") {
    sc.scheme = PumpScheme::dual_pump;
  } else if (type == "B") {
    sc.scheme = PumpScheme::single_pump;
  } else {
    throw ValidationError("config type must be A (dual pump) or B (single pump)");
  }
  reject_unknown_keys(doc, sc.scheme);
  if (config.has("pump_phase")) {
    const std::string conv = config.text("pump_phase");
    if (conv == "included") {
      sc.convention = BPhaseConvention::pump_phase_included;
    } else if (conv == "omitted") {
      sc.convention = BPhaseConvention::pump_phase_omitted;
    } else {
      throw ValidationError("pump_phase must be included or omitted");
    }
  }

  SectionReader pumps(doc, "pumps");
  if (sc.scheme == PumpScheme::dual_pump) {
    DualPumpConfig p;
    p.p1 = pumps.number("P1_W");
    p.p3 = pumps.number("P3_W");
    p.theta10 = pumps.number_or("theta10_rad", 0.0);
    p.theta30 = pumps.number_or("theta30_rad", 0.0);
    p.validate();
    sc.dual_pumps = p;
  } else {
    SinglePumpConfig p;
    p.p2 = pumps.number("P2_W");
    p.theta20 = pumps.number_or("theta20_rad", 0.0);
    p.validate();
    sc.single_pump = p;
  }

  SectionReader signal(doc, "signal");
  if (signal.present()) sc.signal_in = read_amplitude(signal, "signal");

  SectionReader idler(doc, "idler");
  if (idler.present()) {
    if (idler.has("optimal")) {
      sc.idler_optimal = idler.boolean("optimal");
    }
    if (!sc.idler_optimal) sc.idler_in = read_amplitude(idler, "idler");
  }

  SectionReader loss(doc, "loss");
  if (loss.present()) {
    LossSection ls;
    ls.channel.tau = loss.number("tau");
    ls.channel.validate();
    const std::string order = loss.text("order");
    if (order == "AL") {
      ls.order = LinkOrder::amplifier_then_loss;
    } else if (order == "LA") {
      ls.order = LinkOrder::loss_then_amplifier;
    } else {
      throw ValidationError("loss order must be AL or LA");
    }
    if (loss.has("tau_idler")) {
      ls.tau_idler = loss.number("tau_idler");
      LossChannel check{*ls.tau_idler};
      check.validate();
    }
    sc.loss = ls;
  }

  SectionReader detection(doc, "detection");
  if (detection.present()) sc.detection_phi = detection.number("phi_rad");

  SectionReader scan(doc, "scan");
  if (scan.present()) {
    ScanSpec spec;
    spec.variable = scan.text("variable");
    spec.from = scan.number("from");
    spec.to = scan.number("to");
    spec.steps = scan.integer("steps");
    if (spec.steps < 1) throw ValidationError("scan steps must be >= 1");
    if (spec.variable == "nf_grid") {
      spec.phi_from = scan.number("phi_from_rad");
      spec.phi_to = scan.number("phi_to_rad");
      spec.phi_steps = scan.integer("phi_steps");
      if (spec.phi_steps < 1) throw ValidationError("scan phi_steps must be >= 1");
    }
    sc.scan = spec;
  }

  return sc;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  return parse_scenario(in);
}

BogoliubovPair Scenario::coeffs() const {
  if (scheme == PumpScheme::dual_pump) {
    return dual_pump_coeffs(fiber, *dual_pumps);
  }
  return single_pump_coeffs(fiber, *single_pump, convention);
}

FieldAmplitude Scenario::signal_or_default() const {
  return signal_in.value_or(FieldAmplitude{1.0, 0.0});
}

FieldAmplitude Scenario::idler_or_default(const BogoliubovPair& pair) const {
  if (idler_in) return *idler_in;
  if (idler_optimal) return optimal_idler(pair, signal_or_default()).idler_amplitude;
  return {0.0, 0.0};
}

}  // namespace psa
