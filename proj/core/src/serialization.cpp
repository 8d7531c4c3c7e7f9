#include "padic_frames/serialization.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"

namespace padic_frames {

using json = nlohmann::ordered_json;

namespace {

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("$: malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const std::string& name, const std::string& path) {
  if (!obj.is_object()) throw Error(path + ": expected object");
  auto it = obj.find(name);
  if (it == obj.end()) throw Error(path + "." + name + ": missing field");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw Error(path + ": expected integer");
  return v.get<std::int64_t>();
}

double as_double(const json& v, const std::string& path) {
  if (!v.is_number()) throw Error(path + ": expected number");
  return v.get<double>();
}

std::int64_t parse_int(std::string_view s, const std::string& path) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(path + ": invalid integer '" + std::string(s) + "'");
  }
  return v;
}

// "num", "num/p^e" or "num/p"
PAdicRational rational_from_string(std::string_view s, std::int64_t p, const std::string& path) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return {p, parse_int(s, path), 0};
  const std::int64_t num = parse_int(s.substr(0, slash), path);
  std::string_view den = s.substr(slash + 1);
  const auto caret = den.find('^');
  const std::int64_t base = parse_int(den.substr(0, caret), path);
  const std::int64_t e = caret == std::string_view::npos ? 1 : parse_int(den.substr(caret + 1), path);
  if (base != p) {
    throw Error(path + ": denominator base " + std::to_string(base) + " differs from p = " +
                std::to_string(p));
  }
  if (e < 0) throw Error(path + ": negative exponent");
  return {p, num, static_cast<int>(e)};
}

PAdicRational rational_from(const json& v, std::int64_t p, const std::string& path) {
  if (v.is_string()) return rational_from_string(v.get<std::string>(), p, path);
  if (v.is_number_integer()) return {p, v.get<std::int64_t>(), 0};
  const std::int64_t num = as_int(field(v, "num", path), path + ".num");
  const std::int64_t e = as_int(field(v, "exp", path), path + ".exp");
  if (e < 0) throw Error(path + ".exp: must be nonnegative");
  return {p, num, static_cast<int>(e)};
}

json rational_json(const PAdicRational& x) { return json{{"num", x.numerator()}, {"exp", x.exponent()}}; }

}  // namespace

std::string format_double(double v) { return json(v).dump(); }

StepFunction step_function_from_json(std::string_view text, int max_level) {
  const json doc = parse_document(text);
  const std::int64_t p = as_int(field(doc, "p", "$"), "$.p");
  if (!is_prime(p)) throw Error("$.p: " + std::to_string(p) + " is not prime");
  const auto m = as_int(field(doc, "support_level", "$"), "$.support_level");
  const auto k = as_int(field(doc, "constancy_level", "$"), "$.constancy_level");
  if (m < 0) throw Error("$.support_level: must be nonnegative");
  if (k < 0) throw Error("$.constancy_level: must be nonnegative");
  const GroupContext ctx(p, max_level);
  if (m + k > ctx.max_level()) {
    throw Error("$: resolution overflow: requires m+k = " + std::to_string(m + k) +
                " but max_level = " + std::to_string(ctx.max_level()));
  }
  const auto n = static_cast<std::size_t>(ctx.pow(static_cast<int>(m + k)));
  const json& re = field(doc, "re", "$");
  const json& im = field(doc, "im", "$");
  for (const auto& [name, arr] : {std::pair<std::string, const json*>{"re", &re}, {"im", &im}}) {
    if (!arr->is_array()) throw Error("$." + name + ": expected array");
    if (arr->size() != n) {
      throw Error("$." + name + ": expected " + std::to_string(n) + " entries, got " +
                  std::to_string(arr->size()));
    }
  }
  std::vector<Complex> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = {as_double(re[i], "$.re[" + std::to_string(i) + "]"),
            as_double(im[i], "$.im[" + std::to_string(i) + "]")};
  }
  return {ctx, static_cast<int>(m), static_cast<int>(k), std::move(c)};
}

std::string to_json(const StepFunction& f) {
  json re = json::array();
  json im = json::array();
  for (auto z : f.coeffs()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return json{{"p", f.p()},
              {"support_level", f.support_level()},
              {"constancy_level", f.constancy_level()},
              {"re", re},
              {"im", im}}
      .dump();
}

PAdicRational padic_rational_from_json(std::string_view text, std::int64_t p) {
  // Bare "num/p^e" strings are accepted without JSON quoting.
  if (!text.empty() && text.front() != '{' && text.front() != '"') {
    return rational_from_string(text, p, "$");
  }
  return rational_from(parse_document(text), p, "$");
}

std::string to_json(const PAdicRational& x) { return rational_json(x).dump(); }

PrueferElement pruefer_from_json(std::string_view text, std::int64_t p) {
  const json doc = parse_document(text);
  const auto res = as_int(field(doc, "res", "$"), "$.res");
  const auto level = as_int(field(doc, "level", "$"), "$.level");
  if (level < 0) throw Error("$.level: must be nonnegative");
  return {p, res, static_cast<int>(level)};
}

std::string to_json(const PrueferElement& x) {
  return json{{"res", x.residue()}, {"level", x.level()}}.dump();
}

Section section_from_json(std::string_view text, const GroupContext& context) {
  const json doc = parse_document(text);
  if (doc.contains("p")) {
    const auto p = as_int(doc["p"], "$.p");
    if (p != context.p()) {
      throw Error("$.p: section prime " + std::to_string(p) + " differs from p = " +
                  std::to_string(context.p()));
    }
  }
  Section section(context);
  const json& offsets = field(doc, "offsets", "$");
  if (!offsets.is_array()) throw Error("$.offsets: expected array");
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const std::string path = "$.offsets[" + std::to_string(i) + "]";
    const PAdicRational sigma = rational_from(field(offsets[i], "sigma", path), context.p(), path + ".sigma");
    const PAdicRational delta = rational_from(field(offsets[i], "delta", path), context.p(), path + ".delta");
    try {
      section.set_offset(sigma, delta);
    } catch (const Error& e) {
      throw Error(path + ": " + e.what());
    }
  }
  return section;
}

std::string to_json(const Section& section) {
  json offsets = json::array();
  for (const auto& [sigma, delta] : section.offsets()) {
    offsets.push_back(json{{"sigma", rational_json(sigma)}, {"delta", rational_json(delta)}});
  }
  return json{{"p", section.context().p()}, {"offsets", offsets}}.dump();
}

std::string to_json(const FrameReport& r) {
  return json{{"A", r.lower},
              {"B", r.upper},
              {"zero_measure", r.zero_measure},
              {"is_frame", r.is_frame},
              {"is_tight", r.is_tight},
              {"is_parseval", r.is_parseval},
              {"tol", r.tol}}
      .dump();
}

std::string to_json(const CheckReport& r) {
  return json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"rel_error", r.rel_error}, {"pass", r.pass}, {"seed", r.seed}}
      .dump();
}

std::string to_csv(const SpectralSymbol& phi) {
  std::ostringstream out;
  out << "eta_class,value\n";
  for (std::size_t e = 0; e < phi.size(); ++e) {
    out << e << ',' << format_double(phi.value(e).real()) << '\n';
  }
  return out.str();
}

}  // namespace padic_frames
