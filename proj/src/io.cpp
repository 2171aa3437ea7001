#include "braidlink/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "braidlink/errors.hpp"
#include "braidlink/words.hpp"

namespace braidlink {
namespace {

Json point_to_json(const Point& p) {
  if (p.is_infinite()) return "inf";
  return Json::array({p.value().real(), p.value().imag()});
}

Point point_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Point::infinity();
    throw ValidationError("sample string must be \"inf\"");
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError("sample must be [re, im] or \"inf\"");
  }
  return Point(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? 0.0 : value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json braid_to_json(const SphericalBraid& b) {
  Json strands = Json::array();
  for (const auto& s : b.strands()) {
    Json samples = Json::array();
    for (const Point& p : s) samples.push_back(point_to_json(p));
    strands.push_back(std::move(samples));
  }
  return Json{{"version", kDocumentVersion}, {"strands", std::move(strands)}};
}

BraidDocument parse_document(const Json& j) {
  if (!j.is_object()) throw ValidationError("document must be a JSON object");
  BraidDocument doc;
  try {
    doc.version = j.value("version", 0);
    if (doc.version != kDocumentVersion) throw ValidationError("unsupported document version");
    if (j.contains("name")) doc.name = j.at("name").get<std::string>();
    if (j.contains("seed")) doc.seed = j.at("seed").get<long long>();

    if (j.value("kind", std::string()) == "normalized_path") {
      const Json& samples = j.at("samples");
      Eigen::VectorXcd gamma(static_cast<Eigen::Index>(samples.size()));
      for (std::size_t k = 0; k < samples.size(); ++k) {
        const Point p = point_from_json(samples[k]);
        if (p.is_infinite()) throw ValidationError("normalized path samples must be finite");
        gamma(static_cast<Eigen::Index>(k)) = p.value();
      }
      doc.strands = braid_from_path(gamma);
      return doc;
    }

    const int payloads = static_cast<int>(j.contains("strands")) + static_cast<int>(j.contains("loop")) +
                         static_cast<int>(j.contains("artin"));
    if (payloads != 1) throw ValidationError("document needs exactly one of strands, loop, artin");
    if (j.contains("loop")) doc.loop = j.at("loop").get<std::string>();
    if (j.contains("artin")) doc.artin = j.at("artin").get<std::string>();
    if (j.contains("strands")) {
      const Json& arr = j.at("strands");
      if (!arr.is_array() || arr.size() != 4) throw ValidationError("strands must be an array of 4 strands");
      std::array<Strand, 4> strands;
      for (std::size_t i = 0; i < 4; ++i) {
        for (const Json& s : arr[i]) strands[i].push_back(point_from_json(s));
      }
      doc.strands = SphericalBraid(std::move(strands));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
  return doc;
}

SphericalBraid realize(const BraidDocument& doc, int samples) {
  if (doc.loop) return realize_loop(parse_loop(*doc.loop), samples);
  if (doc.artin) return realize_artin(parse_artin(*doc.artin), samples);
  return *doc.strands;
}

Json report_to_json(const InvariantReport& r) {
  Json j{{"lk", r.total.lk}, {"lk_tilde", r.total.lk_tilde}, {"brunn", r.brunn}};
  if (r.hopf) {
    j["hopf"] = *r.hopf;
    j["hopf_raw"] = round_significant(*r.hopf_raw);
  }
  const auto& d = r.diagnostics;
  Json diag{{"path_samples", d.path_samples}};
  if (r.brunn) {
    diag["convergence_residual"] = round_significant(d.convergence_residual);
    diag["byparts_residual"] = round_significant(d.byparts_residual);
    diag["integrality_residual"] = round_significant(d.integrality_residual);
    diag["lambda0_dlambda1"] = round_significant(d.lambda0_dlambda1);
    diag["minus_lambda1_dlambda0"] = round_significant(d.minus_lambda1_dlambda0);
  }
  j["diagnostics"] = std::move(diag);
  return j;
}

Json path_to_json(const NormalizedPath& p) {
  Json samples = Json::array();
  for (Eigen::Index k = 0; k < p.samples.size(); ++k) {
    samples.push_back(Json::array({p.samples(k).real(), p.samples(k).imag()}));
  }
  return Json{{"version", kDocumentVersion},
              {"kind", "normalized_path"},
              {"source_samples", p.source_samples},
              {"samples", std::move(samples)}};
}

}  // namespace braidlink
