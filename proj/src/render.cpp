#include "qplane/render.hpp"

#include <json.hpp>

namespace qplane {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json element_terms(const PlaneElement &e) {
  ordered_json terms = ordered_json::array();
  for (const auto &[mono, coeff] : e.terms()) {
    ordered_json term;
    term["xexp"] = mono.xexp;
    term["yexp"] = mono.yexp;
    term["num"] = coeff.num().to_string();
    term["den"] = coeff.den().to_string();
    terms.push_back(std::move(term));
  }
  return terms;
}

} // namespace

std::string render_element(const PlaneElement &e, OutputFormat format) {
  if (format == OutputFormat::text)
    return e.to_string();
  ordered_json doc;
  doc["terms"] = element_terms(e);
  return doc.dump();
}

std::string render_value(const Value &v, OutputFormat format) {
  if (auto *elem = std::get_if<PlaneElement>(&v))
    return render_element(*elem, format);
  return render_element(std::get<TruncatedSeries>(v).body(), format);
}

std::string render_report_json(const VerificationReport &report) {
  ordered_json doc;
  doc["theorem"] = report.theorem;
  doc["order_or_n"] = report.order_or_n;
  doc["status"] = report.verified ? "verified" : "failed";
  ordered_json failures = ordered_json::array();
  for (const auto &f : report.failures) {
    ordered_json entry;
    entry["index"] = f.index;
    entry["xexp"] = f.xexp;
    entry["yexp"] = f.yexp;
    entry["route"] = f.route;
    entry["expected"] = f.expected;
    entry["actual"] = f.actual;
    failures.push_back(std::move(entry));
  }
  doc["failures"] = std::move(failures);
  doc["elapsed_ms"] = report.elapsed_ms;
  return doc.dump();
}

} // namespace qplane
