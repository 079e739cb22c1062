// JSON renderings of the report structs. Key order is fixed and all
// rationals are "p/q" strings, so serialised reports are byte-stable.

#pragma once

#include "json.hpp"

#include "certificate.hpp"
#include "clifford.hpp"

namespace semialg {

using ordered_json = nlohmann::ordered_json;

inline ordered_json checks_json(const std::vector<Verdict>& verdicts) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : verdicts) {
    ordered_json item;
    item["name"] = v.name;
    item["state"] = to_string(v.state);
    item["detail"] = v.detail;
    arr.push_back(std::move(item));
  }
  return arr;
}

inline ordered_json render_json(const CertificateReport& rep) {
  ordered_json j;
  j["report"] = "certificate";
  j["input"] = rep.input_label;
  j["elements"] = rep.elements;
  j["zero"] = rep.zero_name ? ordered_json(*rep.zero_name) : nullptr;
  j["identity"] =
      rep.identity_name ? ordered_json(*rep.identity_name) : nullptr;
  j["local_finiteness_constant"] = rep.local_constant;
  j["height"] = rep.order_height;
  j["norm_sigma"] = format_rational(rep.norm_sigma);
  j["norm_sigma_inv"] = format_rational(rep.norm_sigma_inv);
  j["sum_mu_squared"] = format_rational(rep.sum_mu_squared);
  j["two_pow_card_minus_1"] = rep.two_pow_card_minus_1.str();
  j["two_pow_C_minus_1"] = rep.two_pow_c_minus_1.str();
  j["norm_delta"] =
      rep.norm_delta ? ordered_json(format_rational(*rep.norm_delta))
                     : nullptr;
  j["note"] = rep.note ? ordered_json(*rep.note) : nullptr;
  j["checks"] = checks_json(rep.verdicts);
  j["result"] = rep.all_pass() ? "pass" : "fail";
  return j;
}

inline ordered_json render_json(const CliffordReport& rep) {
  ordered_json j;
  j["report"] = "clifford";
  j["input"] = rep.input_label;
  j["idempotents"] = rep.idempotent_count;
  j["elements"] = rep.element_count;
  ordered_json comps = ordered_json::array();
  for (const auto& [name, order] : rep.component_sizes) {
    ordered_json c;
    c["idempotent"] = name;
    c["order"] = order;
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  j["local_finiteness_constant"] = rep.local_constant;
  j["checks"] = checks_json(rep.verdicts);
  j["result"] = rep.all_pass() ? "pass" : "fail";
  return j;
}

}  // namespace semialg
