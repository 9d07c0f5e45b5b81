#pragma once

#include <string>

#include <json.hpp>

#include "zel/classifier.hpp"

namespace zel {

// One self-contained record: input, normal_form, verdict, trace, dual,
// contragredient, g_prime, g_partition.
nlohmann::ordered_json make_record(const std::string& input, const Multisegment& m, Classifier& c);

// Single line, stable key order.
std::string record_line(const nlohmann::ordered_json& rec);

}  // namespace zel
