#include "zel/report.hpp"

#include "zel/notation.hpp"

namespace zel {

nlohmann::ordered_json make_record(const std::string& input, const Multisegment& m, Classifier& c) {
    Multisegment z = normalized(to_Z_form(m));
    Verdict v = c.classify(z);
    nlohmann::ordered_json rec;
    rec["input"] = input;
    rec["normal_form"] = to_text(z);
    rec["verdict"] = to_string(v.status);
    rec["trace"] = nlohmann::ordered_json::array();
    for (const auto& step : v.trace)
        rec["trace"].push_back({{"rule", step.rule}, {"anchor", step.anchor}, {"detail", step.detail}});
    rec["dual"] = to_text(zelevinsky_dual(z).with_form(Form::Z));
    rec["contragredient"] = to_text(contragredient(z));
    rec["g_prime"] = in_G_prime(z).member;
    if (auto p = in_G(z)) {
        rec["g_partition"] = nlohmann::ordered_json::array();
        for (const auto& b : *p) rec["g_partition"].push_back(to_text(b));
    } else {
        rec["g_partition"] = nullptr;
    }
    return rec;
}

std::string record_line(const nlohmann::ordered_json& rec) { return rec.dump(); }

}  // namespace zel
