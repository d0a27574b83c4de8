#include "rbp/io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "rbp/analytics.hpp"
#include "rbp/version.hpp"

namespace rbp {

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string meta_preamble(const OutputMeta& meta) {
    std::string out;
    out += "# recoverbp " + std::string(kVersion) + "\n";
    out += "# command=" + meta.command + "\n";
    out += "# seed=" + std::to_string(meta.seed) + "\n";
    for (const auto& [k, v] : meta.config) out += "# " + k + "=" + v + "\n";
    return out;
}

namespace {

nlohmann::json meta_json(const OutputMeta& meta) {
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [k, v] : meta.config) cfg[k] = v;
    return {{"version", kVersion}, {"command", meta.command}, {"seed", meta.seed},
            {"config", cfg}};
}

nlohmann::json estimate_fields(const Estimate& e) {
    return {{"point", e.point},
            {"ci_low", e.ci_low},
            {"ci_high", e.ci_high},
            {"trials", e.trials},
            {"successes", e.successes},
            {"budget_exceeded", e.budget_exceeded},
            {"seed", e.seed},
            {"wall_time", e.wall_time}};
}

std::string estimate_row_csv(const Estimate& e) {
    return std::to_string(e.trials) + "," + std::to_string(e.successes) + "," +
           std::to_string(e.budget_exceeded) + "," + format_g17(e.point) + "," +
           format_g17(e.ci_low) + "," + format_g17(e.ci_high);
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows, const OutputMeta& meta) {
    std::string out = meta_preamble(meta);
    out += "n,p,model,rule,trials,successes,budget_exceeded,point,ci_low,ci_high,error\n";
    for (const auto& r : rows) {
        out += std::to_string(r.cell.n) + "," + format_g17(r.cell.p) + "," +
               model_name(r.cell.model) + "," + rule_name(r.cell.rule) + ",";
        if (r.error.empty()) {
            out += estimate_row_csv(r.est);
            out += ",";
        } else {
            out += std::to_string(r.cell.trials) + ",0,0,nan,nan,nan," + r.error;
        }
        out += "\n";
    }
    return out;
}

std::string sweep_json(const std::vector<SweepRow>& rows, const OutputMeta& meta) {
    nlohmann::json jrows = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json jr = {{"n", r.cell.n},
                             {"p", r.cell.p},
                             {"model", model_name(r.cell.model)},
                             {"rule", rule_name(r.cell.rule)}};
        if (r.error.empty())
            jr["estimate"] = estimate_fields(r.est);
        else
            jr["error"] = r.error;
        jrows.push_back(jr);
    }
    nlohmann::json doc = {{"meta", meta_json(meta)}, {"rows", jrows}};
    return doc.dump(2) + "\n";
}

std::string estimate_csv(const Estimate& est, const OutputMeta& meta) {
    std::string out = meta_preamble(meta);
    out += "trials,successes,budget_exceeded,point,ci_low,ci_high\n";
    out += estimate_row_csv(est) + "\n";
    return out;
}

std::string estimate_json(const Estimate& est, const OutputMeta& meta) {
    nlohmann::json doc = {{"meta", meta_json(meta)}, {"estimate", estimate_fields(est)}};
    return doc.dump(2) + "\n";
}

std::string thresholds_csv(const std::vector<ThresholdRow>& rows, const OutputMeta& meta) {
    std::string out = meta_preamble(meta);
    out += "n,p_hat,lo,hi,scaled,predicted\n";
    bool decreasing = true;
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        double scaled = r.search.p_hat * std::sqrt(std::log(static_cast<double>(r.n)));
        out += std::to_string(r.n) + "," + format_g17(r.search.p_hat) + "," +
               format_g17(r.search.lo) + "," + format_g17(r.search.hi) + "," +
               format_g17(scaled) + "," + format_g17(threshold_p(r.n, 0.0)) + "\n";
        if (i > 0 && rows[i - 1].n < r.n && rows[i - 1].search.p_hat <= r.search.p_hat)
            decreasing = false;
    }
    out += std::string("# p_hat_decreasing=") + (decreasing ? "true" : "false") + "\n";
    return out;
}

std::string thresholds_json(const std::vector<ThresholdRow>& rows, const OutputMeta& meta) {
    nlohmann::json jrows = nlohmann::json::array();
    bool decreasing = true;
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        nlohmann::json probes = nlohmann::json::array();
        for (const auto& pr : r.search.probes)
            probes.push_back({{"p", pr.p}, {"estimate", estimate_fields(pr.est)}});
        jrows.push_back(
            {{"n", r.n},
             {"p_hat", r.search.p_hat},
             {"lo", r.search.lo},
             {"hi", r.search.hi},
             {"scaled", r.search.p_hat * std::sqrt(std::log(static_cast<double>(r.n)))},
             {"predicted", threshold_p(r.n, 0.0)},
             {"warning", r.search.warning},
             {"probes", probes}});
        if (i > 0 && rows[i - 1].n < r.n && rows[i - 1].search.p_hat <= r.search.p_hat)
            decreasing = false;
    }
    nlohmann::json doc = {{"meta", meta_json(meta)},
                          {"rows", jrows},
                          {"summary", {{"p_hat_decreasing", decreasing}}}};
    return doc.dump(2) + "\n";
}

}  // namespace rbp
