/*
   Copyright 2026 the qwolst authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace qwolst {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

Json poly_to_json(const Poly& a) {
    Json coeffs = Json::array();
    for (const Rat& c : a.coeffs()) coeffs.push_back(c.str());
    return coeffs;
}

Poly poly_from_json(const Json& j) {
    std::vector<Rat> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(Rat::from_string(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

Json entry_to_json(const ReportEntry& e) {
    Json j;
    j["check_id"] = e.check_id;
    j["p"] = e.p;
    j["passed"] = e.passed();
    j["lhs"] = poly_to_json(e.lhs);
    j["rhs"] = poly_to_json(e.rhs);
    if (e.residual) j["residual"] = fmt_double(*e.residual);
    if (e.tolerance) j["tolerance"] = fmt_double(*e.tolerance);
    if (e.status == EntryStatus::error) j["error"] = e.error_kind;
    j["detail"] = e.detail;
    j["elapsed_ms"] = e.elapsed_ms;
    return j;
}

ReportEntry entry_from_json(const Json& j) {
    ReportEntry e;
    e.check_id = j.at("check_id").get<std::string>();
    e.p = j.at("p").get<int>();
    e.lhs = poly_from_json(j.at("lhs"));
    e.rhs = poly_from_json(j.at("rhs"));
    if (j.contains("residual")) e.residual = std::strtod(j["residual"].get<std::string>().c_str(), nullptr);
    if (j.contains("tolerance")) e.tolerance = std::strtod(j["tolerance"].get<std::string>().c_str(), nullptr);
    if (j.contains("error")) {
        e.status = EntryStatus::error;
        e.error_kind = j["error"].get<std::string>();
    } else {
        e.status = j.at("passed").get<bool>() ? EntryStatus::pass : EntryStatus::fail;
    }
    e.detail = j.at("detail").get<std::string>();
    e.elapsed_ms = j.at("elapsed_ms").get<double>();
    return e;
}

Json config_to_json(const RunConfig& c) {
    Json j;
    if (c.explicit_list) {
        j["mode"] = "explicit";
        j["primes"] = *c.explicit_list;
    } else {
        j["mode"] = "range";
        j["min_p"] = c.min_p;
        j["max_p"] = c.max_p;
    }
    j["checks"] = c.checks;
    j["out"] = c.out_path ? Json(*c.out_path) : Json(nullptr);
    j["parallelism"] = c.parallelism;
    j["seed"] = std::to_string(c.seed);
    j["mutate"] = c.mutate;
    return j;
}

RunConfig config_from_json(const Json& j) {
    RunConfig c;
    if (j.at("mode").get<std::string>() == "explicit") {
        c.explicit_list = j.at("primes").get<std::vector<int>>();
    } else {
        c.min_p = j.at("min_p").get<int>();
        c.max_p = j.at("max_p").get<int>();
    }
    c.checks = j.at("checks").get<std::vector<std::string>>();
    if (!j.at("out").is_null()) c.out_path = j["out"].get<std::string>();
    c.parallelism = j.at("parallelism").get<int>();
    c.seed = std::stoull(j.at("seed").get<std::string>());
    c.mutate = j.at("mutate").get<bool>();
    return c;
}

}  // namespace

std::string report_to_json(const Report& report) {
    Json j;
    j["tool_version"] = report.tool_version;
    j["config"] = config_to_json(report.config);
    Json results = Json::array();
    for (const ReportEntry& e : report.results) results.push_back(entry_to_json(e));
    j["results"] = std::move(results);
    j["summary"] = Json{{"pass", report.n_pass}, {"fail", report.n_fail}, {"error", report.n_error}};
    j["total_elapsed_ms"] = report.total_elapsed_ms;
    return j.dump(2) + "\n";
}

void write_report(const Report& report, std::ostream& out) {
    out << report_to_json(report);
    if (!out) throw IoError("failed to write report");
}

Report parse_report(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("report is not valid JSON");
    try {
        Report r;
        r.tool_version = j.at("tool_version").get<std::string>();
        r.config = config_from_json(j.at("config"));
        for (const auto& je : j.at("results")) r.results.push_back(entry_from_json(je));
        r.n_pass = j.at("summary").at("pass").get<int>();
        r.n_fail = j.at("summary").at("fail").get<int>();
        r.n_error = j.at("summary").at("error").get<int>();
        r.total_elapsed_ms = j.at("total_elapsed_ms").get<double>();
        return r;
    } catch (const Json::exception& e) {
        throw IoError(std::string("malformed report: ") + e.what());
    }
}

}  // namespace qwolst
