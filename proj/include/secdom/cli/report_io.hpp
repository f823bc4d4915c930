#ifndef SECDOM_CLI_REPORT_IO_HPP
#define SECDOM_CLI_REPORT_IO_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "secdom/domination.hpp"
#include "secdom/solvers.hpp"
#include "secdom/verify.hpp"

namespace secdom::cli {

using json = nlohmann::json;

inline constexpr std::string_view kReportSchema = "secdom.reports/1";
inline constexpr std::string_view kComputeSchema = "secdom.compute/1";
inline constexpr std::string_view kConstructSchema = "secdom.construct/1";

inline json to_json(VertexSet s) { return json(s.members()); }

inline json to_json(const verify::TheoremReport& r) {
    json j{{"id", verify::to_string(r.id)},
           {"instance", r.instance},
           {"expected", r.expected},
           {"computed", r.computed},
           {"verdict", verify::to_string(r.verdict)},
           {"note", r.note},
           {"counterexample", nullptr}};
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        j["counterexample"] = {{"graph6", c.graph6},
                               {"params", {c.p1, c.p2}},
                               {"set", c.set ? to_json(*c.set) : json(nullptr)},
                               {"detail", c.detail}};
    }
    return j;
}

struct Summary {
    std::size_t total = 0, pass = 0, fail = 0, skipped = 0;
};

inline Summary summarize(const std::vector<verify::TheoremReport>& reports) {
    Summary s;
    for (const auto& r : reports) {
        ++s.total;
        switch (r.verdict) {
            case verify::Verdict::pass: ++s.pass; break;
            case verify::Verdict::fail: ++s.fail; break;
            case verify::Verdict::skipped: ++s.skipped; break;
        }
    }
    return s;
}

inline json reports_json(const std::vector<verify::TheoremReport>& reports) {
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(to_json(r));
    const auto s = summarize(reports);
    return {{"schema", kReportSchema},
            {"reports", rows},
            {"summary", {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}}}};
}

/// RFC 4180 quoting when the field needs it.
inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline constexpr std::string_view kCsvHeader = "id,instance,expected,computed,verdict,note,counterexample";

inline void write_csv(std::ostream& out, const std::vector<verify::TheoremReport>& reports) {
    out << kCsvHeader << '\n';
    for (const auto& r : reports) {
        std::string cx;
        if (r.counterexample) {
            cx = r.counterexample->graph6;
            if (r.counterexample->set) cx += " " + r.counterexample->set->to_string();
            if (!r.counterexample->detail.empty()) cx += " " + r.counterexample->detail;
        }
        out << csv_field(verify::to_string(r.id)) << ',' << csv_field(r.instance) << ',' << csv_field(r.expected)
            << ',' << csv_field(r.computed) << ',' << csv_field(verify::to_string(r.verdict)) << ','
            << csv_field(r.note) << ',' << csv_field(cx) << '\n';
    }
}

inline void write_table(std::ostream& out, const std::vector<verify::TheoremReport>& reports) {
    std::size_t w_inst = 8, w_exp = 8, w_comp = 8;
    for (const auto& r : reports) {
        w_inst = std::max(w_inst, r.instance.size());
        w_exp = std::max(w_exp, r.expected.size());
        w_comp = std::max(w_comp, r.computed.size());
    }
    auto pad = [](std::string_view s, std::size_t w) { return std::string(s) + std::string(w - s.size() + 2, ' '); };
    out << pad("id", 5) << pad("instance", w_inst) << pad("expected", w_exp) << pad("computed", w_comp) << "verdict\n";
    for (const auto& r : reports) {
        out << pad(verify::to_string(r.id), 5) << pad(r.instance, w_inst) << pad(r.expected, w_exp)
            << pad(r.computed, w_comp) << verify::to_string(r.verdict);
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << '\n';
    }
    const auto s = summarize(reports);
    out << s.total << " instances: " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped\n";
}

}  // namespace secdom::cli

#endif  // SECDOM_CLI_REPORT_IO_HPP
