#include "genergy/report.hpp"

#include <cstdio>
#include <sstream>

#include "genergy/canonical.hpp"
#include "genergy/errors.hpp"
#include "genergy/graph6.hpp"

namespace genergy {

using json = nlohmann::json;

namespace {

std::string num(double x, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> int128_strings(const std::vector<Int128>& values) {
    std::vector<std::string> out;
    for (Int128 v : values) out.push_back(to_string(v));
    return out;
}

std::string cycle_text(const Cycle& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) out += (i ? " " : "") + std::to_string(c.vertices[i]);
    return out + ")";
}

std::string class_text(const std::optional<ClassLabel>& label) {
    if (!label) return "n/a";
    if (label->id == ClassId::Class1) return "Class1";
    const auto& [p, q] = *label->witness;
    return "Class2 " + cycle_text(p) + " " + cycle_text(q);
}

int shown(std::size_t size, int top) {
    if (top < 0 || static_cast<std::size_t>(top) > size) return static_cast<int>(size);
    return top;
}

}  // namespace

GraphReport analyze(const Graph& g, const std::string& label, const QuadratureSettings& quadrature) {
    GraphReport r;
    r.label = label;
    r.graph6 = canonical_label(g).graph6;
    r.n = g.order();
    r.e = g.size();
    r.spectrum = eigenvalues(g);
    r.poly = char_poly(g);
    r.b = b_coeffs(r.poly);
    try {
        r.coulson = energy_coulson(r.poly, quadrature);
    } catch (const AccuracyError& err) {
        r.coulson_error = err.what();
    }
    r.bipartite = is_bipartite(g).bipartite;
    if (g.order() <= 12) r.class_label = classify(g);
    return r;
}

json to_json(const GraphReport& r) {
    json out = {{"input", r.label},
                {"graph6", r.graph6},
                {"n", r.n},
                {"e", r.e},
                {"energy", r.spectrum.energy},
                {"spectrum", r.spectrum.eigenvalues},
                {"residual", r.spectrum.residual},
                {"charpoly", int128_strings(r.poly.coeffs)},
                {"charpoly_text", format_poly(r.poly)},
                {"b", int128_strings(r.b.values)},
                {"bipartite", r.bipartite},
                {"class", class_text(r.class_label)}};
    if (r.coulson) {
        out["energy_coulson"] = r.coulson->energy;
        out["coulson_error_bound"] = r.coulson->error_bound;
        out["coulson_evaluations"] = r.coulson->evaluations;
    } else {
        out["energy_coulson"] = nullptr;
        out["coulson_failure"] = r.coulson_error;
    }
    return out;
}

json to_json(const CheckResult& r) {
    json evidence = json::array();
    for (const Evidence& ev : r.evidence) {
        evidence.push_back({{"item", ev.item}, {"ok", ev.ok}, {"detail", ev.detail}, {"data", ev.data}});
    }
    return {{"name", r.name},
            {"passed", r.passed},
            {"scope", r.scope},
            {"runtime_seconds", r.runtime_seconds},
            {"failures", r.failures().size()},
            {"evidence", evidence}};
}

json to_json(const RankReport& r, int top) {
    json rows = json::array();
    const int count = shown(r.entries.size(), top);
    for (int i = 0; i < count; ++i) {
        const RankEntry& entry = r.entries[static_cast<std::size_t>(i)];
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(entry.poly_digest));
        rows.push_back({{"rank", entry.rank},
                        {"graph6", entry.graph6},
                        {"energy", entry.energy},
                        {"charpoly", format_poly(entry.poly)},
                        {"poly_digest", hex}});
    }
    json ties = json::array();
    for (const NearTie& t : r.near_ties) ties.push_back({{"first", t.first}, {"second", t.second}, {"delta", t.delta}});
    return {{"n", r.n}, {"e", r.e}, {"class_size", r.entries.size()}, {"rows", rows}, {"near_ties", ties}};
}

std::string to_text(const GraphReport& r) {
    std::ostringstream out;
    out << r.label << "\n";
    out << "  graph6     " << r.graph6 << "  (n=" << r.n << ", e=" << r.e << ")\n";
    out << "  energy     " << num(r.spectrum.energy) << "\n";
    if (r.coulson) {
        out << "  coulson    " << num(r.coulson->energy) << "  (+-" << r.coulson->error_bound << ", "
            << r.coulson->evaluations << " evaluations)\n";
    } else {
        out << "  coulson    failed: " << r.coulson_error << "\n";
    }
    out << "  spectrum  ";
    for (double x : r.spectrum.eigenvalues) out << " " << num(x, 6);
    out << "\n  charpoly   " << format_poly(r.poly) << "\n  b         ";
    for (Int128 b : r.b.values) out << " " << to_string(b);
    out << "\n  bipartite  " << (r.bipartite ? "yes" : "no") << "\n";
    out << "  class      " << class_text(r.class_label) << "\n";
    return out.str();
}

std::string to_text(const CheckResult& r) {
    std::ostringstream out;
    out << "== " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << "  (" << num(r.runtime_seconds, 2) << " s)\n";
    out << "   scope: " << r.scope << "\n";
    for (const Evidence& ev : r.evidence) {
        out << "   [" << (ev.ok ? "ok" : "FAIL") << "] " << ev.item;
        if (!ev.detail.empty()) out << " -- " << ev.detail;
        out << "\n";
    }
    return out.str();
}

std::string to_text(const RankReport& r, int top) {
    std::ostringstream out;
    out << "G(" << r.n << "," << r.e << "): " << r.entries.size() << " graphs\n";
    const int count = shown(r.entries.size(), top);
    for (int i = 0; i < count; ++i) {
        const RankEntry& entry = r.entries[static_cast<std::size_t>(i)];
        out << "  " << entry.rank << "\t" << entry.graph6 << "\t" << num(entry.energy) << "\t" << format_poly(entry.poly)
            << "\n";
    }
    for (const NearTie& t : r.near_ties) {
        out << "  near-tie " << t.first << " " << t.second << " delta " << t.delta << "\n";
    }
    return out.str();
}

std::string csv_header_graph() {
    return "input,graph6,n,e,energy,energy_coulson,bipartite,class,charpoly\n";
}

std::string to_csv_row(const GraphReport& r) {
    return csv_field(r.label) + "," + csv_field(r.graph6) + "," + std::to_string(r.n) + "," + std::to_string(r.e) +
           "," + num(r.spectrum.energy) + "," + (r.coulson ? num(r.coulson->energy) : "") + "," +
           (r.bipartite ? "1" : "0") + "," + csv_field(class_text(r.class_label)) + "," +
           csv_field(format_poly(r.poly)) + "\n";
}

std::string to_csv(const RankReport& r, int top) {
    std::string out = "rank,graph6,energy,charpoly\n";
    const int count = shown(r.entries.size(), top);
    for (int i = 0; i < count; ++i) {
        const RankEntry& entry = r.entries[static_cast<std::size_t>(i)];
        out += std::to_string(entry.rank) + "," + csv_field(entry.graph6) + "," + num(entry.energy) + "," +
               csv_field(format_poly(entry.poly)) + "\n";
    }
    return out;
}

std::string to_csv(const std::vector<CheckResult>& results) {
    std::string out = "check,item,ok,detail\n";
    for (const CheckResult& r : results) {
        for (const Evidence& ev : r.evidence) {
            out += csv_field(r.name) + "," + csv_field(ev.item) + "," + (ev.ok ? "1" : "0") + "," +
                   csv_field(ev.detail) + "\n";
        }
    }
    return out;
}

}  // namespace genergy
