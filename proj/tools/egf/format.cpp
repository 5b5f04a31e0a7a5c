#include "format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "composita/text_io.hpp"

namespace egf {

using composita::CompositaTable;
using composita::CongruenceReport;
using composita::Integer;
using composita::Rational;
using composita::ScanResult;
using composita::Series;
using composita::WitnessCertificate;
using ordered_json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "text") return Format::text;
    if (name == "jsonl") return Format::jsonl;
    throw std::invalid_argument("unknown format '" + name + "'");
}

std::string format_table(const CompositaTable& table, Format format) {
    if (format == Format::csv) {
        return composita::to_csv(table);
    }
    std::ostringstream out;
    if (format == Format::jsonl) {
        for (int n = 1; n <= table.order(); ++n) {
            for (int k = 1; k <= n; ++k) {
                ordered_json record{{"n", n}, {"k", k}, {"value", table.at(n, k).str()}};
                out << record.dump() << '\n';
            }
        }
        return out.str();
    }
    // aligned triangle
    size_t width = 1;
    for (int n = 1; n <= table.order(); ++n) {
        for (int k = 1; k <= n; ++k) {
            width = std::max(width, table.at(n, k).str().size());
        }
    }
    for (int n = 1; n <= table.order(); ++n) {
        for (int k = 1; k <= n; ++k) {
            std::string v = table.at(n, k).str();
            out << std::string(width - v.size(), ' ') << v << (k == n ? "" : " ");
        }
        out << '\n';
    }
    return out.str();
}

std::string format_egf_sequence(const Series& g, Format format) {
    std::ostringstream out;
    for (int n = 0; n <= g.order(); ++n) {
        Rational value = g.egf_coefficient(n);
        switch (format) {
            case Format::text:
                out << value.str() << '\n';
                break;
            case Format::csv:
                if (n == 0) out << "n,value\n";
                out << n << ',' << value.str() << '\n';
                break;
            case Format::jsonl:
                out << ordered_json{{"n", n}, {"value", value.str()}}.dump() << '\n';
                break;
        }
    }
    return out.str();
}

std::string format_integers(std::span<const Integer> values, Format format) {
    std::ostringstream out;
    for (size_t i = 0; i < values.size(); ++i) {
        switch (format) {
            case Format::text:
                out << values[i].get_str() << '\n';
                break;
            case Format::csv:
                if (i == 0) out << "n,value\n";
                out << i << ',' << values[i].get_str() << '\n';
                break;
            case Format::jsonl:
                out << ordered_json{{"n", i}, {"value", values[i].get_str()}}.dump() << '\n';
                break;
        }
    }
    return out.str();
}

namespace {

std::string scan_jsonl(const ScanResult& result) {
    std::ostringstream out;
    for (const CongruenceReport& r : result.reports) {
        ordered_json record{{"type", "report"},
                            {"family", r.family},
                            {"n", r.n},
                            {"value", r.value.str()},
                            {"is_integer", r.is_integer},
                            {"verdict", std::string(to_string(r.verdict))}};
        if (r.degenerate) record["degenerate"] = true;
        out << record.dump() << '\n';
    }
    for (const WitnessCertificate& w : result.certificates) {
        ordered_json record{{"type", "certificate"},
                            {"family", w.family},
                            {"n", w.n},
                            {"value", w.value.str()},
                            {"denominator", w.denominator.get_str()}};
        out << record.dump() << '\n';
    }
    ordered_json summary{{"type", "summary"},
                         {"reports", result.reports.size()},
                         {"witnesses", result.certificates.size()}};
    out << summary.dump() << '\n';
    return out.str();
}

std::string scan_csv(const ScanResult& result) {
    std::ostringstream out;
    out << "family,n,value,is_integer,verdict,degenerate\n";
    for (const CongruenceReport& r : result.reports) {
        out << r.family << ',' << r.n << ',' << r.value.str() << ','
            << (r.is_integer ? "true" : "false") << ',' << to_string(r.verdict) << ','
            << (r.degenerate ? "true" : "false") << '\n';
    }
    for (const WitnessCertificate& w : result.certificates) {
        out << "# certificate n=" << w.n << " value=" << w.value.str()
            << " denominator=" << w.denominator.get_str() << '\n';
    }
    out << "# summary reports=" << result.reports.size()
        << " witnesses=" << result.certificates.size() << '\n';
    return out.str();
}

std::string scan_text(const ScanResult& result) {
    std::ostringstream out;
    for (const CongruenceReport& r : result.reports) {
        out << r.family << " n=" << r.n << " value=" << r.value.str() << ' '
            << (r.is_integer ? "integer" : "non-integer") << ' ' << to_string(r.verdict);
        if (r.degenerate) out << " (degenerate empty sum)";
        out << '\n';
    }
    for (const WitnessCertificate& w : result.certificates) {
        out << "certificate: " << w.family << " n=" << w.n << " value=" << w.value.str()
            << " denominator=" << w.denominator.get_str() << '\n';
    }
    out << "summary: " << result.reports.size() << " reports, "
        << result.certificates.size() << " witnesses\n";
    return out.str();
}

}  // namespace

std::string format_scan(const ScanResult& result, Format format) {
    switch (format) {
        case Format::jsonl: return scan_jsonl(result);
        case Format::csv: return scan_csv(result);
        case Format::text: return scan_text(result);
    }
    return {};
}

}  // namespace egf
