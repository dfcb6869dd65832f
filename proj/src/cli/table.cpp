#include "aim/cli/table.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <limits>

namespace aim::cli {

using nlohmann::ordered_json;

namespace {

const std::vector<std::string> kBase{"family",  "parameters", "n",      "eigenvalue_exact", "eigenvalue_decimal",
                                     "provenance", "iterations", "status"};
const std::vector<std::string> kVerify{"oracle_decimal", "abs_deviation", "deviation"};
const std::vector<std::string> kSamples{"family", "parameters", "n", "x", "y"};

std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void append_line(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += quote(fields[i]);
    }
    out += '\n';
}

std::string opt_double(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::vector<std::vector<std::string>> split_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        any = true;
        if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
            any = false;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (quoted) throw ParseError("unterminated quote in CSV");
    if (any) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

int parse_int(std::string_view s) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("bad integer '" + std::string(s) + "'");
    return v;
}

std::optional<double> opt_parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    return parse_double(s);
}

ordered_json number_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }
ordered_json number_or_null(const std::optional<double>& v) { return v ? number_or_null(*v) : ordered_json(nullptr); }

std::optional<double> json_opt_double(const ordered_json& v) {
    if (v.is_null()) return std::nullopt;
    if (!v.is_number()) throw ParseError("expected a number");
    return v.get<double>();
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

double parse_double(std::string_view text) {
    if (text.empty()) return std::numeric_limits<double>::quiet_NaN();
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size()) throw ParseError("bad number '" + std::string(text) + "'");
    return v;
}

std::string flatten_parameters(const catalog::ProblemSpec& spec) {
    std::string out;
    for (const auto& [name, value] : catalog::parameter_list(spec)) {
        if (!out.empty()) out += ';';
        out += name + "=" + value.to_string();
    }
    return out;
}

std::vector<std::string> columns(bool verify) {
    std::vector<std::string> c = kBase;
    if (verify) c.insert(c.end(), kVerify.begin(), kVerify.end());
    return c;
}

std::string write_csv(const Table& t) {
    std::string out;
    append_line(out, columns(t.verify));
    for (const Row& r : t.rows) {
        std::vector<std::string> f{r.family,
                                   r.parameters,
                                   r.n ? std::to_string(*r.n) : std::string(),
                                   r.exact ? r.exact->to_string() : std::string(),
                                   format_double(r.value),
                                   r.provenance,
                                   std::to_string(r.iterations),
                                   r.status};
        if (t.verify) {
            f.push_back(opt_double(r.oracle));
            f.push_back(opt_double(r.abs_deviation));
            f.push_back(opt_double(r.deviation));
        }
        append_line(out, f);
    }
    return out;
}

std::string write_json(const Table& t) {
    ordered_json rows = ordered_json::array();
    for (const Row& r : t.rows) {
        ordered_json j;
        j["family"] = r.family;
        j["parameters"] = r.parameters;
        j["n"] = r.n ? ordered_json(*r.n) : ordered_json(nullptr);
        j["eigenvalue_exact"] = r.exact ? ordered_json(r.exact->to_string()) : ordered_json(nullptr);
        j["eigenvalue_decimal"] = number_or_null(r.value);
        j["provenance"] = r.provenance;
        j["iterations"] = r.iterations;
        j["status"] = r.status;
        if (t.verify) {
            j["oracle_decimal"] = number_or_null(r.oracle);
            j["abs_deviation"] = number_or_null(r.abs_deviation);
            j["deviation"] = number_or_null(r.deviation);
        }
        if (!r.note.empty()) j["note"] = r.note;
        if (r.change) j["change"] = number_or_null(r.change);
        rows.push_back(std::move(j));
    }
    ordered_json doc;
    doc["columns"] = columns(t.verify);
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string write_csv(const SampleTable& t) {
    std::string out;
    append_line(out, kSamples);
    for (const Sample& s : t.samples)
        append_line(out, {t.family, t.parameters, std::to_string(t.n), format_double(s.x), format_double(s.y)});
    return out;
}

std::string write_json(const SampleTable& t) {
    ordered_json doc;
    doc["family"] = t.family;
    doc["parameters"] = t.parameters;
    doc["n"] = t.n;
    ordered_json x = ordered_json::array(), y = ordered_json::array();
    for (const Sample& s : t.samples) {
        x.push_back(number_or_null(s.x));
        y.push_back(number_or_null(s.y));
    }
    doc["x"] = std::move(x);
    doc["y"] = std::move(y);
    return doc.dump(2) + "\n";
}

Table read_csv(std::string_view text) {
    const auto lines = split_csv(text);
    if (lines.empty()) throw ParseError("empty CSV");
    Table t;
    if (lines[0] == columns(true)) t.verify = true;
    else if (lines[0] != columns(false)) throw ParseError("unexpected CSV header");
    const std::size_t width = columns(t.verify).size();
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& f = lines[i];
        if (f.size() != width) throw ParseError("CSV line " + std::to_string(i + 1) + " has the wrong field count");
        Row r;
        r.family = f[0];
        r.parameters = f[1];
        if (!f[2].empty()) r.n = parse_int(f[2]);
        if (!f[3].empty()) r.exact = Rational::parse(f[3]);
        r.value = parse_double(f[4]);
        r.provenance = f[5];
        r.iterations = parse_int(f[6]);
        r.status = f[7];
        if (t.verify) {
            r.oracle = opt_parse(f[8]);
            r.abs_deviation = opt_parse(f[9]);
            r.deviation = opt_parse(f[10]);
        }
        t.rows.push_back(std::move(r));
    }
    return t;
}

Table read_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("bad JSON table: ") + e.what());
    }
    Table t;
    try {
        const auto cols = doc.at("columns").get<std::vector<std::string>>();
        if (cols == columns(true)) t.verify = true;
        else if (cols != columns(false)) throw ParseError("unexpected JSON columns");
        for (const auto& j : doc.at("rows")) {
            Row r;
            r.family = j.at("family").get<std::string>();
            r.parameters = j.at("parameters").get<std::string>();
            if (!j.at("n").is_null()) r.n = j.at("n").get<int>();
            if (!j.at("eigenvalue_exact").is_null()) r.exact = Rational::parse(j.at("eigenvalue_exact").get<std::string>());
            r.value = json_opt_double(j.at("eigenvalue_decimal")).value_or(std::numeric_limits<double>::quiet_NaN());
            r.provenance = j.at("provenance").get<std::string>();
            r.iterations = j.at("iterations").get<int>();
            r.status = j.at("status").get<std::string>();
            if (t.verify) {
                r.oracle = json_opt_double(j.at("oracle_decimal"));
                r.abs_deviation = json_opt_double(j.at("abs_deviation"));
                r.deviation = json_opt_double(j.at("deviation"));
            }
            if (j.contains("note")) r.note = j.at("note").get<std::string>();
            if (j.contains("change")) r.change = json_opt_double(j.at("change"));
            t.rows.push_back(std::move(r));
        }
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("bad JSON table: ") + e.what());
    }
    return t;
}

Spectrum to_spectrum(const Table& t) {
    Spectrum s;
    const std::string* point = nullptr;
    for (const Row& r : t.rows) {
        if (!r.n || r.status == "rejected" || r.status == "failed") continue;
        if (point && *point != r.parameters) throw Error("table holds more than one parameter point");
        point = &r.parameters;
        const auto prov = parse_provenance(r.provenance);
        if (!prov) throw ParseError("unknown provenance '" + r.provenance + "'");
        SpectrumEntry e;
        e.n = *r.n;
        e.exact = r.exact;
        e.value = r.value;
        e.provenance = *prov;
        e.iterations = r.iterations;
        e.converged = r.status != "unconverged";
        e.change = r.change.value_or(0.0);
        e.note = r.note;
        s.push(std::move(e));
    }
    return s;
}

std::vector<Row> rows_from_spectrum(const catalog::ProblemSpec& spec, const Spectrum& s, const std::string& status) {
    std::vector<Row> rows;
    const std::string family = catalog::family_name(spec), params = flatten_parameters(spec);
    for (const SpectrumEntry& e : s.entries()) {
        Row r;
        r.family = family;
        r.parameters = params;
        r.n = e.n;
        r.exact = e.exact;
        r.value = e.value;
        r.provenance = std::string(provenance_name(e.provenance));
        r.iterations = e.iterations;
        r.status = e.converged ? status : "unconverged";
        r.note = e.note;
        if (e.change != 0.0) r.change = e.change;
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace aim::cli
