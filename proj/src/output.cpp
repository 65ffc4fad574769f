#include "iwasawa/output.hpp"

#include <json.hpp>
#include <sstream>

#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

using json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string join(const std::vector<std::int64_t>& xs, char sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string plain(const FieldValue& v, char list_sep, const char* null_text) {
    return std::visit(overloaded{
                          [&](std::monostate) { return std::string(null_text); },
                          [](std::int64_t x) { return std::to_string(x); },
                          [](bool b) { return std::string(b ? "true" : "false"); },
                          [](const std::string& s) { return s; },
                          [&](const std::vector<std::int64_t>& xs) { return join(xs, list_sep); },
                      },
                      v);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw MathError(Errc::InvalidArgument, "unknown format '" + name + "'");
}

OutputRecord& OutputRecord::set(std::string key, FieldValue value) {
    for (auto& [k, v] : fields) {
        if (k == key) {
            v = std::move(value);
            return *this;
        }
    }
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
}

const FieldValue* OutputRecord::get(const std::string& key) const {
    for (const auto& [k, v] : fields) {
        if (k == key) return &v;
    }
    return nullptr;
}

std::string render_json(const OutputRecord& record) {
    json j;
    j["kind"] = record.kind;
    for (const auto& [key, value] : record.fields) {
        std::visit(overloaded{
                       [&](std::monostate) { j[key] = nullptr; },
                       [&](const auto& x) { j[key] = x; },
                   },
                   value);
    }
    return j.dump();
}

std::string render_text(const OutputRecord& record) {
    std::string s = record.kind;
    for (const auto& [key, value] : record.fields) {
        s += ' ';
        s += key;
        s += '=';
        if (std::holds_alternative<std::vector<std::int64_t>>(value)) {
            s += '[' + plain(value, ',', "-") + ']';
        } else {
            s += plain(value, ',', "-");
        }
    }
    return s;
}

OutputRecord parse_json(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw MathError(Errc::InvalidArgument, std::string("malformed record: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw MathError(Errc::InvalidArgument, "record needs a string 'kind'");
    }
    OutputRecord r;
    for (const auto& [key, value] : j.items()) {
        if (key == "kind") {
            r.kind = value.get<std::string>();
        } else if (value.is_null()) {
            r.fields.emplace_back(key, std::monostate{});
        } else if (value.is_boolean()) {
            r.fields.emplace_back(key, value.get<bool>());
        } else if (value.is_number_integer()) {
            r.fields.emplace_back(key, value.get<std::int64_t>());
        } else if (value.is_string()) {
            r.fields.emplace_back(key, value.get<std::string>());
        } else if (value.is_array()) {
            std::vector<std::int64_t> xs;
            for (const auto& x : value) {
                if (!x.is_number_integer()) {
                    throw MathError(Errc::InvalidArgument, "list field '" + key + "' must hold integers");
                }
                xs.push_back(x.get<std::int64_t>());
            }
            r.fields.emplace_back(key, std::move(xs));
        } else {
            throw MathError(Errc::InvalidArgument, "unsupported value for field '" + key + "'");
        }
    }
    return r;
}

void RecordWriter::write(const OutputRecord& record) {
    switch (format_) {
        case Format::Text:
            out_ << render_text(record) << '\n';
            return;
        case Format::Json:
            out_ << render_json(record) << '\n';
            return;
        case Format::Csv: {
            std::vector<std::string> keys{"kind"};
            for (const auto& [k, v] : record.fields) keys.push_back(k);
            if (!header_written_) {
                header_ = keys;
                for (std::size_t i = 0; i < keys.size(); ++i) out_ << (i ? "," : "") << keys[i];
                out_ << '\n';
                header_written_ = true;
            } else if (keys != header_) {
                throw MathError(Errc::InvalidArgument, "CSV records must share one header");
            }
            out_ << csv_escape(record.kind);
            for (const auto& [k, v] : record.fields) out_ << ',' << csv_escape(plain(v, ';', ""));
            out_ << '\n';
            return;
        }
    }
}

}  // namespace iwasawa
