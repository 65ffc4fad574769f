#pragma once

/**
 * @file output.hpp
 * @brief Flat result records and their text / JSON-lines / CSV renderings.
 *
 * A record is a kind tag plus an ordered list of named fields. JSON lines
 * parse back to the identical record; text and CSV are write-only.
 */

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace iwasawa {

enum class Format { Text, Json, Csv };

/// Accepts "text", "json", "csv"; throws InvalidArgument otherwise.
Format parse_format(const std::string& name);

/// monostate renders as null / empty (used for skipped rows).
using FieldValue = std::variant<std::monostate, std::int64_t, bool, std::string, std::vector<std::int64_t>>;

struct OutputRecord {
    std::string kind;
    std::vector<std::pair<std::string, FieldValue>> fields;

    OutputRecord& set(std::string key, FieldValue value);
    const FieldValue* get(const std::string& key) const;

    bool operator==(const OutputRecord&) const = default;
};

std::string render_json(const OutputRecord& record);
std::string render_text(const OutputRecord& record);

/// Inverse of render_json. Throws InvalidArgument on malformed input.
OutputRecord parse_json(const std::string& line);

/// Streams records in one format. CSV gets a header row before the first
/// record; every record passed to one writer must have the same fields.
class RecordWriter {
public:
    RecordWriter(Format format, std::ostream& out) : format_(format), out_(out) {}

    void write(const OutputRecord& record);

private:
    Format format_;
    std::ostream& out_;
    std::vector<std::string> header_;
    bool header_written_ = false;
};

}  // namespace iwasawa
