#pragma once

/**
 * @file catalog.hpp
 * @brief Integral models of elliptic curves with CM by the maximal order of
 *        the nine class-number-one imaginary quadratic fields.
 *
 * File format: one entry per line,
 *
 *     d, D, A, B, source
 *
 * for the model y^2 = x^3 + A x + B, with source either `paper` or
 * `derived`. Blank lines and anything after `#` are ignored.
 */

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace iwasawa {

enum class CatalogSource { Paper, Derived };

struct CMCatalogEntry {
    std::uint64_t d = 0;
    std::int64_t D = 0;
    std::int64_t A = 0;
    std::int64_t B = 0;
    CatalogSource source = CatalogSource::Derived;

    bool operator==(const CMCatalogEntry&) const = default;
};

class Catalog {
public:
    Catalog() = default;
    explicit Catalog(std::vector<CMCatalogEntry> entries);

    /// Throws InvalidArgument with the offending line number.
    static Catalog parse(std::istream& in);
    static Catalog load(const std::string& path);
    static const Catalog& builtin();

    std::optional<CMCatalogEntry> find(std::uint64_t d) const;
    const std::vector<CMCatalogEntry>& entries() const noexcept { return entries_; }

private:
    std::vector<CMCatalogEntry> entries_;
};

std::string to_string(CatalogSource s);

/// Text of the catalog shipped in data/cm_catalog.txt.
extern const char* const kBuiltinCatalogText;

}  // namespace iwasawa
