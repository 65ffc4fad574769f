#include "iwasawa/catalog.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "iwasawa/error.hpp"
#include "iwasawa/quadfield.hpp"

namespace iwasawa {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_int(std::string_view s, std::size_t line_no) {
    T value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw MathError(Errc::InvalidArgument, "catalog line " + std::to_string(line_no) +
                                                   ": bad integer '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

std::string to_string(CatalogSource s) { return s == CatalogSource::Paper ? "paper" : "derived"; }

Catalog::Catalog(std::vector<CMCatalogEntry> entries) : entries_(std::move(entries)) {}

Catalog Catalog::parse(std::istream& in) {
    std::vector<CMCatalogEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;

        std::vector<std::string_view> cols;
        std::size_t start = 0;
        while (true) {
            auto comma = view.find(',', start);
            cols.push_back(trim(view.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (cols.size() != 5) {
            throw MathError(Errc::InvalidArgument, "catalog line " + std::to_string(line_no) +
                                                       ": expected 5 columns, got " +
                                                       std::to_string(cols.size()));
        }

        CMCatalogEntry e;
        e.d = parse_int<std::uint64_t>(cols[0], line_no);
        e.D = parse_int<std::int64_t>(cols[1], line_no);
        e.A = parse_int<std::int64_t>(cols[2], line_no);
        e.B = parse_int<std::int64_t>(cols[3], line_no);
        if (cols[4] == "paper") {
            e.source = CatalogSource::Paper;
        } else if (cols[4] == "derived") {
            e.source = CatalogSource::Derived;
        } else {
            throw MathError(Errc::InvalidArgument, "catalog line " + std::to_string(line_no) +
                                                       ": unknown source '" + std::string(cols[4]) + "'");
        }
        if (e.d == 0 || !is_squarefree(e.d) || e.D != fundamental_discriminant(e.d)) {
            throw MathError(Errc::InvalidArgument, "catalog line " + std::to_string(line_no) +
                                                       ": D does not match d");
        }
        for (const auto& prev : entries) {
            if (prev.d == e.d) {
                throw MathError(Errc::InvalidArgument, "catalog line " + std::to_string(line_no) +
                                                           ": duplicate entry for d = " + std::to_string(e.d));
            }
        }
        entries.push_back(e);
    }
    return Catalog(std::move(entries));
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw MathError(Errc::InvalidArgument, "cannot open catalog file " + path);
    }
    return parse(in);
}

const Catalog& Catalog::builtin() {
    static const Catalog cat = [] {
        std::istringstream in(kBuiltinCatalogText);
        return parse(in);
    }();
    return cat;
}

std::optional<CMCatalogEntry> Catalog::find(std::uint64_t d) const {
    for (const auto& e : entries_) {
        if (e.d == d) return e;
    }
    return std::nullopt;
}

}  // namespace iwasawa
