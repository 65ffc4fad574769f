#include "iwasawa/commands.hpp"

#include "iwasawa/ellcurve.hpp"
#include "iwasawa/gold.hpp"
#include "iwasawa/quadfield.hpp"
#include "iwasawa/sequences.hpp"

namespace iwasawa {

namespace {

std::int64_t as_int(u64 v) { return static_cast<std::int64_t>(v); }

int usage_error(std::ostream& err, const std::string& what) {
    err << "error: " << what << '\n';
    return kExitUsage;
}

// Resolves d to a class-number-one field with a catalog model.
std::optional<std::pair<ImagQuadField, CMCatalogEntry>> catalog_field(const Catalog& catalog, u64 d,
                                                                     std::ostream& err) {
    auto entry = catalog.find(d);
    if (!entry) {
        err << "error: no catalog entry for d = " << d << '\n';
        return std::nullopt;
    }
    ImagQuadField field = make_field(d);
    if (field.h != 1) {
        err << "error: d = " << d << " has class number " << field.h << "; point counts need h = 1\n";
        return std::nullopt;
    }
    return std::make_pair(field, *entry);
}

OutputRecord gold_record(const GoldVerdict& v, const ImagQuadField& field) {
    OutputRecord r{"gold", {}};
    r.set("d", as_int(v.d))
        .set("p", as_int(v.p))
        .set("h", as_int(field.h))
        .set("lambda_gt_one", v.lambda_gt_one)
        .set("alpha_x", v.generator.x)
        .set("alpha_y", v.generator.y)
        .set("alpha_power", as_int(v.alpha_power.value()));
    return r;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const MathError& e) {
        return usage_error(err, std::string(errc_name(e.code())) + ": " + e.what());
    }
}

}  // namespace

int cmd_table(const Catalog& catalog, u64 d, u64 p_max, Format format, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&] {
        auto resolved = catalog_field(catalog, d, err);
        if (!resolved) return kExitUsage;
        const auto& [field, entry] = *resolved;
        RecordWriter writer(format, out);
        for (const auto& row : catalog_table(field, entry, p_max)) {
            OutputRecord r{"table_row", {}};
            r.set("d", as_int(d)).set("p", as_int(row.p));
            if (row.count) {
                r.set("count_mod_p2", as_int(row.count->value())).set("status", std::string("ok"));
            } else {
                r.set("count_mod_p2", std::monostate{}).set("status", std::string("skipped"));
            }
            writer.write(r);
        }
        return kExitOk;
    });
}

int cmd_theorem1(const Catalog& catalog, u64 d, u64 p_max, Format format, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&] {
        auto resolved = catalog_field(catalog, d, err);
        if (!resolved) return kExitUsage;
        const auto& [field, entry] = *resolved;
        RecordWriter writer(format, out);
        bool all_agree = true;
        for (const auto& row : theorem1_scan(field, entry, p_max)) {
            OutputRecord r{"theorem1", {}};
            r.set("d", as_int(d)).set("p", as_int(row.p));
            if (row.verdict) {
                const auto& v = *row.verdict;
                all_agree = all_agree && v.agree;
                r.set("lambda_gt_one", v.gold)
                    .set("count_mod_p2", as_int(v.count_residue.value()))
                    .set("agree", v.agree)
                    .set("status", std::string("ok"));
            } else {
                r.set("lambda_gt_one", std::monostate{})
                    .set("count_mod_p2", std::monostate{})
                    .set("agree", std::monostate{})
                    .set("status", std::string("skipped"));
            }
            writer.write(r);
        }
        if (!all_agree) {
            err << "DISAGREEMENT: the two criteria differ for d = " << d << '\n';
            return kExitDisagreement;
        }
        return kExitOk;
    });
}

int cmd_gold(u64 d, std::optional<u64> p, std::optional<u64> p_max, Format format, std::ostream& out,
             std::ostream& err) {
    if (p.has_value() == p_max.has_value()) {
        return usage_error(err, "give exactly one of --p and --pmax");
    }
    return guarded(err, [&] {
        ImagQuadField field = make_field(d);
        RecordWriter writer(format, out);
        if (p) {
            writer.write(gold_record(gold_test(field, *p), field));
        } else {
            for (const auto& v : gold_scan(field, *p_max)) writer.write(gold_record(v, field));
        }
        return kExitOk;
    });
}

int cmd_scan_ordinary(u64 p, Format format, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        OrdinaryScan scan = scan_ordinary_prime(p);
        std::vector<std::int64_t> js;
        for (const auto& w : scan.witnesses) js.push_back(as_int(w.j));
        OutputRecord r{"scan_ordinary", {}};
        r.set("p", as_int(p))
            .set("ordinary_classes", as_int(scan.ordinary_classes))
            .set("witnesses", std::move(js));
        RecordWriter(format, out).write(r);
        return kExitOk;
    });
}

int cmd_sequences(u64 p, u64 m, Format format, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        SequenceVerdict v = equivalence_check(p, m);
        OutputRecord r{"sequences", {}};
        r.set("p", as_int(p))
            .set("m", as_int(m))
            .set("product_is_one", v.product_is_one)
            .set("special_value", as_int(v.special_value.value()))
            .set("count_mod_p2", as_int(v.curve_residue.value()))
            .set("agree", v.agree());
        RecordWriter(format, out).write(r);
        if (!v.agree()) {
            err << "DISAGREEMENT: the three criteria differ at p = " << p << '\n';
            return kExitDisagreement;
        }
        return kExitOk;
    });
}

}  // namespace iwasawa
