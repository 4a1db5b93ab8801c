#include "mlcarbon/ef_table.hpp"

#include "mlcarbon/csv.hpp"
#include "mlcarbon/errors.hpp"
#include "mlcarbon/quantity.hpp"

#include <algorithm>
#include <cctype>

namespace mlcarbon {

namespace {
std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}
} // namespace

RegionEFTable RegionEFTable::from_csv(const std::string& path) {
    const CsvTable csv = read_csv_file(path);
    const int entity_col = csv.column("entity");
    const int year_col = csv.column("year");
    const int intensity_col = csv.column("intensity_g_per_kwh");
    if (entity_col < 0 || year_col < 0 || intensity_col < 0) {
        throw SchemaError("ef table '" + path +
                          "': expected columns entity, year, intensity_g_per_kwh");
    }

    RegionEFTable table;
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
        const auto& row = csv.rows[i];
        const auto year = try_parse_quantity(row[year_col]);
        const auto g_per_kwh = try_parse_quantity(row[intensity_col]);
        if (!year || !g_per_kwh) {
            throw SchemaError("ef table row " + std::to_string(i + 2) + ": bad year or intensity");
        }
        const double t_per_mwh = *g_per_kwh / 1000.0;
        if (t_per_mwh <= 0.0 || t_per_mwh > 2.0) {
            throw SchemaError("ef table row " + std::to_string(i + 2) + ": intensity " +
                              canonical_quantity(t_per_mwh) + " t/MWh outside (0, 2]");
        }
        table.add(row[entity_col], static_cast<int>(*year), t_per_mwh);
    }
    return table;
}

void RegionEFTable::add(std::string region, int year, double t_per_mwh) {
    by_region_[lower(region)][year] = t_per_mwh;
}

std::optional<double> RegionEFTable::lookup(std::string_view region, int year) const {
    const auto it = by_region_.find(lower(region));
    if (it == by_region_.end() || it->second.empty()) {
        return std::nullopt;
    }
    const auto& years = it->second;
    auto exact = years.find(year);
    if (exact != years.end()) {
        return exact->second;
    }
    auto after = years.upper_bound(year);
    if (after != years.begin()) {
        return std::prev(after)->second; // closest earlier year
    }
    return after->second;
}

double resolve_region_ef(ModelRecord& record, const RegionEFTable& table,
                         const std::map<std::string, std::string>* org_region_overrides) {
    if (record.disclosed_ef && *record.disclosed_ef > 0.0) {
        record.ef_source = "disclosed";
        record.ef_region = *record.disclosed_ef;
        return record.ef_region;
    }
    if (!record.region.empty()) {
        if (const auto ef = table.lookup(record.region, record.created_year)) {
            record.ef_source = "region";
            record.ef_region = *ef;
            return record.ef_region;
        }
    }
    if (org_region_overrides) {
        const auto it = org_region_overrides->find(record.author);
        if (it != org_region_overrides->end()) {
            if (const auto ef = table.lookup(it->second, record.created_year)) {
                record.ef_source = "org_override";
                record.ef_region = *ef;
                return record.ef_region;
            }
        }
    }
    record.ef_source = "global_default";
    record.ef_region = table.default_global();
    return record.ef_region;
}

} // namespace mlcarbon
