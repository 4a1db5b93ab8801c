#pragma once

#include "mlcarbon/records.hpp"

#include <map>
#include <optional>
#include <string>

namespace mlcarbon {

inline constexpr double kGlobalDefaultEf = 0.445; // tCO2/MWh, world average

// Grid carbon intensity by (region, year), stored in tCO2/MWh.
class RegionEFTable {
public:
    RegionEFTable() = default;

    // CSV columns: entity, year, intensity_g_per_kwh (extra columns ignored).
    // Values are converted g/kWh -> t/MWh and must land in (0, 2].
    static RegionEFTable from_csv(const std::string& path);

    void add(std::string region, int year, double t_per_mwh);

    // Exact year first, then the closest earlier year, then the closest later.
    std::optional<double> lookup(std::string_view region, int year) const;

    bool empty() const { return by_region_.empty(); }
    double default_global() const { return default_global_; }

private:
    std::map<std::string, std::map<int, double>> by_region_; // lowercase region key
    double default_global_ = kGlobalDefaultEf;
};

// Disclosed EF > disclosed region > organization override > global default.
// Also records the source in record.ef_source.
double resolve_region_ef(ModelRecord& record, const RegionEFTable& table,
                         const std::map<std::string, std::string>* org_region_overrides = nullptr);

} // namespace mlcarbon
