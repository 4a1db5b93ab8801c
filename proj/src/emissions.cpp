#include "mlcarbon/emissions.hpp"

#include "mlcarbon/errors.hpp"

#include <cmath>

namespace mlcarbon {

double runtime_backsolve_hours(double flops, const AcceleratorSpec& spec, double n_acc) {
    const double sustained = spec.peak_flops * spec.efficiency * n_acc;
    return flops / sustained / 3600.0;
}

double energy_mwh(const AcceleratorSpec& spec, double n_acc, double n_nodes, double hours,
                  const OverheadConfig& overheads) {
    const double t = hours * overheads.a_time;
    const double accelerator_wh = spec.avg_power_w * n_acc * t * (1.0 + overheads.it_overhead_fraction);
    const double node_wh = n_nodes * (overheads.node_fixed_power_w + overheads.node_network_power_w) * t;
    return (accelerator_wh + node_wh) * overheads.pue / 1e6;
}

double emissions_from_energy(double mwh, double ef_region) {
    return mwh * ef_region;
}

double atci_theoretical(const AcceleratorSpec& spec, const OverheadConfig& overheads,
                        double ef_region, ThetaConvention theta) {
    const double throughput = theta == ThetaConvention::Peak
                                  ? spec.peak_flops
                                  : spec.peak_flops * spec.efficiency;
    const double joules_per_eflop = spec.avg_power_w / throughput * kFlopsPerEflop;
    const double mwh_per_eflop = joules_per_eflop / kJoulesPerMwh;
    return mwh_per_eflop * overheads.pue * overheads.a_time * ef_region;
}

double atci_empirical(double emissions_t, double flops) {
    if (flops <= 0.0) {
        throw DivisionByZeroFlops();
    }
    return emissions_t / (flops / kFlopsPerEflop);
}

namespace {

double node_count_for(const ModelRecord& record, double n_acc) {
    if (record.node_count && *record.node_count >= 1.0) {
        return *record.node_count;
    }
    return std::ceil(n_acc / static_cast<double>(kAcceleratorsPerNode));
}

} // namespace

EmissionEstimate estimate_tier1(const ModelRecord& record, const AcceleratorRegistry& registry,
                                const OverheadConfig& overheads) {
    EmissionEstimate est;
    est.repo_id = record.repo_id;
    est.tier = record.tier;
    est.ef_region = record.ef_region;
    est.flops = record.flops;

    const bool quarantined = record.disclosure_quarantined();

    if (record.disclosed_emissions && !quarantined) {
        est.emissions_t = *record.disclosed_emissions;
        est.energy_mwh = record.ef_region > 0.0 ? est.emissions_t / record.ef_region : 0.0;
        est.runtime_hours = record.training_hours;
        est.provenance["method"] = "disclosed";
        est.provenance["emissions"] = "disclosed";
        est.provenance["energy"] = "implied_from_disclosed_emissions";
        if (est.flops && *est.flops > 0.0) {
            est.atci_t_per_eflop = atci_empirical(est.emissions_t, *est.flops);
        }
        return est;
    }
    if (record.disclosed_energy && !quarantined) {
        est.energy_mwh = *record.disclosed_energy;
        est.emissions_t = emissions_from_energy(est.energy_mwh, record.ef_region);
        est.runtime_hours = record.training_hours;
        est.provenance["method"] = "disclosed";
        est.provenance["energy"] = "disclosed";
        est.provenance["emissions"] = "energy_times_ef";
        if (est.flops && *est.flops > 0.0) {
            est.atci_t_per_eflop = atci_empirical(est.emissions_t, *est.flops);
        }
        return est;
    }

    const AcceleratorSpec& spec = registry.lookup(record.accelerator.family);
    double n_acc = 1.0;
    bool n_acc_imputed = true;
    if (record.device_count && *record.device_count >= 1.0) {
        n_acc = *record.device_count;
        n_acc_imputed = false;
    } else if (record.accelerator.device_count && *record.accelerator.device_count >= 1) {
        n_acc = static_cast<double>(*record.accelerator.device_count);
        n_acc_imputed = false;
    }
    const double n_nodes = node_count_for(record, n_acc);

    double wall_hours = 0.0;
    if (record.training_hours && *record.training_hours > 0.0) {
        wall_hours = record.hours_unit == HoursUnit::DeviceHours ? *record.training_hours / n_acc
                                                                 : *record.training_hours;
        est.provenance["method"] = "direct_runtime";
        est.provenance["runtime"] =
            record.hours_unit == HoursUnit::DeviceHours ? "disclosed_device_hours" : "disclosed_wall_clock";
    } else if (record.flops && *record.flops > 0.0) {
        wall_hours = runtime_backsolve_hours(*record.flops, spec, n_acc);
        est.provenance["method"] = "flops_backsolve";
        est.provenance["runtime"] = "backsolved_from_flops";
    } else {
        throw InsufficientMetadata("record '" + record.repo_id +
                                   "': neither runtime hours nor FLOPs resolvable");
    }
    if (n_acc_imputed) {
        est.provenance["device_count"] = "imputed_1";
    }
    if (record.accelerator.imputed) {
        est.provenance["accelerator"] = "imputed_" + record.accelerator.family;
    }

    est.runtime_hours = wall_hours;
    est.energy_mwh = energy_mwh(spec, n_acc, n_nodes, wall_hours, overheads);
    est.emissions_t = emissions_from_energy(est.energy_mwh, record.ef_region);
    if (est.flops && *est.flops > 0.0) {
        est.atci_t_per_eflop = atci_empirical(est.emissions_t, *est.flops);
    }
    return est;
}

} // namespace mlcarbon
