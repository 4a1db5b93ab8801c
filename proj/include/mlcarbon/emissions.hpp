#pragma once

#include "mlcarbon/accelerators.hpp"
#include "mlcarbon/records.hpp"

#include <map>
#include <optional>
#include <string>

namespace mlcarbon {

inline constexpr double kJoulesPerMwh = 3.6e9;
inline constexpr double kFlopsPerEflop = 1e18;
inline constexpr int kAcceleratorsPerNode = 8;

// How theta is read in the ATCI formula: peak throughput (the default,
// matching the closed-form emission model) or peak scaled by utilization.
enum class ThetaConvention { Peak, PeakTimesEfficiency };

struct EmissionEstimate {
    std::string repo_id;
    TierAssignment tier = TierAssignment::Insufficient;
    double energy_mwh = 0.0;
    double emissions_t = 0.0;
    std::optional<double> atci_t_per_eflop; // present only when FLOPs known
    std::optional<double> flops;
    std::optional<double> runtime_hours; // wall clock, direct or imputed
    double ef_region = 0.0;
    double relative_uncertainty = 0.0;
    std::map<std::string, std::string> provenance; // method notes per field
};

// Wall-clock hours to push `flops` through n_acc accelerators at sustained
// throughput peak * efficiency.
double runtime_backsolve_hours(double flops, const AcceleratorSpec& spec, double n_acc);

// (P*N*T*(1 + it_overhead) + n_nodes*(node_fixed + node_network)*T) * PUE,
// with T amplified by a_time. Result in MWh.
double energy_mwh(const AcceleratorSpec& spec, double n_acc, double n_nodes, double hours,
                  const OverheadConfig& overheads);

double emissions_from_energy(double mwh, double ef_region);

// (P/theta) * PUE * A_time * EF, scaled to tCO2e per 1e18 FLOP.
double atci_theoretical(const AcceleratorSpec& spec, const OverheadConfig& overheads,
                        double ef_region, ThetaConvention theta = ThetaConvention::Peak);

double atci_empirical(double emissions_t, double flops); // throws DivisionByZeroFlops

// Tier-1 estimation. Disclosed energy or emissions short-circuit; otherwise
// the direct-hours path, then the FLOPs backsolve path. Throws
// InsufficientMetadata when none applies (the record must be re-tiered).
EmissionEstimate estimate_tier1(const ModelRecord& record, const AcceleratorRegistry& registry,
                                const OverheadConfig& overheads);

} // namespace mlcarbon
