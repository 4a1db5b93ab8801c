#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mlcarbon {

// Canonical accelerator family with peak throughput, average draw, and
// achieved/peak utilization efficiency.
struct AcceleratorSpec {
    std::string family;
    double peak_flops = 0.0;  // FLOP/s
    double avg_power_w = 0.0; // watts
    double efficiency = 0.0;  // achieved / peak throughput, in (0, 1]
};

// Cluster-level constants applied on top of accelerator draw.
struct OverheadConfig {
    double it_overhead_fraction = 0.20; // CPU/RAM/NIC, relative to accelerator draw
    double node_fixed_power_w = 250.0;
    double node_network_power_w = 100.0;
    double pue = 1.2;
    double a_time = 1.0; // runtime amplification, >= 1
};

enum class HardwareGroup { AFamily, HFamily, Others };

std::string_view to_string(HardwareGroup g);
HardwareGroup hardware_group(std::string_view family);

class AcceleratorRegistry {
public:
    // Registry preloaded with the 20 canonical families.
    static AcceleratorRegistry builtin();

    const AcceleratorSpec& lookup(std::string_view family) const; // throws UnknownFamily
    bool contains(std::string_view family) const;
    std::vector<std::string> families() const;
    void upsert(AcceleratorSpec spec);

private:
    std::map<std::string, AcceleratorSpec, std::less<>> specs_;
};

struct NormalizedAccelerator {
    std::string family;
    std::optional<int> device_count; // from pod descriptors or "8x ..." prefixes
    bool imputed = false;            // true when the text did not resolve
};

// Maps free-form hardware strings onto registry families. Total: unresolvable
// GPU text falls back to A100, unresolvable TPU text to TPU_V3, with the
// imputed marker carrying the degradation info.
NormalizedAccelerator normalize_accelerator(std::string_view hardware_text, bool is_tpu_hint = false);

// Loads "key = value" lines overriding overheads and registry rows, e.g.
//   pue = 1.25
//   accelerator.H100.avg_power_w = 650
void load_estimator_config(const std::string& path, AcceleratorRegistry& registry, OverheadConfig& overheads);

} // namespace mlcarbon
