#include "mlcarbon/accelerators.hpp"

#include "mlcarbon/errors.hpp"
#include "mlcarbon/quantity.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>

namespace mlcarbon {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

constexpr struct {
    const char* family;
    double peak_flops;
    double avg_power_w;
    double efficiency;
} kBuiltinFamilies[] = {
    {"A100", 3.12e14, 400.0, 0.35},
    {"A100_80GB", 3.12e14, 400.0, 0.35},
    {"A100_64GB", 3.12e14, 400.0, 0.35},
    {"A800", 3.12e14, 350.0, 0.30},
    {"H100", 9.89e14, 600.0, 0.45},
    {"H200", 1.00e15, 650.0, 0.45},
    {"H800", 8.00e14, 550.0, 0.40},
    {"V100", 1.25e14, 300.0, 0.25},
    {"T4", 6.5e13, 70.0, 0.20},
    {"L4", 1.20e14, 75.0, 0.25},
    {"A40", 3.00e14, 300.0, 0.25},
    {"A30", 1.65e14, 300.0, 0.25},
    {"RTX_6000_ADA", 1.45e14, 300.0, 0.25},
    {"MI250X", 3.83e14, 560.0, 0.30},
    {"MI300X", 1.20e15, 750.0, 0.40},
    {"TPU_V2", 4.5e13, 120.0, 0.25},
    {"TPU_V3", 1.23e14, 187.0, 0.35},
    {"TPU_V4", 2.75e14, 220.0, 0.45},
    {"TPU_V5E", 8.0e13, 120.0, 0.35},
    {"TPU_V5P", 2.90e14, 280.0, 0.45},
};

} // namespace

std::string_view to_string(HardwareGroup g) {
    switch (g) {
        case HardwareGroup::AFamily: return "A_family";
        case HardwareGroup::HFamily: return "H_family";
        case HardwareGroup::Others: return "Others";
    }
    return "Others";
}

HardwareGroup hardware_group(std::string_view family) {
    if (family == "A100" || family == "A100_80GB" || family == "A100_64GB" || family == "A800") {
        return HardwareGroup::AFamily;
    }
    if (family == "H100" || family == "H200" || family == "H800") {
        return HardwareGroup::HFamily;
    }
    return HardwareGroup::Others;
}

AcceleratorRegistry AcceleratorRegistry::builtin() {
    AcceleratorRegistry reg;
    for (const auto& row : kBuiltinFamilies) {
        reg.specs_.emplace(row.family,
                           AcceleratorSpec{row.family, row.peak_flops, row.avg_power_w, row.efficiency});
    }
    return reg;
}

const AcceleratorSpec& AcceleratorRegistry::lookup(std::string_view family) const {
    const auto it = specs_.find(family);
    if (it == specs_.end()) {
        throw UnknownFamily(std::string(family));
    }
    return it->second;
}

bool AcceleratorRegistry::contains(std::string_view family) const {
    return specs_.find(family) != specs_.end();
}

std::vector<std::string> AcceleratorRegistry::families() const {
    std::vector<std::string> out;
    out.reserve(specs_.size());
    for (const auto& [name, spec] : specs_) {
        out.push_back(name);
    }
    return out;
}

void AcceleratorRegistry::upsert(AcceleratorSpec spec) {
    specs_[spec.family] = std::move(spec);
}

namespace {

// TPU pod descriptors: "v4-128", "tpuv3-8", "tpu v5e-64".
const std::regex kTpuPodRe(R"(v\s*(2|3|4|5e|5p)\s*(?:pod)?\s*-\s*(\d+))", std::regex::icase);
const std::regex kTpuGenRe(R"(v\s*(2|3|4|5e|5p)\b)", std::regex::icase);
// Leading device multiplicity: "8x A100", "16 x H100", "4× V100".
const std::regex kCountPrefixRe(R"(^\s*(\d+)\s*(?:x|\xC3\x97)\s+)", std::regex::icase);

std::string tpu_family_for(const std::string& gen_lower) {
    if (gen_lower == "2") return "TPU_V2";
    if (gen_lower == "3") return "TPU_V3";
    if (gen_lower == "4") return "TPU_V4";
    if (gen_lower == "5e") return "TPU_V5E";
    if (gen_lower == "5p") return "TPU_V5P";
    return "TPU_V3";
}

bool contains_token(const std::string& text, const std::string& token) {
    std::size_t pos = 0;
    const auto is_word = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0;
    };
    while ((pos = text.find(token, pos)) != std::string::npos) {
        const bool left_ok = pos == 0 || !is_word(text[pos - 1]);
        const std::size_t end = pos + token.size();
        const bool right_ok = end >= text.size() || !is_word(text[end]);
        if (left_ok && right_ok) {
            return true;
        }
        ++pos;
    }
    return false;
}

} // namespace

NormalizedAccelerator normalize_accelerator(std::string_view hardware_text, bool is_tpu_hint) {
    const std::string text = lower(hardware_text);
    NormalizedAccelerator out;

    std::smatch m;
    if (std::regex_search(text, m, kCountPrefixRe)) {
        out.device_count = std::stoi(m[1].str());
    }

    const bool mentions_tpu = text.find("tpu") != std::string::npos;
    if (mentions_tpu || is_tpu_hint) {
        if (std::regex_search(text, m, kTpuPodRe)) {
            out.family = tpu_family_for(lower(m[1].str()));
            out.device_count = std::stoi(m[2].str());
            return out;
        }
        if (std::regex_search(text, m, kTpuGenRe)) {
            out.family = tpu_family_for(lower(m[1].str()));
            return out;
        }
        out.family = "TPU_V3"; // mid-range default for unresolved TPU text
        out.imputed = true;
        return out;
    }

    struct Rule {
        const char* needle;
        const char* family;
        bool token; // match on word boundaries instead of substring
    };
    // Ordered most-specific first.
    static const Rule kRules[] = {
        {"a100 80", "A100_80GB", false}, {"a100-80", "A100_80GB", false}, {"a100_80", "A100_80GB", false},
        {"a100 64", "A100_64GB", false}, {"a100-64", "A100_64GB", false}, {"a100_64", "A100_64GB", false},
        {"a100", "A100", false},
        {"a800", "A800", false},
        {"h100", "H100", false},
        {"h200", "H200", false},
        {"h800", "H800", false},
        {"v100", "V100", false},
        {"a40", "A40", true},
        {"a30", "A30", true},
        {"rtx 6000 ada", "RTX_6000_ADA", false},
        {"rtx6000", "RTX_6000_ADA", false},
        {"rtx 6000", "RTX_6000_ADA", false},
        {"a6000", "RTX_6000_ADA", false},
        {"mi250", "MI250X", false},
        {"mi300", "MI300X", false},
        {"t4", "T4", true},
        {"l4", "L4", true},
    };
    for (const auto& rule : kRules) {
        const bool hit = rule.token ? contains_token(text, rule.needle)
                                    : text.find(rule.needle) != std::string::npos;
        if (hit) {
            out.family = rule.family;
            return out;
        }
    }

    // Bare pod strings like "v4-128" occur without the word "tpu".
    if (std::regex_search(text, m, kTpuPodRe)) {
        out.family = tpu_family_for(lower(m[1].str()));
        out.device_count = std::stoi(m[2].str());
        return out;
    }

    out.family = "A100"; // representative datacenter GPU
    out.imputed = true;
    return out;
}

void load_estimator_config(const std::string& path, AcceleratorRegistry& registry, OverheadConfig& overheads) {
    std::ifstream in(path);
    if (!in) {
        throw SchemaError("cannot open config file: " + path);
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            continue; // blank or comment-only line
        }
        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty()) {
            throw SchemaError("config line " + std::to_string(lineno) + ": empty key");
        }
        const auto parsed = try_parse_quantity(value);
        if (!parsed) {
            throw SchemaError("config line " + std::to_string(lineno) + ": bad value '" + value + "'");
        }
        const double v = *parsed;

        if (key == "pue") {
            overheads.pue = v;
        } else if (key == "a_time") {
            overheads.a_time = v;
        } else if (key == "it_overhead_fraction") {
            overheads.it_overhead_fraction = v;
        } else if (key == "node_fixed_power_w") {
            overheads.node_fixed_power_w = v;
        } else if (key == "node_network_power_w") {
            overheads.node_network_power_w = v;
        } else if (key.rfind("accelerator.", 0) == 0) {
            const auto rest = key.substr(12);
            const auto dot = rest.find('.');
            if (dot == std::string::npos) {
                throw SchemaError("config line " + std::to_string(lineno) +
                                  ": expected accelerator.<FAMILY>.<field>");
            }
            const std::string family = rest.substr(0, dot);
            const std::string field = rest.substr(dot + 1);
            AcceleratorSpec spec = registry.contains(family)
                                       ? registry.lookup(family)
                                       : AcceleratorSpec{family, 0.0, 0.0, 0.0};
            if (field == "peak_flops") {
                spec.peak_flops = v;
            } else if (field == "avg_power_w") {
                spec.avg_power_w = v;
            } else if (field == "efficiency") {
                spec.efficiency = v;
            } else {
                throw SchemaError("config line " + std::to_string(lineno) + ": unknown field '" + field + "'");
            }
            registry.upsert(std::move(spec));
        } else {
            throw SchemaError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (overheads.pue < 1.0 || overheads.a_time < 1.0) {
        throw SchemaError("config: pue and a_time must be >= 1");
    }
}

} // namespace mlcarbon
