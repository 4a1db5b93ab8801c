#pragma once

#include "mlcarbon/accelerators.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mlcarbon {

enum class Modality { NLP, CV, MM, Audio };
enum class Subtype { Foundation, Finetune, Instruct, Individual };
enum class TierAssignment { Tier1Direct, Tier1Flops, Tier2, Tier3, Insufficient };
enum class QualityFlag { UnrealisticallyLow, UnrealisticallyHigh, InconsistentSources };
enum class HoursUnit { WallClock, DeviceHours };

std::string_view to_string(Modality m);
std::string_view to_string(Subtype s);
std::string_view to_string(TierAssignment t);
std::string_view to_string(QualityFlag f);
std::optional<Modality> parse_modality(std::string_view s);
std::optional<Subtype> parse_subtype(std::string_view s);

// One snapshot row as ingested: numerics still free text, unknown columns
// preserved in extras.
struct RawRecord {
    std::string repo_id;
    std::string author;
    long long downloads = 0;
    std::string created_at; // ISO date, e.g. "2023-07-18"
    Modality modality = Modality::NLP;
    Subtype subtype = Subtype::Foundation;

    std::string params;
    std::string tokens;
    std::string flops;
    std::string hardware;
    std::string device_count;
    std::string node_count;
    std::string training_hours;
    std::string hours_unit; // "wall" | "device"
    std::string region;
    std::string disclosed_ef;        // tCO2/MWh
    std::string disclosed_energy;    // MWh
    std::string disclosed_emissions; // tCO2e

    std::map<std::string, std::string> arch; // architecture descriptors
    std::vector<std::string> tags;
    std::map<std::string, std::string> extras;
};

struct PeftHints {
    double n_frozen = 0.0;
    double n_trainable = 0.0;
    double alpha_frozen = 0.35;
};

struct MoeHints {
    double n_dense = 0.0;
    double top_k = 0.0;
    double experts_per_layer = 0.0;
    double total_experts = 0.0;
    double per_expert_params = 0.0;
    double alpha_route = 1.4;
    std::optional<double> active_params; // disclosed directly, bypasses geometry
};

struct StepGeometryHints {
    double steps = 0.0;
    double world_size = 0.0;
    double grad_accum = 0.0;
    double seq_len = 0.0;
    double per_device_batch = 0.0;
};

struct VisionHints {
    std::string category; // vit | clip | diffusion | dit | cnn | transformer
    std::optional<double> image_h, image_w, patch_size, channels;
    std::optional<double> hidden_dim, layers, mlp_ratio;
    std::optional<double> epochs, images_per_epoch;
    std::optional<double> measured_step_macs; // CNN single-step MACs, precomputed upstream
    std::optional<double> unet_conv_macs, unet_self_attn_macs, unet_cross_attn_macs;
    std::optional<double> cross_attn_macs_per_block; // DiT
    std::optional<double> steps_per_image;           // diffusion denoising steps
};

// A RawRecord with numerics resolved, hardware normalized, EF assigned, and a
// tier attached.
struct ModelRecord {
    std::string repo_id;
    std::string author;
    long long downloads = 0;
    std::string created_at;
    int created_year = 0;
    Modality modality = Modality::NLP;
    Subtype subtype = Subtype::Foundation;

    std::optional<double> params;
    std::optional<double> tokens;
    std::optional<double> flops; // disclosed
    std::optional<double> device_count;
    std::optional<double> node_count;
    std::optional<double> training_hours;
    HoursUnit hours_unit = HoursUnit::WallClock;
    std::string region;
    std::optional<double> disclosed_ef;
    std::optional<double> disclosed_energy;
    std::optional<double> disclosed_emissions;

    NormalizedAccelerator accelerator;
    double ef_region = 0.0; // resolved, tCO2/MWh
    std::string ef_source;  // disclosed | region | org_override | global_default

    std::string nlp_arch; // encoder_only | decoder_only | encoder_decoder
    std::optional<double> tokens_per_epoch;
    std::optional<double> epochs;
    std::optional<PeftHints> peft;
    std::optional<MoeHints> moe;
    std::optional<StepGeometryHints> step_geometry;
    std::optional<VisionHints> vision;

    TierAssignment tier = TierAssignment::Insufficient;
    std::vector<QualityFlag> quality_flags;
    std::vector<std::string> notes;

    bool disclosure_quarantined() const; // low/high flag present
};

} // namespace mlcarbon
