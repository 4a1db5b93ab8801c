#pragma once

#include "mlcarbon/records.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mlcarbon {

struct VitConfig {
    double image_h = 0.0;
    double image_w = 0.0;
    double patch_size = 0.0;
    double channels = 3.0;
    double hidden_dim = 0.0;
    double layers = 0.0;
    double mlp_ratio = 4.0;
    double epochs = 0.0;
    double images_per_epoch = 0.0;
};

// Token count including the class token: H*W/P^2 + 1.
double vit_token_count(const VitConfig& cfg);

// Single forward-step MACs: H*W*C*d + L*[(4 + 2r)*N*d^2 + 2*N^2*d].
// Throws PatchMismatch when the patch size does not divide H and W.
double vit_step_macs(const VitConfig& cfg);

// Training FLOPs are six times MACs (3x training procedure, 2x MAC->FLOP),
// scaled by epochs and images per epoch.
double vit_train_flops(double step_macs, double epochs, double images_per_epoch);

// The text branch adds 10% on top of the vision branch.
double clip_train_flops(double vit_flops);

struct UNetLayerSpec {
    double conv_macs = 0.0;
    double self_attn_macs = 0.0;
    double cross_attn_macs = 0.0;
};

double diffusion_train_flops(std::span<const UNetLayerSpec> layers, double epochs,
                             double images_per_epoch, double steps_per_image = 1.0);

// ViT-like stack with optional per-block cross-attention.
double dit_train_flops(const VitConfig& cfg, double cross_attn_macs_per_block,
                       double epochs, double images_per_epoch);

double mm_transformer_flops(double n_params, double n_tokens);

// Per-category prototype configurations used to fill missing fields.
struct PrototypeTable {
    std::map<std::string, VisionHints> by_category;

    static PrototypeTable builtin();
    static PrototypeTable from_file(const std::string& path); // key-value format
    const VisionHints* find(const std::string& category) const;
};

// Fills missing fields of `partial` from the category prototype. Fields that
// are present are never overwritten. Throws EmptyCategory when the category
// has no prototype.
VisionHints impute_from_prototype(const VisionHints& partial, const std::string& category,
                                  const PrototypeTable& prototypes);

struct VisionFlopsResult {
    double flops = 0.0;
    std::string method;                // vit | clip | diffusion | dit | cnn | transformer
    bool prototype_imputed = false;    // some fields came from the prototype
};

// Routes a record through the architecture-specific estimators, imputing
// missing config fields from the prototype table. Returns nullopt when the
// category cannot produce an estimate (caller may fall back to the category
// mean).
std::optional<VisionFlopsResult> estimate_vision_flops(const ModelRecord& record,
                                                       const PrototypeTable& prototypes);

// Mean FLOPs of completed models per category; EmptyCategory when none exist.
class CategoryMeans {
public:
    void add(const std::string& category, double flops);
    double mean(const std::string& category) const;
    bool has(const std::string& category) const;

private:
    std::map<std::string, std::pair<double, std::size_t>> sums_;
};

} // namespace mlcarbon
