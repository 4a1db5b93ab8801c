#include "mlcarbon/flops_vision.hpp"

#include "mlcarbon/errors.hpp"
#include "mlcarbon/quantity.hpp"

#include <cmath>
#include <fstream>
#include <numeric>

namespace mlcarbon {

double vit_token_count(const VitConfig& cfg) {
    return (cfg.image_h * cfg.image_w) / (cfg.patch_size * cfg.patch_size) + 1.0;
}

double vit_step_macs(const VitConfig& cfg) {
    if (cfg.patch_size <= 0.0 || std::fmod(cfg.image_h, cfg.patch_size) != 0.0 ||
        std::fmod(cfg.image_w, cfg.patch_size) != 0.0) {
        throw PatchMismatch("patch size " + canonical_quantity(cfg.patch_size) +
                            " does not tile " + canonical_quantity(cfg.image_h) + "x" +
                            canonical_quantity(cfg.image_w));
    }
    const double n = vit_token_count(cfg);
    const double d = cfg.hidden_dim;
    const double embed = cfg.image_h * cfg.image_w * cfg.channels * d;
    const double block = (4.0 + 2.0 * cfg.mlp_ratio) * n * d * d + 2.0 * n * n * d;
    return embed + cfg.layers * block;
}

double vit_train_flops(double step_macs, double epochs, double images_per_epoch) {
    return 6.0 * epochs * images_per_epoch * step_macs;
}

double clip_train_flops(double vit_flops) {
    return 1.1 * vit_flops;
}

double diffusion_train_flops(std::span<const UNetLayerSpec> layers, double epochs,
                             double images_per_epoch, double steps_per_image) {
    double step_macs = 0.0;
    for (const auto& layer : layers) {
        step_macs += layer.conv_macs + layer.self_attn_macs + layer.cross_attn_macs;
    }
    return 6.0 * epochs * images_per_epoch * steps_per_image * step_macs;
}

double dit_train_flops(const VitConfig& cfg, double cross_attn_macs_per_block,
                       double epochs, double images_per_epoch) {
    const double base = vit_step_macs(cfg);
    const double step_macs = base + cfg.layers * cross_attn_macs_per_block;
    return 6.0 * epochs * images_per_epoch * step_macs;
}

double mm_transformer_flops(double n_params, double n_tokens) {
    return 6.0 * n_params * n_tokens;
}

PrototypeTable PrototypeTable::builtin() {
    PrototypeTable table;

    VisionHints vit;
    vit.category = "vit";
    vit.image_h = 224;
    vit.image_w = 224;
    vit.patch_size = 16;
    vit.channels = 3;
    vit.hidden_dim = 768;
    vit.layers = 12;
    vit.mlp_ratio = 4;
    vit.epochs = 90;
    vit.images_per_epoch = 1.4e7;
    table.by_category["vit"] = vit;

    VisionHints clip = vit;
    clip.category = "clip";
    clip.epochs = 32;
    clip.images_per_epoch = 4.0e8;
    table.by_category["clip"] = clip;

    VisionHints diffusion;
    diffusion.category = "diffusion";
    diffusion.unet_conv_macs = 6.0e11;
    diffusion.unet_self_attn_macs = 8.0e10;
    diffusion.unet_cross_attn_macs = 6.0e10;
    diffusion.steps_per_image = 1;
    diffusion.epochs = 1;
    diffusion.images_per_epoch = 2.0e9;
    table.by_category["diffusion"] = diffusion;

    VisionHints dit;
    dit.category = "dit";
    dit.image_h = 32;
    dit.image_w = 32;
    dit.patch_size = 2;
    dit.channels = 4;
    dit.hidden_dim = 1152;
    dit.layers = 28;
    dit.mlp_ratio = 4;
    dit.cross_attn_macs_per_block = 0;
    dit.epochs = 1;
    dit.images_per_epoch = 1.8e9;
    table.by_category["dit"] = dit;

    VisionHints cnn;
    cnn.category = "cnn";
    cnn.measured_step_macs = 4.1e9;
    cnn.epochs = 90;
    cnn.images_per_epoch = 1.28e6;
    table.by_category["cnn"] = cnn;

    return table;
}

PrototypeTable PrototypeTable::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SchemaError("cannot open prototype file: " + path);
    }
    PrototypeTable table = builtin();
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
            continue;
        }
        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        const auto dot = key.find('.');
        if (dot == std::string::npos) {
            throw SchemaError("prototype line " + std::to_string(lineno) +
                              ": expected <category>.<field> = <value>");
        }
        const std::string category = key.substr(0, dot);
        const std::string field = key.substr(dot + 1);
        const auto parsed = try_parse_quantity(value);
        if (!parsed) {
            throw SchemaError("prototype line " + std::to_string(lineno) + ": bad value '" + value + "'");
        }
        VisionHints& proto = table.by_category[category];
        proto.category = category;
        if (field == "image_h") proto.image_h = *parsed;
        else if (field == "image_w") proto.image_w = *parsed;
        else if (field == "patch_size") proto.patch_size = *parsed;
        else if (field == "channels") proto.channels = *parsed;
        else if (field == "hidden_dim") proto.hidden_dim = *parsed;
        else if (field == "layers") proto.layers = *parsed;
        else if (field == "mlp_ratio") proto.mlp_ratio = *parsed;
        else if (field == "epochs") proto.epochs = *parsed;
        else if (field == "images_per_epoch") proto.images_per_epoch = *parsed;
        else if (field == "measured_step_macs") proto.measured_step_macs = *parsed;
        else if (field == "unet_conv_macs") proto.unet_conv_macs = *parsed;
        else if (field == "unet_self_attn_macs") proto.unet_self_attn_macs = *parsed;
        else if (field == "unet_cross_attn_macs") proto.unet_cross_attn_macs = *parsed;
        else if (field == "cross_attn_macs_per_block") proto.cross_attn_macs_per_block = *parsed;
        else if (field == "steps_per_image") proto.steps_per_image = *parsed;
        else {
            throw SchemaError("prototype line " + std::to_string(lineno) + ": unknown field '" + field + "'");
        }
    }
    return table;
}

const VisionHints* PrototypeTable::find(const std::string& category) const {
    const auto it = by_category.find(category);
    return it == by_category.end() ? nullptr : &it->second;
}

namespace {

bool fill(std::optional<double>& dst, const std::optional<double>& src, bool& imputed) {
    if (!dst && src) {
        dst = src;
        imputed = true;
    }
    return dst.has_value();
}

} // namespace

VisionHints impute_from_prototype(const VisionHints& partial, const std::string& category,
                                  const PrototypeTable& prototypes) {
    const VisionHints* proto = prototypes.find(category);
    if (!proto) {
        throw EmptyCategory("no prototype for category '" + category + "'");
    }
    VisionHints out = partial;
    out.category = category;
    bool imputed = false;
    fill(out.image_h, proto->image_h, imputed);
    fill(out.image_w, proto->image_w, imputed);
    fill(out.patch_size, proto->patch_size, imputed);
    fill(out.channels, proto->channels, imputed);
    fill(out.hidden_dim, proto->hidden_dim, imputed);
    fill(out.layers, proto->layers, imputed);
    fill(out.mlp_ratio, proto->mlp_ratio, imputed);
    fill(out.epochs, proto->epochs, imputed);
    fill(out.images_per_epoch, proto->images_per_epoch, imputed);
    fill(out.measured_step_macs, proto->measured_step_macs, imputed);
    fill(out.unet_conv_macs, proto->unet_conv_macs, imputed);
    fill(out.unet_self_attn_macs, proto->unet_self_attn_macs, imputed);
    fill(out.unet_cross_attn_macs, proto->unet_cross_attn_macs, imputed);
    fill(out.cross_attn_macs_per_block, proto->cross_attn_macs_per_block, imputed);
    fill(out.steps_per_image, proto->steps_per_image, imputed);
    return out;
}

std::optional<VisionFlopsResult> estimate_vision_flops(const ModelRecord& record,
                                                       const PrototypeTable& prototypes) {
    if (!record.vision || record.vision->category.empty()) {
        return std::nullopt;
    }
    const std::string& category = record.vision->category;

    if (category == "transformer") {
        if (record.params && record.tokens && *record.params > 0.0 && *record.tokens > 0.0) {
            return VisionFlopsResult{mm_transformer_flops(*record.params, *record.tokens),
                                     "transformer", false};
        }
        return std::nullopt;
    }

    if (!prototypes.find(category)) {
        return std::nullopt;
    }
    VisionHints hints = impute_from_prototype(*record.vision, category, prototypes);
    const bool imputed = [&] {
        // Any field present in the completed hints but absent in the input
        // came from the prototype.
        const auto& a = *record.vision;
        auto differs = [](const std::optional<double>& before, const std::optional<double>& after) {
            return !before.has_value() && after.has_value();
        };
        return differs(a.image_h, hints.image_h) || differs(a.image_w, hints.image_w) ||
               differs(a.patch_size, hints.patch_size) || differs(a.hidden_dim, hints.hidden_dim) ||
               differs(a.layers, hints.layers) || differs(a.mlp_ratio, hints.mlp_ratio) ||
               differs(a.epochs, hints.epochs) || differs(a.images_per_epoch, hints.images_per_epoch) ||
               differs(a.measured_step_macs, hints.measured_step_macs) ||
               differs(a.unet_conv_macs, hints.unet_conv_macs) ||
               differs(a.unet_self_attn_macs, hints.unet_self_attn_macs) ||
               differs(a.unet_cross_attn_macs, hints.unet_cross_attn_macs) ||
               differs(a.cross_attn_macs_per_block, hints.cross_attn_macs_per_block) ||
               differs(a.steps_per_image, hints.steps_per_image);
    }();

    const double epochs = hints.epochs.value_or(0.0);
    const double images = hints.images_per_epoch.value_or(0.0);
    if (epochs <= 0.0 || images < 0.0) {
        return std::nullopt;
    }

    auto vit_config = [&]() -> std::optional<VitConfig> {
        if (!hints.image_h || !hints.image_w || !hints.patch_size || !hints.hidden_dim ||
            !hints.layers) {
            return std::nullopt;
        }
        VitConfig cfg;
        cfg.image_h = *hints.image_h;
        cfg.image_w = *hints.image_w;
        cfg.patch_size = *hints.patch_size;
        cfg.channels = hints.channels.value_or(3.0);
        cfg.hidden_dim = *hints.hidden_dim;
        cfg.layers = *hints.layers;
        cfg.mlp_ratio = hints.mlp_ratio.value_or(4.0);
        cfg.epochs = epochs;
        cfg.images_per_epoch = images;
        return cfg;
    };

    if (category == "vit" || category == "clip") {
        const auto cfg = vit_config();
        if (!cfg) {
            return std::nullopt;
        }
        const double flops = vit_train_flops(vit_step_macs(*cfg), epochs, images);
        if (category == "clip") {
            return VisionFlopsResult{clip_train_flops(flops), "clip", imputed};
        }
        return VisionFlopsResult{flops, "vit", imputed};
    }
    if (category == "dit") {
        const auto cfg = vit_config();
        if (!cfg) {
            return std::nullopt;
        }
        const double ca = hints.cross_attn_macs_per_block.value_or(0.0);
        return VisionFlopsResult{dit_train_flops(*cfg, ca, epochs, images), "dit", imputed};
    }
    if (category == "diffusion") {
        if (!hints.unet_conv_macs && !hints.unet_self_attn_macs && !hints.unet_cross_attn_macs) {
            return std::nullopt;
        }
        const UNetLayerSpec total{hints.unet_conv_macs.value_or(0.0),
                                  hints.unet_self_attn_macs.value_or(0.0),
                                  hints.unet_cross_attn_macs.value_or(0.0)};
        const double steps = hints.steps_per_image.value_or(1.0);
        return VisionFlopsResult{
            diffusion_train_flops(std::span(&total, 1), epochs, images, steps), "diffusion", imputed};
    }
    if (category == "cnn") {
        if (!hints.measured_step_macs || *hints.measured_step_macs < 0.0) {
            return std::nullopt;
        }
        return VisionFlopsResult{6.0 * epochs * images * *hints.measured_step_macs, "cnn", imputed};
    }
    return std::nullopt;
}

void CategoryMeans::add(const std::string& category, double flops) {
    auto& [sum, count] = sums_[category];
    sum += flops;
    ++count;
}

double CategoryMeans::mean(const std::string& category) const {
    const auto it = sums_.find(category);
    if (it == sums_.end() || it->second.second == 0) {
        throw EmptyCategory("no completed models in category '" + category + "'");
    }
    return it->second.first / static_cast<double>(it->second.second);
}

bool CategoryMeans::has(const std::string& category) const {
    const auto it = sums_.find(category);
    return it != sums_.end() && it->second.second > 0;
}

} // namespace mlcarbon
