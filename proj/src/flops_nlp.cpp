#include "mlcarbon/flops_nlp.hpp"

#include "mlcarbon/errors.hpp"

namespace mlcarbon {

double default_arch_constant(std::string_view nlp_arch) {
    return nlp_arch == "encoder_decoder" ? 7.0 : 6.0;
}

double tokens_from_steps(double steps, double world_size, double grad_accum,
                         double seq_len, double per_device_batch) {
    return steps * (world_size * grad_accum * seq_len * per_device_batch);
}

double nlp_train_flops(double n_params, double n_tokens, double c_arch) {
    return c_arch * n_params * n_tokens;
}

double peft_train_flops(double n_frozen, double n_trainable, double n_tokens,
                        double c_arch, double alpha_frozen) {
    return c_arch * (alpha_frozen * n_frozen + n_trainable) * n_tokens;
}

double moe_active_params(double n_dense, double top_k, double experts_per_layer,
                         double total_experts, double per_expert_params) {
    if (experts_per_layer <= 0.0) {
        throw InvalidMoEGeometry("experts_per_layer must be > 0");
    }
    const double moe_layers = total_experts / experts_per_layer;
    return n_dense + top_k * moe_layers * per_expert_params;
}

double moe_train_flops(double active_params, double n_tokens, double c_arch,
                       double alpha_route) {
    return alpha_route * c_arch * active_params * n_tokens;
}

std::optional<NlpFlopsResult> estimate_nlp_flops(const ModelRecord& record) {
    NlpFlopsResult result;

    std::optional<double> tokens;
    if (record.tokens && *record.tokens > 0.0) {
        tokens = record.tokens;
        result.token_source = "explicit";
    } else if (record.tokens_per_epoch && record.epochs && *record.tokens_per_epoch > 0.0 &&
               *record.epochs > 0.0) {
        tokens = *record.tokens_per_epoch * *record.epochs;
        result.token_source = "dataset_epochs";
    } else if (record.step_geometry) {
        const auto& g = *record.step_geometry;
        if (g.steps > 0 && g.world_size > 0 && g.grad_accum > 0 && g.seq_len > 0 &&
            g.per_device_batch > 0) {
            tokens = tokens_from_steps(g.steps, g.world_size, g.grad_accum, g.seq_len,
                                       g.per_device_batch);
            result.token_source = "step_geometry";
        }
    }
    if (!tokens) {
        return std::nullopt;
    }

    const double c_arch = default_arch_constant(record.nlp_arch);
    if (record.moe) {
        const auto& moe = *record.moe;
        const double active = moe.active_params
                                  ? *moe.active_params
                                  : moe_active_params(moe.n_dense, moe.top_k, moe.experts_per_layer,
                                                      moe.total_experts, moe.per_expert_params);
        result.flops = moe_train_flops(active, *tokens, c_arch, moe.alpha_route);
        result.method = "moe";
        return result;
    }
    if (record.peft) {
        const auto& peft = *record.peft;
        result.flops = peft_train_flops(peft.n_frozen, peft.n_trainable, *tokens, c_arch,
                                        peft.alpha_frozen);
        result.method = "peft";
        return result;
    }
    if (!record.params || *record.params <= 0.0) {
        return std::nullopt;
    }
    result.flops = nlp_train_flops(*record.params, *tokens, c_arch);
    result.method = "dense";
    return result;
}

} // namespace mlcarbon
