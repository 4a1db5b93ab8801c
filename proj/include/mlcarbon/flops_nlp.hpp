#pragma once

#include "mlcarbon/records.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace mlcarbon {

// Architecture constant bounds for c * N_params * N_tokens.
inline constexpr double kMinArchConstant = 5.0;
inline constexpr double kMaxArchConstant = 12.0;

// 6 for encoder-only and decoder-only, 7 for encoder-decoder.
double default_arch_constant(std::string_view nlp_arch);

// Token count reconstructed from step geometry:
// steps * (world_size * grad_accum * seq_len * per_device_batch).
double tokens_from_steps(double steps, double world_size, double grad_accum,
                         double seq_len, double per_device_batch);

double nlp_train_flops(double n_params, double n_tokens, double c_arch);

// Frozen weights still pay forward-pass compute; alpha_frozen in [0.2, 0.5]
// is the amortized share of that cost.
double peft_train_flops(double n_frozen, double n_trainable, double n_tokens,
                        double c_arch, double alpha_frozen);

// Active parameters per token: dense + top_k experts over
// (total_experts / experts_per_layer) MoE layers.
double moe_active_params(double n_dense, double top_k, double experts_per_layer,
                         double total_experts, double per_expert_params);

// Routing/communication overhead multiplies the dense formula; alpha_route
// in [1.4, 2.0].
double moe_train_flops(double active_params, double n_tokens, double c_arch,
                       double alpha_route);

struct NlpFlopsResult {
    double flops = 0.0;
    std::string method; // dense | peft | moe
    std::string token_source; // explicit | dataset_epochs | step_geometry
};

// Applies the token-source priority (explicit tokens, then dataset size x
// epochs, then step geometry) and routes to the dense/PEFT/MoE formula based
// on the hints present. Returns nullopt when no token count is recoverable.
std::optional<NlpFlopsResult> estimate_nlp_flops(const ModelRecord& record);

} // namespace mlcarbon
