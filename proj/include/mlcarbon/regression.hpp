#pragma once

#include "mlcarbon/accelerators.hpp"

#include <map>
#include <string>
#include <vector>

namespace mlcarbon {

// Term names used by the shipped models.
inline constexpr const char* kTermIntercept = "intercept";
inline constexpr const char* kTermLogFlops = "log_flops";
inline constexpr const char* kTermLogParams = "log_params";
inline constexpr const char* kTermLogEf = "log_ef";
inline constexpr const char* kTermHFamily = "acc_h_family";
inline constexpr const char* kTermOthers = "acc_others";
inline constexpr const char* kTermInstruct = "subtype_instruct";

struct RegressionRow {
    double log_response = 0.0;
    std::map<std::string, double> regressors; // intercept implicit
};

// Log-log linear model: prediction = exp(sum of coefficient * regressor).
// Logs are natural throughout. Missing terms contribute zero.
struct RegressionModel {
    std::vector<std::string> terms;
    std::map<std::string, double> coefficients;
    std::map<std::string, double> robust_se; // HC3

    double predict_log(const std::map<std::string, double>& regressors) const;
    double predict(const std::map<std::string, double>& regressors) const;
};

// OLS via column-pivoted QR with HC3 robust standard errors:
//   cov = (X'X)^-1 X' diag(e_i^2 / (1-h_ii)^2) X (X'X)^-1.
// All-zero regressor columns are dropped (unrepresented factor levels).
// Throws InsufficientRows / SingularDesign.
RegressionModel fit_ols_loglog(const std::vector<RegressionRow>& rows);

// Published coefficient sets.
RegressionModel default_tier2_model();
RegressionModel default_tier3_model();

struct RegressionModels {
    RegressionModel tier2;
    RegressionModel tier3;
};
RegressionModels load_regression_models(const std::string& json_path);

// exp(b0 + b1*ln flops + b2*ln ef + group effect). Throws NonpositiveInput.
double predict_tier2(double flops, double ef_region, HardwareGroup group,
                     const RegressionModel& model);
double predict_tier2(double flops, double ef_region, HardwareGroup group);

// exp(b0 + b1*ln params + b2*ln ef + instruct effect). Throws NonpositiveInput.
double predict_tier3(double params, double ef_region, bool is_instruct,
                     const RegressionModel& model);
double predict_tier3(double params, double ef_region, bool is_instruct);

} // namespace mlcarbon
