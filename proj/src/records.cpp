#include "mlcarbon/records.hpp"

#include <algorithm>
#include <cctype>

namespace mlcarbon {

namespace {
std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}
} // namespace

std::string_view to_string(Modality m) {
    switch (m) {
        case Modality::NLP: return "NLP";
        case Modality::CV: return "CV";
        case Modality::MM: return "MM";
        case Modality::Audio: return "Audio";
    }
    return "NLP";
}

std::string_view to_string(Subtype s) {
    switch (s) {
        case Subtype::Foundation: return "foundation";
        case Subtype::Finetune: return "finetune";
        case Subtype::Instruct: return "instruct";
        case Subtype::Individual: return "individual";
    }
    return "foundation";
}

std::string_view to_string(TierAssignment t) {
    switch (t) {
        case TierAssignment::Tier1Direct: return "Tier1Direct";
        case TierAssignment::Tier1Flops: return "Tier1Flops";
        case TierAssignment::Tier2: return "Tier2";
        case TierAssignment::Tier3: return "Tier3";
        case TierAssignment::Insufficient: return "Insufficient";
    }
    return "Insufficient";
}

std::string_view to_string(QualityFlag f) {
    switch (f) {
        case QualityFlag::UnrealisticallyLow: return "unrealistically_low";
        case QualityFlag::UnrealisticallyHigh: return "unrealistically_high";
        case QualityFlag::InconsistentSources: return "inconsistent_sources";
    }
    return "inconsistent_sources";
}

std::optional<Modality> parse_modality(std::string_view s) {
    const std::string v = lower(s);
    if (v == "nlp") return Modality::NLP;
    if (v == "cv") return Modality::CV;
    if (v == "mm" || v == "multimodal" || v == "multi-modal") return Modality::MM;
    if (v == "audio") return Modality::Audio;
    return std::nullopt;
}

std::optional<Subtype> parse_subtype(std::string_view s) {
    const std::string v = lower(s);
    if (v == "foundation") return Subtype::Foundation;
    if (v == "finetune" || v == "fine-tune" || v == "finetuned") return Subtype::Finetune;
    if (v == "instruct" || v == "instruction") return Subtype::Instruct;
    if (v == "individual") return Subtype::Individual;
    return std::nullopt;
}

bool ModelRecord::disclosure_quarantined() const {
    return std::any_of(quality_flags.begin(), quality_flags.end(), [](QualityFlag f) {
        return f == QualityFlag::UnrealisticallyLow || f == QualityFlag::UnrealisticallyHigh;
    });
}

} // namespace mlcarbon
