#pragma once

#include <stdexcept>
#include <string>

namespace mlcarbon {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parsing / ingest
struct UnparseableQuantity : Error {
    explicit UnparseableQuantity(const std::string& text)
        : Error("unparseable quantity: '" + text + "'") {}
};
struct SchemaError : Error {
    using Error::Error;
};
struct MissingDisclosure : Error {
    using Error::Error;
};

// Registry
struct UnknownFamily : Error {
    explicit UnknownFamily(const std::string& family)
        : Error("unknown accelerator family: '" + family + "'") {}
};

// FLOPs estimation
struct InvalidMoEGeometry : Error {
    using Error::Error;
};
struct PatchMismatch : Error {
    using Error::Error;
};
struct EmptyCategory : Error {
    using Error::Error;
};

// Emission engine
struct InsufficientMetadata : Error {
    using Error::Error;
};
struct DivisionByZeroFlops : Error {
    DivisionByZeroFlops() : Error("flops must be > 0 for ATCI") {}
};

// Statistics
struct SingularDesign : Error {
    using Error::Error;
};
struct InsufficientRows : Error {
    using Error::Error;
};
struct NonpositiveInput : Error {
    using Error::Error;
};
struct SharesNotNormalized : Error {
    using Error::Error;
};

// Reporting
struct YearOutOfRange : Error {
    using Error::Error;
};
struct EmptyAfterTrim : Error {
    using Error::Error;
};
struct InsufficientTier1 : Error {
    using Error::Error;
};

} // namespace mlcarbon
