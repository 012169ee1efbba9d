#pragma once

#include <stdexcept>
#include <string>

namespace qrel {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* kind() const noexcept { return "error"; }
};

#define QREL_DEFINE_ERROR(Name, Kind)                               \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& msg) : Error(msg) {}       \
        const char* kind() const noexcept override { return Kind; } \
    }

QREL_DEFINE_ERROR(ShapeError, "shape");
QREL_DEFINE_ERROR(InvalidInputError, "invalid_input");
QREL_DEFINE_ERROR(ParseError, "parse");
QREL_DEFINE_ERROR(ConfigError, "config");
QREL_DEFINE_ERROR(DatasetError, "dataset");
QREL_DEFINE_ERROR(ProtocolError, "protocol");
QREL_DEFINE_ERROR(MissingAssetError, "missing_asset");
QREL_DEFINE_ERROR(CheckpointError, "checkpoint");
QREL_DEFINE_ERROR(MetricError, "metric");

#undef QREL_DEFINE_ERROR

}  // namespace qrel
