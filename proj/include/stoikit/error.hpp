#pragma once

#include <stdexcept>
#include <string>

namespace stoikit {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define STOIKIT_DEFINE_ERROR(Name)                              \
  struct Name : Error {                                         \
    explicit Name(const std::string& msg) : Error(msg) {}       \
  }

// audio / signal
STOIKIT_DEFINE_ERROR(IoError);
STOIKIT_DEFINE_ERROR(NotWav);
STOIKIT_DEFINE_ERROR(UnsupportedFormat);
STOIKIT_DEFINE_ERROR(TruncatedFile);
STOIKIT_DEFINE_ERROR(WrongRate);
STOIKIT_DEFINE_ERROR(TooShort);
STOIKIT_DEFINE_ERROR(InconsistentConfig);

// stoi metric
STOIKIT_DEFINE_ERROR(LengthMismatch);
STOIKIT_DEFINE_ERROR(AllSilent);
STOIKIT_DEFINE_ERROR(TooShortAfterVad);

// corpus
STOIKIT_DEFINE_ERROR(BadDuration);
STOIKIT_DEFINE_ERROR(RateMismatch);
STOIKIT_DEFINE_ERROR(SilentClean);
STOIKIT_DEFINE_ERROR(SilentNoise);

// neural / model
STOIKIT_DEFINE_ERROR(ShapeMismatch);
STOIKIT_DEFINE_ERROR(GraphNotRecorded);
STOIKIT_DEFINE_ERROR(InvalidConfig);
STOIKIT_DEFINE_ERROR(NonFiniteValue);

// checkpoint
STOIKIT_DEFINE_ERROR(BadMagic);
STOIKIT_DEFINE_ERROR(VersionMismatch);
STOIKIT_DEFINE_ERROR(CorruptTensor);

// eval
STOIKIT_DEFINE_ERROR(DegenerateInput);
STOIKIT_DEFINE_ERROR(EmptySplit);

#undef STOIKIT_DEFINE_ERROR

}  // namespace stoikit
