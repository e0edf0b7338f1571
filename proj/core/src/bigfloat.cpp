#include "sinesum/bigfloat.hpp"

// BigFloat is header-only; this translation unit exists so the library always
// has at least one object file referencing the MPFR symbols it links against.
namespace sinesum {
namespace {
[[maybe_unused]] const long kMpfrDefault = mpfr_get_default_prec();
}
} // namespace sinesum
