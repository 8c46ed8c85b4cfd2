#pragma once

#include "serialize.hpp"

namespace edslab::cli {

json run_selftest(long prec);

}  // namespace edslab::cli
