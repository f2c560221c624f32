#pragma once

// Umbrella header: the full library minus the CLI driver.

#include "corpus.hpp"
#include "io.hpp"
#include "verify.hpp"
