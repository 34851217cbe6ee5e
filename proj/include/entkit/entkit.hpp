#pragma once

#include "entkit/concurrence.hpp"
#include "entkit/entangler.hpp"
#include "entkit/errors.hpp"
#include "entkit/json_io.hpp"
#include "entkit/matrix.hpp"
#include "entkit/phase_povm.hpp"
#include "entkit/random.hpp"
#include "entkit/state.hpp"
