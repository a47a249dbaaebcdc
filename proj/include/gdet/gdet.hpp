#pragma once

#include "gdet/integer.hpp"
#include "gdet/group.hpp"
#include "gdet/ring.hpp"
#include "gdet/expr.hpp"
#include "gdet/determinant.hpp"
#include "gdet/s4_forms.hpp"
#include "gdet/s4.hpp"
#include "gdet/sympoly.hpp"
#include "gdet/reps.hpp"
#include "gdet/classify.hpp"
#include "gdet/witness.hpp"
#include "gdet/json_io.hpp"
#include "gdet/harness.hpp"
