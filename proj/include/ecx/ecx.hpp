#pragma once

#include "ecx/curve.hpp"
#include "ecx/errors.hpp"
#include "ecx/ext_field.hpp"
#include "ecx/extractors.hpp"
#include "ecx/keyflow.hpp"
#include "ecx/prime_field.hpp"
#include "ecx/rational.hpp"
#include "ecx/stat_lab.hpp"
