#pragma once

#include "asymptotics.hpp"
#include "common.hpp"
#include "counting.hpp"
#include "farey.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "words.hpp"
