#pragma once

#include "transorder/distance.hpp"
#include "transorder/error.hpp"
#include "transorder/factoradic.hpp"
#include "transorder/seed.hpp"
#include "transorder/stream.hpp"
#include "transorder/unrank.hpp"
#include "transorder/verify.hpp"
