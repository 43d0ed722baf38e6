// Umbrella header: the whole library in one include.
#pragma once

#include <mes/rational.hpp>
#include <mes/words.hpp>
#include <mes/lincomb.hpp>
#include <mes/products.hpp>
#include <mes/operators.hpp>
#include <mes/rings.hpp>
#include <mes/mould.hpp>
#include <mes/goncharov.hpp>
#include <mes/linalg.hpp>
#include <mes/util.hpp>
#include <mes/relspaces.hpp>
#include <mes/json_io.hpp>
