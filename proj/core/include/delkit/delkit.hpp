#pragma once

#include "delkit/bitstring.hpp"
#include "delkit/budget.hpp"
#include "delkit/embed.hpp"
#include "delkit/entropy.hpp"
#include "delkit/error.hpp"
#include "delkit/exact.hpp"
#include "delkit/mask.hpp"
#include "delkit/rle.hpp"
#include "delkit/space.hpp"
