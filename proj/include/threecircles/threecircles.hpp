#pragma once

#include "threecircles/rational.hpp"
#include "threecircles/polynomial.hpp"
#include "threecircles/signs.hpp"
#include "threecircles/normal.hpp"
#include "threecircles/regions.hpp"
#include "threecircles/isolator.hpp"
#include "threecircles/certcheck.hpp"
#include "threecircles/campaign.hpp"
#include "threecircles/serialization.hpp"
#include "threecircles/svg.hpp"
