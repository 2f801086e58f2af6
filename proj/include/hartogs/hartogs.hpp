#pragma once

#include "domains.hpp"
#include "embeddings.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "jordan.hpp"
#include "octonion.hpp"
#include "potential.hpp"
#include "sampling.hpp"
#include "verification.hpp"
#include "version.hpp"
