#pragma once

#include "errors.hpp"
#include "identities.hpp"
#include "json_io.hpp"
#include "minimizer.hpp"
#include "recovery.hpp"
#include "representation.hpp"
#include "trop.hpp"
#include "words.hpp"
