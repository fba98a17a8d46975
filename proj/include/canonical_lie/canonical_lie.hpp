#pragma once

#include <canonical_lie/exactlin.hpp>
#include <canonical_lie/liegraded.hpp>
#include <canonical_lie/sonreal.hpp>
#include <canonical_lie/canonical.hpp>
#include <canonical_lie/io.hpp>
