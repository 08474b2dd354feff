#pragma once

#include "vortwave/branching.hpp"
#include "vortwave/errors.hpp"
#include "vortwave/field_eval.hpp"
#include "vortwave/integrate.hpp"
#include "vortwave/io.hpp"
#include "vortwave/particle_paths.hpp"
#include "vortwave/phase_portrait.hpp"
#include "vortwave/presets.hpp"
#include "vortwave/roots.hpp"
#include "vortwave/wave_core.hpp"
