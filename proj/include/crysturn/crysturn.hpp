#pragma once

#include "crysturn/affine.hpp"
#include "crysturn/automorphism.hpp"
#include "crysturn/catalog.hpp"
#include "crysturn/closed_forms.hpp"
#include "crysturn/cryst_group.hpp"
#include "crysturn/error.hpp"
#include "crysturn/linalg.hpp"
#include "crysturn/matrix.hpp"
#include "crysturn/number.hpp"
#include "crysturn/point_group.hpp"
#include "crysturn/reidemeister.hpp"
#include "crysturn/spectrum_description.hpp"
#include "crysturn/standard_groups.hpp"
