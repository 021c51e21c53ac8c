#pragma once

#include "metallic/closed_form.hpp"
#include "metallic/families.hpp"
#include "metallic/numbers.hpp"
#include "metallic/patterns.hpp"
#include "metallic/polynomial.hpp"
#include "metallic/render.hpp"
