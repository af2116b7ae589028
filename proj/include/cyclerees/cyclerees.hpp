#pragma once

#include "classify.hpp"
#include "groebner.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "monomial_ideal.hpp"
#include "order.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rees.hpp"
#include "ring.hpp"
#include "text.hpp"
