#pragma once

#include "coxeter/cyclotomic.hpp"
#include "coxeter/field.hpp"
#include "coxeter/geom_rep.hpp"
#include "coxeter/linalg.hpp"
#include "coxeter/matrix.hpp"
#include "coxeter/order.hpp"
#include "coxeter/polynomial.hpp"
#include "coxeter/rational.hpp"
#include "coxeter/report.hpp"
#include "coxeter/system.hpp"
#include "coxeter/tits_form.hpp"
#include "coxeter/verification.hpp"
