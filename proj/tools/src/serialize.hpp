#pragma once

#include <gmpxx.h>

#include "json.hpp"

#include "edslab/bigfloat.hpp"
#include "edslab/bounds.hpp"
#include "edslab/curve.hpp"
#include "edslab/divpoly.hpp"
#include "edslab/eds.hpp"
#include "edslab/heights.hpp"
#include "edslab/ja1728.hpp"
#include "edslab/poly.hpp"
#include "edslab/sieve_thue.hpp"

namespace edslab::cli {

using json = nlohmann::ordered_json;

json to_json(const mpz_class& z);
json to_json(const mpq_class& q);
json to_json(const BigFloat& x);
json to_json(const Poly& p);
json to_json(const Curve& E);
json to_json(const Point& P);
json to_json(const EDSTerm& t);
json to_json(const Isogeny& s);
json to_json(const HeightReport& r);
json to_json(const BoundReport& r);
json to_json(const FactorClassification& fc);
json to_json(const SieveRecord& r);
json to_json(const ThueInstance& t);
json to_json(const ThueReport& r);
json to_json(const EACompositeReport& r);

}  // namespace edslab::cli
